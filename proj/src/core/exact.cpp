#include "crn/core/exact.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace crn {

namespace {

template <typename T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return 1;
  Integer prev = 1;
  int s = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return s * m(n - 1, n - 1);
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      swap_rows(m, k, p);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::size_t rank(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    swap_rows(m, r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::size_t rank(RatMatrix m) { return pivot_columns(std::move(m)).size(); }

std::vector<std::size_t> pivot_columns(RatMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    swap_rows(m, r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> null_space(const RatMatrix& input) {
  RatMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    swap_rows(m, r, p);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_of_row.size(); ++i) v[pivot_of_row[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::int64_t> determinant_i64(std::span<const std::int64_t> row_major, std::size_t n) {
  if (row_major.size() != n * n) throw std::invalid_argument("determinant_i64: size mismatch");
  if (n == 0) return 1;
  if (n == 1) return row_major[0];
  std::vector<std::int64_t> a(row_major.begin(), row_major.end());
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * n + j]; };
  std::int64_t prev = 1;
  int s = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        std::int64_t x = 0;
        std::int64_t y = 0;
        std::int64_t d = 0;
        if (__builtin_mul_overflow(at(i, j), at(k, k), &x)) return std::nullopt;
        if (__builtin_mul_overflow(at(i, k), at(k, j), &y)) return std::nullopt;
        if (__builtin_sub_overflow(x, y, &d)) return std::nullopt;
        at(i, j) = d / prev;  // exact by Sylvester's identity
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  std::int64_t out = 0;
  if (__builtin_mul_overflow(static_cast<std::int64_t>(s), at(n - 1, n - 1), &out)) return std::nullopt;
  return out;
}

int determinant_sign(std::span<const std::int64_t> row_major, std::size_t n) {
  if (auto d = determinant_i64(row_major, n)) return (*d > 0) - (*d < 0);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(row_major[i * n + j]);
  return sgn(determinant(std::move(m)));
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

Rational exact_rational(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("exact_rational: non-finite value");
  // mpq_set_d is exact for binary doubles.
  Rational q;
  mpq_set_d(q.get_mpq_t(), v);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& v) { return v.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  }
  // Decimal with optional fraction and exponent, converted exactly.
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool any = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits += text[pos++];
    any = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos++];
      --exponent;
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("malformed number '" + text + "'");
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent in '" + text + "'");
    }
    if (used == 0) throw std::invalid_argument("malformed exponent in '" + text + "'");
    pos += used;
    exponent += e;
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in '" + text + "'");
  if (exponent > 4096 || exponent < -4096) throw std::invalid_argument("exponent out of range in '" + text + "'");
  Integer num(digits, 10);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace crn
