#include "crn/numeric/polynomial.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace crn {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::operator()(const Rational& a) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
  return acc;
}

double UniPoly::operator()(double a) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i].get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  auto v = c_;
  for (auto& x : v) x = -x;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  std::vector<Rational> rem = c_;
  const std::size_t dn = d.c_.size();
  if (rem.size() < dn) return {UniPoly(), *this};
  std::vector<Rational> quot(rem.size() - dn + 1, Rational(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rational q = rem[i + dn - 1] / d.c_.back();
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= q * d.c_[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  Integer den(1);
  for (const auto& x : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer content(0);
  for (const auto& x : c_) {
    Integer v = x.get_num() * (den / x.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  std::vector<Rational> out;
  for (auto& v : ints) out.emplace_back(Integer(v / content));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::without_zero_roots() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return UniPoly(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const bool negative = c_[i] < 0;
    const Rational mag = negative ? Rational(-c_[i]) : c_[i];
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string body = mono.empty() ? crn::to_string(mag) : (mag == 1 ? mono : crn::to_string(mag) + "*" + mono);
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.primitive();
  UniPoly y = b.primitive();
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p.primitive());
  UniPoly d = p.derivative().primitive();
  while (!d.is_zero()) {
    seq.push_back(d);
    UniPoly r = -(seq[seq.size() - 2].divmod(d).second);
    d = r.primitive();
  }
  return seq;
}

namespace {

std::size_t variations(const std::vector<int>& signs) {
  std::size_t count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::size_t variations_at(const std::vector<UniPoly>& seq, const Rational& x) {
  std::vector<int> signs;
  for (const auto& q : seq) signs.push_back(q.sign_at(x));
  return variations(signs);
}

std::size_t variations_at_infinity(const std::vector<UniPoly>& seq) {
  std::vector<int> signs;
  for (const auto& q : seq) signs.push_back(q.sign_at_infinity());
  return variations(signs);
}

// Strict upper bound on the absolute value of every root.
Rational cauchy_bound(const UniPoly& p) {
  Rational best(0);
  for (long i = 0; i < p.degree(); ++i) {
    Rational r = p.coeff(static_cast<std::size_t>(i)) / p.leading();
    if (r < 0) r = -r;
    if (r > best) best = r;
  }
  return best + 1;
}

}  // namespace

std::size_t root_count_between(const std::vector<UniPoly>& sturm, const Rational& lo, const Rational& hi) {
  if (sturm.empty()) return 0;
  return variations_at(sturm, lo) - variations_at(sturm, hi);
}

RootCount positive_root_count(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("the zero polynomial has infinitely many roots");
  const UniPoly q = p.without_zero_roots();
  const auto seq = sturm_sequence(q);
  RootCount out;
  out.distinct = variations_at(seq, Rational(0)) - variations_at_infinity(seq);
  const UniPoly g = gcd(q, q.derivative());
  if (g.degree() >= 1) {
    const auto gs = sturm_sequence(g);
    out.all_simple = variations_at(gs, Rational(0)) == variations_at_infinity(gs);
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> isolate_positive_roots(const UniPoly& p) {
  const RootCount rc = positive_root_count(p);
  if (!rc.all_simple) throw std::domain_error("polynomial has a multiple positive root");
  std::vector<std::pair<Rational, Rational>> out;
  if (rc.distinct == 0) return out;
  const UniPoly q = p.without_zero_roots();
  const UniPoly dq = q.derivative();
  const auto seq = sturm_sequence(q);
  const auto dseq = sturm_sequence(dq.without_zero_roots());
  const Rational hi = cauchy_bound(q);

  // Count tests are valid because interior split points avoid roots of q and q'.
  std::function<void(const Rational&, const Rational&, std::size_t)> split = [&](const Rational& lo, const Rational& up,
                                                                                std::size_t n) {
    if (n == 0) return;
    if (n == 1 && root_count_between(dseq, lo, up) == 0) {
      out.emplace_back(lo, up);
      return;
    }
    Rational mid = (lo + up) / 2;
    while (q.sign_at(mid) == 0 || dq.sign_at(mid) == 0) mid = (lo + mid) / 2;
    const std::size_t left = root_count_between(seq, lo, mid);
    split(lo, mid, left);
    split(mid, up, n - left);
  };
  split(Rational(0), hi, rc.distinct);
  return out;
}

StableRootCount stable_positive_root_count(const UniPoly& p) {
  const auto intervals = isolate_positive_roots(p);
  // With p = a^k q, p'(r) = r^k q'(r) at a positive root r, and q' has no
  // root on an isolating interval, so any interior point gives the sign.
  const UniPoly dq = p.without_zero_roots().derivative();
  StableRootCount out;
  out.total = intervals.size();
  for (const auto& [lo, hi] : intervals)
    if (dq.sign_at((lo + hi) / 2) < 0) ++out.stable;
  return out;
}

}  // namespace crn
