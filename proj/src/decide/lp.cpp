#include "crn/decide/lp.hpp"

#include <stdexcept>

namespace crn {

LinearProgram& LinearProgram::add(std::vector<Rational> row, Sense sense, Rational value) {
  if (row.size() != vars()) throw std::invalid_argument("constraint length does not match variable count");
  rows.push_back(std::move(row));
  senses.push_back(sense);
  rhs.push_back(std::move(value));
  return *this;
}

LinearProgram& LinearProgram::at_least(std::size_t i, const Rational& lo) {
  std::vector<Rational> row(vars(), Rational(0));
  row.at(i) = 1;
  return add(std::move(row), Sense::ge, lo);
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.vars()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!lp.free[i] && x[i] < 0) return false;
  for (std::size_t k = 0; k < lp.rows.size(); ++k) {
    Rational v(0);
    for (std::size_t i = 0; i < x.size(); ++i) v += lp.rows[k][i] * x[i];
    switch (lp.senses[k]) {
      case Sense::eq:
        if (v != lp.rhs[k]) return false;
        break;
      case Sense::ge:
        if (v < lp.rhs[k]) return false;
        break;
      case Sense::le:
        if (v > lp.rhs[k]) return false;
        break;
    }
  }
  return true;
}

namespace {

// Rows 0..m-1 hold [A | b]; basis_[i] is the basic column of row i.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis)
      : t_(std::move(rows)), basis_(std::move(basis)) {}

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return t_.empty() ? 0 : t_[0].size() - 1; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i][j]; }
  const Rational& value(std::size_t i) const { return t_[i].back(); }
  std::size_t basic(std::size_t i) const { return basis_[i]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j < t_[i].size(); ++j) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  void erase_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  void keep_columns(std::size_t n) {
    for (auto& row : t_) {
      Rational b = row.back();
      row.resize(n);
      row.push_back(std::move(b));
    }
  }

  /// Minimizes cost over the columns allowed by `usable`; false if unbounded.
  bool minimize(const std::vector<Rational>& cost, std::size_t usable) {
    for (;;) {
      // Reduced costs c_j - c_B B^-1 A_j, computed afresh each round.
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < usable && !enter; ++j) {
        Rational d = cost[j];
        for (std::size_t i = 0; i < rows(); ++i) d -= cost[basis_[i]] * t_[i][j];
        if (d < 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_[i][*enter] <= 0) continue;
        const Rational ratio = t_[i].back() / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPFeasibility solve(const LinearProgram& lp) {
  const std::size_t n = lp.vars();
  const std::size_t m = lp.rows.size();

  // Column layout: original variables (free ones split into +/-), then one
  // slack or surplus per inequality, then one artificial per row.
  std::vector<std::size_t> plus(n), minus(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t i = 0; i < n; ++i) {
    plus[i] = cols++;
    if (lp.free[i]) minus[i] = cols++;
  }
  std::vector<std::size_t> slack(m, SIZE_MAX);
  for (std::size_t k = 0; k < m; ++k)
    if (lp.senses[k] != Sense::eq) slack[k] = cols++;
  const std::size_t structural = cols;
  const std::size_t total = structural + m;

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(total + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t k = 0; k < m; ++k) {
    auto& row = rows[k];
    for (std::size_t i = 0; i < n; ++i) {
      row[plus[i]] = lp.rows[k][i];
      if (minus[i] != SIZE_MAX) row[minus[i]] = -lp.rows[k][i];
    }
    if (lp.senses[k] == Sense::ge) row[slack[k]] = -1;
    if (lp.senses[k] == Sense::le) row[slack[k]] = 1;
    row[total] = lp.rhs[k];
    if (row[total] < 0)
      for (auto& v : row) v = -v;
    row[structural + k] = 1;
    basis[k] = structural + k;
  }

  Tableau tab(std::move(rows), std::move(basis));
  std::vector<Rational> phase1(total, Rational(0));
  for (std::size_t k = 0; k < m; ++k) phase1[structural + k] = 1;
  tab.minimize(phase1, total);

  LPFeasibility out;
  for (std::size_t i = 0; i < tab.rows(); ++i)
    if (tab.basic(i) >= structural && tab.value(i) != 0) return out;

  // Drive zero-valued artificials out of the basis; rows with no structural
  // entry are redundant.
  for (std::size_t i = tab.rows(); i-- > 0;) {
    if (tab.basic(i) < structural) continue;
    std::optional<std::size_t> c;
    for (std::size_t j = 0; j < structural && !c; ++j)
      if (tab.at(i, j) != 0) c = j;
    if (c)
      tab.pivot(i, *c);
    else
      tab.erase_row(i);
  }
  tab.keep_columns(structural);

  out.feasible = true;
  if (lp.minimize) {
    std::vector<Rational> cost(structural, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      cost[plus[i]] = (*lp.minimize)[i];
      if (minus[i] != SIZE_MAX) cost[minus[i]] = -(*lp.minimize)[i];
    }
    out.unbounded = !tab.minimize(cost, structural);
  }

  std::vector<Rational> z(structural, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) z[tab.basic(i)] = tab.value(i);
  out.witness.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    out.witness[i] = z[plus[i]];
    if (minus[i] != SIZE_MAX) out.witness[i] -= z[minus[i]];
  }
  if (lp.minimize && !out.unbounded) {
    Rational obj(0);
    for (std::size_t i = 0; i < n; ++i) obj += (*lp.minimize)[i] * out.witness[i];
    out.objective = obj;
  }
  return out;
}

}  // namespace crn
