#include "montame/exact.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>

#include "montame/errors.hpp"

namespace montame {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m;
  m.rows.assign(n, IntVec(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
  return m;
}

Int det(const IntMatrix& m) {
  const std::size_t n = m.row_count();
  for (const auto& row : m.rows)
    if (row.size() != n) throw std::invalid_argument("det: matrix is not square");
  if (n == 0) return Int(1);

  std::vector<IntVec> a = m.rows;
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return Int(0);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        // Bareiss guarantees exact divisibility by the previous pivot.
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign < 0 ? Int(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

namespace {

constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

}  // namespace

NonnegSystemResult solve_nonneg_system(const std::vector<RatVec>& in_rows, const RatVec& in_rhs) {
  const std::size_t m = in_rows.size();
  if (in_rhs.size() != m)
    throw std::invalid_argument("solve_nonneg_system: rhs length does not match row count");
  const std::size_t k = m == 0 ? 0 : in_rows[0].size();
  for (const auto& row : in_rows)
    if (row.size() != k) throw std::invalid_argument("solve_nonneg_system: ragged rows");

  NonnegSystemResult result;
  if (m == 0) {
    result.feasible = true;
    result.solution.assign(k, Rat(0));
    return result;
  }

  // Phase-1 tableau over columns [original | artificial | rhs], all rows
  // sign-normalized so the right-hand side is nonnegative.
  std::vector<int> sign(m, 1);
  std::vector<RatVec> t(m, RatVec(k + m, Rat(0)));
  RatVec rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    sign[i] = in_rhs[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j)
      t[i][j] = sign[i] < 0 ? Rat(-in_rows[i][j]) : in_rows[i][j];
    t[i][k + i] = 1;
    rhs[i] = sign[i] < 0 ? Rat(-in_rhs[i]) : in_rhs[i];
  }

  // Minimize the sum of artificials. red[j] = c_j - y.A_j with c = (0..0,1..1).
  std::vector<std::size_t> basis(m);
  RatVec red(k + m, Rat(0));
  Rat objective(0);
  for (std::size_t i = 0; i < m; ++i) {
    basis[i] = k + i;
    objective += rhs[i];
    for (std::size_t j = 0; j < k; ++j) red[j] -= t[i][j];
  }

  while (true) {
    // Bland's rule: lowest-index column with negative reduced cost.
    std::size_t enter = kNoIndex;
    for (std::size_t j = 0; j < k + m; ++j) {
      if (red[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == kNoIndex) break;

    std::size_t leave = kNoIndex;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] > 0) {
        Rat ratio = rhs[i] / t[i][enter];
        if (leave == kNoIndex || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave == kNoIndex)
      throw InternalCheckError("phase-1 simplex objective unbounded below");

    // Pivot on (leave, enter).
    Rat piv = t[leave][enter];
    for (std::size_t j = 0; j < k + m; ++j) t[leave][j] /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j < k + m; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
      t[i][enter] = 0;
      rhs[i] -= f * rhs[leave];
    }
    Rat f = red[enter];
    if (f != 0) {
      for (std::size_t j = 0; j < k + m; ++j)
        if (t[leave][j] != 0) red[j] -= f * t[leave][j];
      red[enter] = 0;
    }
    basis[leave] = enter;
    objective = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= k) objective += rhs[i];
  }

  if (objective > 0) {
    // Infeasible. Multipliers y_i = c_art(i) - red[k+i] = 1 - red[k+i],
    // mapped back through the row sign normalization.
    result.feasible = false;
    result.farkas.assign(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
      Rat y = Rat(1) - red[k + i];
      result.farkas[i] = sign[i] < 0 ? Rat(-y) : y;
    }
    Rat yb(0);
    for (std::size_t i = 0; i < m; ++i) yb += result.farkas[i] * in_rhs[i];
    if (!(yb > 0)) throw InternalCheckError("Farkas certificate fails y.b > 0");
    for (std::size_t j = 0; j < k; ++j) {
      Rat ya(0);
      for (std::size_t i = 0; i < m; ++i) ya += result.farkas[i] * in_rows[i][j];
      if (ya > 0) throw InternalCheckError("Farkas certificate fails y.A <= 0");
    }
    return result;
  }

  result.feasible = true;
  result.solution.assign(k, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < k) result.solution[basis[i]] = rhs[i];
  for (std::size_t i = 0; i < m; ++i) {
    Rat lhs(0);
    for (std::size_t j = 0; j < k; ++j)
      if (result.solution[j] != 0) lhs += in_rows[i][j] * result.solution[j];
    if (lhs != in_rhs[i]) throw InternalCheckError("simplex solution fails substitution");
  }
  return result;
}

namespace {

void check_generator_dimensions(const std::vector<IntVec>& gens, std::size_t n,
                                const char* who) {
  for (const auto& g : gens)
    if (g.size() != n)
      throw std::invalid_argument(std::string(who) + ": generators of unequal length");
}

}  // namespace

std::optional<RatVec> find_separating_functional(const std::vector<IntVec>& gens) {
  if (gens.empty())
    throw std::invalid_argument("find_separating_functional: no generators");
  const std::size_t n = gens[0].size();
  check_generator_dimensions(gens, n, "find_separating_functional");
  for (const auto& g : gens) {
    bool zero = true;
    for (const auto& e : g)
      if (e != 0) {
        zero = false;
        break;
      }
    if (zero)
      throw std::invalid_argument("find_separating_functional: zero generator");
  }

  // w exists iff 0 is not in conv(gens): test feasibility of
  //   sum(lambda_j g_j) = 0, sum(lambda_j) = 1, lambda >= 0
  // and turn the Farkas certificate of the infeasible case into w.
  const std::size_t kcols = gens.size();
  std::vector<RatVec> rows(n + 1, RatVec(kcols, Rat(0)));
  for (std::size_t j = 0; j < kcols; ++j) {
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = Rat(gens[j][i]);
    rows[n][j] = 1;
  }
  RatVec rhs(n + 1, Rat(0));
  rhs[n] = 1;

  NonnegSystemResult res = solve_nonneg_system(rows, rhs);
  if (res.feasible) return std::nullopt;

  // y.(g_j, 1) <= 0 for all j and y_n > 0, so w = -y[0..n)/y[n] gives
  // w.g_j >= 1.
  Rat tpos = res.farkas[n];
  if (!(tpos > 0)) throw InternalCheckError("separating functional: certificate has t <= 0");
  RatVec w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = -res.farkas[i] / tpos;
  for (const auto& g : gens) {
    Rat dot(0);
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] != 0) dot += w[i] * Rat(g[i]);
    if (dot < 1) throw InternalCheckError("separating functional fails w.g >= 1");
  }
  return w;
}

std::optional<RatVec> nonneg_rational_solve(const std::vector<IntVec>& gens,
                                            const IntVec& target) {
  const std::size_t n = target.size();
  check_generator_dimensions(gens, n, "nonneg_rational_solve");

  const std::size_t kcols = gens.size();
  std::vector<RatVec> rows(n, RatVec(kcols, Rat(0)));
  for (std::size_t j = 0; j < kcols; ++j)
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = Rat(gens[j][i]);
  RatVec rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = Rat(target[i]);

  NonnegSystemResult res = solve_nonneg_system(rows, rhs);
  if (!res.feasible) return std::nullopt;
  return res.solution;
}

}  // namespace montame
