#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace montame {

// Arbitrary-precision integers and rationals. mpq_class keeps the canonical
// form required of Rat (reduced, positive denominator) as long as values are
// built through make_rat or arithmetic on already-canonical values.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Canonicalized rational num/den. Throws std::invalid_argument for den = 0.
Rat make_rat(const Int& num, const Int& den);

/// Rectangular matrix of arbitrary-precision integers.
struct IntMatrix {
  std::vector<IntVec> rows;

  IntMatrix() = default;
  explicit IntMatrix(std::vector<IntVec> r) : rows(std::move(r)) {}

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }

  static IntMatrix identity(std::size_t n);
};

/// Exact determinant via fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument if the matrix is not square or ragged.
Int det(const IntMatrix& m);

/// Result of an exact phase-1 simplex run on  A x = b, x >= 0.
/// When infeasible, `farkas` is a certificate y with  y^T A <= 0 (every
/// column) and y^T b > 0.
struct NonnegSystemResult {
  bool feasible = false;
  RatVec solution;  // size = number of columns, valid when feasible
  RatVec farkas;    // size = number of rows, valid when infeasible
};

/// Decides whether A x = b has a solution x >= 0, where A is given by rows.
/// Exact rational simplex with Bland's anticycling rule; deterministic
/// lowest-index pivot order. Both the solution and the Farkas certificate
/// are re-checked by substitution before returning.
NonnegSystemResult solve_nonneg_system(const std::vector<RatVec>& rows, const RatVec& rhs);

/// Rational w with w.g >= 1 for every generator, or nullopt when no such w
/// exists. Infeasibility holds exactly when 0 is a nontrivial nonnegative
/// rational combination of the generators (equivalently 0 lies in their
/// convex hull). Generators must be nonempty, nonzero and of equal length;
/// a zero generator throws std::invalid_argument.
std::optional<RatVec> find_separating_functional(const std::vector<IntVec>& gens);

/// Nonnegative rational coefficients lambda with sum(lambda_i g_i) = target,
/// or nullopt when none exist. Solutions re-substitute exactly.
std::optional<RatVec> nonneg_rational_solve(const std::vector<IntVec>& gens,
                                            const IntVec& target);

}  // namespace montame
