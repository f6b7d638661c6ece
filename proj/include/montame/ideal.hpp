#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "montame/errors.hpp"

namespace montame {

using Exp = std::int64_t;

/// Lattice vector of fixed length n: exponent vectors (entries >= 0) and
/// tangent-cone generators (entries may be negative). The criterion path
/// never leaves exact integer arithmetic; additions are overflow-checked.
using Vec = std::vector<Exp>;

Exp checked_add(Exp a, Exp b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_max(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);
/// a <= b componentwise.
bool dominates(const Vec& b, const Vec& a);
Exp total_degree(const Vec& a);
Vec unit_vector(int n, int i);  // e_{i+1}, 0-based i

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept;
};

/// A monomial ideal, stored by its minimal cloud: the unique minimal
/// generating exponent set, an antichain under componentwise <=, kept
/// sorted lexicographically. The cloud {0^n} encodes the unit ideal;
/// the zero ideal is not representable.
class MonomialIdeal {
public:
  static MonomialIdeal unit(int n);

  int n() const { return n_; }
  const std::vector<Vec>& cloud() const { return cloud_; }
  bool is_unit() const { return cloud_.size() == 1 && is_zero(cloud_[0]); }

  /// Variable indices (1-based, sorted) that occur in the cloud.
  std::vector<int> variable_support() const;

  bool operator==(const MonomialIdeal& other) const {
    return n_ == other.n_ && cloud_ == other.cloud_;
  }

private:
  friend MonomialIdeal minimalize(const std::vector<Vec>&, int);
  MonomialIdeal(int n, std::vector<Vec> cloud) : n_(n), cloud_(std::move(cloud)) {}

  int n_ = 0;
  std::vector<Vec> cloud_;
};

/// Drops every point componentwise dominated by another; the result is the
/// canonical antichain. Throws std::invalid_argument for an empty input, a
/// negative entry or a length mismatch.
MonomialIdeal minimalize(const std::vector<Vec>& points, int n);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// k = 0 yields the unit ideal by convention.
MonomialIdeal power(const MonomialIdeal& a, int k);
MonomialIdeal radical(const MonomialIdeal& a);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

/// True iff some cloud point divides x^c, i.e. c lies in supp(I).
bool support_contains(const MonomialIdeal& ideal, const Vec& c);

/// Grammar:  ideal := "(" monomial ("," monomial)* ")"
///           monomial := "1" | factor ("*" factor)*
///           factor := "x" INDEX ("^" EXP)?      INDEX >= 1, EXP >= 1
/// Whitespace is insignificant. "1" (unit ideal generator) is accepted so
/// every representable ideal round-trips. If n is omitted it is inferred as
/// the largest variable index used.
MonomialIdeal parse_ideal(const std::string& text, std::optional<int> n = std::nullopt);
std::string format_ideal(const MonomialIdeal& ideal);
std::string format_monomial(const Vec& exponents);

/// {"n": int, "cloud": [[int,...],...]} with lexicographically sorted rows.
std::string ideal_to_json(const MonomialIdeal& ideal);

/// A coordinate ideal (x_i : i in indices), identified with its index set.
struct CoordinateCloud {
  int n = 0;
  std::vector<int> indices;  // 1-based, sorted, unique, nonempty

  CoordinateCloud(int n_, std::vector<int> indices_);
  MonomialIdeal to_ideal() const;
  bool contains(int i) const;

  bool operator==(const CoordinateCloud& other) const {
    return n == other.n && indices == other.indices;
  }
};

}  // namespace montame
