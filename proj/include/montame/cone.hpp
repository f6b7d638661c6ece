#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "montame/exact.hpp"
#include "montame/ideal.hpp"

namespace montame {

/// Overflow-checked dot product of lattice vectors.
Exp dot(const Vec& a, const Vec& b);

namespace detail {

/// Integer adjugate of the matrix with the given columns, when invertible
/// and within 64-bit range. Coordinates of v in the columns are adj*v/det,
/// so membership in the N-span of rationally independent generators is a
/// divisibility and sign check.
struct AdjugateSolver {
  std::vector<std::vector<Exp>> adjugate;
  Exp det = 0;

  bool nonneg_integer_coords(const Vec& v) const;
};

std::optional<AdjugateSolver> adjugate_for_columns(const std::vector<Vec>& cols);

}  // namespace detail

enum class ChartKind { Smooth, Singular, Torus, Covered };

const char* chart_kind_name(ChartKind kind);

/// Classification of a blowup chart. Smooth carries the n minimal generators
/// (a Z^n-basis of determinant +-1), Singular the full minimal generator
/// list (more than n elements); Torus and Covered carry no generators.
struct ChartClass {
  ChartKind kind = ChartKind::Covered;
  std::vector<Vec> minimal_gens;
};

/// The ideal tangent cone of a support point: the N-span of the difference
/// vectors to the cloud together with all standard basis vectors.
/// Pointedness is decided lazily by LP duality and cached together with an
/// integer separating functional; the unique minimal generator set is
/// computed on demand for pointed cones. Objects are logically immutable
/// once pointedness and minimal generators have been derived; the lazy
/// caches make a single cone unsafe to share across threads, but distinct
/// cones may be processed concurrently.
class IdealTangentCone {
public:
  /// Builds the cone from explicit generators; the standard basis vectors
  /// are always adjoined, duplicates and zero vectors are removed.
  static IdealTangentCone from_generators(int n, Vec base, const std::vector<Vec>& raw_gens);

  int n() const { return n_; }
  const Vec& base() const { return base_; }
  const std::vector<Vec>& generators() const { return gens_; }

  bool pointedness_known() const { return state_ != State::Unknown; }
  bool is_pointed() const;

  /// Integer separating functional with witness().g >= 1 for every
  /// generator. Only valid for pointed cones.
  const Vec& witness() const;

  /// Installs an externally certified witness (validated against every
  /// generator) and marks the cone pointed.
  void set_witness(Vec w);

  /// The unique minimal generating set, sorted lexicographically.
  /// Throws std::invalid_argument for non-pointed cones.
  const std::vector<Vec>& minimal_generators() const;

  /// Pointed with exactly n minimal generators. A true result additionally
  /// asserts |det| = 1 and primitivity of the minimal generators; a
  /// violation throws InternalCheckError.
  bool is_simplicial() const;

  /// Membership of v in the N-span of the generators, by memoized descent
  /// along the witness functional. Requires a pointed cone.
  bool in_nspan(const Vec& v) const;

  /// Membership of v in the real (rational) cone spanned by the generators;
  /// delegates to nonneg_rational_solve. Works for non-pointed cones too.
  bool real_cone_contains(const Vec& v) const;

private:
  enum class State { Unknown, Pointed, NotPointed };

  IdealTangentCone(int n, Vec base, std::vector<Vec> gens);
  void compute_minimal() const;
  bool descent_member(const Vec& v, const std::vector<std::pair<Vec, Exp>>& gens_by_w,
                      std::unordered_map<Vec, bool, VecHash>& memo) const;

  int n_ = 0;
  Vec base_;
  std::vector<Vec> gens_;

  mutable State state_ = State::Unknown;
  mutable Vec witness_;
  mutable std::optional<std::vector<Vec>> minimal_;
  mutable std::vector<std::pair<Vec, Exp>> minimal_by_w_;
  // Set iff the minimal generators are rationally independent (then they
  // form a Z^n-basis and membership is a coordinate sign check).
  mutable std::optional<detail::AdjugateSolver> basis_solver_;
  mutable std::unordered_map<Vec, bool, VecHash> nspan_memo_;

  friend IdealTangentCone tangent_cone(const MonomialIdeal&, const Vec&);
};

/// The cone at a point of supp(ideal); throws std::invalid_argument when the
/// base point lies outside the support.
IdealTangentCone tangent_cone(const MonomialIdeal& ideal, const Vec& base);

/// Vertex decisions for every cloud point, in cloud (lex) order. Witnesses
/// are integer separating functionals for the corresponding tangent cones.
struct VertexScan {
  std::vector<char> is_vertex;
  std::vector<Vec> witnesses;  // empty vector for non-vertices
};
VertexScan scan_vertices(const MonomialIdeal& ideal);

/// The cloud points whose tangent cones are pointed, sorted
/// lexicographically; equals the vertex set of the Newton polyhedron.
std::vector<Vec> vertices(const MonomialIdeal& ideal);

/// Chart classification of a support point: Smooth/Singular
/// for vertices, Torus for interior points surrounded by support in all 2n
/// lattice directions, Covered otherwise.
ChartClass classify_chart(const MonomialIdeal& ideal, const Vec& a);

}  // namespace montame
