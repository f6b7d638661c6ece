#include "montame/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "montame/errors.hpp"

namespace montame {

namespace {

using VecSet = std::unordered_set<Vec, VecHash>;

IntVec to_intvec(const Vec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
  return out;
}

std::vector<IntVec> to_intvecs(const std::vector<Vec>& vs) {
  std::vector<IntVec> out;
  out.reserve(vs.size());
  for (const Vec& v : vs) out.push_back(to_intvec(v));
  return out;
}

Exp clamp_i128(__int128 s) {
  if (s > std::numeric_limits<Exp>::max() || s < std::numeric_limits<Exp>::min())
    throw std::overflow_error("lattice arithmetic overflow");
  return static_cast<Exp>(s);
}

/// Scales a rational separating functional to a gcd-reduced integer vector;
/// w.g >= 1 is preserved because scaling multiplies by a positive integer
/// and the reduced gcd still divides every dot product.
Vec scale_witness(const RatVec& w) {
  Int lcm(1);
  for (const Rat& r : w) {
    Int den = r.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  IntVec scaled(w.size());
  Int g(0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    scaled[i] = w[i].get_num() * (lcm / w[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_mpz_t());
  }
  if (g == 0) throw InternalCheckError("zero separating functional");
  Vec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Int e = scaled[i] / g;
    if (!e.fits_slong_p()) throw std::overflow_error("witness exceeds 64-bit range");
    out[i] = e.get_si();
  }
  return out;
}

Exp l1_norm(const Vec& v) {
  __int128 s = 0;
  for (Exp e : v) s += e < 0 ? -static_cast<__int128>(e) : static_cast<__int128>(e);
  return clamp_i128(s);
}

}  // namespace

namespace detail {

bool AdjugateSolver::nonneg_integer_coords(const Vec& v) const {
  for (std::size_t i = 0; i < v.size(); ++i) {
    __int128 y = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      y += static_cast<__int128>(adjugate[i][j]) * static_cast<__int128>(v[j]);
    if (y % det != 0) return false;
    if (y / det < 0) return false;
  }
  return true;
}

std::optional<AdjugateSolver> adjugate_for_columns(const std::vector<Vec>& cols) {
  const std::size_t n = cols.size();
  IntMatrix m;
  m.rows.assign(n, IntVec(n, Int(0)));
  for (std::size_t j = 0; j < n; ++j) {
    if (cols[j].size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) m.rows[i][j] = static_cast<long>(cols[j][i]);
  }
  Int d = det(m);
  if (d == 0 || !d.fits_slong_p()) return std::nullopt;
  AdjugateSolver solver;
  solver.det = d.get_si();
  solver.adjugate.assign(n, std::vector<Exp>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor;
      minor.rows.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        IntVec row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(m.rows[r][c]);
        minor.rows.push_back(std::move(row));
      }
      Int cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      if (!cof.fits_slong_p()) return std::nullopt;
      solver.adjugate[i][j] = cof.get_si();
    }
  }
  return solver;
}

}  // namespace detail

Exp dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += static_cast<__int128>(a[i]) * static_cast<__int128>(b[i]);
  return clamp_i128(s);
}

const char* chart_kind_name(ChartKind kind) {
  switch (kind) {
    case ChartKind::Smooth: return "smooth";
    case ChartKind::Singular: return "singular";
    case ChartKind::Torus: return "torus";
    case ChartKind::Covered: return "covered";
  }
  return "?";
}

IdealTangentCone::IdealTangentCone(int n, Vec base, std::vector<Vec> gens)
    : n_(n), base_(std::move(base)), gens_(std::move(gens)) {}

IdealTangentCone IdealTangentCone::from_generators(int n, Vec base,
                                                   const std::vector<Vec>& raw_gens) {
  if (n < 1) throw std::invalid_argument("tangent cone: dimension must be >= 1");
  if (base.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("tangent cone: base of wrong length");
  std::vector<Vec> gens;
  VecSet seen;
  auto push = [&](const Vec& g) {
    if (g.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("tangent cone: generator of wrong length");
    if (is_zero(g)) return;
    if (seen.insert(g).second) gens.push_back(g);
  };
  for (const Vec& g : raw_gens) push(g);
  for (int i = 0; i < n; ++i) push(unit_vector(n, i));
  return IdealTangentCone(n, std::move(base), std::move(gens));
}

bool IdealTangentCone::is_pointed() const {
  if (state_ == State::Unknown) {
    auto w = find_separating_functional(to_intvecs(gens_));
    if (w) {
      witness_ = scale_witness(*w);
      state_ = State::Pointed;
    } else {
      state_ = State::NotPointed;
    }
  }
  return state_ == State::Pointed;
}

const Vec& IdealTangentCone::witness() const {
  if (!is_pointed()) throw std::invalid_argument("witness: cone is not pointed");
  return witness_;
}

void IdealTangentCone::set_witness(Vec w) {
  for (const Vec& g : gens_)
    if (dot(w, g) < 1) throw InternalCheckError("injected witness fails w.g >= 1");
  witness_ = std::move(w);
  state_ = State::Pointed;
}

namespace {

/// Incrementally builds the atom set (unique minimal generators) of the
/// monoid generated by candidates processed in increasing witness value.
/// Membership against the current atoms uses exact linear algebra while the
/// atoms are rationally independent (unique coordinates, integrality and
/// nonnegativity checked), and falls back to memoized descent along the
/// witness once they become dependent.
class AtomBuilder {
public:
  AtomBuilder(int n, const Vec& w) : n_(static_cast<std::size_t>(n)), w_(w) {}

  bool member(const Vec& v) {
    if (fast_) return fast_->nonneg_integer_coords(v);
    if (independent_) {
      auto coords = solve_coords(v);
      if (!coords) return false;
      for (const Rat& c : *coords)
        if (c < 0 || c.get_den() != 1) return false;
      return true;
    }
    std::unordered_map<Vec, bool, VecHash> memo;
    return dfs_member(v, memo);
  }

  void add_atom(const Vec& g) {
    fast_.reset();  // any new atom changes the monoid
    if (independent_) {
      RatVec residual;
      RatVec lambda;
      reduce(g, residual, lambda);
      bool zero = true;
      for (const Rat& r : residual)
        if (r != 0) {
          zero = false;
          break;
        }
      if (zero) {
        independent_ = false;
        echelon_.clear();
      } else {
        Echelon e;
        e.u = std::move(residual);
        e.pivot = 0;
        while (e.u[e.pivot] == 0) ++e.pivot;
        e.coords.assign(atoms_.size() + 1, Rat(0));
        for (std::size_t j = 0; j < lambda.size(); ++j) e.coords[j] = -lambda[j];
        e.coords[atoms_.size()] = 1;
        echelon_.push_back(std::move(e));
      }
    }
    atoms_.push_back(g);
    atom_w_.push_back(dot(w_, g));
    if (independent_ && atoms_.size() == n_) fast_ = detail::adjugate_for_columns(atoms_);
  }

  std::vector<Vec> take_atoms() { return std::move(atoms_); }

private:
  struct Echelon {
    RatVec u;
    std::size_t pivot = 0;
    RatVec coords;
  };

  void reduce(const Vec& v, RatVec& residual, RatVec& lambda) const {
    residual.assign(n_, Rat(0));
    for (std::size_t i = 0; i < n_; ++i) residual[i] = static_cast<long>(v[i]);
    lambda.assign(atoms_.size(), Rat(0));
    for (const Echelon& e : echelon_) {
      if (residual[e.pivot] == 0) continue;
      Rat f = residual[e.pivot] / e.u[e.pivot];
      for (std::size_t i = 0; i < n_; ++i)
        if (e.u[i] != 0) residual[i] -= f * e.u[i];
      for (std::size_t j = 0; j < e.coords.size(); ++j)
        if (e.coords[j] != 0) lambda[j] += f * e.coords[j];
    }
  }

  std::optional<RatVec> solve_coords(const Vec& v) const {
    RatVec residual, lambda;
    reduce(v, residual, lambda);
    for (const Rat& r : residual)
      if (r != 0) return std::nullopt;
    return lambda;
  }

  bool dfs_member(const Vec& v, std::unordered_map<Vec, bool, VecHash>& memo) const {
    if (is_zero(v)) return true;
    Exp wv = dot(w_, v);
    if (wv < 1) return false;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    memo[v] = false;
    for (std::size_t j = 0; j < atoms_.size(); ++j) {
      if (atom_w_[j] > wv) break;
      if (dfs_member(vec_sub(v, atoms_[j]), memo)) return memo[v] = true;
    }
    return false;
  }

  std::size_t n_;
  Vec w_;
  std::vector<Vec> atoms_;
  std::vector<Exp> atom_w_;
  bool independent_ = true;
  std::vector<Echelon> echelon_;
  std::optional<detail::AdjugateSolver> fast_;
};

}  // namespace

void IdealTangentCone::compute_minimal() const {
  if (minimal_) return;
  std::vector<std::pair<Vec, Exp>> cands;
  cands.reserve(gens_.size());
  for (const Vec& g : gens_) cands.emplace_back(g, dot(witness_, g));
  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });

  // A candidate is redundant iff it lies in the monoid generated by the
  // atoms of strictly smaller witness value: every term of a multi-term
  // N-combination has witness value >= 1, so equal-value candidates cannot
  // occur in each other's expansions.
  AtomBuilder builder(n_, witness_);
  for (const auto& [g, wg] : cands) {
    (void)wg;
    if (!builder.member(g)) builder.add_atom(g);
  }
  std::vector<Vec> atoms = builder.take_atoms();

  minimal_by_w_.clear();
  minimal_by_w_.reserve(atoms.size());
  for (const Vec& g : atoms) minimal_by_w_.emplace_back(g, dot(witness_, g));
  std::sort(minimal_by_w_.begin(), minimal_by_w_.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });

  std::sort(atoms.begin(), atoms.end());
  minimal_ = std::move(atoms);

  // When the minimal generators are rationally independent they form a
  // Z^n-basis (every e_i lies in their N-span forces |det| = 1), and
  // membership reduces to a sign check on the unique integer coordinates:
  // exactly the steps the witness descent with coordinate pruning takes.
  if (minimal_->size() == static_cast<std::size_t>(n_))
    basis_solver_ = detail::adjugate_for_columns(*minimal_);
}

const std::vector<Vec>& IdealTangentCone::minimal_generators() const {
  if (!is_pointed())
    throw std::invalid_argument("minimal_generators: cone is not pointed");
  compute_minimal();
  return *minimal_;
}

bool IdealTangentCone::is_simplicial() const {
  const std::vector<Vec>& mg = minimal_generators();
  if (mg.size() != static_cast<std::size_t>(n_)) return false;
  IntMatrix m;
  m.rows = to_intvecs(mg);
  Int d = det(m);
  if (d != 1 && d != -1)
    throw InternalCheckError("simplicial cone with non-unimodular minimal generators");
  for (const Vec& g : mg) {
    Exp gc = 0;
    for (Exp e : g) gc = std::gcd(gc, e < 0 ? -e : e);
    if (gc != 1)
      throw InternalCheckError("simplicial cone with imprimitive minimal generator");
  }
  return true;
}

bool IdealTangentCone::descent_member(const Vec& v,
                                      const std::vector<std::pair<Vec, Exp>>& gens_by_w,
                                      std::unordered_map<Vec, bool, VecHash>& memo) const {
  if (is_zero(v)) return true;
  Exp wv = dot(witness_, v);
  if (wv < 1) return false;
  auto it = memo.find(v);
  if (it != memo.end()) return it->second;
  memo[v] = false;
  for (const auto& [g, wg] : gens_by_w) {
    if (wg > wv) break;
    if (descent_member(vec_sub(v, g), gens_by_w, memo)) return memo[v] = true;
  }
  return false;
}

bool IdealTangentCone::in_nspan(const Vec& v) const {
  if (v.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("in_nspan: vector of wrong length");
  if (!is_pointed()) throw std::invalid_argument("in_nspan: cone is not pointed");
  compute_minimal();  // descend over the minimal generators; same N-span
  if (basis_solver_) return basis_solver_->nonneg_integer_coords(v);
  return descent_member(v, minimal_by_w_, nspan_memo_);
}

bool IdealTangentCone::real_cone_contains(const Vec& v) const {
  if (v.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("real_cone_contains: vector of wrong length");
  const std::vector<Vec>& gset =
      (state_ == State::Pointed && minimal_) ? *minimal_ : gens_;
  return nonneg_rational_solve(to_intvecs(gset), to_intvec(v)).has_value();
}

IdealTangentCone tangent_cone(const MonomialIdeal& ideal, const Vec& base) {
  if (!support_contains(ideal, base))
    throw std::invalid_argument("tangent_cone: base point is not in the support");
  std::vector<Vec> diffs;
  diffs.reserve(ideal.cloud().size());
  for (const Vec& a : ideal.cloud())
    if (a != base) diffs.push_back(vec_sub(a, base));
  return IdealTangentCone::from_generators(ideal.n(), base, diffs);
}

namespace {

/// Integer functional targeted at making `a` the unique cloud minimizer:
/// coordinates with large entries of `a` get small weights. Four variants
/// (linear / exponential weights, both tie-break orders).
Vec targeted_functional(const Vec& a, int variant) {
  const std::size_t n = a.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  const bool tie_desc = variant % 2 == 1;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (a[i] != a[j]) return a[i] > a[j];
    return tie_desc ? i > j : i < j;
  });
  Vec w(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    w[order[r]] = variant < 2 ? static_cast<Exp>(r + 1) : static_cast<Exp>(1) << r;
  return w;
}

bool certifies_vertex(const Vec& w, const std::vector<Vec>& cloud, std::size_t idx) {
  const Exp base = dot(w, cloud[idx]);
  for (std::size_t j = 0; j < cloud.size(); ++j) {
    if (j == idx) continue;
    if (dot(w, cloud[j]) <= base) return false;
  }
  return true;
}

std::vector<Vec> cone_generators_at(const std::vector<Vec>& cloud, std::size_t idx, int n) {
  std::vector<Vec> gens;
  gens.reserve(cloud.size() + static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < cloud.size(); ++j)
    if (j != idx) gens.push_back(vec_sub(cloud[j], cloud[idx]));
  for (int i = 0; i < n; ++i) gens.push_back(unit_vector(n, i));
  return gens;
}

// Clouds above this size get a reduced-generator LP probe before the full LP.
constexpr std::size_t kLargeCloud = 200;
constexpr Exp kNearNorm = 4;
constexpr std::size_t kNearCap = 160;

}  // namespace

VertexScan scan_vertices(const MonomialIdeal& ideal) {
  const std::vector<Vec>& cloud = ideal.cloud();
  const int n = ideal.n();
  VecSet cset(cloud.begin(), cloud.end());

  VertexScan scan;
  scan.is_vertex.assign(cloud.size(), 0);
  scan.witnesses.assign(cloud.size(), Vec());

  for (std::size_t idx = 0; idx < cloud.size(); ++idx) {
    const Vec& a = cloud[idx];

    // Midpoint refutation: a = (b + c)/2 with b, c other cloud points.
    bool decided = false;
    for (std::size_t j = 0; j < cloud.size() && !decided; ++j) {
      if (j == idx) continue;
      Vec c(a.size());
      bool valid = true;
      for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = checked_add(checked_add(a[i], a[i]), -cloud[j][i]);
        if (c[i] < 0) {
          valid = false;
          break;
        }
      }
      if (valid && cset.count(c)) decided = true;  // non-vertex
    }
    if (decided) continue;

    // Targeted integer functionals certify most vertices without an LP.
    for (int variant = 0; variant < 4 && !decided; ++variant) {
      Vec w = targeted_functional(a, variant);
      if (certifies_vertex(w, cloud, idx)) {
        scan.is_vertex[idx] = 1;
        scan.witnesses[idx] = std::move(w);
        decided = true;
      }
    }
    if (decided) continue;

    // Large clouds: probe the subcone of nearby differences first. An
    // infeasible probe already refutes pointedness; a feasible witness is
    // re-checked exactly against the whole cloud.
    if (cloud.size() > kLargeCloud) {
      std::vector<Vec> near;
      for (std::size_t j = 0; j < cloud.size(); ++j) {
        if (j == idx) continue;
        Vec d = vec_sub(cloud[j], a);
        if (l1_norm(d) <= kNearNorm) near.push_back(std::move(d));
      }
      if (near.size() > kNearCap) {
        std::sort(near.begin(), near.end(), [](const Vec& x, const Vec& y) {
          Exp nx = l1_norm(x), ny = l1_norm(y);
          if (nx != ny) return nx < ny;
          return x < y;
        });
        near.resize(kNearCap);
      }
      for (int i = 0; i < n; ++i) near.push_back(unit_vector(n, i));
      auto w = find_separating_functional(to_intvecs(near));
      if (!w) continue;  // non-vertex
      Vec wi = scale_witness(*w);
      if (certifies_vertex(wi, cloud, idx)) {
        scan.is_vertex[idx] = 1;
        scan.witnesses[idx] = std::move(wi);
        continue;
      }
    }

    // Exact LP on the full tangent cone.
    auto w = find_separating_functional(to_intvecs(cone_generators_at(cloud, idx, n)));
    if (w) {
      scan.is_vertex[idx] = 1;
      scan.witnesses[idx] = scale_witness(*w);
    }
  }
  return scan;
}

std::vector<Vec> vertices(const MonomialIdeal& ideal) {
  VertexScan scan = scan_vertices(ideal);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < ideal.cloud().size(); ++i)
    if (scan.is_vertex[i]) out.push_back(ideal.cloud()[i]);
  return out;  // cloud order is lex, so the result is lex-sorted
}

ChartClass classify_chart(const MonomialIdeal& ideal, const Vec& a) {
  if (!support_contains(ideal, a))
    throw std::invalid_argument("classify_chart: point is not in the support");
  IdealTangentCone cone = tangent_cone(ideal, a);
  if (cone.is_pointed()) {
    ChartClass out;
    out.minimal_gens = cone.minimal_generators();
    out.kind = cone.is_simplicial() ? ChartKind::Smooth : ChartKind::Singular;
    return out;
  }
  // Torus needs all 2n lattice neighbors inside the support, which in
  // particular forces every coordinate of a to be positive.
  bool torus = true;
  for (int i = 0; i < ideal.n() && torus; ++i) {
    if (a[static_cast<std::size_t>(i)] < 1) {
      torus = false;
      break;
    }
    Vec up = a, down = a;
    up[static_cast<std::size_t>(i)] += 1;
    down[static_cast<std::size_t>(i)] -= 1;
    if (!support_contains(ideal, up) || !support_contains(ideal, down)) torus = false;
  }
  ChartClass out;
  out.kind = torus ? ChartKind::Torus : ChartKind::Covered;
  return out;
}

}  // namespace montame
