#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "montame/exact.hpp"
#include "montame/ideal.hpp"

namespace testsupport {

using montame::Exp;
using montame::Vec;

/// splitmix64: deterministic across platforms, unlike <random> distributions.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi].
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline Vec random_point(Rng& rng, int n, int max_exp) {
  Vec p(static_cast<std::size_t>(n));
  for (auto& e : p) e = rng.range(0, max_exp);
  return p;
}

inline montame::MonomialIdeal random_ideal(Rng& rng, int n, int max_exp, int max_points) {
  std::vector<Vec> pts;
  int count = rng.range(1, max_points);
  for (int i = 0; i < count; ++i) {
    Vec p = random_point(rng, n, max_exp);
    if (montame::is_zero(p)) p[static_cast<std::size_t>(rng.range(0, n - 1))] = 1;
    pts.push_back(std::move(p));
  }
  return montame::minimalize(pts, n);
}

/// Brute-force oracle: is there a nontrivial N-combination of gens summing
/// to zero with every coefficient bounded by `bound`?
inline bool bounded_zero_combination(const std::vector<Vec>& gens, int bound) {
  const std::size_t m = gens.size();
  const std::size_t n = gens.empty() ? 0 : gens[0].size();
  std::vector<int> lambda(m, 0);
  while (true) {
    // odometer increment
    std::size_t i = 0;
    while (i < m && lambda[i] == bound) lambda[i++] = 0;
    if (i == m) return false;
    ++lambda[i];
    Vec total(n, 0);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t c = 0; c < n; ++c) total[c] += lambda[j] * gens[j][c];
    if (montame::is_zero(total)) return true;
  }
}

/// Bounded membership in the N-span: v a sum of at most `budget` generators
/// (with multiplicity). Used where the cone is not pointed and the witness
/// descent is unavailable.
inline bool bounded_nspan_member(const Vec& v, const std::vector<Vec>& gens, int budget,
                                 std::map<Vec, int>* failed = nullptr) {
  std::map<Vec, int> local;
  if (!failed) failed = &local;
  if (montame::is_zero(v)) return true;
  if (budget == 0) return false;
  auto it = failed->find(v);
  if (it != failed->end() && it->second >= budget) return false;
  for (const Vec& g : gens)
    if (bounded_nspan_member(montame::vec_sub(v, g), gens, budget - 1, failed)) return true;
  (*failed)[v] = std::max((*failed)[v], budget);
  return false;
}

/// Random integer generator set with entries in [-spread, spread], no zero
/// vectors; returned both as lattice vectors and as exactmath columns.
inline std::pair<std::vector<Vec>, std::vector<montame::IntVec>> random_generator_set(
    Rng& rng, int n_lo, int n_hi, int m_lo, int m_hi, int spread) {
  int n = rng.range(n_lo, n_hi);
  int m = rng.range(m_lo, m_hi);
  std::vector<Vec> vecs;
  std::vector<montame::IntVec> cols;
  for (int j = 0; j < m; ++j) {
    Vec v(static_cast<std::size_t>(n));
    do {
      for (auto& e : v) e = rng.range(-spread, spread);
    } while (montame::is_zero(v));
    montame::IntVec col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      col[static_cast<std::size_t>(i)] = static_cast<long>(v[static_cast<std::size_t>(i)]);
    vecs.push_back(std::move(v));
    cols.push_back(std::move(col));
  }
  return {std::move(vecs), std::move(cols)};
}

/// For a generator set with a vanishing nonnegative combination, decides
/// whether the dual-route certificate (a convex combination of the
/// generators equal to zero, integer-scaled) stays within `bound`. Used to
/// keep the bounded brute-force oracle comparable.
inline bool zero_combo_within(const std::vector<montame::IntVec>& gens, long bound) {
  using montame::Int;
  using montame::IntVec;
  using montame::Rat;
  const std::size_t n = gens.empty() ? 0 : gens[0].size();
  std::vector<IntVec> lifted;
  for (const auto& g : gens) {
    IntVec col = g;
    col.push_back(Int(1));
    lifted.push_back(std::move(col));
  }
  IntVec target(n + 1, Int(0));
  target[n] = 1;
  auto lambda = montame::nonneg_rational_solve(lifted, target);
  if (!lambda) return false;
  Int lcm(1);
  for (const Rat& c : *lambda) {
    Int den = c.get_den(), g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  for (const Rat& c : *lambda)
    if (c.get_num() * (lcm / c.get_den()) > bound) return false;
  return true;
}

/// Rational-hull oracle for the vertex property: a cloud point a is a vertex
/// of N(I) iff 0 has no representation as a nontrivial convex combination of
/// the other cloud points' offsets plus an orthant contribution, i.e. the
/// lifted system  sum(lambda_j (a_j - a, 1)) + sum(mu_i (e_i, 0)) = (0, 1)
/// with lambda, mu >= 0 is infeasible.
inline bool hull_oracle_is_vertex(const montame::MonomialIdeal& ideal, std::size_t idx) {
  using montame::Int;
  using montame::IntVec;
  const auto& cloud = ideal.cloud();
  const int n = ideal.n();
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < cloud.size(); ++j) {
    if (j == idx) continue;
    IntVec lifted(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i)
      lifted[static_cast<std::size_t>(i)] =
          static_cast<long>(cloud[j][static_cast<std::size_t>(i)] -
                            cloud[idx][static_cast<std::size_t>(i)]);
    lifted[static_cast<std::size_t>(n)] = 1;
    cols.push_back(std::move(lifted));
  }
  for (int i = 0; i < n; ++i) {
    IntVec lifted(static_cast<std::size_t>(n) + 1, Int(0));
    lifted[static_cast<std::size_t>(i)] = 1;
    cols.push_back(std::move(lifted));
  }
  IntVec target(static_cast<std::size_t>(n) + 1, Int(0));
  target[static_cast<std::size_t>(n)] = 1;
  return !montame::nonneg_rational_solve(cols, target).has_value();
}

/// Integer-scaled witness that cloud point idx is not a vertex:
/// sum(alpha_j (a_j - a)) + sum(mu_i e_i) = 0 with sum(alpha) >= 1.
/// alphas are keyed by cloud index.
struct NonvertexCert {
  std::vector<std::pair<std::size_t, long>> alphas;
  std::vector<long> mus;
};

inline std::optional<NonvertexCert> nonvertex_combination(const montame::MonomialIdeal& ideal,
                                                          std::size_t idx) {
  using montame::Int;
  using montame::IntVec;
  using montame::Rat;
  const auto& cloud = ideal.cloud();
  const int n = ideal.n();
  std::vector<IntVec> cols;
  std::vector<std::size_t> owner;
  for (std::size_t j = 0; j < cloud.size(); ++j) {
    if (j == idx) continue;
    IntVec lifted(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i)
      lifted[static_cast<std::size_t>(i)] =
          static_cast<long>(cloud[j][static_cast<std::size_t>(i)] -
                            cloud[idx][static_cast<std::size_t>(i)]);
    lifted[static_cast<std::size_t>(n)] = 1;
    cols.push_back(std::move(lifted));
    owner.push_back(j);
  }
  const std::size_t diff_count = cols.size();
  for (int i = 0; i < n; ++i) {
    IntVec lifted(static_cast<std::size_t>(n) + 1, Int(0));
    lifted[static_cast<std::size_t>(i)] = 1;
    cols.push_back(std::move(lifted));
  }
  IntVec target(static_cast<std::size_t>(n) + 1, Int(0));
  target[static_cast<std::size_t>(n)] = 1;
  auto lambda = montame::nonneg_rational_solve(cols, target);
  if (!lambda) return std::nullopt;
  Int lcm(1);
  for (const Rat& c : *lambda) {
    Int den = c.get_den(), g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  NonvertexCert cert;
  for (std::size_t j = 0; j < (*lambda).size(); ++j) {
    Int scaled = (*lambda)[j].get_num() * (lcm / (*lambda)[j].get_den());
    long value = static_cast<long>(scaled.get_si());
    if (j < diff_count) {
      if (value != 0) cert.alphas.emplace_back(owner[j], value);
    } else {
      cert.mus.push_back(value);
    }
  }
  return cert;
}

inline std::vector<Vec> hull_oracle_vertices(const montame::MonomialIdeal& ideal) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < ideal.cloud().size(); ++i)
    if (hull_oracle_is_vertex(ideal, i)) out.push_back(ideal.cloud()[i]);
  return out;
}

/// Plane-geometry oracle for n = 2: a is not a vertex of conv(cloud) + R^2_+
/// iff some segment [b, c] between other cloud points passes weakly below a,
/// i.e. mu*b + (1-mu)*c <= a componentwise for a rational mu in [0, 1].
inline bool line_oracle_is_vertex(const montame::MonomialIdeal& ideal, std::size_t idx) {
  using montame::Rat;
  const auto& cloud = ideal.cloud();
  const Vec& a = cloud[idx];
  for (std::size_t p = 0; p < cloud.size(); ++p) {
    if (p == idx) continue;
    for (std::size_t q = p; q < cloud.size(); ++q) {
      if (q == idx) continue;
      const Vec& b = cloud[p];
      const Vec& c = cloud[q];
      // constraints mu*(b_i - c_i) <= a_i - c_i, mu in [0,1]
      Rat lo(0), hi(1);
      bool empty = false;
      for (int i = 0; i < 2 && !empty; ++i) {
        long coeff = b[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)];
        long rhs = a[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)];
        if (coeff == 0) {
          if (rhs < 0) empty = true;
        } else {
          Rat bound = montame::make_rat(rhs, coeff);
          if (coeff > 0)
            hi = std::min(hi, bound);
          else
            lo = std::max(lo, bound);
        }
      }
      if (!empty && lo <= hi) return false;
    }
  }
  return true;
}

inline std::vector<Vec> sorted(std::vector<Vec> vs) {
  std::sort(vs.begin(), vs.end());
  return vs;
}

inline std::set<Vec> to_set(const std::vector<Vec>& vs) { return {vs.begin(), vs.end()}; }

}  // namespace testsupport
