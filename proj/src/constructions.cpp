#include "montame/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "montame/cone.hpp"
#include "montame/errors.hpp"
#include "montame/tameness.hpp"

namespace montame {

BuildingFamily::BuildingFamily(int n, const std::vector<std::vector<int>>& sets) : n_(n) {
  if (n < 1 || n > 63) throw std::invalid_argument("BuildingFamily: n out of range");
  if (sets.empty()) throw std::invalid_argument("BuildingFamily: empty family");
  for (const auto& s : sets) {
    if (s.empty()) throw std::invalid_argument("BuildingFamily: empty member set");
    std::uint64_t mask = 0;
    for (int i : s) {
      if (i < 1 || i > n) throw std::invalid_argument("BuildingFamily: index out of range");
      mask |= std::uint64_t(1) << (i - 1);
    }
    masks_.push_back(mask);
  }
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

std::vector<int> BuildingFamily::mask_to_indices(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i + 1);
  return out;
}

std::vector<std::vector<int>> BuildingFamily::sets() const {
  std::vector<std::vector<int>> out;
  out.reserve(masks_.size());
  for (std::uint64_t m : masks_) out.push_back(mask_to_indices(m));
  return out;
}

bool BuildingFamily::contains(std::uint64_t mask) const {
  return std::binary_search(masks_.begin(), masks_.end(), mask);
}

MonomialIdeal maximal_ideal(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return CoordinateCloud(n, all).to_ideal();
}

MonomialIdeal axes_ideal(int n, int s) {
  if (!(1 < s && s < n)) throw std::invalid_argument("axes_ideal: need 1 < s < n");
  MonomialIdeal ideal = MonomialIdeal::unit(n);
  for (int i = 1; i <= s; ++i) {
    std::vector<int> idx;
    for (int j = 1; j <= n; ++j)
      if (j != i) idx.push_back(j);
    MonomialIdeal axis = CoordinateCloud(n, idx).to_ideal();
    ideal = i == 1 ? axis : intersect(ideal, axis);
  }

  std::vector<Vec> closed;
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j)
      closed.push_back(vec_add(unit_vector(n, i - 1), unit_vector(n, j - 1)));
  for (int i = s + 1; i <= n; ++i) closed.push_back(unit_vector(n, i - 1));
  if (!(ideal == minimalize(closed, n)))
    throw InternalCheckError("axes_ideal: intersection disagrees with the closed form");
  return ideal;
}

MonomialIdeal rosenberg_ideal(int n, int s) {
  if (!(1 < s && s < n)) throw std::invalid_argument("rosenberg_ideal: need 1 < s < n");
  MonomialIdeal r = intersect(axes_ideal(n, s), power(maximal_ideal(n), 3));

  std::vector<Vec> expected;
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      Vec v(static_cast<std::size_t>(n), 0);
      v[static_cast<std::size_t>(i - 1)] = 2;
      v[static_cast<std::size_t>(j - 1)] = 1;
      expected.push_back(std::move(v));
    }
  for (int i = s + 1; i <= n; ++i) {
    Vec v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i - 1)] = 3;
    expected.push_back(std::move(v));
  }
  std::sort(expected.begin(), expected.end());
  if (vertices(r) != expected)
    throw InternalCheckError("rosenberg_ideal: vertex set disagrees with the closed form");
  return r;
}

BuildingFamily closure_of(int n, std::vector<std::uint64_t> masks, std::size_t limit) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> work = masks;
  while (!work.empty()) {
    std::uint64_t m = work.back();
    work.pop_back();
    std::vector<std::uint64_t> fresh;
    for (std::uint64_t other : masks) {
      std::uint64_t u = m | other;
      if (!std::binary_search(masks.begin(), masks.end(), u)) fresh.push_back(u);
    }
    if (fresh.empty()) continue;
    for (std::uint64_t u : fresh) masks.push_back(u);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    if (masks.size() > limit)
      throw std::length_error("arrangement closure exceeds the size limit");
    for (std::uint64_t u : fresh) work.push_back(u);
  }
  BuildingFamily out;
  out.n_ = n;
  out.masks_ = std::move(masks);
  return out;
}

BuildingFamily arrangement_closure(const BuildingFamily& family, std::size_t limit) {
  return closure_of(family.n(), family.masks(), limit);
}

namespace {

/// A member U of the arrangement is irreducible if it has no decomposition:
/// a partition of U into >= 2 arrangement members such that every
/// arrangement member inside U meets each part in an arrangement member or
/// the empty set.
bool partition_search(std::uint64_t remaining, const std::vector<std::uint64_t>& pool,
                      std::vector<std::uint64_t>& parts, std::uint64_t whole,
                      const std::vector<std::uint64_t>& closure) {
  if (remaining == 0) {
    if (parts.size() < 2) return false;
    for (std::uint64_t a : closure) {
      if ((a & whole) != a) continue;
      for (std::uint64_t p : parts) {
        std::uint64_t cut = a & p;
        if (cut != 0 && !std::binary_search(closure.begin(), closure.end(), cut))
          return false;
      }
    }
    return true;
  }
  std::uint64_t low = remaining & (~remaining + 1);
  for (std::uint64_t m : pool) {
    if ((m & low) == 0) continue;
    if ((m & remaining) != m) continue;
    parts.push_back(m);
    if (partition_search(remaining & ~m, pool, parts, whole, closure)) return true;
    parts.pop_back();
  }
  return false;
}

bool irreducible_in(const std::vector<std::uint64_t>& closure, std::uint64_t u) {
  std::vector<std::uint64_t> pool;
  for (std::uint64_t m : closure)
    if ((m & u) == m && m != u) pool.push_back(m);
  std::vector<std::uint64_t> parts;
  return !partition_search(u, pool, parts, u, closure);
}

}  // namespace

bool is_building_set(const BuildingFamily& family) {
  const auto& masks = family.masks();
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if ((masks[i] & masks[j]) != 0 && !family.contains(masks[i] | masks[j])) return false;

  // Cross-check against the decomposition characterization; exhaustive
  // partition enumeration is affordable only for small n.
  if (family.n() <= 8) {
    BuildingFamily closure = arrangement_closure(family);
    const auto& cmasks = closure.masks();
    for (std::uint64_t c : cmasks) {
      std::vector<std::uint64_t> maximal;
      for (std::uint64_t m : masks) {
        if ((m & c) != m) continue;
        bool is_max = true;
        for (std::uint64_t other : masks)
          if (other != m && (other & c) == other && (m & other) == m) {
            is_max = false;
            break;
          }
        if (is_max) maximal.push_back(m);
      }
      std::uint64_t covered = 0;
      for (std::uint64_t m : maximal) {
        if ((covered & m) != 0)
          throw InternalCheckError("building set: maximal members are not disjoint");
        covered |= m;
      }
      if (covered != c)
        throw InternalCheckError("building set: maximal members do not decompose the closure");
      if (irreducible_in(cmasks, c) && !family.contains(c))
        throw InternalCheckError("building set: irreducible closure member missing");
    }
  }
  return true;
}

MonomialIdeal building_product(const BuildingFamily& family) {
  if (!is_building_set(family))
    throw std::invalid_argument("building_product: family is not a building set");
  MonomialIdeal out = MonomialIdeal::unit(family.n());
  for (std::uint64_t m : family.masks()) {
    CoordinateCloud cloud(family.n(), BuildingFamily::mask_to_indices(m));
    out = product(out, cloud.to_ideal());
  }
  return out;
}

namespace {

void require_same_n(const std::vector<CoordinateCloud>& ideals, const char* who) {
  for (const auto& c : ideals)
    if (c.n != ideals[0].n)
      throw std::invalid_argument(std::string(who) + ": ambient dimensions differ");
}

}  // namespace

MonomialIdeal pairwise_sum_product(const std::vector<CoordinateCloud>& ideals) {
  if (ideals.size() < 2)
    throw std::invalid_argument("pairwise_sum_product: need at least two ideals");
  require_same_n(ideals, "pairwise_sum_product");
  const int n = ideals[0].n;
  MonomialIdeal out = MonomialIdeal::unit(n);
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      std::vector<int> idx = ideals[i].indices;
      idx.insert(idx.end(), ideals[j].indices.begin(), ideals[j].indices.end());
      out = product(out, CoordinateCloud(n, idx).to_ideal());
    }
  return out;
}

MonomialIdeal smooth_product(const std::vector<CoordinateCloud>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("smooth_product: no ideals");
  require_same_n(ideals, "smooth_product");
  MonomialIdeal plain = ideals[0].to_ideal();
  for (std::size_t i = 1; i < ideals.size(); ++i)
    plain = product(plain, ideals[i].to_ideal());
  MonomialIdeal out = ideals.size() >= 2 ? product(plain, pairwise_sum_product(ideals)) : plain;
  if (!is_tame(out).tame)
    throw InternalCheckError("smooth_product: result is not tame");
  if (!(radical(out) == radical(plain)))
    throw InternalCheckError("smooth_product: radical changed");
  return out;
}

namespace {

Exp binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Exp r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

PermutohedronSpec::PermutohedronSpec(int n_in, int k_in) : n(n_in), k(k_in) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("PermutohedronSpec: need 1 <= k <= n");
  base.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i <= n - k; ++i) base[static_cast<std::size_t>(i)] = binomial(n - 1 - i, k - 1);
  Exp total = 0;
  for (Exp e : base) total = checked_add(total, e);
  if (total != binomial(n, k))
    throw InternalCheckError("permutohedron base entries do not sum to C(n,k)");
}

namespace {

template <typename F>
void for_each_k_subset(int n, int k, F&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

MonomialIdeal permutohedral_ideal(const PermutohedronSpec& spec, bool force) {
  if (spec.k < 2) throw std::invalid_argument("permutohedral_ideal: need k >= 2");
  if (spec.n > 6 && !force)
    throw std::length_error("permutohedral_ideal: n > 6 refused without force");
  MonomialIdeal out = MonomialIdeal::unit(spec.n);
  for_each_k_subset(spec.n, spec.k, [&](const std::vector<int>& idx) {
    out = product(out, CoordinateCloud(spec.n, idx).to_ideal());
  });
  return out;
}

std::vector<Vec> permutohedron_vertices(const PermutohedronSpec& spec) {
  if (spec.k < 2) throw std::invalid_argument("permutohedron_vertices: need k >= 2");
  Vec v = spec.base;
  std::sort(v.begin(), v.end());
  std::vector<Vec> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;  // next_permutation from the sorted start yields lex order
}

std::vector<Vec> permutation_polynomial_maxvectors(int n, int k) {
  if (k < 2 || k > n) throw std::invalid_argument("permutation_polynomial_maxvectors: need 2 <= k <= n");
  if (n > 5)
    throw std::length_error("permutation_polynomial_maxvectors: n > 5 refused (full expansion)");
  std::map<Vec, Exp> poly;
  poly.emplace(Vec(static_cast<std::size_t>(n), 0), 1);
  for_each_k_subset(n, k, [&](const std::vector<int>& idx) {
    std::map<Vec, Exp> next;
    for (const auto& [mono, coef] : poly) {
      for (int i : idx) {
        Vec m = mono;
        m[static_cast<std::size_t>(i - 1)] += 1;
        next[m] += coef;
      }
    }
    poly = std::move(next);
  });
  std::vector<Vec> out;
  for (const auto& [mono, coef] : poly)
    if (coef == 1) out.push_back(mono);
  return out;  // std::map iteration is already lex order
}

}  // namespace montame
