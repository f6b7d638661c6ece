#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "montame/cone.hpp"
#include "montame/ideal.hpp"

namespace montame {

/// Outcome of the tameness decision: one chart class per
/// Newton-polyhedron vertex, a global verdict, and (when not tame) the
/// lexicographically least vertex with a nonsimplicial tangent cone.
struct TamenessReport {
  MonomialIdeal ideal;
  std::vector<Vec> vertices;
  std::vector<std::pair<Vec, ChartClass>> charts;
  bool tame = false;
  std::optional<Vec> witness;
};

/// Verdict of the pattern-based product criteria. Unknown is only produced
/// by the pattern matchers; the general decision procedure always yields a
/// definite answer.
enum class TriVerdict { Tame, NotTame, Unknown };

/// Enumerates the vertices, classifies every vertex chart and aggregates.
/// Deterministic: vertices and charts are reported in lex order.
TamenessReport is_tame(const MonomialIdeal& ideal);

/// Transversality of clouds, implemented as disjoint variable supports.
bool transverse(const MonomialIdeal& a, const MonomialIdeal& b);
bool transverse(const CoordinateCloud& a, const CoordinateCloud& b);

/// Product of two coordinate ideals is tame iff the index sets are disjoint
/// or nested.
bool coord_pair_tame(const CoordinateCloud& a, const CoordinateCloud& b);

/// Tries the four triple criteria under every role assignment of the three
/// clouds; Tame when one matches, Unknown otherwise. Never returns NotTame:
/// instances outside the criteria must be resolved by is_tame.
TriVerdict coord_triple_tame(const CoordinateCloud& a, const CoordinateCloud& b,
                             const CoordinateCloud& c);

/// Test-harness entry point: tame(I) == tame(I^k). Requires k >= 2.
bool check_power_invariance(const MonomialIdeal& ideal, int k);

/// Test-harness entry point: given pairwise transverse tame ideals, returns
/// the tameness verdict of their product (which theory guarantees true).
/// Non-transverse or non-tame input throws std::invalid_argument.
bool check_transverse_product(const std::vector<MonomialIdeal>& ideals);

/// Report JSON per the fixed schema:
/// {"tame": bool, "vertices": [...], "witness": [...]|null,
///  "charts": [{"vertex": [...], "class": "...", "minimal_generators": ...}]}
std::string report_to_json(const TamenessReport& report);

/// Human-readable report; smooth charts list their chart coordinates as
/// monomial strings.
std::string report_to_text(const TamenessReport& report);

}  // namespace montame
