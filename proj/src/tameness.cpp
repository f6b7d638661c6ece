#include "montame/tameness.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace montame {

TamenessReport is_tame(const MonomialIdeal& ideal) {
  TamenessReport report{ideal, {}, {}, true, std::nullopt};
  VertexScan scan = scan_vertices(ideal);
  const std::vector<Vec>& cloud = ideal.cloud();
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (!scan.is_vertex[i]) continue;
    const Vec& a = cloud[i];
    report.vertices.push_back(a);
    IdealTangentCone cone = tangent_cone(ideal, a);
    cone.set_witness(scan.witnesses[i]);
    ChartClass chart;
    chart.minimal_gens = cone.minimal_generators();
    chart.kind = cone.is_simplicial() ? ChartKind::Smooth : ChartKind::Singular;
    if (chart.kind != ChartKind::Smooth && report.tame) {
      report.tame = false;
      report.witness = a;  // cloud is lex-sorted, so the first hit is minimal
    }
    report.charts.emplace_back(a, std::move(chart));
  }
  return report;
}

bool transverse(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n()) throw std::invalid_argument("transverse: dimensions differ");
  std::vector<int> sa = a.variable_support();
  std::vector<int> sb = b.variable_support();
  std::vector<int> both;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
  return both.empty();
}

bool transverse(const CoordinateCloud& a, const CoordinateCloud& b) {
  if (a.n != b.n) throw std::invalid_argument("transverse: dimensions differ");
  std::vector<int> both;
  std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(),
                        b.indices.end(), std::back_inserter(both));
  return both.empty();
}

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.empty();
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

}  // namespace

bool coord_pair_tame(const CoordinateCloud& a, const CoordinateCloud& b) {
  return disjoint(a.indices, b.indices) || subset(a.indices, b.indices) ||
         subset(b.indices, a.indices);
}

TriVerdict coord_triple_tame(const CoordinateCloud& a, const CoordinateCloud& b,
                             const CoordinateCloud& c) {
  if (a.n != b.n || b.n != c.n)
    throw std::invalid_argument("coord_triple_tame: dimensions differ");
  const std::vector<int>&A = a.indices, &B = b.indices, &C = c.indices;
  std::array<const std::vector<int>*, 3> sets{&A, &B, &C};

  // (i) pairwise disjoint.
  if (disjoint(A, B) && disjoint(B, C) && disjoint(A, C)) return TriVerdict::Tame;

  // (iii) cyclic coverage: each cloud inside the union of the other two.
  if (subset(A, set_union(B, C)) && subset(B, set_union(C, A)) &&
      subset(C, set_union(A, B)))
    return TriVerdict::Tame;

  // (ii) and (iv) under all role assignments.
  std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& p : perms) {
    const std::vector<int>&I = *sets[p[0]], &J = *sets[p[1]], &K = *sets[p[2]];
    if (subset(I, J) && disjoint(J, K)) return TriVerdict::Tame;
    if (set_union(I, J) == K) return TriVerdict::Tame;
  }
  return TriVerdict::Unknown;
}

bool check_power_invariance(const MonomialIdeal& ideal, int k) {
  if (k < 2) throw std::invalid_argument("check_power_invariance: k must be >= 2");
  return is_tame(ideal).tame == is_tame(power(ideal, k)).tame;
}

bool check_transverse_product(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty())
    throw std::invalid_argument("check_transverse_product: no ideals");
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j)
      if (!transverse(ideals[i], ideals[j]))
        throw std::invalid_argument("check_transverse_product: clouds are not transverse");
  MonomialIdeal prod = ideals[0];
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (!is_tame(ideals[i]).tame)
      throw std::invalid_argument("check_transverse_product: factor is not tame");
    if (i > 0) prod = product(prod, ideals[i]);
  }
  return is_tame(prod).tame;
}

namespace {

void append_vec(std::ostringstream& out, const Vec& v) {
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ", ";
    out << v[i];
  }
  out << "]";
}

void append_vecs(std::ostringstream& out, const std::vector<Vec>& vs) {
  out << "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out << ", ";
    append_vec(out, vs[i]);
  }
  out << "]";
}

std::string vec_text(const Vec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

/// Chart coordinate x^{v} as a monomial fraction, e.g. "x2/x1".
std::string laurent_monomial(const Vec& v) {
  std::ostringstream num, den;
  int num_terms = 0, den_terms = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    std::ostringstream& side = v[i] > 0 ? num : den;
    int& terms = v[i] > 0 ? num_terms : den_terms;
    if (terms > 0) side << "*";
    side << "x" << (i + 1);
    Exp e = v[i] > 0 ? v[i] : -v[i];
    if (e != 1) side << "^" << e;
    ++terms;
  }
  std::string n = num_terms == 0 ? "1" : num.str();
  if (den_terms == 0) return n;
  if (den_terms == 1) return n + "/" + den.str();
  return n + "/(" + den.str() + ")";
}

}  // namespace

std::string report_to_json(const TamenessReport& report) {
  std::ostringstream out;
  out << "{\"tame\": " << (report.tame ? "true" : "false") << ", \"vertices\": ";
  append_vecs(out, report.vertices);
  out << ", \"witness\": ";
  if (report.witness) {
    append_vec(out, *report.witness);
  } else {
    out << "null";
  }
  out << ", \"charts\": [";
  for (std::size_t i = 0; i < report.charts.size(); ++i) {
    if (i > 0) out << ", ";
    const auto& [vertex, chart] = report.charts[i];
    out << "{\"vertex\": ";
    append_vec(out, vertex);
    out << ", \"class\": \"" << chart_kind_name(chart.kind) << "\", \"minimal_generators\": ";
    if (chart.kind == ChartKind::Smooth || chart.kind == ChartKind::Singular) {
      append_vecs(out, chart.minimal_gens);
    } else {
      out << "null";
    }
    out << "}";
  }
  out << "]}";
  return out.str();
}

std::string report_to_text(const TamenessReport& report) {
  std::ostringstream out;
  out << "ideal: " << format_ideal(report.ideal) << "  [n=" << report.ideal.n() << "]\n";
  out << "vertices: " << report.vertices.size() << "\n";
  for (const auto& [vertex, chart] : report.charts) {
    out << "  " << vec_text(vertex) << ": " << chart_kind_name(chart.kind);
    if (chart.kind == ChartKind::Smooth) {
      out << ", chart coordinates: ";
      for (std::size_t i = 0; i < chart.minimal_gens.size(); ++i) {
        if (i > 0) out << ", ";
        out << laurent_monomial(chart.minimal_gens[i]);
      }
    } else if (chart.kind == ChartKind::Singular) {
      out << ", " << chart.minimal_gens.size() << " minimal generators";
    }
    out << "\n";
  }
  if (report.tame) {
    out << "verdict: TAME\n";
  } else {
    out << "verdict: NOT TAME (witness vertex " << vec_text(*report.witness) << ", "
        << report.charts.size() << " vertex charts";
    for (const auto& [vertex, chart] : report.charts) {
      if (report.witness && vertex == *report.witness) {
        out << "; witness has " << chart.minimal_gens.size() << " minimal generators";
        break;
      }
    }
    out << ")\n";
  }
  return out.str();
}

}  // namespace montame
