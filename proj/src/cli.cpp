#include "montame/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "montame/cone.hpp"
#include "montame/constructions.hpp"
#include "montame/errors.hpp"
#include "montame/exact.hpp"
#include "montame/ideal.hpp"
#include "montame/tameness.hpp"

namespace montame {

namespace {

constexpr int kDimUnset = -1;

std::optional<int> opt_dim(int n) {
  if (n == kDimUnset) return std::nullopt;
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  return n;
}

Vec parse_point(const std::string& text, int n) {
  Vec out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected integer coordinate", pos);
    Exp value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = checked_add(value * 10, text[pos] - '0');
      ++pos;
    }
    out.push_back(neg ? -value : value);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
    }
  }
  if (out.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("point has " + std::to_string(out.size()) +
                                " coordinates, expected " + std::to_string(n));
  return out;
}

std::vector<std::vector<int>> parse_sets(const std::string& text) {
  std::vector<std::vector<int>> sets;
  std::istringstream stream(text);
  std::string chunk;
  while (std::getline(stream, chunk, ';')) {
    std::vector<int> set;
    std::istringstream inner(chunk);
    std::string item;
    while (std::getline(inner, item, ',')) {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument("malformed index set: " + item);
      set.push_back(value);
    }
    if (set.empty()) throw std::invalid_argument("empty index set in --sets");
    sets.push_back(std::move(set));
  }
  if (sets.empty()) throw std::invalid_argument("--sets is empty");
  return sets;
}

int max_index(const std::vector<std::vector<int>>& sets) {
  int m = 1;
  for (const auto& s : sets)
    for (int i : s) m = std::max(m, i);
  return m;
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

std::string vec_json(const Vec& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j > 0) out << ", ";
    out << v[j];
  }
  out << "]";
  return out.str();
}

std::string vecs_json(const std::vector<Vec>& vs) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out << ", ";
    out << vec_json(vs[i]);
  }
  out << "]";
  return out.str();
}

void print_ideal(const MonomialIdeal& ideal, bool json) {
  std::cout << (json ? ideal_to_json(ideal) : format_ideal(ideal)) << "\n";
}

void print_report(const TamenessReport& report, bool json) {
  if (json)
    std::cout << report_to_json(report) << "\n";
  else
    std::cout << report_to_text(report);
}

long long factorial_ratio(int n, int k) {
  long long r = 1;
  for (int i = k; i <= n; ++i) r *= i;
  return r;  // n!/(k-1)!
}

struct AnalyzeOpts {
  std::string ideal;
  int n = kDimUnset;
  bool json = false;
};

struct ChartOpts {
  std::string ideal;
  std::string point;
  int n = kDimUnset;
  bool json = false;
};

struct AlgebraOpts {
  std::string a, b;
  int n = kDimUnset;
  int k = 1;
  bool json = false;
};

struct FactoryOpts {
  int n = kDimUnset, s = 0, k = 0;
  std::string sets;
  bool verify = false;
  bool json = false;
  bool force = false;
  bool closure = false;
  bool pairs_only = false;
};

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"tameness of monomial-ideal blowups via Newton-polyhedron tangent cones"};
  app.require_subcommand(1);

  AnalyzeOpts analyze_opts, vertices_opts;
  ChartOpts chart_opts;
  AlgebraOpts algebra_opts;
  FactoryOpts rosen_opts, perm_opts, building_opts, smooth_opts;

  CLI::App* analyze = app.add_subcommand("analyze", "full tameness report for an ideal");
  analyze->add_option("--ideal", analyze_opts.ideal, "ideal, e.g. \"(x1^2, x1*x2)\"")->required();
  analyze->add_option("--n", analyze_opts.n, "ambient dimension (default: inferred)");
  analyze->add_flag("--json", analyze_opts.json, "emit JSON");

  CLI::App* verts = app.add_subcommand("vertices", "Newton-polyhedron vertices of an ideal");
  verts->add_option("--ideal", vertices_opts.ideal, "ideal")->required();
  verts->add_option("--n", vertices_opts.n, "ambient dimension (default: inferred)");
  verts->add_flag("--json", vertices_opts.json, "emit JSON");

  CLI::App* chart = app.add_subcommand("chart", "classify the chart of a support point");
  chart->add_option("--ideal", chart_opts.ideal, "ideal")->required();
  chart->add_option("--point", chart_opts.point, "support point, e.g. \"0,1,1\"")->required();
  chart->add_option("--n", chart_opts.n, "ambient dimension (default: inferred)");
  chart->add_flag("--json", chart_opts.json, "emit JSON");

  CLI::App* algebra = app.add_subcommand("algebra", "ideal algebra");
  algebra->require_subcommand(1);
  std::vector<CLI::App*> binary_ops, unary_ops;
  for (const char* name : {"product", "intersect", "sum", "equals"}) {
    CLI::App* sub = algebra->add_subcommand(name);
    sub->add_option("--a", algebra_opts.a, "first ideal")->required();
    sub->add_option("--b", algebra_opts.b, "second ideal")->required();
    sub->add_option("--n", algebra_opts.n, "ambient dimension (default: inferred)");
    sub->add_flag("--json", algebra_opts.json, "emit JSON");
    binary_ops.push_back(sub);
  }
  for (const char* name : {"power", "radical"}) {
    CLI::App* sub = algebra->add_subcommand(name);
    sub->add_option("--a", algebra_opts.a, "ideal")->required();
    if (std::string(name) == "power")
      sub->add_option("--k", algebra_opts.k, "exponent (k = 0 gives the unit ideal)")->required();
    sub->add_option("--n", algebra_opts.n, "ambient dimension (default: inferred)");
    sub->add_flag("--json", algebra_opts.json, "emit JSON");
    unary_ops.push_back(sub);
  }

  CLI::App* rosen = app.add_subcommand("rosenberg", "Rosenberg smoothing R = I_axes intersect m^3");
  rosen->add_option("--n", rosen_opts.n, "ambient dimension")->required();
  rosen->add_option("--s", rosen_opts.s, "number of axes (1 < s < n)")->required();
  rosen->add_flag("--verify", rosen_opts.verify, "run the tameness analysis");
  rosen->add_flag("--json", rosen_opts.json, "emit JSON");

  CLI::App* perm = app.add_subcommand("permutohedral", "permutohedral ideal I_{n,k}");
  perm->add_option("--n", perm_opts.n, "ambient dimension")->required();
  perm->add_option("--k", perm_opts.k, "factor size (2 <= k <= n)")->required();
  perm->add_flag("--verify", perm_opts.verify, "verify tameness and the vertex set");
  perm->add_flag("--json", perm_opts.json, "emit JSON");
  perm->add_flag("--force", perm_opts.force, "lift the n <= 6 resource guard");

  CLI::App* building = app.add_subcommand("building", "building-set analysis and product");
  building->add_option("--sets", building_opts.sets, "family, e.g. \"1,2;1,3;2,3\"")->required();
  building->add_option("--n", building_opts.n, "ambient dimension (default: inferred)");
  building->add_flag("--closure", building_opts.closure, "print the arrangement closure");
  building->add_flag("--verify", building_opts.verify, "analyze the product when building");
  building->add_flag("--json", building_opts.json, "emit JSON");
  building->add_flag("--force", building_opts.force, "lift the closure size guard (512)");

  CLI::App* smooth = app.add_subcommand("smooth", "smoothing product of coordinate ideals");
  smooth->add_option("--sets", smooth_opts.sets, "coordinate ideals, e.g. \"1,2;1,3\"")->required();
  smooth->add_option("--n", smooth_opts.n, "ambient dimension (default: inferred)");
  smooth->add_flag("--pairs-only", smooth_opts.pairs_only,
                   "only the pairwise-sum product prod_{i<j}(I_i + I_j)");
  smooth->add_flag("--verify", smooth_opts.verify, "print the tameness report");
  smooth->add_flag("--json", smooth_opts.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(analyze)) {
      MonomialIdeal ideal = parse_ideal(analyze_opts.ideal, opt_dim(analyze_opts.n));
      print_report(is_tame(ideal), analyze_opts.json);
    } else if (app.got_subcommand(verts)) {
      MonomialIdeal ideal = parse_ideal(vertices_opts.ideal, opt_dim(vertices_opts.n));
      std::vector<Vec> vs = vertices(ideal);
      if (vertices_opts.json) {
        std::cout << "{\"n\": " << ideal.n() << ", \"vertices\": " << vecs_json(vs) << "}\n";
      } else {
        for (const Vec& v : vs) std::cout << vec_text(v) << "\n";
      }
    } else if (app.got_subcommand(chart)) {
      MonomialIdeal ideal = parse_ideal(chart_opts.ideal, opt_dim(chart_opts.n));
      Vec point = parse_point(chart_opts.point, ideal.n());
      ChartClass cls = classify_chart(ideal, point);
      bool has_gens = cls.kind == ChartKind::Smooth || cls.kind == ChartKind::Singular;
      if (chart_opts.json) {
        std::cout << "{\"point\": " << vec_json(point) << ", \"class\": \""
                  << chart_kind_name(cls.kind) << "\", \"minimal_generators\": "
                  << (has_gens ? vecs_json(cls.minimal_gens) : "null") << "}\n";
      } else {
        std::cout << vec_text(point) << ": " << chart_kind_name(cls.kind);
        if (has_gens) {
          std::cout << ", minimal generators:";
          for (const Vec& g : cls.minimal_gens) std::cout << " " << vec_text(g);
        }
        std::cout << "\n";
      }
    } else if (app.got_subcommand(algebra)) {
      std::optional<int> dim = opt_dim(algebra_opts.n);
      auto sub_is = [&](const char* name) {
        return algebra->get_subcommands().at(0)->get_name() == name;
      };
      MonomialIdeal a = parse_ideal(algebra_opts.a, dim);
      if (sub_is("radical")) {
        print_ideal(radical(a), algebra_opts.json);
      } else if (sub_is("power")) {
        print_ideal(power(a, algebra_opts.k), algebra_opts.json);
      } else {
        // Binary operations: when --n is omitted, infer each dimension
        // independently and align both ideals to the larger one.
        MonomialIdeal b = parse_ideal(algebra_opts.b, dim);
        if (!dim && b.n() != a.n()) {
          int shared = std::max(a.n(), b.n());
          a = parse_ideal(algebra_opts.a, shared);
          b = parse_ideal(algebra_opts.b, shared);
        }
        if (sub_is("product")) {
          print_ideal(product(a, b), algebra_opts.json);
        } else if (sub_is("intersect")) {
          print_ideal(intersect(a, b), algebra_opts.json);
        } else if (sub_is("sum")) {
          print_ideal(sum(a, b), algebra_opts.json);
        } else {
          bool eq = equals(a, b);
          if (algebra_opts.json)
            std::cout << "{\"equals\": " << (eq ? "true" : "false") << "}\n";
          else
            std::cout << (eq ? "true" : "false") << "\n";
        }
      }
    } else if (app.got_subcommand(rosen)) {
      MonomialIdeal r = rosenberg_ideal(rosen_opts.n, rosen_opts.s);
      if (rosen_opts.verify)
        print_report(is_tame(r), rosen_opts.json);
      else
        print_ideal(r, rosen_opts.json);
    } else if (app.got_subcommand(perm)) {
      PermutohedronSpec spec(perm_opts.n, perm_opts.k);
      MonomialIdeal ideal = permutohedral_ideal(spec, perm_opts.force);
      if (!perm_opts.verify) {
        print_ideal(ideal, perm_opts.json);
      } else {
        TamenessReport report = is_tame(ideal);
        std::vector<Vec> expected = permutohedron_vertices(spec);
        long long count = factorial_ratio(perm_opts.n, perm_opts.k);
        bool vertex_match = report.vertices == expected;
        bool count_match = static_cast<long long>(report.vertices.size()) == count;
        bool oracle_match = true;
        if (perm_opts.n <= 5)
          oracle_match =
              permutation_polynomial_maxvectors(perm_opts.n, perm_opts.k) == report.vertices;
        if (!report.tame || !vertex_match || !count_match || !oracle_match)
          throw InternalCheckError("permutohedral verification failed");
        if (perm_opts.json) {
          std::cout << "{\"n\": " << perm_opts.n << ", \"k\": " << perm_opts.k
                    << ", \"tame\": true, \"vertices\": " << report.vertices.size()
                    << ", \"expected_vertices\": " << count
                    << ", \"vertex_set_matches_permutohedron\": true"
                    << ", \"maxvector_oracle\": "
                    << (perm_opts.n <= 5 ? "\"match\"" : "\"skipped\"") << "}\n";
        } else {
          std::cout << "I_{" << perm_opts.n << "," << perm_opts.k << "}: tame, "
                    << report.vertices.size() << " vertices (expected " << count
                    << "), vertex set matches the permutohedron"
                    << (perm_opts.n <= 5 ? ", max-vector oracle agrees" : "") << "\n";
        }
      }
    } else if (app.got_subcommand(building)) {
      std::vector<std::vector<int>> sets = parse_sets(building_opts.sets);
      int n = building_opts.n != kDimUnset ? building_opts.n : max_index(sets);
      BuildingFamily family(n, sets);
      BuildingFamily closed =
          arrangement_closure(family, building_opts.force ? SIZE_MAX : std::size_t(512));
      bool is_building = is_building_set(family);
      if (building_opts.json) {
        std::cout << "{\"n\": " << n << ", \"building_set\": "
                  << (is_building ? "true" : "false") << ", \"closure_size\": "
                  << closed.masks().size();
        if (building_opts.closure) {
          std::cout << ", \"closure\": [";
          auto cs = closed.sets();
          for (std::size_t i = 0; i < cs.size(); ++i) {
            if (i > 0) std::cout << ", ";
            std::cout << "[";
            for (std::size_t j = 0; j < cs[i].size(); ++j)
              std::cout << (j > 0 ? ", " : "") << cs[i][j];
            std::cout << "]";
          }
          std::cout << "]";
        }
        if (is_building && building_opts.verify) {
          TamenessReport report = is_tame(building_product(family));
          std::cout << ", \"product_tame\": " << (report.tame ? "true" : "false");
        }
        std::cout << "}\n";
      } else {
        std::cout << "building set: " << (is_building ? "true" : "false") << "\n";
        if (building_opts.closure) {
          std::cout << "closure (" << closed.masks().size() << " sets):";
          for (const auto& s : closed.sets()) {
            std::cout << " {";
            for (std::size_t j = 0; j < s.size(); ++j)
              std::cout << (j > 0 ? "," : "") << s[j];
            std::cout << "}";
          }
          std::cout << "\n";
        }
        if (is_building) {
          MonomialIdeal prod = building_product(family);
          if (building_opts.verify)
            print_report(is_tame(prod), false);
          else
            print_ideal(prod, false);
        }
      }
    } else if (app.got_subcommand(smooth)) {
      std::vector<std::vector<int>> sets = parse_sets(smooth_opts.sets);
      int n = smooth_opts.n != kDimUnset ? smooth_opts.n : max_index(sets);
      std::vector<CoordinateCloud> clouds;
      clouds.reserve(sets.size());
      for (const auto& s : sets) clouds.emplace_back(n, s);
      MonomialIdeal result =
          smooth_opts.pairs_only ? pairwise_sum_product(clouds) : smooth_product(clouds);
      if (smooth_opts.verify)
        print_report(is_tame(result), smooth_opts.json);
      else
        print_ideal(result, smooth_opts.json);
    }
    return 0;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace montame
