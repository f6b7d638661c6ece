#include "montame/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace montame {

Exp checked_add(Exp a, Exp b) {
  Exp r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("exponent arithmetic overflow");
  return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], -b[i]);
  return r;
}

Vec vec_max(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool is_zero(const Vec& a) {
  for (Exp e : a)
    if (e != 0) return false;
  return true;
}

bool dominates(const Vec& b, const Vec& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exp total_degree(const Vec& a) {
  Exp s = 0;
  for (Exp e : a) s = checked_add(s, e);
  return s;
}

Vec unit_vector(int n, int i) {
  Vec r(static_cast<std::size_t>(n), 0);
  r[static_cast<std::size_t>(i)] = 1;
  return r;
}

std::size_t VecHash::operator()(const Vec& v) const noexcept {
  std::size_t seed = v.size();
  for (Exp e : v)
    seed ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

MonomialIdeal MonomialIdeal::unit(int n) {
  if (n < 1) throw std::invalid_argument("MonomialIdeal: dimension must be >= 1");
  return MonomialIdeal(n, {Vec(static_cast<std::size_t>(n), 0)});
}

std::vector<int> MonomialIdeal::variable_support() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    for (const Vec& a : cloud_) {
      if (a[static_cast<std::size_t>(i)] > 0) {
        out.push_back(i + 1);
        break;
      }
    }
  }
  return out;
}

MonomialIdeal minimalize(const std::vector<Vec>& points, int n) {
  if (n < 1) throw std::invalid_argument("minimalize: dimension must be >= 1");
  if (points.empty()) throw std::invalid_argument("minimalize: empty generator set (the zero ideal is out of scope)");
  for (const Vec& p : points) {
    if (p.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("minimalize: point of wrong length");
    for (Exp e : p)
      if (e < 0) throw std::invalid_argument("minimalize: negative exponent");
  }

  // Sort by total degree, then lex; a point can only be dominated by a point
  // of strictly smaller degree (equal degree forces equality), so one sweep
  // over the kept prefix suffices.
  std::vector<Vec> pts = points;
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    Exp da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<Vec> kept;
  std::vector<Exp> kept_deg;
  kept.reserve(pts.size());
  for (const Vec& p : pts) {
    const Exp dp = total_degree(p);
    bool dominated = false;
    for (std::size_t i = 0; i < kept.size() && kept_deg[i] < dp; ++i) {
      if (dominates(p, kept[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      kept.push_back(p);
      kept_deg.push_back(dp);
    }
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(n, std::move(kept));
}

namespace {

void require_same_n(const MonomialIdeal& a, const MonomialIdeal& b, const char* who) {
  if (a.n() != b.n())
    throw std::invalid_argument(std::string(who) + ": ambient dimensions differ");
}

}  // namespace

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_n(a, b, "product");
  std::vector<Vec> pts;
  pts.reserve(a.cloud().size() * b.cloud().size());
  for (const Vec& p : a.cloud())
    for (const Vec& q : b.cloud()) pts.push_back(vec_add(p, q));
  return minimalize(pts, a.n());
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_n(a, b, "intersect");
  std::vector<Vec> pts;
  pts.reserve(a.cloud().size() * b.cloud().size());
  for (const Vec& p : a.cloud())
    for (const Vec& q : b.cloud()) pts.push_back(vec_max(p, q));
  return minimalize(pts, a.n());
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_n(a, b, "sum");
  std::vector<Vec> pts = a.cloud();
  pts.insert(pts.end(), b.cloud().begin(), b.cloud().end());
  return minimalize(pts, a.n());
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  if (k == 0) return MonomialIdeal::unit(a.n());
  MonomialIdeal r = a;
  for (int i = 1; i < k; ++i) r = product(r, a);
  return r;
}

MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<Vec> pts;
  pts.reserve(a.cloud().size());
  for (const Vec& p : a.cloud()) {
    Vec q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] > 0 ? 1 : 0;
    pts.push_back(std::move(q));
  }
  return minimalize(pts, a.n());
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_n(a, b, "equals");
  return a == b;
}

bool support_contains(const MonomialIdeal& ideal, const Vec& c) {
  if (c.size() != static_cast<std::size_t>(ideal.n()))
    throw std::invalid_argument("support_contains: point of wrong length");
  for (Exp e : c)
    if (e < 0) throw std::invalid_argument("support_contains: negative exponent");
  for (const Vec& a : ideal.cloud())
    if (dominates(c, a)) return true;
  return false;
}

namespace {

class IdealParser {
public:
  explicit IdealParser(const std::string& text) : s_(text) {}

  std::vector<std::map<int, Exp>> parse() {
    std::vector<std::map<int, Exp>> monomials;
    skip_ws();
    expect('(', "expected '('");
    monomials.push_back(parse_monomial());
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      monomials.push_back(parse_monomial());
      skip_ws();
    }
    expect(')', "expected ',' or ')'");
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters after ')'");
    return monomials;
  }

private:
  std::map<int, Exp> parse_monomial() {
    std::map<int, Exp> exps;
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      return exps;  // the unit monomial
    }
    parse_factor(exps);
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      parse_factor(exps);
      skip_ws();
    }
    return exps;
  }

  void parse_factor(std::map<int, Exp>& exps) {
    skip_ws();
    expect('x', "expected variable 'x<index>'");
    Exp index = parse_number("variable index");
    if (index < 1) fail("variable indices are 1-based", pos_ - 1);
    Exp e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      e = parse_number("exponent");
      if (e < 1) fail("exponents must be >= 1", pos_ - 1);
    }
    exps[static_cast<int>(index)] = checked_add(exps[static_cast<int>(index)], e);
  }

  Exp parse_number(const char* what) {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail(std::string("expected ") + what);
    Exp value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = checked_add(value * 10, peek() - '0');
      ++pos_;
    }
    return value;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char c, const char* message) {
    skip_ws();
    if (peek() != c) fail(message);
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal(const std::string& text, std::optional<int> n) {
  IdealParser parser(text);
  std::vector<std::map<int, Exp>> monomials = parser.parse();

  int max_index = 0;
  for (const auto& mono : monomials)
    for (const auto& [idx, e] : mono) {
      (void)e;
      max_index = std::max(max_index, idx);
    }
  int dim = n.value_or(std::max(max_index, 1));
  if (max_index > dim)
    throw ParseError("variable index exceeds dimension n=" + std::to_string(dim), 0);

  std::vector<Vec> pts;
  pts.reserve(monomials.size());
  for (const auto& mono : monomials) {
    Vec p(static_cast<std::size_t>(dim), 0);
    for (const auto& [idx, e] : mono) p[static_cast<std::size_t>(idx - 1)] = e;
    pts.push_back(std::move(p));
  }
  return minimalize(pts, dim);
}

std::string format_monomial(const Vec& exponents) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!first) out << "*";
    out << "x" << (i + 1);
    if (exponents[i] != 1) out << "^" << exponents[i];
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < ideal.cloud().size(); ++i) {
    if (i > 0) out << ", ";
    out << format_monomial(ideal.cloud()[i]);
  }
  out << ")";
  return out.str();
}

std::string ideal_to_json(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "{\"n\": " << ideal.n() << ", \"cloud\": [";
  for (std::size_t i = 0; i < ideal.cloud().size(); ++i) {
    if (i > 0) out << ", ";
    out << "[";
    const Vec& a = ideal.cloud()[i];
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j > 0) out << ", ";
      out << a[j];
    }
    out << "]";
  }
  out << "]}";
  return out.str();
}

CoordinateCloud::CoordinateCloud(int n_in, std::vector<int> indices_in)
    : n(n_in), indices(std::move(indices_in)) {
  if (n < 1) throw std::invalid_argument("CoordinateCloud: dimension must be >= 1");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty()) throw std::invalid_argument("CoordinateCloud: empty index set");
  if (indices.front() < 1 || indices.back() > n)
    throw std::invalid_argument("CoordinateCloud: index out of range");
}

MonomialIdeal CoordinateCloud::to_ideal() const {
  std::vector<Vec> pts;
  pts.reserve(indices.size());
  for (int i : indices) pts.push_back(unit_vector(n, i - 1));
  return minimalize(pts, n);
}

bool CoordinateCloud::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

}  // namespace montame
