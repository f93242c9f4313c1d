#include "rootobs/root_datum.hpp"

#include "rootobs/abelian.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace rootobs {

void RootDatum::validate() const {
  const int n = lattice_rank, l = rs.rank();
  if (l > n) throw input_error("semisimple rank exceeds lattice rank");
  if (simple_coroots.rows() != n || simple_coroots.cols() != l)
    throw input_error("simple_coroots must be lattice_rank x semisimple_rank");
  if (simple_roots.rows() != l || simple_roots.cols() != n)
    throw input_error("simple_roots must be semisimple_rank x lattice_rank");
  if (!(simple_roots * simple_coroots == rs.cartan))
    throw input_error("simple_roots * simple_coroots does not equal the Cartan matrix");
  // coroot columns must be linearly independent
  if (l > 0) {
    SmithDecomposition s = smith_normal_form(simple_coroots);
    if (s.rank() != l) throw input_error("simple coroots are linearly dependent");
  }
}

bool RootDatum::is_adjoint_shaped() const {
  const int l = rs.rank();
  if (lattice_rank != l || l == 0) return false;
  return simple_roots == IntMat::identity(l) && simple_coroots == rs.cartan;
}

RootDatum preset_sc(const std::vector<SimpleType>& factors) {
  RootDatum d;
  d.rs = build_root_system(factors);
  const int l = d.rs.rank();
  d.lattice_rank = l;
  d.simple_coroots = IntMat::identity(l);
  d.simple_roots = d.rs.cartan;  // alpha_i(alpha_j^vee) = cartan(i, j)
  std::ostringstream name;
  for (size_t f = 0; f < factors.size(); ++f) name << (f ? " x " : "") << "SC(" << factors[f].str() << ")";
  d.name = name.str();
  d.validate();
  return d;
}

RootDatum preset_ad(const std::vector<SimpleType>& factors) {
  RootDatum d;
  d.rs = build_root_system(factors);
  const int l = d.rs.rank();
  d.lattice_rank = l;
  d.simple_coroots = d.rs.cartan;  // coroot j = sum_i cartan(i, j) * omega_i
  d.simple_roots = IntMat::identity(l);
  std::ostringstream name;
  for (size_t f = 0; f < factors.size(); ++f) name << (f ? " x " : "") << "AD(" << factors[f].str() << ")";
  d.name = name.str();
  d.validate();
  return d;
}

RootDatum preset_gl(int n) {
  if (n < 1) throw input_error("GL(" + std::to_string(n) + "): n must be >= 1");
  RootDatum d;
  d.lattice_rank = n;
  if (n >= 2) d.rs = build_root_system({make_simple_type('A', n - 1)});
  else d.rs = build_root_system({});
  const int l = n >= 2 ? n - 1 : 0;
  d.simple_coroots = IntMat(n, l);
  d.simple_roots = IntMat(l, n);
  for (int i = 0; i + 1 < n; ++i) {
    d.simple_coroots(i, i) = 1;
    d.simple_coroots(i + 1, i) = -1;
    d.simple_roots(i, i) = 1;
    d.simple_roots(i, i + 1) = -1;
  }
  d.name = "GL(" + std::to_string(n) + ")";
  d.validate();
  return d;
}

RootDatum preset_sl(int n) {
  if (n < 1) throw input_error("SL(" + std::to_string(n) + "): n must be >= 1");
  RootDatum d = (n >= 2) ? preset_sc({make_simple_type('A', n - 1)}) : preset_torus(0);
  d.name = "SL(" + std::to_string(n) + ")";
  return d;
}

RootDatum preset_pgl(int n) {
  if (n < 1) throw input_error("PGL(" + std::to_string(n) + "): n must be >= 1");
  RootDatum d = (n >= 2) ? preset_ad({make_simple_type('A', n - 1)}) : preset_torus(0);
  d.name = "PGL(" + std::to_string(n) + ")";
  return d;
}

RootDatum preset_torus(int r) {
  if (r < 0) throw input_error("T(" + std::to_string(r) + "): rank must be >= 0");
  RootDatum d;
  d.lattice_rank = r;
  d.rs = build_root_system({});
  d.simple_coroots = IntMat(r, 0);
  d.simple_roots = IntMat(0, r);
  d.name = "T(" + std::to_string(r) + ")";
  d.validate();
  return d;
}

RootDatum preset_intermediate(const SimpleType& type, const std::vector<std::vector<Int>>& gens) {
  RootDatum ad = preset_ad({type});
  const int l = ad.lattice_rank;
  FinAbGroup pi1_ad = cokernel(ad.rs.cartan);
  const int k = pi1_ad.ngens();

  IntMat lifts(l, int(gens.size()));
  for (size_t g = 0; g < gens.size(); ++g) {
    if (int(gens[g].size()) != k)
      throw input_error("INT(" + type.str() + "): subgroup generator needs " + std::to_string(k) +
                        " coordinates, the invariant factors of the adjoint fundamental group");
    std::vector<Int> lift(l);
    IntMat gl = pi1_ad.generator_lifts.to_integer();
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < l; ++i) lift[i] += gens[g][j] * gl(i, j);
    lifts.set_column(int(g), lift);
  }

  // Lattice between the coroot and coweight lattices.
  IntMat basis = column_hnf(ad.rs.cartan.hcat(lifts));
  RootDatum d;
  d.rs = ad.rs;
  d.lattice_rank = l;
  // New coordinates: x = basis * (coords). Roots evaluate by picking coweight
  // coordinates, so the root functionals become the rows of basis.
  d.simple_roots = basis;
  auto coroots = solve_columns(basis, ad.rs.cartan);
  if (!coroots) throw integrity_error("coroot lattice not contained in the intermediate lattice");
  d.simple_coroots = *coroots;
  std::ostringstream name;
  name << "INT(" << type.str() << ";";
  for (size_t g = 0; g < gens.size(); ++g)
    for (int j = 0; j < k; ++j) name << ((g || j) ? "," : " ") << gens[g][j];
  name << ")";
  d.name = name.str();
  d.validate();
  return d;
}

RootDatum product(const std::vector<RootDatum>& terms) {
  if (terms.empty()) throw input_error("empty group expression");
  if (terms.size() == 1) return terms[0];
  RootDatum d;
  std::vector<SimpleType> factors;
  int n = 0, l = 0;
  for (const RootDatum& t : terms) {
    factors.insert(factors.end(), t.rs.factors.begin(), t.rs.factors.end());
    n += t.lattice_rank;
    l += t.rs.rank();
  }
  d.rs = build_root_system(factors);
  d.lattice_rank = n;
  d.simple_coroots = IntMat(n, l);
  d.simple_roots = IntMat(l, n);
  int ro = 0, co = 0;
  std::ostringstream name;
  for (size_t t = 0; t < terms.size(); ++t) {
    const RootDatum& part = terms[t];
    for (int i = 0; i < part.lattice_rank; ++i)
      for (int j = 0; j < part.rs.rank(); ++j) d.simple_coroots(ro + i, co + j) = part.simple_coroots(i, j);
    for (int i = 0; i < part.rs.rank(); ++i)
      for (int j = 0; j < part.lattice_rank; ++j) d.simple_roots(co + i, ro + j) = part.simple_roots(i, j);
    ro += part.lattice_rank;
    co += part.rs.rank();
    name << (t ? " x " : "") << part.name;
  }
  d.name = name.str();
  d.validate();
  return d;
}

namespace {

// Recursive-descent parser for the group-expression grammar, tracking the
// input position for error messages.
class ExprParser {
public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  RootDatum parse() {
    std::vector<RootDatum> terms;
    terms.push_back(term());
    skip_ws();
    while (pos_ < s_.size()) {
      if (std::toupper(peek()) == 'X') {
        ++pos_;
        terms.push_back(term());
        skip_ws();
      } else {
        fail("expected 'x' or end of expression");
      }
    }
    return product(terms);
  }

private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw input_error("parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string keyword() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a group keyword");
    std::string kw = s_.substr(start, pos_ - start);
    for (char& c : kw) c = char(std::toupper(c));
    return kw;
  }

  Int integer() {
    skip_ws();
    size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || (s_[start] == '-' && pos_ == start + 1)) fail("expected an integer");
    return Int(s_.substr(start, pos_ - start));
  }

  SimpleType type_token() {
    skip_ws();
    size_t at = pos_;
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a simple type like A3 or D4");
    std::string tok = s_.substr(start, pos_ - start);
    try {
      return parse_simple_type(tok);
    } catch (const input_error& e) {
      pos_ = at;
      fail(e.what());
    }
  }

  RootDatum term() {
    skip_ws();
    size_t at = pos_;
    std::string kw = keyword();
    expect('(');
    RootDatum d;
    if (kw == "SL") d = preset_sl(arg_count(kw, 1));
    else if (kw == "GL") d = preset_gl(arg_count(kw, 1));
    else if (kw == "PGL") d = preset_pgl(arg_count(kw, 1));
    else if (kw == "T") d = preset_torus(arg_count(kw, 0));
    else if (kw == "SC") d = preset_sc({type_token()});
    else if (kw == "AD") d = preset_ad({type_token()});
    else if (kw == "INT") d = int_body();
    else {
      pos_ = at;
      fail("unknown group keyword '" + kw + "'");
    }
    expect(')');
    return d;
  }

  int arg_count(const std::string& kw, int min_value) {
    skip_ws();
    size_t at = pos_;
    Int n = integer();
    if (n < min_value || n > 1000) {
      pos_ = at;
      fail("'" + kw + "(" + n.str() + ")' is out of range: the argument must be >= " + std::to_string(min_value));
    }
    return int(n.convert_to<long>());
  }

  RootDatum int_body() {
    SimpleType t = type_token();
    expect(';');
    std::vector<Int> flat;
    flat.push_back(integer());
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      flat.push_back(integer());
      skip_ws();
    }
    FinAbGroup pi1_ad = cokernel(build_root_system({t}).cartan);
    const size_t k = size_t(pi1_ad.ngens());
    if (k == 0) {
      fail("INT(" + t.str() + "): the adjoint fundamental group is trivial, no proper intermediate lattice exists");
    }
    if (flat.size() % k != 0)
      fail("INT(" + t.str() + "): generator list length must be a multiple of " + std::to_string(k));
    std::vector<std::vector<Int>> gens;
    for (size_t i = 0; i < flat.size(); i += k) gens.push_back(std::vector<Int>(flat.begin() + i, flat.begin() + i + k));
    return preset_intermediate(t, gens);
  }
};

}  // namespace

RootDatum parse_group_expression(const std::string& expr) {
  return ExprParser(expr).parse();
}

RootDatum datum_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  try {
    RootDatum d;
    d.lattice_rank = j.at("lattice_rank").get<int>();
    std::vector<SimpleType> factors;
    for (const auto& f : j.at("factors")) factors.push_back(parse_simple_type(f.get<std::string>()));
    d.rs = build_root_system(factors);
    const int n = d.lattice_rank, l = d.rs.rank();
    const auto& cr = j.at("simple_coroots");
    if (int(cr.size()) != l) throw input_error("simple_coroots must list one column per simple root");
    d.simple_coroots = IntMat(n, l);
    for (int c = 0; c < l; ++c) {
      if (int(cr[c].size()) != n) throw input_error("coroot column has wrong length");
      for (int i = 0; i < n; ++i) d.simple_coroots(i, c) = Int(cr[c][i].get<long long>());
    }
    const auto& rt = j.at("simple_roots");
    if (int(rt.size()) != l) throw input_error("simple_roots must list one row per simple root");
    d.simple_roots = IntMat(l, n);
    for (int r = 0; r < l; ++r) {
      if (int(rt[r].size()) != n) throw input_error("root row has wrong length");
      for (int i = 0; i < n; ++i) d.simple_roots(r, i) = Int(rt[r][i].get<long long>());
    }
    d.name = j.value("name", std::string("datum"));
    d.validate();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad root datum document: ") + e.what());
  }
}

}  // namespace rootobs
