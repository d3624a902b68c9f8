#include "rlie/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace rlie::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw SchemaError(where + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string at(const std::string& where, const char* key) { return where + "." + key; }
std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Coeff prime_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const long long p = j.get<long long>();
  if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p))) fail(where, "p must be a prime below 2^16");
  return static_cast<Coeff>(p);
}

Coeff coeff_from_json(const Json& j, Coeff p, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer coefficient");
  const long long v = j.get<long long>() % static_cast<long long>(p);
  return static_cast<Coeff>(v < 0 ? v + p : v);
}

Vec vec_from_json(const Json& j, Coeff p, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) fail(where, "expected an array of " + std::to_string(n) + " coefficients");
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = coeff_from_json(j[i], p, at(where, i));
  return v;
}

std::size_t index_from_json(const Json& j, const std::vector<std::string>& labels, const std::string& where) {
  if (j.is_string()) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == j.get<std::string>()) return i;
    fail(where, "unknown basis label \"" + j.get<std::string>() + "\"");
  }
  const std::size_t i = count_from_json(j, where);
  if (i >= labels.size()) fail(where, "basis index out of range");
  return i;
}

Json vec_json(const Vec& v) { return Json(v); }

void check_type(const Json& j, const char* type, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find("type");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != type))
    fail(at(where, "type"), std::string("expected \"") + type + "\"");
}

std::vector<Matrix> matrices_from_json(const Json& j, Coeff p, std::size_t count, std::size_t rows, std::size_t cols,
                                       const std::string& where) {
  if (!j.is_array() || j.size() != count) fail(where, "expected an array of " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(matrix_from_json(j[i], p, rows, cols, at(where, i)));
  return out;
}

Json matrices_json(const std::vector<Matrix>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

}  // namespace

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string document_type(const Json& j) {
  if (j.is_object() && j.contains("type") && j["type"].is_string()) return j["type"].get<std::string>();
  return {};
}

// ---------------------------------------------------------------------------

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r)));
  return rows;
}

Matrix matrix_from_json(const Json& j, Coeff p, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    fail(where, "expected a " + std::to_string(rows) + " x " + std::to_string(cols) + " matrix (array of rows)");
  std::vector<Vec> rs;
  for (std::size_t r = 0; r < rows; ++r) rs.push_back(vec_from_json(j[r], p, cols, at(where, r)));
  return rows == 0 ? Matrix::zero(p, 0, cols) : Matrix::from_rows(p, cols, rs);
}

Json to_json(const RestrictedLieAlgebra& l) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      if (!PrimeField::is_zero(l.basis_bracket(i, j))) brackets.push_back({i, j, vec_json(l.basis_bracket(i, j))});
  Json pmap = Json::array();
  for (std::size_t i = 0; i < l.dim(); ++i) pmap.push_back(vec_json(l.basis_pmap(i)));
  return {{"type", "restricted_lie_algebra"}, {"p", l.modulus()}, {"dim", l.dim()},
          {"basis", l.labels()},            {"brackets", brackets}, {"pmap", pmap}};
}

RestrictedLieAlgebra algebra_from_json(const Json& j, const std::string& where) {
  check_type(j, "restricted_lie_algebra", where);
  const Coeff p = prime_from_json(field(j, "p", where), at(where, "p"));
  if (j.contains("standard")) {
    const Json& name = j["standard"];
    if (!name.is_string()) fail(at(where, "standard"), "expected a name");
    const std::size_t n = j.contains("n") ? count_from_json(j["n"], at(where, "n")) : 0;
    std::optional<Matrix> f;
    if (j.contains("f")) f = matrix_from_json(j["f"], p, n, n, at(where, "f"));
    try {
      return standard_algebra(name.get<std::string>(), p, n, f ? &*f : nullptr).algebra;
    } catch (const std::invalid_argument& e) {
      fail(at(where, "standard"), e.what());
    }
  }
  std::vector<std::string> labels;
  const char* label_key = j.contains("basis") ? "basis" : (j.contains("labels") ? "labels" : nullptr);
  if (label_key) {
    const Json& lj = j[label_key];
    if (!lj.is_array()) fail(at(where, label_key), "expected an array of strings");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < lj.size(); ++i) {
      if (!lj[i].is_string()) fail(at(at(where, label_key), i), "expected a string");
      labels.push_back(lj[i].get<std::string>());
      if (!seen.insert(labels.back()).second) fail(at(at(where, label_key), i), "duplicate label");
    }
    if (j.contains("dim") && count_from_json(j["dim"], at(where, "dim")) != labels.size())
      fail(at(where, "dim"), "does not match the number of basis labels");
  } else {
    const std::size_t d = count_from_json(field(j, "dim", where), at(where, "dim"));
    for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  const std::size_t n = labels.size();
  const PrimeField f(p);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vec>> upper;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  if (j.contains("brackets")) {
    const Json& bj = j["brackets"];
    if (!bj.is_array()) fail(at(where, "brackets"), "expected an array");
    for (std::size_t k = 0; k < bj.size(); ++k) {
      const std::string w = at(at(where, "brackets"), k);
      std::size_t a = 0, b = 0;
      Vec v;
      if (bj[k].is_array()) {
        if (bj[k].size() != 3) fail(w, "expected a triple [i, j, [coeffs]]");
        a = index_from_json(bj[k][0], labels, at(w, std::size_t{0}));
        b = index_from_json(bj[k][1], labels, at(w, std::size_t{1}));
        v = vec_from_json(bj[k][2], p, n, at(w, std::size_t{2}));
      } else {
        a = index_from_json(field(bj[k], "i", w), labels, at(w, "i"));
        b = index_from_json(field(bj[k], "j", w), labels, at(w, "j"));
        v = vec_from_json(field(bj[k], "value", w), p, n, at(w, "value"));
      }
      if (a == b) fail(w, "bracket of a basis vector with itself is zero by antisymmetry");
      if (a > b) {
        std::swap(a, b);
        v = f.neg(v);
      }
      if (!pairs.insert({a, b}).second) fail(w, "bracket given twice");
      upper.push_back({{a, b}, v});
    }
  }
  std::vector<Vec> pmap(n, Vec(n, 0));
  if (j.contains("pmap")) {
    const Json& pj = j["pmap"];
    if (!pj.is_array() || pj.size() != n) fail(at(where, "pmap"), "expected one image per basis vector");
    for (std::size_t i = 0; i < n; ++i) pmap[i] = vec_from_json(pj[i], p, n, at(at(where, "pmap"), i));
  }
  return RestrictedLieAlgebra::from_upper(p, labels, upper, pmap);
}

Json to_json(const BeckModule& b, bool include_algebra) {
  Json j = {{"type", "beck_module"},
            {"dim", b.dim()},
            {"action", matrices_json(b.module.action)},
            {"f", to_json(b.f)}};
  if (include_algebra) j["algebra"] = to_json(b.algebra());
  return j;
}

BeckModule beck_from_json(const Json& j, const RestrictedLieAlgebra* context, const std::string& where) {
  check_type(j, "beck_module", where);
  RestrictedLieAlgebra l;
  if (j.contains("algebra")) {
    l = algebra_from_json(j["algebra"], at(where, "algebra"));
    if (context && !l.same_structure(*context))
      fail(at(where, "algebra"), "module algebra does not match the algebra it is used with");
  } else if (context) {
    l = *context;
  } else {
    fail(where, "missing field \"algebra\"");
  }
  const Coeff p = l.modulus();
  const std::size_t d = count_from_json(field(j, "dim", where), at(where, "dim"));
  std::vector<Matrix> action(l.dim(), Matrix::zero(p, d, d));
  if (j.contains("action")) action = matrices_from_json(j["action"], p, l.dim(), d, d, at(where, "action"));
  Matrix f = Matrix::zero(p, d, d);
  if (j.contains("f")) f = matrix_from_json(j["f"], p, d, d, at(where, "f"));
  return {{l, d, std::move(action)}, f};
}

Json to_json(const CrossedModule& x) {
  return {{"type", "crossed_module"},
          {"M", to_json(x.m)},
          {"N", to_json(x.n)},
          {"mu", to_json(x.mu)},
          {"eta", matrices_json(x.eta)}};
}

CrossedModule crossed_from_json(const Json& j, const std::string& where) {
  check_type(j, "crossed_module", where);
  CrossedModule x;
  x.m = algebra_from_json(field(j, "M", where), at(where, "M"));
  x.n = algebra_from_json(field(j, "N", where), at(where, "N"));
  const Coeff p = x.m.modulus();
  if (x.n.modulus() != p) fail(at(where, "N"), "M and N have different p");
  x.mu = matrix_from_json(field(j, "mu", where), p, x.n.dim(), x.m.dim(), at(where, "mu"));
  x.eta = matrices_from_json(field(j, "eta", where), p, x.n.dim(), x.m.dim(), x.m.dim(), at(where, "eta"));
  return x;
}

Json to_json(const ShortExactSequence& s) {
  return {{"type", "short_exact_sequence"}, {"N", to_json(s.n)},       {"g", to_json(s.g)},
          {"b", to_json(s.b)},              {"incl", to_json(s.incl)}, {"proj", to_json(s.proj)},
          {"section", to_json(s.section)}};
}

ShortExactSequence sequence_from_json(const Json& j, const std::string& where) {
  check_type(j, "short_exact_sequence", where);
  ShortExactSequence s;
  s.n = algebra_from_json(field(j, "N", where), at(where, "N"));
  s.g = algebra_from_json(field(j, "g", where), at(where, "g"));
  s.b = algebra_from_json(field(j, "b", where), at(where, "b"));
  const Coeff p = s.g.modulus();
  if (s.n.modulus() != p || s.b.modulus() != p) fail(where, "N, g and b have different p");
  s.incl = matrix_from_json(field(j, "incl", where), p, s.g.dim(), s.n.dim(), at(where, "incl"));
  s.proj = matrix_from_json(field(j, "proj", where), p, s.b.dim(), s.g.dim(), at(where, "proj"));
  if (j.contains("section")) {
    s.section = matrix_from_json(j["section"], p, s.g.dim(), s.b.dim(), at(where, "section"));
  } else {
    std::vector<Vec> lifts;
    for (std::size_t k = 0; k < s.b.dim(); ++k) {
      const LinearSolution sol = solve_linear(s.proj, s.b.unit(k));
      if (!sol.particular) fail(at(where, "proj"), "projection is not onto, no section exists");
      lifts.push_back(*sol.particular);
    }
    s.section = Matrix::from_columns(p, s.g.dim(), lifts);
  }
  return s;
}

Json to_json(const AbelianExtension& e) {
  Json c = Json::array();
  for (const auto& v : e.data.c) c.push_back(vec_json(v));
  Json omega = Json::array();
  for (const auto& v : e.data.omega) omega.push_back(vec_json(v));
  return {{"type", "abelian_extension"},
          {"base", to_json(e.base)},
          {"module", to_json(e.module, false)},
          {"c", c},
          {"omega", omega}};
}

ExtensionData extension_from_json(const Json& j, const std::string& where) {
  check_type(j, "abelian_extension", where);
  ExtensionData out;
  out.base = algebra_from_json(field(j, "base", where), at(where, "base"));
  out.module = beck_from_json(field(j, "module", where), &out.base, at(where, "module"));
  const Coeff p = out.base.modulus();
  const std::size_t n = out.base.dim();
  const std::size_t d = out.module.dim();
  out.data = zero_cocycle(n, d);
  if (j.contains("c")) {
    const Json& cj = j["c"];
    if (!cj.is_array() || cj.size() != pair_count(n))
      fail(at(where, "c"), "expected " + std::to_string(pair_count(n)) + " values, one per pair i < j in order");
    for (std::size_t k = 0; k < cj.size(); ++k) out.data.c[k] = vec_from_json(cj[k], p, d, at(at(where, "c"), k));
  }
  if (j.contains("omega")) {
    const Json& oj = j["omega"];
    if (!oj.is_array() || oj.size() != n) fail(at(where, "omega"), "expected one value per basis vector");
    for (std::size_t k = 0; k < n; ++k) out.data.omega[k] = vec_from_json(oj[k], p, d, at(at(where, "omega"), k));
  }
  return out;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& e : r.entries()) {
    Json c = {{"name", e.name}, {"passed", e.passed}};
    if (!e.detail.empty()) c["detail"] = e.detail;
    checks.push_back(c);
  }
  return {{"checks", checks}, {"passed", r.passed()}, {"sampled", r.sampled()}};
}

Json to_json(const SequenceReport& r) {
  Json nodes = Json::array();
  for (const auto& n : r.nodes)
    nodes.push_back(
        {{"node", n.node}, {"space", n.space}, {"verdict", n.verdict}, {"passed", n.passed}, {"detail", n.detail}});
  return {{"header", r.header},
          {"dimensions",
           {{"Der_p(b,A)", r.dim_der_b},
            {"Der_p(g,A)", r.dim_der_g},
            {"Hom_w(N_ab,A)", r.dim_hom},
            {"H1(b,A)", r.dim_h1_b},
            {"H1(g,A)", r.dim_h1_g}}},
          {"transgression_injective", r.transgression_injective},
          {"nodes", nodes},
          {"checks", to_json(r.checks)["checks"]},
          {"passed", r.passed()},
          {"sampled", r.sampled}};
}

}  // namespace rlie::io
