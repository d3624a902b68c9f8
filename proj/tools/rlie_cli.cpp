#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rlie/io.hpp"

using namespace rlie;
using io::Json;

namespace {

struct Outcome {
  std::string label;  // first text line reads "<label>: pass|fail"
  Report checks;
  Json result = Json::object();
  std::optional<bool> passed;  // overrides checks.passed() when set
  std::optional<bool> sampled;
  std::string text;  // replaces the generic check listing when non-empty

  bool ok() const { return passed.value_or(checks.passed()); }
  bool is_sampled() const { return sampled.value_or(checks.sampled()); }
};

struct Context {
  std::vector<std::string> files;
  CheckOptions opts;
  std::string perturb = "none";
};

void need_files(const Context& c, std::size_t n, const std::string& usage) {
  if (c.files.size() != n) throw io::SchemaError("usage: " + usage);
}

// Diagnostics name the file: "path:$.field".
std::string where(const Context& c, std::size_t i) { return c.files[i] + ":$"; }

Json matrices_json(const std::vector<Matrix>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(io::to_json(m));
  return a;
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

RestrictedLieAlgebra load_algebra(const Json& j, std::vector<std::string>* caveats, const std::string& where) {
  if (caveats && j.is_object() && j.contains("standard")) {
    const RestrictedLieAlgebra l = io::algebra_from_json(j, where);
    std::optional<Matrix> f;
    const std::size_t n = j.value("n", std::size_t{0});
    if (j.contains("f")) f = io::matrix_from_json(j["f"], l.modulus(), n, n, where + ".f");
    *caveats = standard_algebra(j["standard"].get<std::string>(), l.modulus(), n, f ? &*f : nullptr).caveats;
    return l;
  }
  return io::algebra_from_json(j, where);
}

AbelianExtension load_extension(const Json& j, const std::string& where) {
  io::ExtensionData d = io::extension_from_json(j, where);
  AbelianExtension e{d.base, d.module, d.data, realize_extension(d.base, d.module, d.data)};
  return e;
}

Outcome cmd_verify(const Context& c) {
  need_files(c, 1, "verify FILE");
  const Json j = io::load_file(c.files[0]);
  const std::string w = where(c, 0);
  const std::string type = io::document_type(j);
  Outcome out;
  if (type.empty() || type == "restricted_lie_algebra") {
    std::vector<std::string> caveats;
    const RestrictedLieAlgebra l = load_algebra(j, &caveats, w);
    out.label = "restricted";
    out.checks = verify_restricted(l, c.opts);
    out.result = {{"algebra", io::to_json(l)}, {"caveats", caveats}};
  } else if (type == "beck_module") {
    const BeckModule b = io::beck_from_json(j, nullptr, w);
    out.label = "beck module";
    out.checks.merge(verify_restricted(b.algebra(), c.opts), "algebra: ");
    out.checks.merge(verify_beck(b, c.opts));
    out.result = {{"module", io::to_json(b)}};
  } else if (type == "crossed_module") {
    const CrossedModule x = io::crossed_from_json(j, w);
    out.label = "crossed module";
    out.checks = verify_crossed(x, c.opts);
    out.result = {{"crossed_module", io::to_json(x)}};
  } else if (type == "short_exact_sequence") {
    const ShortExactSequence s = io::sequence_from_json(j, w);
    out.label = "short exact sequence";
    out.checks = verify_sequence(s, c.opts);
    out.result = {{"sequence", io::to_json(s)}};
  } else if (type == "abelian_extension") {
    const AbelianExtension e = load_extension(j, w);
    out.label = "abelian extension";
    out.checks = verify_abelian_extension(e, c.opts);
    out.result = {{"extension", io::to_json(e)}};
  } else {
    throw io::SchemaError("$.type: unknown document type \"" + type + "\"");
  }
  return out;
}

Outcome cmd_invariants(const Context& c) {
  need_files(c, 1, "invariants MODULE");
  const BeckModule b = io::beck_from_json(io::load_file(c.files[0]), nullptr, where(c, 0));
  Outcome out;
  out.label = "invariants";
  out.checks.merge(verify_restricted_module(b.module, c.opts), "module: ");
  const Subspace inv = invariants(b.module);
  std::vector<Vec> image;
  for (std::size_t k = 0; k < b.dim(); ++k) image.push_back(b.f.column(k));
  out.checks.add("f lands in invariants", inv.contains(Subspace::span(b.modulus(), b.dim(), image)));
  out.result = {{"dim", inv.dim()}, {"basis", inv.basis()}};
  return out;
}

Outcome cmd_derivations(const Context& c) {
  need_files(c, 1, "derivations ALGEBRA");
  const RestrictedLieAlgebra l = io::algebra_from_json(io::load_file(c.files[0]), where(c, 0));
  Outcome out;
  out.label = "derivations";
  out.checks.merge(verify_restricted(l, c.opts), "algebra: ");
  const DerivationSpace all = der(adjoint_module(l));
  const DerivationSpace res = restricted_der(l, c.opts);
  if (res.sampled) out.checks.mark_sampled();
  out.checks.add("restricted derivations are derivations", all.as_subspace().contains(res.as_subspace()));
  out.result = {{"der_dim", all.dim()},
                {"restricted_der_dim", res.dim()},
                {"restricted_der_basis", matrices_json(res.basis)}};
  return out;
}

Outcome cmd_beck_ders(const Context& c) {
  need_files(c, 2, "beck-ders ALGEBRA|SEQUENCE MODULE");
  const Json j = io::load_file(c.files[0]);
  Outcome out;
  out.label = "beck derivations";
  RestrictedLieAlgebra g;
  Matrix pi;
  BeckModule b;
  const Json mj = io::load_file(c.files[1]);
  if (io::document_type(j) == "short_exact_sequence") {
    const ShortExactSequence s = io::sequence_from_json(j, where(c, 0));
    out.checks.merge(verify_sequence(s, c.opts), "sequence: ");
    g = s.g;
    pi = s.proj;
    b = io::beck_from_json(mj, &s.b, where(c, 1));
  } else {
    g = io::algebra_from_json(j, where(c, 0));
    out.checks.merge(verify_restricted(g, c.opts), "algebra: ");
    pi = Matrix::identity(g.modulus(), g.dim());
    b = io::beck_from_json(mj, &g, where(c, 1));
  }
  out.checks.merge(verify_beck(b, c.opts), "module: ");
  const DerivationSpace d = beck_der(g, pi, b, c.opts);
  if (d.sampled) out.checks.mark_sampled();
  bool all_ok = true;
  for (const auto& m : d.basis) all_ok = all_ok && is_beck_derivation(g, pi, b, m, c.opts);
  out.checks.add("basis elements are Beck derivations", all_ok);
  out.result = {{"dim", d.dim()}, {"basis", matrices_json(d.basis)}};
  return out;
}

Outcome cmd_hom_w(const Context& c) {
  need_files(c, 2, "hom-w MODULE1 MODULE2");
  const BeckModule b1 = io::beck_from_json(io::load_file(c.files[0]), nullptr, where(c, 0));
  const BeckModule b2 = io::beck_from_json(io::load_file(c.files[1]), &b1.algebra(), where(c, 1));
  Outcome out;
  out.label = "hom_w";
  out.checks.merge(verify_beck(b1, c.opts), "first module: ");
  out.checks.merge(verify_beck(b2, c.opts), "second module: ");
  const WHomSpace h = hom_w(b1, b2);
  bool all_ok = true;
  for (const auto& m : h.basis) all_ok = all_ok && is_w_hom(b1, b2, m);
  out.checks.add("basis elements are w-homomorphisms", all_ok);
  out.result = {{"dim", h.dim()}, {"basis", matrices_json(h.basis)}};
  return out;
}

Outcome cmd_nab(const Context& c) {
  if (c.files.empty() || c.files.size() > 2) throw io::SchemaError("usage: nab SEQUENCE [MODULE]");
  const ShortExactSequence s = io::sequence_from_json(io::load_file(c.files[0]), where(c, 0));
  Outcome out;
  out.label = "N_ab";
  out.checks.merge(verify_sequence(s, c.opts), "sequence: ");
  if (!out.checks.passed()) return out;
  const NAb nab = n_ab(s);
  out.checks.merge(verify_beck(nab.module, c.opts), "N_ab: ");
  out.result = {{"n_ab", io::to_json(nab.module, false)}, {"relations_dim", nab.relations.dim()}};
  if (c.files.size() == 2) {
    const BeckModule a = io::beck_from_json(io::load_file(c.files[1]), &s.b, where(c, 1));
    out.checks.merge(verify_beck(a, c.opts), "module: ");
    const Tor0Space t = tor0_direct(s, a, c.opts);
    const WHomSpace h = hom_w(nab.module, a);
    out.checks.merge(check_tor0_hom_iso(s, a, c.opts), "tor0/hom: ");
    out.result["tor0_dim"] = t.dim();
    out.result["hom_w_dim"] = h.dim();
  }
  return out;
}

Outcome cmd_crossed(const Context& c) {
  need_files(c, 1, "crossed CROSSED_MODULE");
  const CrossedModule x = io::crossed_from_json(io::load_file(c.files[0]), where(c, 0));
  Outcome out;
  out.label = "crossed module";
  out.checks.merge(verify_crossed(x, c.opts), "crossed: ");
  if (!out.checks.passed()) return out;
  const InternalGroupoid g = to_groupoid(x);
  out.checks.merge(verify_groupoid(g, c.opts), "groupoid: ");
  out.result = {{"groupoid",
                 {{"C", io::to_json(g.c)},
                  {"C0", io::to_json(g.c0)},
                  {"s", io::to_json(g.s)},
                  {"t", io::to_json(g.t)},
                  {"e", io::to_json(g.e)}}}};
  return out;
}

Outcome cmd_groupoid_roundtrip(const Context& c) {
  need_files(c, 1, "groupoid-roundtrip CROSSED_MODULE");
  const CrossedModule x = io::crossed_from_json(io::load_file(c.files[0]), where(c, 0));
  Outcome out;
  out.label = "groupoid round trip";
  out.checks.merge(verify_crossed(x, c.opts), "crossed: ");
  if (!out.checks.passed()) return out;
  const InternalGroupoid g = to_groupoid(x);
  out.checks.merge(verify_groupoid(g, c.opts), "groupoid: ");
  const CrossedModule back = from_groupoid(g);
  const Matrix phi_m = round_trip_isomorphism(x, g);
  const Matrix phi_n = Matrix::identity(x.n.modulus(), x.n.dim());
  out.checks.merge(check_crossed_isomorphism(x, back, phi_m, phi_n, c.opts), "isomorphism: ");
  out.result = {{"recovered", io::to_json(back)}, {"phi_m", io::to_json(phi_m)}};
  return out;
}

Outcome cmd_ext_build(const Context& c) {
  need_files(c, 1, "ext-build EXTENSION");
  const AbelianExtension e = load_extension(io::load_file(c.files[0]), where(c, 0));
  Outcome out;
  out.label = "extension";
  out.checks.merge(verify_abelian_extension(e, c.opts));
  const H1Space h = h1_space(e.base, e.module);
  const bool cocycle = h.is_cocycle(e.data);
  out.checks.add("data is a cocycle", cocycle);
  out.result = {{"total", io::to_json(e.total)}, {"h1_dim", h.dim()}};
  if (cocycle) {
    out.result["class_key"] = h.class_key(e.data);
    out.result["split"] = PrimeField::is_zero(h.class_key(e.data));
  }
  return out;
}

std::pair<AbelianExtension, AbelianExtension> load_pair(const Context& c, Outcome& out) {
  const AbelianExtension e1 = load_extension(io::load_file(c.files[0]), where(c, 0));
  const AbelianExtension e2 = load_extension(io::load_file(c.files[1]), where(c, 1));
  if (!e1.base.same_structure(e2.base)) throw io::SchemaError(where(c, 1) + ".base: differs from the first extension");
  if (!(e1.module.module.action == e2.module.module.action && e1.module.f == e2.module.f && e1.module.dim() == e2.module.dim()))
    throw io::SchemaError(where(c, 1) + ".module: differs from the first extension");
  out.checks.merge(verify_abelian_extension(e1, c.opts), "first: ");
  out.checks.merge(verify_abelian_extension(e2, c.opts), "second: ");
  return {e1, e2};
}

Outcome cmd_ext_equiv(const Context& c) {
  need_files(c, 2, "ext-equiv EXTENSION1 EXTENSION2");
  Outcome out;
  out.label = "equivalence query";
  const auto [e1, e2] = load_pair(c, out);
  if (!out.checks.passed()) return out;
  const std::optional<Matrix> b = is_equivalent_1(e1, e2, c.opts);
  out.result = {{"equivalent", b.has_value()}};
  if (b) out.result["witness"] = io::to_json(*b);
  return out;
}

Outcome cmd_baer_sum(const Context& c) {
  need_files(c, 2, "baer-sum EXTENSION1 EXTENSION2");
  Outcome out;
  out.label = "baer sum";
  const auto [e1, e2] = load_pair(c, out);
  if (!out.checks.passed()) return out;
  const AbelianExtension sum = baer_sum_1(e1, e2, c.opts);
  out.checks.merge(verify_abelian_extension(sum, c.opts), "sum: ");
  out.result = {{"sum", io::to_json(sum)}};
  return out;
}

Outcome cmd_sequence(const Context& c, bool eight) {
  need_files(c, 2, std::string(eight ? "eight-term" : "five-term") + " SEQUENCE MODULE");
  const ShortExactSequence s = io::sequence_from_json(io::load_file(c.files[0]), where(c, 0));
  const BeckModule a = io::beck_from_json(io::load_file(c.files[1]), &s.b, where(c, 1));
  Perturbation perturb;
  try {
    perturb = perturbation_from_string(c.perturb);
  } catch (const std::invalid_argument&) {
    throw io::SchemaError("--perturb: unknown perturbation \"" + c.perturb + "\"");
  }
  Outcome out;
  out.label = eight ? "eight-term" : "five-term";
  out.checks.merge(verify_sequence(s, c.opts), "sequence: ");
  out.checks.merge(verify_beck(a, c.opts), "module: ");
  if (!out.checks.passed()) return out;
  const SequenceReport rep = eight ? eight_term(s, a, perturb, c.opts) : five_term(s, a, perturb, c.opts);
  out.checks.merge(rep.checks);
  if (rep.sampled) out.checks.mark_sampled();
  out.passed = out.checks.passed() && rep.passed();
  out.result = io::to_json(rep);
  out.result.erase("checks");  // already at the top level
  out.result["perturbation"] = c.perturb;
  out.text = rep.render();
  return out;
}

std::string render_text(const Outcome& o) {
  std::ostringstream s;
  s << o.label << ": " << verdict(o.ok()) << (o.is_sampled() ? " (sampled)" : "") << "\n";
  if (!o.text.empty()) return s.str() + o.text;
  for (const auto& e : o.checks.entries()) {
    s << "  " << e.name << ": " << verdict(e.passed);
    if (!e.detail.empty()) s << " (" << e.detail << ")";
    s << "\n";
  }
  for (const auto& [key, value] : o.result.items())
    if (value.is_primitive()) s << "  " << key << " = " << value.dump() << "\n";
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted Lie algebra toolkit over F_p"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  std::string format = "text";
  std::string output;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--exhaustive-limit", ctx.opts.exhaustive_limit, "Enumerate all elements when p^n is at most this");
  app.add_option("--seed", ctx.opts.seed, "Seed for sampled checks");
  app.add_option("--output", output, "Write the report here instead of stdout");

  struct Verb {
    std::string name;
    std::string help;
    std::function<Outcome(const Context&)> run;
  };
  const std::vector<Verb> verbs = {
      {"verify", "Check any schema document (dispatch on \"type\")", cmd_verify},
      {"invariants", "MODULE: invariant subspace", cmd_invariants},
      {"derivations", "ALGEBRA: ordinary and restricted derivations", cmd_derivations},
      {"beck-ders", "ALGEBRA|SEQUENCE MODULE: Beck derivations (through proj for a sequence)", cmd_beck_ders},
      {"hom-w", "MODULE1 MODULE2: w-homomorphisms", cmd_hom_w},
      {"nab", "SEQUENCE [MODULE]: N_ab, and Tor0 against Hom_w when MODULE is given", cmd_nab},
      {"crossed", "CROSSED: verify and convert to an internal groupoid", cmd_crossed},
      {"groupoid-roundtrip", "CROSSED: crossed module -> groupoid -> crossed module", cmd_groupoid_roundtrip},
      {"ext-build", "EXTENSION: build the total algebra and classify the data", cmd_ext_build},
      {"ext-equiv", "EXT1 EXT2: equivalence of abelian extensions", cmd_ext_equiv},
      {"baer-sum", "EXT1 EXT2: Baer sum", cmd_baer_sum},
      {"five-term", "SEQUENCE MODULE: five-term sequence", [](const Context& c) { return cmd_sequence(c, false); }},
      {"eight-term", "SEQUENCE MODULE: eight-term sequence", [](const Context& c) { return cmd_sequence(c, true); }},
  };

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help, fn] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", ctx.files, "Input JSON files")->required();
    if (name == "five-term" || name == "eight-term")
      sub->add_option("--perturb", ctx.perturb, "Deliberately break one map (testing)");
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string verb;
  std::function<Outcome(const Context&)> run;
  for (const auto& [name, help, fn] : verbs)
    if (subs[name]->parsed()) {
      verb = name;
      run = fn;
    }

  Outcome out;
  int status = 0;
  std::string error;
  try {
    out = run(ctx);
    status = out.ok() ? 0 : 1;
  } catch (const io::SchemaError& e) {
    error = e.what();
    status = 2;
  } catch (const std::invalid_argument& e) {
    error = std::string("invalid input: ") + e.what();
    status = 2;
  } catch (const std::length_error& e) {
    error = std::string("too large: ") + e.what();
    status = 2;
  }

  std::string doc;
  if (format == "json") {
    Json j = {{"command", verb},
              {"inputs", ctx.files},
              {"options", {{"exhaustive_limit", ctx.opts.exhaustive_limit}, {"seed", ctx.opts.seed}}}};
    if (status == 2) {
      j["error"] = error;
      j["passed"] = false;
    } else {
      const Json rep = io::to_json(out.checks);
      j["passed"] = out.ok();
      j["sampled"] = out.is_sampled();
      j["checks"] = rep["checks"];
      j["result"] = out.result;
    }
    doc = io::dump(j);
  } else {
    doc = status == 2 ? "error: " + error + "\n" : render_text(out);
  }
  if (status == 2 && (format == "json" || !output.empty())) std::cerr << "error: " << error << "\n";

  if (output.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << output << "\n";
      return 2;
    }
    f << doc;
  }
  return status;
}
