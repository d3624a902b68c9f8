// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace rlie;

namespace {

// Collects the first few failures of a criterion.
struct Verdict {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

RestrictedLieAlgebra with_pmap(const RestrictedLieAlgebra& l, std::size_t i, const Vec& image) {
  std::vector<Vec> table;
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t b = 0; b < l.dim(); ++b) table.push_back(l.basis_bracket(a, b));
  auto pmap = l.pmap_images();
  pmap[i] = image;
  return {l.modulus(), l.labels(), table, pmap};
}

struct NamedAlgebra {
  std::string name;
  RestrictedLieAlgebra l;
};

std::vector<NamedAlgebra> axiom_algebras() {
  return {
      {"abelian F_2^3, f nilpotent", abelian(2, Matrix::from_rows(2, 3, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}))},
      {"abelian F_3^2, f invertible", abelian(3, Matrix::from_rows(3, 2, {{1, 2}, {0, 1}}))},
      {"abelian F_5^1, f = 0", abelian(5, Matrix::zero(5, 1, 1))},
      {"heisenberg F_2", heisenberg(2)},
      {"heisenberg F_3", heisenberg(3)},
      {"heisenberg F_5", heisenberg(5)},
      {"gl_2 F_2", gl(2, 2)},
      {"gl_2 F_3", gl(2, 3)},
      {"gl_3 F_2", gl(3, 2)},
      {"sl_2 F_2", sl(2, 2)},
      {"sl_2 F_3", sl(2, 3)},
      {"sl_3 F_2", sl(3, 2)},
  };
}

Verdict axiom_suite() {
  Verdict v;
  std::size_t faults = 0;
  for (const auto& [name, l] : axiom_algebras()) {
    const Report rep = verify_restricted(l);
    v.expect(rep.passed(), name + " rejected: " + rep.failures());
    // Moving one p-map image by a non-central vector must be caught.
    const Subspace z = l.center();
    for (std::size_t i = 0; i < l.dim(); ++i) {
      if (z.contains(l.unit(i))) continue;
      const auto bad = with_pmap(l, 0, l.field().add(l.basis_pmap(0), l.unit(i)));
      v.expect(!verify_restricted(bad).passed(), name + " accepted a faulty p-map");
      ++faults;
      break;
    }
  }
  v.summary = std::to_string(axiom_algebras().size()) + " algebras pass, " + std::to_string(faults) +
              " faulty p-maps rejected";
  return v;
}

Verdict jacobson_calculus() {
  Verdict v;
  std::size_t pairs = 0;
  for (const auto& [name, l] : axiom_algebras()) {
    VecSampler sampler(l.modulus(), 4242);
    for (int k = 0; k < 100; ++k) {
      const Vec x = sampler.next(l.dim());
      const Vec y = sampler.next(l.dim());
      v.expect(l.s_coefficients(x, y) == oracle::s_by_interpolation(l, x, y), name + ": s_i differ from oracle");
      const Vec direct = l.p_power(l.field().add(x, y));
      v.expect(direct == l.p_power_split(x, y) && direct == l.p_power_split(y, x),
               name + ": p_power depends on the split");
      ++pairs;
    }
  }
  std::size_t elements = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    for (Coeff p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      std::uint64_t count = 1;
      for (std::size_t k = 0; k < n * n && count <= 65536; ++k) count *= p;
      if (count > 65536) continue;
      const auto g = gl(n, p);
      bool same = true;
      for_each_vector(p, n * n, [&](const Vec& x) {
        same = g.p_power(x) == Matrix::unflatten(p, n, n, x).pow(p).flatten();
        ++elements;
        return same;
      });
      v.expect(same, "gl_" + std::to_string(n) + " F_" + std::to_string(p) + ": p_power differs from matrix power");
    }
  v.summary = std::to_string(pairs) + " random pairs, " + std::to_string(elements) + " gl_n elements";
  return v;
}

Verdict groupoid_round_trip() {
  Verdict v;
  const auto examples = fixtures::crossed_examples();
  std::size_t flipped = 0;
  for (const auto& [name, x] : examples) {
    v.expect(verify_crossed(x).passed(), name + ": input is not a crossed module");
    const auto g = to_groupoid(x);
    v.expect(verify_groupoid(g).passed(), name + ": to_groupoid output rejected");
    const auto back = from_groupoid(g);
    const Matrix phi = round_trip_isomorphism(x, g);
    v.expect(check_crossed_isomorphism(x, back, phi, Matrix::identity(x.n.modulus(), x.n.dim())).passed(),
             name + ": round trip is not isomorphic");
    if (g.c.dim() == 0) continue;
    auto bad = g;
    bad.theta.set(0, g.c.dim(), bad.theta(0, g.c.dim()) + 1);
    if (!verify_groupoid(bad).passed()) ++flipped;
    auto bad_mu = x;
    if (x.m.dim() > 0 && x.n.dim() > 0) {
      bad_mu.mu.set(0, 0, bad_mu.mu(0, 0) + 1);
      v.expect(!verify_crossed(bad_mu).passed() || !check_crossed_isomorphism(bad_mu, back, phi,
                                                                            Matrix::identity(x.n.modulus(), x.n.dim()))
                                                          .passed(),
               name + ": perturbed mu still looks like the round trip");
    }
  }
  v.expect(examples.size() >= 5, "fewer than 5 crossed modules");
  v.expect(flipped > 0, "no fault flipped a verdict");
  v.summary = std::to_string(examples.size()) + " crossed modules, " + std::to_string(flipped) +
              " faulty compositions rejected";
  return v;
}

struct Pair {
  std::string name;
  ShortExactSequence s;
  BeckModule a;
};

std::vector<Pair> tor_pairs() {
  std::vector<Pair> out;
  const auto h2 = heisenberg_sequence(2);
  out.push_back({"heisenberg F_2, trivial A", h2, trivial_beck(h2.b, 1)});
  out.push_back({"heisenberg F_2, f = id", h2, {trivial_module(h2.b, 1), Matrix::identity(2, 1)}});
  const auto h3 = heisenberg_sequence(3);
  out.push_back({"heisenberg F_3, trivial A = F_3^2", h3, trivial_beck(h3.b, 2)});
  const auto tr = fixtures::trace_sequence();
  out.push_back({"trace on gl_2 F_2, trivial A", tr, trivial_beck(tr.b, 1)});
  out.push_back({"trace on gl_2 F_2, f = id", tr, {trivial_module(tr.b, 1), Matrix::identity(2, 1)}});
  const auto s2 = fixtures::split_sequence(2);
  out.push_back({"split F_2, trivial A", s2, trivial_beck(s2.b, 1)});
  const auto s3 = fixtures::split_sequence(3);
  out.push_back({"split F_3, trivial A = F_3^2", s3, trivial_beck(s3.b, 2)});
  const auto pl = fixtures::plane_sequence();
  out.push_back({"plane F_2, trivial A = F_2^2", pl, trivial_beck(pl.b, 2)});
  return out;
}

Verdict tor0_equality() {
  Verdict v;
  std::string dims;
  for (const auto& [name, s, a] : tor_pairs()) {
    const auto t = tor0_direct(s, a);
    const auto h = hom_w(n_ab(s).module, a);
    v.expect(t.dim() == h.dim(), name + ": dim Tor0 " + std::to_string(t.dim()) + " vs Hom_w " +
                                     std::to_string(h.dim()));
    v.expect(check_tor0_hom_iso(s, a).passed(), name + ": tor0_hom_iso round trips fail");
    dims += (dims.empty() ? "" : " ") + std::to_string(t.dim());
  }
  v.summary = std::to_string(tor_pairs().size()) + " pairs, dims " + dims;
  return v;
}

Verdict five_term_exactness() {
  Verdict v;
  std::vector<Pair> cases = tor_pairs();
  std::size_t count = 0;
  for (const auto& [name, s, a] : cases) {
    const auto rep = five_term(s, a);
    v.expect(rep.passed(), name + ": " + rep.checks.failures());
    for (std::size_t k = 0; k < 3 && k < rep.nodes.size(); ++k)
      v.expect(rep.nodes[k].verdict == "exact", name + ": " + rep.nodes[k].node + " is " + rep.nodes[k].verdict);
    v.expect(rep.nodes.size() == 4 && rep.nodes[3].passed, name + ": H1 node fails");
    ++count;
  }
  v.summary = std::to_string(count) + " sequences, nodes 1-3 exact by dimension count";
  return v;
}

Verdict baer_laws() {
  Verdict v;
  const auto l = abelian(2, Matrix::zero(2, 2, 2));
  const auto b = trivial_beck(l, 1);
  std::vector<AbelianExtension> ext;
  for_each_vector(2, 3, [&](const Vec& d) {
    ext.push_back(build_abelian_extension(l, b, unflatten_cocycle(d, 2, 1)));
    return true;
  });
  const auto split = build_abelian_extension(l, b, zero_cocycle(2, 1));
  const auto equiv = [](const AbelianExtension& x, const AbelianExtension& y) { return is_equivalent_1(x, y).has_value(); };
  for (const auto& x : ext) {
    v.expect(equiv(baer_sum_1(x, split), x), "split is not neutral");
    const auto inv = build_abelian_extension(l, b, negate(x.data, 2));
    v.expect(equiv(baer_sum_1(x, inv), split), "(-c, -omega) is not inverse");
    for (const auto& y : ext) {
      const auto xy = baer_sum_1(x, y);
      v.expect(equiv(xy, baer_sum_1(y, x)), "not commutative");
      for (const auto& z : ext) v.expect(equiv(baer_sum_1(xy, z), baer_sum_1(x, baer_sum_1(y, z))), "not associative");
    }
  }

  std::size_t two_fold = 0;
  for (const auto& s : {heisenberg_sequence(2), fixtures::trace_sequence()}) {
    const auto a = trivial_beck(s.b, 1);
    const auto tb = trivial_two_fold(a);
    const auto reps = h1_space(s.g, pull_back_beck(a, s.g, s.proj)).class_representatives(1 << 12);
    std::vector<TwoFoldExtension> xs{tb};
    for (std::size_t i = 0; i < reps.size(); i += 5) xs.push_back(beta_map(alpha_map(s, a, reps[i])));
    for (const auto& x : xs) {
      const auto sum = baer_sum_2(x, tb);
      v.expect(verify_two_fold(sum).passed(), "2-fold sum is malformed");
      v.expect(is_equivalent_2(sum, x).equivalent, "trivial 2-fold extension is not neutral");
      ++two_fold;
    }
  }
  v.summary = std::to_string(ext.size()) + " data points exhaustively, " + std::to_string(two_fold) +
              " 2-fold neutrality checks on 2 sequences";
  return v;
}

Verdict eight_term_composites() {
  Verdict v;
  const auto s = heisenberg_sequence(2);
  const auto a = trivial_beck(s.b, 1);
  const auto rep = eight_term(s, a);
  v.expect(rep.passed(), "unperturbed run fails: " + rep.checks.failures());
  v.expect(rep.nodes.size() == 7, "expected 7 nodes");
  for (const auto& n : rep.nodes) v.expect(n.passed, n.node + ": " + n.verdict);
  std::size_t broken = 0;
  for (const auto p : all_perturbations()) {
    const bool fails = !eight_term(s, a, p).passed();
    v.expect(fails, "perturbation " + to_string(p) + " went unnoticed");
    broken += fails;
  }
  v.summary = std::to_string(rep.nodes.size()) + " nodes pass, " + std::to_string(broken) + "/" +
              std::to_string(all_perturbations().size()) + " perturbations detected";
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict cli_determinism() {
  Verdict v;
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "rlie_acceptance";
  std::filesystem::create_directories(dir);
  const std::string data = RLIE_DATA_DIR;
  const std::vector<std::string> commands = {
      "five-term " + data + "/heisenberg_seq.json " + data + "/trivial_mod_f2sq.json",
      "eight-term " + data + "/heisenberg_seq.json " + data + "/trivial_mod_f2sq.json",
      "verify " + data + "/gl2_f3.json --exhaustive-limit 10",
      "baer-sum " + data + "/ext_heisenberg_f2.json " + data + "/ext_heisenberg_omega_f2.json",
  };
  std::size_t k = 0;
  for (const auto& cmd : commands) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const auto path = dir / ("run" + std::to_string(k) + "_" + std::to_string(run) + ".json");
      const std::string line = std::string(RLIE_CLI) + " " + cmd + " --seed 7 --format json --output " + path.string();
      const int status = std::system(line.c_str());
      v.expect(status == 0, "'" + cmd + "' exited with " + std::to_string(status));
      outputs[run] = slurp(path);
    }
    v.expect(!outputs[0].empty() && outputs[0] == outputs[1], "'" + cmd + "' is not byte-identical");
    ++k;
  }
  v.summary = std::to_string(commands.size()) + " commands run twice, byte-identical";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Verdict()> run;
    double limit_s;  // 0: none
  };
  const std::vector<Criterion> criteria = {
      {1, "axiom suite", axiom_suite, 5.0},
      {2, "Jacobson calculus against oracles", jacobson_calculus, 0},
      {3, "crossed module / groupoid round trip", groupoid_round_trip, 0},
      {4, "Tor0 equals Hom_w(N_ab, -)", tor0_equality, 10.0},
      {5, "five-term exactness", five_term_exactness, 0},
      {6, "Baer sum group laws", baer_laws, 0},
      {7, "eight-term composites and perturbations", eight_term_composites, 0},
      {8, "CLI determinism", cli_determinism, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s)
      v.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    const bool ok = v.failures.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%.2f s) %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                ok ? v.summary.c_str() : "");
    for (std::size_t i = 0; i < v.failures.size() && i < 5; ++i) std::printf("    %s\n", v.failures[i].c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
