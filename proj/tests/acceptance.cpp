// Acceptance suite: one PASS/FAIL line per criterion.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"

using namespace sgk;
using namespace sgk::test;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Word random_word(Rng& rng, std::size_t ngens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), letter(0, ngens - 1);
  Word w(len(rng));
  for (auto& l : w) l = letter(rng);
  return w;
}

// ------------------------------------------------------------------ 1

Outcome rewriting_soundness() {
  Outcome o;
  for (const char* f : {"weyl1.sgr", "qplane.sgr", "jordan.sgr"}) {
    RingFile rf = load_ring_file(data_path(f));
    if (!check_confluence(*rf.presentation, 8).confluent) {
      o.ok = false;
      o.detail += std::string(f) + " not confluent; ";
    }
  }
  Rng rng(1001);
  Loaded a = load("weyl1.sgr");
  WeylOperators ops{15};
  int weyl_ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 2, 6);
    Element e = normal_form(w, a.p());
    bool same = true;
    for (std::size_t j = 0; j <= 8; ++j) same &= ops.apply_word(w, j) == ops.apply_element(e, j);
    weyl_ok += same;
  }
  Loaded q = load("qplane.sgr");
  int q_ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 2, 6);
    auto [c, ea, eb] = qplane_word(w, Scalar(2));
    Monomial m = Monomial::one(2);
    m.exponents = {static_cast<std::uint16_t>(ea), static_cast<std::uint16_t>(eb)};
    m.degree = ea + eb;
    Element expect;
    expect.add_term(m, c, q.p().field());
    q_ok += normal_form(w, q.p()) == expect;
  }
  o.ok &= weyl_ok == 200 && q_ok == 200;
  o.detail += "confluence A1/qplane/Jordan at D=8; word oracles A1 " + std::to_string(weyl_ok) + "/200, qplane " +
              std::to_string(q_ok) + "/200";
  return o;
}

// ------------------------------------------------------------------ 2

Outcome predicate_equivalence() {
  Rng rng(1002);
  int agree = 0, total = 0, non_sg = 0;
  for (const char* f : {"weyl1.sgr", "lie.sgr", "qplane.sgr"}) {
    Loaded l = load(f, 5);
    const SGRing& r = *l.ring;
    const int trials = total + 34 <= 100 ? 34 : 100 - total;
    for (int t = 0; t < trials; ++t) {
      std::uniform_int_distribution<int> count(1, 2);
      std::vector<Vector> xs;
      // Alternate homogeneous and mixed generators so both outcomes occur.
      std::uniform_int_distribution<int> deg(0, 4);
      for (int i = count(rng); i > 0; --i) {
        Element e = t % 2 ? random_homogeneous(r, rng, deg(rng), 2) : random_element(r, rng, 0, 4, 2);
        xs.push_back(r.to_vector(e));
      }
      FlatSubspace n = action_closure(xs, r.window().dim(), r.left_actions(), r.field());
      const bool a = predicate_degreewise(n.space, r.window());
      const bool b = predicate_component_closed(n.space, r.window());
      const bool c = predicate_quotient_consistent(n.space, r.window());
      agree += a == b && b == c;
      non_sg += !a;
      ++total;
    }
  }
  return {agree == total && total == 100,
          std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(non_sg) + " not SG)"};
}

// ------------------------------------------------------------------ 3

Outcome closure_naturality() {
  Rng rng(1003);
  int ok = 0, total = 0;
  while (total < 100) {
    for (const char* file : {"qplane.sgr", "lie.sgr", "weyl1.sgr", "heis.sgr"}) {
      if (total == 100) break;
      Loaded l = load(file, 4);
      ModulePtr m = random_module(l, rng, nullptr, 2);
      if (m->dim() == 0) continue;
      const Field& f = m->field();
      GradedSubspace n = sg_closure({random_vector(m->dim(), rng, 0.2)}, m->window(), m->actions(), f);
      QuotientModule qm = quotient_module(m, n);
      std::vector<Vector> xs{random_vector(m->dim(), rng, 0.3), random_vector(m->dim(), rng, 0.3)};
      GradedSubspace cx = sg_closure(xs, m->window(), m->actions(), f);
      std::vector<Vector> image, qx;
      for (const auto& v : cx.basis()) image.push_back(qm.projection.apply(v, f));
      for (const auto& v : xs) qx.push_back(qm.projection.apply(v, f));
      GradedSubspace cqx = sg_closure(qx, qm.module->window(), qm.module->actions(), f);
      ok += span_of(image, qm.module->dim(), f) == flat(cqx);
      ++total;
    }
  }
  return {ok == 100, std::to_string(ok) + "/100 pairs"};
}

// ------------------------------------------------------------------ 4

// Elements of R_n whose products with every window monomial on the given
// side(s) stay homogeneous, by naive multiplication.
Echelon naive_prime(const SGRing& r, int n, bool both_sides) {
  const std::vector<Element> cand = component(r, n);
  std::vector<Vector> constraints;
  const std::size_t dim = r.window().dim();
  for (const auto& h : r.basis()) {
    if (h.degree + n > r.max_degree()) continue;
    for (int side = 0; side < (both_sides ? 2 : 1); ++side) {
      Matrix block(dim, cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) {
        Element hm;
        hm.add_term(h, 1, r.field());
        Element p = side == 0 ? multiply(cand[i], hm, r.presentation()) : multiply(hm, cand[i], r.presentation());
        for (const auto& [k, c] : degree_decompose(p))
          if (k != h.degree + n) {
            Vector v = r.to_vector(c);
            for (std::size_t j = 0; j < dim; ++j) block(j, i) += v[j];
          }
      }
      for (std::size_t j = 0; j < dim; ++j) constraints.push_back(block.row(j));
    }
  }
  Matrix all(constraints.size(), cand.size());
  for (std::size_t j = 0; j < constraints.size(); ++j)
    for (std::size_t i = 0; i < cand.size(); ++i) all(j, i) = constraints[j][i];
  return span_of(null_space(all, r.field()).row_vectors(), cand.size(), r.field());
}

Outcome weyl_phenomena() {
  Loaded a = load("weyl1.sgr");
  const SGRing& r = *a.ring;
  ModulePtr reg = regular_module(a.ring);
  std::vector<std::string> notes;
  bool ok = true;

  // A1 x: left multiples of x, not degreewise.
  FlatSubspace ax = action_closure({r.to_vector(a.el("x"))}, r.window().dim(), r.left_actions(), r.field());
  SubmoduleCheck c = is_sg_submodule(ax.space.rows(), *reg);
  const Vector one = r.to_vector(a.el("1"));
  Echelon oracle = brute_force_closure(r, {a.el("x")}, false);
  const bool a1x = !c.sg && c.component && *c.component == one && oracle.contains(one) && !ax.space.contains(one);
  ok &= a1x;
  notes.push_back(std::string("A1x not SG with component 1: ") + (a1x ? "yes" : "no"));

  Echelon p1 = naive_prime(r, 1, false);
  RPrimeSlice lib1 = r_prime(r, 1);
  const bool rp = lib1.elements.size() == 1 && a.str(lib1.elements[0]) == "x" &&
                  p1 == span_of(lib1.basis, component(r, 1).size(), r.field());
  ok &= rp;
  notes.push_back(std::string("R'_1 = span{x}: ") + (rp ? "yes" : "no"));

  const bool rpp = r_double_prime(r, 1).elements.empty() && naive_prime(r, 1, true).rank() == 0;
  ok &= rpp;
  notes.push_back(std::string("R''_1 = 0: ") + (rpp ? "yes" : "no"));

  std::vector<Element> high;
  for (const auto& m : r.basis())
    if (m.degree >= 1) {
      Element e;
      e.add_term(m, 1, r.field());
      high.push_back(e);
    }
  Echelon geq = brute_force_closure(r, high, true);
  const bool full = geq.rank() == r.window().dim() && flat(r_geq(a.ring, 1).space) == geq;
  ok &= full;
  notes.push_back(std::string("R_{>=1} = window: ") + (full ? "yes" : "no"));

  std::string detail;
  for (const auto& n : notes) detail += (detail.empty() ? "" : "; ") + n;
  return {ok, detail};
}

// ------------------------------------------------------------------ 5

Outcome adjunctions() {
  Rng rng(1005);
  struct Case {
    const char* file;
    const char* ideal;
  };
  const std::vector<Case> cases{{"kx.sgr", "Jx"}, {"qplane.sgr", "Jy"}, {"heis.sgr", "Jz"}};
  int shriek_ok = 0, star_ok = 0;
  std::size_t squares = 0;
  for (int i = 0; i < 50; ++i) {
    const Case& c = cases[i % cases.size()];
    Loaded l = load(c.file, 4);
    IdealPtr j = l.ideal(c.ideal);
    QuotientContext ctx = make_context(l.ring, j);
    AdjunctionReport s = verify_adjunction_shriek(ctx, random_module(l, rng, j, 2), random_module(l, rng, nullptr, 2));
    shriek_ok += s.ok();
    AdjunctionReport t = verify_adjunction_star(ctx, random_module(l, rng, nullptr, 2), random_module(l, rng, j, 2));
    star_ok += t.ok();
    squares += s.squares_checked + t.squares_checked;
  }
  return {shriek_ok == 50 && star_ok == 50 && squares > 0,
          "(f_*, f^!) " + std::to_string(shriek_ok) + "/50, (f^*, f_*) " + std::to_string(star_ok) + "/50, " +
              std::to_string(squares) + " naturality squares, D=4"};
}

// ------------------------------------------------------------------ 6

Outcome torsion_kappa() {
  Loaded q = load("qplane.sgr");
  OreSetSpec sx = q.ore("Sx"), sy = q.ore("Sy");
  if (check_good_ore(sx).status != Status::Pass || check_good_ore(sy).status != Status::Pass)
    return {false, "Sx, Sy not verified good Ore"};
  Rng rng(1006);
  int ok = 0;
  std::ostringstream bounds;
  for (int i = 0; i < 20; ++i) {
    ModulePtr m = random_module(q, rng);
    TorsionReport t = torsion(*m);
    Echelon k = intersect(kappa_checked(sx, *m), kappa_checked(sy, *m));
    ok += k == t.space;
    if (i == 0) bounds << t.bound;
  }
  return {ok == 20, std::to_string(ok) + "/20 modules, certification bound D=" + bounds.str()};
}

// ------------------------------------------------------------------ 7

Outcome certificates() {
  int accepted = 0, verified = 0;
  auto tally = [&](Status s, bool v) {
    if (s != Status::Pass) return;
    ++accepted;
    verified += v;
  };
  for (auto [f, s] : std::vector<std::pair<const char*, const char*>>{
           {"qplane.sgr", "Sx"}, {"qplane.sgr", "Sy"}, {"weyl1.sgr", "Sx"}, {"kxy.sgr", "Sx"}, {"kxy.sgr", "Sy"},
           {"heis.sgr", "Sz"}, {"kx.sgr", "Sx"}}) {
    Loaded l = load(f);
    OreSetSpec spec = l.ore(s);
    OreReport o = check_left_ore(spec);
    tally(o.status, verify(o, spec));
    GoodOreReport g = check_good_ore(spec);
    tally(g.status, verify(g, spec));
  }
  Loaded q = load("qplane.sgr");
  SchematicReport sr = check_schematic(q.ring, {q.ore("Sx"), q.ore("Sy")},
                                       {parse_element_list("x^2,y^3", q.p()), parse_element_list("x,y^2", q.p())});
  for (const auto& t : sr.tuples) tally(t.status, verify(t, *q.ring));
  const bool t4m1 = !sr.tuples.empty() && sr.tuples[0].t == 4 && sr.tuples[0].m == 1;
  Loaded k = load("kxy.sgr");
  SchematicReport kr = check_schematic(k.ring, {k.ore("Sx"), k.ore("Sy")}, {});
  for (const auto& t : kr.tuples) tally(t.status, verify(t, *k.ring));
  for (auto [f, j] : std::vector<std::pair<const char*, const char*>>{
           {"qplane.sgr", "Jx"}, {"qplane.sgr", "Jy"}, {"kxy.sgr", "Jx"}, {"kx.sgr", "Jx"}, {"heis.sgr", "Jz"}}) {
    Loaded l = load(f);
    QuotientContext ctx = make_context(l.ring, l.ideal(j));
    CompatibleReport c = check_compatible(ctx);
    tally(c.status, verify(c, ctx));
    if (std::string(f) != "heis.sgr") {
      StarReport st = check_star(ctx);
      tally(st.status, verify(st, ctx));
    }
  }
  Loaded a = load("weyl1.sgr");
  GoodOreReport ag = check_good_ore(a.ore("Sx"));
  const bool weyl = ag.status == Status::Fail && ag.failure && ag.failure->find("x*y + 1") != std::string::npos;
  return {accepted > 0 && verified == accepted && t4m1 && weyl,
          std::to_string(verified) + "/" + std::to_string(accepted) + " accepts re-verified; qplane (x^2, y^3) t=" +
              (sr.tuples.empty() ? std::string("?") : std::to_string(sr.tuples[0].t)) +
              " m=" + (sr.tuples.empty() ? std::string("?") : std::to_string(sr.tuples[0].m)) +
              "; A1 good-Ore rejection: " + (ag.failure ? *ag.failure : std::string("none"))};
}

// ------------------------------------------------------------------ 8

std::string ring_text(const std::string& name, const std::vector<std::string>& gens,
                      const std::vector<std::string>& rules) {
  std::string t = "ring " + name + "\nfield QQ\n";
  for (const auto& g : gens) t += "gen " + g + " : 1\n";
  for (const auto& r : rules) t += "rel " + r + "\n";
  return t;
}

Outcome graded_degeneration() {
  struct GradedSample {
    Loaded ring;
    bool commutative;
  };
  std::vector<GradedSample> rings;
  for (const char* f : {"qplane.sgr", "jordan.sgr", "heis.sgr"}) rings.push_back({load(f), false});
  for (const char* f : {"kx.sgr", "kxy.sgr"}) rings.push_back({load(f), true});
  rings.push_back({load_text(ring_text("Q3", {"x", "y"}, {"y*x -> 3*x*y"})), false});
  rings.push_back({load_text(ring_text("Qm1", {"x", "y"}, {"y*x -> -x*y"})), false});
  rings.push_back({load_text(ring_text("Qhalf", {"x", "y"}, {"y*x -> 1/2*x*y"})), false});
  rings.push_back({load_text(ring_text("Kxyz", {"x", "y", "z"}, {"y*x -> x*y", "z*x -> x*z", "z*y -> y*z"})), true});
  rings.push_back(
      {load_text(ring_text("Skew3", {"x", "y", "z"}, {"y*x -> 2*x*y", "z*x -> 3*x*z", "z*y -> -y*z"})), false});

  Rng rng(1008);
  int compatible = 0, ideals = 0, prime_full = 0, star_pass = 0, star_total = 0;
  for (auto& sample : rings) {
    const SGRing& r = *sample.ring.ring;
    bool full = true;
    for (int n = 0; n <= r.max_degree(); ++n) full &= r_prime(r, n).elements.size() == component(r, n).size();
    prime_full += full;
    for (int i = 0; i < 2; ++i) {
      std::uniform_int_distribution<int> deg(1, 2), count(1, 2);
      std::vector<Element> gens;
      for (int g = count(rng); g > 0; --g) gens.push_back(random_homogeneous(r, rng, deg(rng), 2));
      QuotientContext ctx = make_context(sample.ring.ring, sample.ring.ideal_of(gens));
      ++ideals;
      compatible += check_compatible(ctx).status == Status::Pass;
      if (sample.commutative) {
        ++star_total;
        star_pass += check_star(ctx).status == Status::Pass;
      }
    }
  }
  return {compatible == 20 && ideals == 20 && prime_full == 10 && star_pass == star_total,
          "compatible " + std::to_string(compatible) + "/20; R'_n = R_n on " + std::to_string(prime_full) +
              "/10 rings; (*) on commutative samples " + std::to_string(star_pass) + "/" + std::to_string(star_total)};
}

// ------------------------------------------------------------------ 9

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(SGK_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome cli_contract() {
  const std::string d = std::string(SGK_DATA_DIR) + "/";
  const std::vector<std::string> reports{
      "check ore --ring " + d + "weyl1.sgr --ore Sx --json --certificates",
      "check schematic --ring " + d + "qplane.sgr --ore Sx,Sy --sample x^2,y^3 --json --certificates",
      "check star --ring " + d + "qplane.sgr --ideal Jx --json --certificates",
      "torsion --ring " + d + "qplane.sgr --module " + d + "qplane_mod_x.sgm --ore Sx,Sy --json",
      "adjoint star --ring " + d + "kx.sgr --ideal Jx --module " + d + "free.sgm --module " + d +
          "kx_trivial.sgm --json"};
  int identical = 0;
  for (const auto& a : reports) {
    Run x = run_cli(a), y = run_cli(a);
    identical += x.code == y.code && !x.out.empty() && x.out == y.out;
  }
  struct Expect {
    std::string args;
    int code;
  };
  const std::vector<Expect> controls{
      {"check ore --ring " + d + "zeroprod.sgr --ore Sx", 1},
      {"check good-ore --ring " + d + "weyl1.sgr --ore Sx", 1},
      {"check schematic --ring " + d + "qplane.sgr --ore Sx", 1},
      {"check compatible --ring " + d + "lie.sgr --ideal Jx", 1},
      {"check star --ring " + d + "zeroprod.sgr --ideal Jy", 1},
      {"check confluence --ring " + d + "nonconfluent.sgr", 1},
      {"check lsg --ring " + d + "kx.sgr --module " + d + "lsg_fail.sgm", 1},
      {"adjoint shriek --ring " + d + "kx.sgr --ideal Jx --module " + d + "kx_trivial.sgm --module " + d +
           "kx_trivial.sgm --corrupt",
       1},
      {"check ore --ring " + d + "qplane.sgr --ore Sx", 0},
      {"check confluence --ring " + d + "weyl1.sgr", 0},
      {"check ore --ring " + d + "missing.sgr --ore Sx", 3},
      {"check ore --ring " + d + "qplane.sgr --ore Nope", 3},
  };
  int codes = 0;
  std::string bad;
  for (const auto& c : controls) {
    const int got = run_cli(c.args).code;
    if (got == c.code)
      ++codes;
    else
      bad += " [" + c.args + " -> " + std::to_string(got) + "]";
  }
  return {identical == static_cast<int>(reports.size()) && codes == static_cast<int>(controls.size()),
          std::to_string(identical) + "/" + std::to_string(reports.size()) + " reports byte-identical; " +
              std::to_string(codes) + "/" + std::to_string(controls.size()) + " exit codes" + bad};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"rewriting soundness", rewriting_soundness},
      {"degreewise predicates agree", predicate_equivalence},
      {"SG closure naturality", closure_naturality},
      {"Weyl algebra phenomena", weyl_phenomena},
      {"adjunctions", adjunctions},
      {"torsion equals intersection of kappa", torsion_kappa},
      {"checker certificates", certificates},
      {"graded degeneration", graded_degeneration},
      {"CLI determinism and exit codes", cli_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.ok;
    std::printf("%s %zu %s: %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
