// sgk: command-line front end for semi-graded ring computations.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sgk/checkers.hpp"
#include "sgk/parse.hpp"

using json = nlohmann::ordered_json;
using namespace sgk;

namespace {

constexpr int kExitError = 3;

struct Options {
  std::string ring_path;
  std::string ideal;
  std::vector<std::string> modules;
  std::string ore;
  std::vector<std::string> samples;
  int degree = -1;
  bool json = false;
  bool certificates = false;
  bool actions = false;
  bool corrupt = false;
  std::string expression;
  std::string t_values = "1,2,3";
  std::string n_values = "1,2,3";
  int n_x_max = 3;
  int m_max = 3;
};

/// Raised for unusable input; reported with exit code 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_degree() {
  if (const char* env = std::getenv("SGK_DEFAULT_D")) {
    try {
      std::size_t pos = 0;
      int d = std::stoi(env, &pos);
      if (pos == std::string(env).size() && d >= 0) return d;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("SGK_DEFAULT_D must be a non-negative integer, got '") + env + "'");
  }
  return 8;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError(flag + ": expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string status_name(Status s) { return to_string(s); }

int exit_code(Status s) {
  switch (s) {
    case Status::Pass:
      return 0;
    case Status::Fail:
      return 1;
    case Status::Inconclusive:
      return 2;
  }
  return kExitError;
}

std::string scalar_string(const Scalar& s) { return s.get_str(); }

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::size_t end = dims.size();
  while (end > 1 && dims[end - 1] == 0) --end;
  std::string out = "(";
  for (std::size_t i = 0; i < end; ++i) out += (i ? "," : "") + std::to_string(dims[i]);
  return out + ")";
}

/// Everything loaded for one invocation.
struct Workspace {
  RingFile file;
  RingPtr ring;
  int degree = 8;

  const Presentation& presentation() const { return *file.presentation; }
  const GeneratorTable& gens() const { return file.presentation->gens(); }
  std::string str(const Element& e) const { return to_string(e, gens()); }

  IdealPtr ideal(const std::string& name) const {
    if (name.empty()) throw UsageError("--ideal is required");
    const IdealDecl& decl = file.ideal(name);
    return std::make_shared<const SGIdeal>(sg_ideal(ring, decl.generators, decl.side, name));
  }

  QuotientContext context(const std::string& name) const {
    IdealPtr j = ideal(name);
    if (j->side != Side::TwoSided) throw UsageError("ideal " + name + " is not two-sided");
    return make_context(ring, j);
  }

  OreSetSpec ore(const std::string& name) const {
    return OreSetSpec::powers(ring, file.ore(name).s, name);
  }

  ModulePtr module(const std::string& path, const std::string& ideal_name) const {
    ModuleDecl decl = load_module_file(path, presentation());
    if (decl.ring != presentation().name())
      throw UsageError("module " + decl.name + " is declared over " + decl.ring + ", not " + presentation().name());
    IdealPtr ann;
    if (!decl.over_ideal.empty()) {
      if (!ideal_name.empty() && decl.over_ideal != ideal_name)
        throw UsageError("module " + decl.name + " is declared over " + decl.ring + "/" + decl.over_ideal +
                         ", not " + decl.ring + "/" + ideal_name);
      ann = ideal(decl.over_ideal);
    }
    return build_module(ring, decl, ann);
  }
};

Workspace load_workspace(const Options& o, bool build_ring = true) {
  if (o.ring_path.empty()) throw UsageError("--ring is required");
  Workspace ws;
  ws.degree = o.degree >= 0 ? o.degree : default_degree();
  ws.file = load_ring_file(o.ring_path);
  if (build_ring) ws.ring = std::make_shared<const SGRing>(ws.file.presentation, ws.degree);
  return ws;
}

json header(const std::string& command, const Options& o, const Workspace& ws) {
  json h;
  h["command"] = command;
  json args;
  args["ring"] = ws.presentation().name();
  if (!o.ideal.empty()) args["ideal"] = o.ideal;
  if (!o.modules.empty()) args["modules"] = o.modules;
  if (!o.ore.empty()) args["ore"] = split_names(o.ore);
  if (!o.samples.empty()) args["samples"] = o.samples;
  if (!o.expression.empty()) args["expression"] = o.expression;
  h["args"] = args;
  h["bound"] = ws.degree;
  return h;
}

json element_terms(const Element& e, const Workspace& ws) {
  json terms = json::array();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
    terms.push_back({{"monomial", to_string(it->first, ws.gens())}, {"coefficient", scalar_string(it->second)}});
  return terms;
}

json element_list(const std::vector<Element>& xs, const Workspace& ws) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(ws.str(x));
  return out;
}

json module_json(const SGModule& m, bool actions) {
  json out;
  out["name"] = m.name();
  out["dims"] = m.dims();
  out["support"] = dims_string(m.dims());
  out["basis"] = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) out["basis"].push_back(m.window().label(i));
  if (actions) {
    json acts;
    const auto& gens = m.ring().gens();
    for (GenIndex g = 0; g < gens.size(); ++g) {
      Matrix a = m.truncated_matrix(m.ring().generator(g));
      json rows = json::array();
      for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(scalar_string(a(r, c)));
        rows.push_back(row);
      }
      acts[gens.name(g)] = rows;
    }
    out["actions"] = acts;
  }
  return out;
}

/// One invocation's report plus its exit code.
struct Outcome {
  json report;
  std::string text;
  int code = 0;
};

// ---------------------------------------------------------------- nf, decompose

Outcome run_nf(const Options& o, bool decompose) {
  Workspace ws = load_workspace(o, false);
  Element e = parse_element(o.expression, ws.presentation(), "<expression>");
  Outcome out;
  out.report = header(decompose ? "decompose" : "nf", o, ws);
  out.report["status"] = "ok";
  if (!decompose) {
    out.report["result"] = {{"normal_form", ws.str(e)}, {"terms", element_terms(e, ws)}};
    out.text = ws.str(e) + "\n";
    return out;
  }
  std::map<int, Element> parts = degree_decompose(e);
  json comps = json::array();
  std::string text = "{";
  bool first = true;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    comps.push_back({{"degree", it->first}, {"component", ws.str(it->second)}});
    text += (first ? "" : ", ") + std::to_string(it->first) + ": " + ws.str(it->second);
    first = false;
  }
  out.report["result"] = {{"normal_form", ws.str(e)}, {"components", comps}};
  out.text = text + "}\n";
  return out;
}

// ---------------------------------------------------------------- checks

Status worst(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
  return Status::Pass;
}

std::vector<std::string> ore_names(const Options& o) {
  auto names = split_names(o.ore);
  if (names.empty()) throw UsageError("--ore is required");
  return names;
}

Outcome run_check_confluence(const Options& o) {
  Workspace ws = load_workspace(o, false);
  Outcome out;
  out.report = header("check confluence", o, ws);
  ValidationReport v = validate_presentation(ws.presentation());
  ConfluenceReport c = check_confluence(ws.presentation(), ws.degree);
  Status st = v.ok && c.confluent ? Status::Pass : Status::Fail;
  json issues = json::array();
  for (const auto& i : v.issues) issues.push_back({{"rule", i.rule}, {"message", i.message}});
  json unresolved = json::array();
  for (const auto& u : c.unresolved)
    unresolved.push_back(
        {{"word", to_string(u.word, ws.gens())}, {"left", ws.str(u.left)}, {"right", ws.str(u.right)}});
  out.report["status"] = status_name(st);
  out.report["result"] = {{"valid", v.ok},
                          {"issues", issues},
                          {"confluent", c.confluent},
                          {"overlaps_checked", c.checked},
                          {"unresolved", unresolved}};
  std::string text = "status: " + status_name(st) + "\n";
  for (const auto& i : v.issues) text += "invalid rule " + i.rule + ": " + i.message + "\n";
  text += "overlaps checked: " + std::to_string(c.checked) + "\n";
  for (const auto& u : c.unresolved)
    text += "unresolved " + to_string(u.word, ws.gens()) + ": " + ws.str(u.left) + " != " + ws.str(u.right) + "\n";
  out.text = text;
  out.code = exit_code(st);
  return out;
}

Outcome run_check_ore(const Options& o, bool good) {
  Workspace ws = load_workspace(o);
  Outcome out;
  out.report = header(good ? "check good-ore" : "check ore", o, ws);
  Status st = Status::Pass;
  json sets = json::array();
  std::string text;
  for (const auto& name : ore_names(o)) {
    OreSetSpec spec = ws.ore(name);
    json entry{{"name", name}, {"generator", ws.str(spec.s)}, {"k_max", spec.k_max}};
    std::vector<OreWitness> witnesses;
    Status s;
    std::optional<std::string> failure;
    bool verified;
    if (good) {
      GoodOreReport r = check_good_ore(spec);
      s = r.status;
      failure = r.failure;
      witnesses = r.witnesses;
      verified = verify(r, spec);
      entry["bound"] = r.bound;
      entry["powers_in_r2"] = r.powers_in_r2;
    } else {
      OreReport r = check_left_ore(spec);
      s = r.status;
      failure = r.failure;
      witnesses = r.witnesses;
      verified = verify(r, spec);
      entry["bound"] = r.bound;
    }
    if (!verified) s = Status::Fail;
    entry["status"] = status_name(s);
    entry["certificates_verified"] = verified;
    if (failure) entry["witness"] = *failure;
    if (o.certificates) {
      json ws_json = json::array();
      for (const auto& w : witnesses)
        ws_json.push_back({{"r", ws.str(w.r)}, {"k", w.k}, {"u", ws.str(w.u)}});
      entry["certificates"] = ws_json;
    }
    sets.push_back(entry);
    st = worst(st, s);
    text += name + ": " + status_name(s);
    if (failure) text += ", witness " + *failure;
    text += "\n";
    if (o.certificates)
      for (const auto& w : witnesses)
        text += "  " + ws.str(spec.s) + "^" + std::to_string(w.k) + " * (" + ws.str(w.r) + ") = (" + ws.str(w.u) +
                ") * " + ws.str(spec.s) + "\n";
  }
  out.report["status"] = status_name(st);
  out.report["result"] = {{"ore_sets", sets}};
  out.text = "status: " + status_name(st) + "\n" + text;
  out.code = exit_code(st);
  return out;
}

Outcome run_check_schematic(const Options& o) {
  Workspace ws = load_workspace(o);
  std::vector<OreSetSpec> sets;
  for (const auto& name : ore_names(o)) sets.push_back(ws.ore(name));
  std::vector<std::vector<Element>> samples;
  for (const auto& s : o.samples) samples.push_back(parse_element_list(s, ws.presentation(), "<sample>"));
  SchematicReport rep;
  try {
    rep = check_schematic(ws.ring, sets, samples, o.m_max);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Outcome out;
  out.report = header("check schematic", o, ws);
  json tuples = json::array();
  std::string text;
  Status st = rep.status;
  for (const auto& t : rep.tuples) {
    const bool verified = verify(t, *ws.ring);
    Status ts = verified ? t.status : Status::Fail;
    st = worst(st, ts);
    json entry{{"sample", element_list(t.sample, ws)}, {"status", status_name(ts)}};
    if (t.status != Status::Fail || t.t > 0) {
      entry["t"] = t.t;
      entry["m"] = t.m;
      entry["monotone_next_t"] = t.monotone_next_t;
      entry["window_truncated"] = t.window_truncated;
    }
    entry["certificates_verified"] = verified;
    if (t.failure) entry["witness"] = *t.failure;
    if (o.certificates) {
      json certs = json::array();
      for (const auto& c : t.certificates) certs.push_back({{"p", ws.str(c.p)}, {"u", element_list(c.u, ws)}});
      entry["certificates"] = certs;
    }
    tuples.push_back(entry);
    std::string names;
    for (const auto& x : t.sample) names += (names.empty() ? "" : ", ") + ws.str(x);
    text += "sample (" + names + "): " + status_name(ts);
    if (t.t > 0) text += ", t=" + std::to_string(t.t) + ", m=" + std::to_string(t.m);
    if (t.failure) text += ", witness " + *t.failure;
    text += "\n";
  }
  out.report["status"] = status_name(st);
  out.report["result"] = {{"preconditions", rep.preconditions}, {"m_max", o.m_max}, {"tuples", tuples}};
  std::string pre;
  for (const auto& p : rep.preconditions) pre += "precondition failed: " + p + "\n";
  out.text = "status: " + status_name(st) + "\n" + pre + text;
  out.code = exit_code(st);
  return out;
}

Outcome run_check_compatible(const Options& o) {
  Workspace ws = load_workspace(o);
  QuotientContext ctx = ws.context(o.ideal);
  CompatibleReport rep = check_compatible(ctx);
  const bool verified = verify(rep, ctx);
  Status st = verified ? rep.status : Status::Fail;
  Outcome out;
  out.report = header("check compatible", o, ws);
  json degrees = json::array();
  for (const auto& d : rep.degrees) {
    json entry{{"degree", d.degree}, {"image_dim", d.image_dim}, {"quotient_dim", d.quotient_dim}, {"equal", d.equal}};
    if (o.certificates) entry["image_basis"] = element_list(d.image_basis, ws);
    degrees.push_back(entry);
  }
  out.report["status"] = status_name(st);
  out.report["result"] = {{"certificates_verified", verified}, {"degrees", degrees}};
  if (rep.failure) out.report["result"]["witness"] = *rep.failure;
  out.text = "status: " + status_name(st) + "\n";
  if (rep.failure) out.text += "witness: " + *rep.failure + "\n";
  out.code = exit_code(st);
  return out;
}

Outcome run_check_star(const Options& o) {
  Workspace ws = load_workspace(o);
  QuotientContext ctx = ws.context(o.ideal);
  StarBounds bounds;
  bounds.t_values = parse_int_list(o.t_values, "--t");
  bounds.n_values = parse_int_list(o.n_values, "--n");
  bounds.n_x_max = o.n_x_max;
  StarReport rep = check_star(ctx, bounds);
  const bool verified = verify(rep, ctx);
  Status st = verified ? rep.status : Status::Fail;
  Outcome out;
  out.report = header("check star", o, ws);
  json items = json::array();
  std::size_t passed = 0;
  for (const auto& it : rep.items) {
    if (it.status == Status::Pass) ++passed;
    json entry{{"t", it.t}, {"n", it.n}, {"x", ws.str(it.x)}, {"status", status_name(it.status)}};
    if (it.status == Status::Pass) {
      entry["t_x"] = it.t_x;
      entry["n_x"] = it.n_x;
    }
    if (!it.note.empty()) entry["note"] = it.note;
    if (o.certificates) {
      json certs = json::array();
      for (const auto& c : it.certificates) {
        json terms = json::array();
        for (std::size_t i = 0; i < c.products.size(); ++i)
          terms.push_back({{"coefficient", scalar_string(c.coefficients[i])},
                           {"j", ws.str(c.products[i].first)},
                           {"p", ws.str(c.products[i].second)}});
        certs.push_back({{"g", ws.str(c.g)}, {"terms", terms}});
      }
      entry["certificates"] = certs;
    }
    items.push_back(entry);
  }
  out.report["status"] = status_name(st);
  out.report["result"] = {{"t_values", bounds.t_values},
                          {"n_values", bounds.n_values},
                          {"n_x_max", bounds.n_x_max},
                          {"certificates_verified", verified},
                          {"items_checked", rep.items.size()},
                          {"items_passed", passed},
                          {"items", items}};
  if (rep.failure) out.report["result"]["witness"] = *rep.failure;
  out.text = "status: " + status_name(st) + "\nelements checked: " + std::to_string(rep.items.size()) +
             ", certified: " + std::to_string(passed) + "\n";
  if (rep.failure) out.text += "witness: " + *rep.failure + "\n";
  out.code = exit_code(st);
  return out;
}

Outcome run_check_lsg(const Options& o) {
  Workspace ws = load_workspace(o);
  if (o.modules.size() != 1) throw UsageError("check lsg needs exactly one --module");
  ModulePtr m = ws.module(o.modules[0], "");
  LsgReport rep = is_lsg(*m);
  Status st = rep.lsg ? Status::Pass : Status::Fail;
  Outcome out;
  out.report = header("check lsg", o, ws);
  out.report["status"] = status_name(st);
  out.report["result"] = {{"module", m->name()},
                          {"lsg", rep.lsg},
                          {"certified_to", rep.certified_to},
                          {"products_checked", rep.checked},
                          {"products_skipped", rep.skipped}};
  if (rep.witness) out.report["result"]["witness"] = *rep.witness;
  out.text = "status: " + status_name(st) + "\n";
  if (rep.witness) out.text += "witness: " + *rep.witness + "\n";
  out.code = exit_code(st);
  return out;
}

// ---------------------------------------------------------------- functors

Outcome run_functor(const Options& o, const std::string& kind) {
  Workspace ws = load_workspace(o);
  if (o.modules.size() != 1) throw UsageError("functor " + kind + " needs exactly one --module");
  QuotientContext ctx = ws.context(o.ideal);
  ModulePtr m = ws.module(o.modules[0], o.ideal);
  ModulePtr result;
  if (kind == "restrict") {
    try {
      result = restrict_scalars(ctx, m);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (kind == "shriek") {
    result = shriek(ctx, m).module;
  } else {
    result = upper_star(ctx, m).module;
  }
  CompatibleReport comp = check_compatible(ctx);
  Outcome out;
  out.report = header("functor " + kind, o, ws);
  out.report["status"] = "ok";
  out.report["result"] = {{"input", module_json(*m, false)},
                          {"output", module_json(*result, o.actions)},
                          {"ideal_compatible", comp.status == Status::Pass}};
  out.text = "dims " + dims_string(result->dims()) + "\n";
  if (o.actions) out.text += out.report["result"]["output"]["actions"].dump(2) + "\n";
  return out;
}

Outcome run_adjoint(const Options& o, const std::string& kind) {
  Workspace ws = load_workspace(o);
  if (o.modules.size() != 2) throw UsageError("adjoint " + kind + " needs --module twice (M, then N)");
  QuotientContext ctx = ws.context(o.ideal);
  ModulePtr m = ws.module(o.modules[0], o.ideal);
  ModulePtr n = ws.module(o.modules[1], o.ideal);
  AdjunctionOptions opts;
  opts.corrupt = o.corrupt;
  AdjunctionReport rep;
  try {
    rep = kind == "shriek" ? verify_adjunction_shriek(ctx, m, n, opts) : verify_adjunction_star(ctx, m, n, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Status st = rep.ok() ? (rep.truncated ? Status::Inconclusive : Status::Pass) : Status::Fail;
  Outcome out;
  out.report = header("adjoint " + kind, o, ws);
  out.report["status"] = status_name(st);
  json failures = json::array();
  for (const auto& f : rep.failures)
    failures.push_back(
        {{"variable", f.variable}, {"morphism", f.morphism}, {"element", f.element}, {"detail", f.detail}});
  out.report["result"] = {{"left_dim", rep.left_dim},
                          {"right_dim", rep.right_dim},
                          {"dimensions_equal", rep.dimensions_equal},
                          {"bijection", rep.bijection},
                          {"inverse_identities", rep.inverse_identities},
                          {"squares_checked", rep.squares_checked},
                          {"window_truncated", rep.truncated},
                          {"corrupted", o.corrupt},
                          {"failures", failures}};
  out.text = "status: " + status_name(st) + "\nhom dims " + std::to_string(rep.left_dim) + " / " +
             std::to_string(rep.right_dim) + ", bijection " + (rep.bijection ? "yes" : "no") + ", squares " +
             std::to_string(rep.squares_checked) + ", failures " + std::to_string(rep.failures.size()) + "\n";
  for (const auto& f : rep.failures)
    out.text += "square failed (" + f.variable + ", morphism " + std::to_string(f.morphism) + ", element " +
                std::to_string(f.element) + "): " + f.detail + "\n";
  out.code = exit_code(st);
  return out;
}

// ---------------------------------------------------------------- torsion

Outcome run_torsion(const Options& o) {
  Workspace ws = load_workspace(o);
  if (o.modules.size() != 1) throw UsageError("torsion needs exactly one --module");
  ModulePtr m = ws.module(o.modules[0], "");
  TorsionReport t = torsion(*m);
  Outcome out;
  out.report = header("torsion", o, ws);
  json basis = json::array();
  for (std::size_t i = 0; i < t.basis.size(); ++i)
    basis.push_back({{"element", m->vector_to_string(t.basis[i])}, {"n", t.witnesses[i].n}, {"t", t.witnesses[i].t}});
  json result{{"module", m->name()},
              {"dim", t.space.rank()},
              {"basis", basis},
              {"certified_to", t.bound},
              {"degreewise", t.degreewise},
              {"action_closed", t.action_closed}};
  if (t.uniform) result["uniform"] = {{"n", t.uniform->n}, {"t", t.uniform->t}};
  out.text = "dim T(M) = " + std::to_string(t.space.rank()) + "\n";
  Status st = Status::Pass;
  auto names = split_names(o.ore);
  if (!names.empty()) {
    std::optional<Echelon> meet;
    json kappas = json::array();
    for (const auto& name : names) {
      Echelon k = kappa_checked(ws.ore(name), *m);
      kappas.push_back({{"ore", name}, {"dim", k.rank()}});
      meet = meet ? intersect(*meet, k) : k;
    }
    const bool equal = *meet == t.space;
    result["kappa"] = kappas;
    result["kappa_intersection_dim"] = meet->rank();
    result["kappa_equals_torsion"] = equal;
    if (!equal) st = Status::Fail;
    out.text += std::string("intersection of kappa ") + (equal ? "equals" : "differs from") + " T(M)\n";
  }
  out.report["status"] = status_name(st);
  out.report["result"] = result;
  out.code = exit_code(st);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-graded ring toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--ring", o.ring_path, "Ring file (.sgr)");
  app.add_option("--ideal", o.ideal, "Ideal name from the ring file");
  app.add_option("--module", o.modules, "Module file (.sgm); repeat for M and N");
  app.add_option("--ore", o.ore, "Comma-separated Ore set names");
  app.add_option("--sample", o.samples, "Sample tuple, e.g. \"x^2,y^3\"; repeatable");
  app.add_option("-D,--degree", o.degree, "Degree bound (default $SGK_DEFAULT_D or 8)")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", o.json, "Emit the structured report");
  app.add_flag("--certificates", o.certificates, "Include certificates");
  app.add_flag("--actions", o.actions, "Include action matrices of functor outputs");
  app.add_flag("--corrupt", o.corrupt, "Test hook: corrupt the adjunction map");
  app.add_option("--t", o.t_values, "check star: sampled t values");
  app.add_option("--n", o.n_values, "check star: sampled n values");
  app.add_option("--nx-max", o.n_x_max, "check star: largest n_x searched");
  app.add_option("--m-max", o.m_max, "check schematic: largest m searched");

  std::function<Outcome()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Outcome()> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  CLI::App* nf = leaf(&app, "nf", "Normal form of an element", [&] { return run_nf(o, false); });
  nf->add_option("expression", o.expression, "Element expression")->required();
  CLI::App* dec = leaf(&app, "decompose", "Homogeneous components", [&] { return run_nf(o, true); });
  dec->add_option("expression", o.expression, "Element expression")->required();

  CLI::App* check = app.add_subcommand("check", "Window-certified checkers");
  check->fallthrough();
  check->require_subcommand(1);
  leaf(check, "ore", "Left Ore condition", [&] { return run_check_ore(o, false); });
  leaf(check, "good-ore", "Good Ore set", [&] { return run_check_ore(o, true); });
  leaf(check, "schematic", "Schematic cover", [&] { return run_check_schematic(o); });
  leaf(check, "compatible", "Ideal compatibility", [&] { return run_check_compatible(o); });
  leaf(check, "star", "Condition (*)", [&] { return run_check_star(o); });
  leaf(check, "confluence", "Presentation validity and confluence", [&] { return run_check_confluence(o); });
  leaf(check, "lsg", "Localizable semi-graded module", [&] { return run_check_lsg(o); });

  CLI::App* functor = app.add_subcommand("functor", "Functors along R -> R/J");
  functor->fallthrough();
  functor->require_subcommand(1);
  for (std::string kind : {"restrict", "shriek", "star"})
    leaf(functor, kind, "f_*, f^! or f^*", [&o, kind] { return run_functor(o, kind); });

  CLI::App* adjoint = app.add_subcommand("adjoint", "Verify an adjunction");
  adjoint->fallthrough();
  adjoint->require_subcommand(1);
  for (std::string kind : {"shriek", "star"})
    leaf(adjoint, kind, "(f_*, f^!) or (f^*, f_*)", [&o, kind] { return run_adjoint(o, kind); });

  leaf(&app, "torsion", "Torsion submodule and kappa", [&] { return run_torsion(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    Outcome out = action();
    if (o.json)
      std::cout << out.report.dump(2) << "\n";
    else
      std::cout << out.text;
    return out.code;
  } catch (const std::exception& e) {
    if (o.json) {
      json err{{"status", "error"}, {"error", e.what()}};
      std::cout << err.dump(2) << "\n";
    }
    std::cerr << "sgk: " << e.what() << "\n";
    return kExitError;
  }
}
