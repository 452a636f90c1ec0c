#include "sgk/sgmod.hpp"

#include <algorithm>

namespace sgk {

SGModule::SGModule(std::string name, RingPtr ring, Window window, std::vector<Action> actions,
                   std::vector<ModuleGenerator> generators, std::vector<Vector> generator_vectors,
                   IdealPtr annihilator)
    : name_(std::move(name)),
      ring_(std::move(ring)),
      window_(std::move(window)),
      actions_(std::move(actions)),
      generators_(std::move(generators)),
      generator_vectors_(std::move(generator_vectors)),
      annihilator_(std::move(annihilator)) {
  if (actions_.size() != ring_->gens().size()) throw std::invalid_argument("one action per ring generator required");
  for (const auto& a : actions_)
    if (a.dim() != window_.dim()) throw std::invalid_argument("action does not match module window");
}

std::vector<const Action*> SGModule::actions() const {
  std::vector<const Action*> out;
  for (const auto& a : actions_) out.push_back(&a);
  return out;
}

ActionResult SGModule::act(GenIndex g, const Vector& v) const { return apply(actions_.at(g), v, field()); }

ActionResult SGModule::act(const Element& r, const Vector& v) const {
  const Field& f = field();
  ActionResult out{Vector(dim()), false};
  for (const auto& [m, c] : r.terms()) {
    Word w = m.to_word();
    ActionResult cur{v, false};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      ActionResult next = act(*it, cur.value);
      next.overflow |= cur.overflow;
      cur = std::move(next);
      if (!cur.overflow && is_zero(cur.value)) break;
    }
    out.overflow |= cur.overflow;
    axpy(out.value, c, cur.value, f);
  }
  return out;
}

Matrix SGModule::truncated_matrix(const Element& r) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vector e(dim());
    e[j] = 1;
    Vector img = act(r, e).value;
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = img[i];
  }
  return m;
}

ActionResult SGModule::element(const FreeElement& x) const {
  if (x.size() != generators_.size()) throw std::invalid_argument("free element has the wrong number of coordinates");
  ActionResult out{Vector(dim()), false};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (x[i].max_degree() + generators_[i].degree > max_degree())
      throw WindowOverflow("element exceeds module window degree " + std::to_string(max_degree()));
    ActionResult part = act(x[i], generator_vectors_.at(i));
    out.overflow |= part.overflow;
    axpy(out.value, 1, part.value, field());
  }
  return out;
}

std::optional<std::string> SGModule::relation_violation() const {
  const Presentation& p = ring_->presentation();
  const auto& gens = p.gens();
  for (GenIndex hi = 0; hi < gens.size(); ++hi)
    for (GenIndex lo = 0; lo < hi; ++lo) {
      const Element& rhs = p.rhs(hi, lo);
      for (std::size_t j = 0; j < dim(); ++j) {
        Vector e(dim());
        e[j] = 1;
        ActionResult a = act(lo, e);
        ActionResult b = act(hi, a.value);
        ActionResult c = act(rhs, e);
        if (a.overflow || b.overflow || c.overflow) continue;
        if (b.value != c.value)
          return gens.name(hi) + "*" + gens.name(lo) + " acts on " + window_.label(j) + " as " +
                 vector_to_string(b.value) + " but " + to_string(rhs, gens) + " acts as " + vector_to_string(c.value);
      }
    }
  return std::nullopt;
}

bool SGModule::is_graded() const {
  const auto& gens = ring_->gens();
  for (GenIndex g = 0; g < actions_.size(); ++g)
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [i, c] : actions_[g].columns[j])
        if (window_.degree_of(i) != window_.degree_of(j) + gens.degree(g)) return false;
  return true;
}

bool SGModule::has_overflow() const {
  for (const auto& a : actions_)
    for (char o : a.overflow)
      if (o) return true;
  return false;
}

std::string SGModule::vector_to_string(const Vector& v) const {
  std::string out;
  for (std::size_t i = v.size(); i-- > 0;) {
    if (sgn(v[i]) == 0) continue;
    Scalar c = v[i];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) out += c.get_str() + "*";
    out += window_.label(i);
  }
  return out.empty() ? "0" : out;
}

ModulePtr with_annihilator(const SGModule& m, IdealPtr annihilator, std::string name) {
  std::vector<Action> acts;
  for (GenIndex g = 0; g < m.ring().gens().size(); ++g) acts.push_back(m.action(g));
  return std::make_shared<const SGModule>(std::move(name), m.ring_ptr(), m.window(), std::move(acts), m.generators(),
                                          m.generator_vectors(), std::move(annihilator));
}

// --------------------------------------------------------------- free modules

namespace {

/// Free module basis (monomial, generator) up to a degree bound, with the
/// generator actions computed by normal-form multiplication.
struct FreeWindow {
  std::vector<std::pair<Monomial, std::size_t>> basis;
  std::map<std::pair<Monomial, std::size_t>, std::size_t> index;
  Window window;
  std::vector<Action> actions;
};

std::string free_label(const Monomial& m, const ModuleGenerator& g, const GeneratorTable& gens) {
  return m.is_one() ? g.name : to_string(m, gens) + "*" + g.name;
}

FreeWindow build_free(const SGRing& r, const std::vector<ModuleGenerator>& mgens, int bound) {
  const auto& gens = r.gens();
  FreeWindow fw;
  std::vector<std::vector<std::string>> labels;
  for (int k = 0; k <= bound; ++k) {
    labels.emplace_back();
    // Order inside a degree: by monomial, then generator.
    std::vector<std::pair<Monomial, std::size_t>> here;
    for (std::size_t e = 0; e < mgens.size(); ++e)
      for (auto& m : monomials_of_degree(gens, k - mgens[e].degree)) here.emplace_back(std::move(m), e);
    std::sort(here.begin(), here.end());
    for (auto& item : here) {
      labels.back().push_back(free_label(item.first, mgens[item.second], gens));
      fw.index.emplace(item, fw.basis.size());
      fw.basis.push_back(std::move(item));
    }
  }
  fw.window = Window(bound, labels);
  const std::size_t n = fw.basis.size();
  for (GenIndex g = 0; g < gens.size(); ++g) {
    Action a{std::vector<SparseColumn>(n), std::vector<char>(n, 0)};
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [m, e] = fw.basis[j];
      Element prod = multiply_generator_left(g, Element::monomial(m), r.presentation());
      for (const auto& [mm, c] : prod.terms()) {
        auto it = fw.index.find({mm, e});
        if (it == fw.index.end())
          a.overflow[j] = 1;
        else
          a.columns[j].emplace_back(it->second, c);
      }
    }
    fw.actions.push_back(std::move(a));
  }
  return fw;
}

Vector free_vector(const FreeWindow& fw, const FreeElement& x, const GeneratorTable& gens) {
  Vector v(fw.basis.size());
  for (std::size_t e = 0; e < x.size(); ++e)
    for (const auto& [m, c] : x[e].terms()) {
      auto it = fw.index.find({m, e});
      if (it == fw.index.end())
        throw WindowOverflow("relation term " + to_string(m, gens) + " exceeds the module window");
      v[it->second] = c;
    }
  return v;
}

}  // namespace

ModulePtr free_module(const RingPtr& r, const std::vector<ModuleGenerator>& gens, std::string name) {
  return module_from_presentation(r, std::move(name), gens, {});
}

ModulePtr regular_module(const RingPtr& r) { return free_module(r, {{"e", 0}}, r->name()); }

ModulePtr module_from_presentation(const RingPtr& r, std::string name, const std::vector<ModuleGenerator>& mgens,
                                   const std::vector<FreeElement>& relations, IdealPtr annihilator) {
  const int d = r->max_degree();
  const Field& f = r->field();
  for (const auto& g : mgens)
    if (g.degree < 0) throw std::invalid_argument("module generator degree must be >= 0");
  const int pad = r->gens().size() == 0 ? 0 : r->gens().max_degree();
  FreeWindow fw = build_free(*r, mgens, d + pad);

  std::vector<Vector> rels;
  for (const auto& x : relations) {
    if (x.size() != mgens.size()) throw std::invalid_argument("relation has the wrong number of coordinates");
    for (std::size_t e = 0; e < x.size(); ++e)
      if (!x[e].is_zero() && x[e].max_degree() + mgens[e].degree > d)
        throw WindowOverflow("relation exceeds the module window degree " + std::to_string(d));
    rels.push_back(free_vector(fw, x, r->gens()));
  }
  std::vector<const Action*> acts;
  for (const auto& a : fw.actions) acts.push_back(&a);
  GradedSubspace n = sg_closure(rels, fw.window, acts, f);

  // Standard basis: non-pivot columns of each slice, degrees 0..D.
  std::vector<std::size_t> standard;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::size_t>> free_cols(static_cast<std::size_t>(d + pad + 1));
  for (int k = 0; k <= d + pad; ++k) free_cols[static_cast<std::size_t>(k)] = n.slice(k).free_columns();
  for (int k = 0; k <= d; ++k) {
    labels.emplace_back();
    for (std::size_t c : free_cols[static_cast<std::size_t>(k)]) {
      standard.push_back(fw.window.offset(k) + c);
      labels.back().push_back(fw.window.label(fw.window.offset(k) + c));
    }
  }
  Window w(d, labels);

  // Coordinates in the truncated quotient of a padded free vector reduced mod N.
  auto coordinates = [&](const Vector& v) {
    ActionResult out{Vector(w.dim()), false};
    Vector red = n.reduce(v);
    std::size_t pos = 0;
    for (int k = 0; k <= d + pad; ++k) {
      for (std::size_t c : free_cols[static_cast<std::size_t>(k)]) {
        const Scalar& x = red[fw.window.offset(k) + c];
        if (k <= d)
          out.value[pos++] = x;
        else if (sgn(x) != 0)
          out.overflow = true;
      }
    }
    return out;
  };

  std::vector<Action> actions;
  for (GenIndex g = 0; g < r->gens().size(); ++g) {
    Action a{std::vector<SparseColumn>(w.dim()), std::vector<char>(w.dim(), 0)};
    for (std::size_t j = 0; j < w.dim(); ++j) {
      Vector e(fw.window.dim());
      e[standard[j]] = 1;
      ActionResult img = apply(fw.actions[g], e, f);
      ActionResult c = coordinates(img.value);
      a.overflow[j] = img.overflow || c.overflow;
      for (std::size_t i = 0; i < c.value.size(); ++i)
        if (sgn(c.value[i]) != 0) a.columns[j].emplace_back(i, c.value[i]);
    }
    actions.push_back(std::move(a));
  }

  std::vector<Vector> gvecs;
  for (std::size_t e = 0; e < mgens.size(); ++e) {
    if (mgens[e].degree > d) {
      gvecs.emplace_back(w.dim());
      continue;
    }
    Vector v(fw.window.dim());
    v[fw.index.at({Monomial::one(r->gens().size()), e})] = 1;
    gvecs.push_back(coordinates(v).value);
  }
  auto m = std::make_shared<const SGModule>(std::move(name), r, w, std::move(actions), mgens, std::move(gvecs),
                                            std::move(annihilator));
  return m;
}

ModulePtr explicit_module(const RingPtr& r, std::string name, const std::vector<ModuleGenerator>& basis,
                          const std::vector<std::vector<Vector>>& images, IdealPtr annihilator) {
  const int d = r->max_degree();
  std::vector<ModuleGenerator> sorted = basis;
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return basis[a].degree < basis[b].degree; });
  std::vector<std::size_t> pos(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(d + 1));
  for (std::size_t i : order) {
    if (basis[i].degree < 0 || basis[i].degree > d)
      throw WindowOverflow("basis element " + basis[i].name + " lies outside the window");
    labels[static_cast<std::size_t>(basis[i].degree)].push_back(basis[i].name);
  }
  Window w(d, labels);
  if (images.size() != r->gens().size()) throw std::invalid_argument("one image list per ring generator required");
  std::vector<Action> actions;
  for (const auto& per_gen : images) {
    if (per_gen.size() != basis.size()) throw std::invalid_argument("one image per basis element required");
    Action a{std::vector<SparseColumn>(w.dim()), std::vector<char>(w.dim(), 0)};
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (sgn(per_gen[j][i]) != 0) a.columns[pos[j]].emplace_back(pos[i], r->field().from_rational(per_gen[j][i]));
    for (auto& col : a.columns) std::sort(col.begin(), col.end());
    actions.push_back(std::move(a));
  }
  std::vector<ModuleGenerator> gens;
  std::vector<Vector> gvecs;
  for (std::size_t i : order) {
    gens.push_back(basis[i]);
    Vector v(w.dim());
    v[pos[i]] = 1;
    gvecs.push_back(std::move(v));
  }
  auto m = std::make_shared<const SGModule>(std::move(name), r, w, std::move(actions), std::move(gens),
                                            std::move(gvecs), std::move(annihilator));
  if (auto bad = m->relation_violation()) throw std::invalid_argument("module actions violate a ring relation: " + *bad);
  return m;
}

// ----------------------------------------------------------------- submodules

namespace {

std::vector<Vector> homogeneous_parts(const Vector& v, const Window& w) {
  std::vector<Vector> out;
  for (int k = 0; k <= w.max_degree(); ++k) {
    Vector part(v.size());
    bool nz = false;
    for (std::size_t i = w.offset(k); i < w.offset(k) + w.dim(k); ++i)
      if (sgn(v[i]) != 0) {
        part[i] = v[i];
        nz = true;
      }
    if (nz) out.push_back(std::move(part));
  }
  return out;
}

Echelon coordinate_subspace(const Window& w, int k, const Field& f) {
  Echelon e(w.dim(), f);
  for (std::size_t i = w.offset(k); i < w.offset(k) + w.dim(k); ++i) {
    Vector u(w.dim());
    u[i] = 1;
    e.insert(u);
  }
  return e;
}

}  // namespace

Echelon degreewise_part(const Echelon& p, const Window& w) {
  Echelon out(w.dim(), p.field());
  for (int k = 0; k <= w.max_degree(); ++k) {
    Echelon part = intersect(p, coordinate_subspace(w, k, p.field()));
    for (const auto& v : part.rows()) out.insert(v);
  }
  return out;
}

SubmoduleCheck is_sg_submodule(const std::vector<Vector>& spanning, const SGModule& m) {
  const Field& f = m.field();
  Echelon n = span_of(spanning, m.dim(), f);
  for (const auto& v : n.rows())
    for (GenIndex g = 0; g < m.ring().gens().size(); ++g) {
      ActionResult p = m.act(g, v);
      if (!p.overflow && !n.contains(p.value))
        throw NotActionClosed("subspace is not closed under the action of " + m.ring().gens().name(g),
                              m.ring().gens().name(g), m.vector_to_string(v));
    }
  SubmoduleCheck out;
  std::vector<Vector> candidates = spanning;
  candidates.insert(candidates.end(), n.rows().begin(), n.rows().end());
  for (const auto& v : candidates)
    for (auto& part : homogeneous_parts(v, m.window()))
      if (!n.contains(part)) {
        out.sg = false;
        out.witness = m.vector_to_string(v) + " lies in N but its component " + m.vector_to_string(part) + " does not";
        out.element = v;
        out.component = std::move(part);
        return out;
      }
  return out;
}

bool predicate_degreewise(const Echelon& n, const Window& w) {
  std::size_t total = 0;
  for (int k = 0; k <= w.max_degree(); ++k) total += intersect(n, coordinate_subspace(w, k, n.field())).rank();
  return total == n.rank();
}

bool predicate_component_closed(const Echelon& n, const Window& w) {
  for (const auto& v : n.rows())
    for (const auto& part : homogeneous_parts(v, w))
      if (!n.contains(part)) return false;
  return true;
}

bool predicate_quotient_consistent(const Echelon& n, const Window& w) {
  // (M_k + N)/N for all k must form a direct decomposition of M/N.
  std::size_t total = 0;
  for (int k = 0; k <= w.max_degree(); ++k) {
    Matrix stacked(n.rank() + w.dim(k), w.dim());
    for (std::size_t i = 0; i < n.rank(); ++i)
      for (std::size_t c = 0; c < w.dim(); ++c) stacked(i, c) = n.rows()[i][c];
    for (std::size_t i = 0; i < w.dim(k); ++i) stacked(n.rank() + i, w.offset(k) + i) = 1;
    total += rank(stacked, n.field()) - n.rank();
  }
  return total == w.dim() - n.rank();
}

QuotientModule quotient_module(const ModulePtr& m, const GradedSubspace& n, std::string name) {
  const Field& f = m->field();
  const Window& w = m->window();
  if (!(n.window() == w)) throw std::invalid_argument("submodule window does not match module");
  for (const auto& v : n.basis())
    for (GenIndex g = 0; g < m->ring().gens().size(); ++g) {
      ActionResult p = m->act(g, v);
      if (!p.overflow && !n.contains(p.value))
        throw NotActionClosed("subspace is not closed under the action of " + m->ring().gens().name(g),
                              m->ring().gens().name(g), m->vector_to_string(v));
    }
  std::vector<std::vector<std::string>> labels;
  std::vector<std::size_t> standard;
  for (int k = 0; k <= w.max_degree(); ++k) {
    labels.emplace_back();
    for (std::size_t c : n.slice(k).free_columns()) {
      standard.push_back(w.offset(k) + c);
      labels.back().push_back(w.label(w.offset(k) + c));
    }
  }
  Window qw(w.max_degree(), labels);
  GradedMap proj(w, qw);
  GradedMap sec(qw, w);
  for (int k = 0; k <= w.max_degree(); ++k) {
    std::vector<std::size_t> free = n.slice(k).free_columns();
    for (std::size_t c = 0; c < w.dim(k); ++c) {
      Vector unit(w.dim(k));
      unit[c] = 1;
      Vector red = n.slice(k).reduce(unit);
      for (std::size_t q = 0; q < free.size(); ++q) proj.block(k)(q, c) = red[free[q]];
    }
    for (std::size_t q = 0; q < free.size(); ++q) sec.block(k)(free[q], q) = 1;
  }
  std::vector<Action> actions;
  for (GenIndex g = 0; g < m->ring().gens().size(); ++g) {
    Action a{std::vector<SparseColumn>(qw.dim()), std::vector<char>(qw.dim(), 0)};
    for (std::size_t j = 0; j < qw.dim(); ++j) {
      Vector e(w.dim());
      e[standard[j]] = 1;
      ActionResult img = m->act(g, e);
      a.overflow[j] = img.overflow;
      Vector q = proj.apply(img.value, f);
      for (std::size_t i = 0; i < q.size(); ++i)
        if (sgn(q[i]) != 0) a.columns[j].emplace_back(i, q[i]);
    }
    actions.push_back(std::move(a));
  }
  std::vector<Vector> gvecs;
  for (const auto& v : m->generator_vectors()) gvecs.push_back(proj.apply(v, f));
  if (name.empty()) name = m->name() + "/N";
  auto qm = std::make_shared<const SGModule>(std::move(name), m->ring_ptr(), qw, std::move(actions), m->generators(),
                                             std::move(gvecs), m->annihilator());
  return QuotientModule{qm, std::move(proj), std::move(sec)};
}

SubmoduleModule submodule_as_module(const ModulePtr& m, const GradedSubspace& n, std::string name) {
  const Field& f = m->field();
  const Window& w = m->window();
  std::vector<std::vector<std::string>> labels;
  std::vector<Vector> basis;  // flat vectors in M
  for (int k = 0; k <= w.max_degree(); ++k) {
    labels.emplace_back();
    for (const auto& row : n.slice(k).rows()) {
      Vector v(w.dim());
      for (std::size_t c = 0; c < row.size(); ++c) v[w.offset(k) + c] = row[c];
      labels.back().push_back(m->vector_to_string(v));
      basis.push_back(std::move(v));
    }
  }
  Window sw(w.max_degree(), labels);
  GradedMap incl(sw, w);
  for (int k = 0; k <= w.max_degree(); ++k) {
    const auto& rows = n.slice(k).rows();
    for (std::size_t q = 0; q < rows.size(); ++q)
      for (std::size_t c = 0; c < rows[q].size(); ++c) incl.block(k)(c, q) = rows[q][c];
  }
  // Coordinates of v in N: the entries of each degree component at that slice's pivots.
  auto coords = [&](const Vector& v) {
    Vector out(sw.dim());
    std::size_t pos = 0;
    for (int k = 0; k <= w.max_degree(); ++k)
      for (std::size_t p : n.slice(k).pivots()) out[pos++] = v[w.offset(k) + p];
    return out;
  };
  std::vector<Action> actions;
  for (GenIndex g = 0; g < m->ring().gens().size(); ++g) {
    Action a{std::vector<SparseColumn>(sw.dim()), std::vector<char>(sw.dim(), 0)};
    for (std::size_t j = 0; j < basis.size(); ++j) {
      ActionResult img = m->act(g, basis[j]);
      bool inside = n.contains(img.value);
      if (!inside && !img.overflow)
        throw NotActionClosed("subspace is not closed under the action of " + m->ring().gens().name(g),
                              m->ring().gens().name(g), m->vector_to_string(basis[j]));
      a.overflow[j] = img.overflow;
      if (!inside) continue;
      Vector c = coords(img.value);
      for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0) a.columns[j].emplace_back(i, c[i]);
    }
    actions.push_back(std::move(a));
  }
  (void)f;
  if (name.empty()) name = "N";
  auto sm = std::make_shared<const SGModule>(std::move(name), m->ring_ptr(), sw, std::move(actions));
  return SubmoduleModule{sm, std::move(incl)};
}

// ------------------------------------------------------------------------ LSG

LsgReport is_lsg(const SGModule& m) {
  const SGRing& r = m.ring();
  const Window& w = m.window();
  LsgReport rep;
  rep.certified_to = r.max_degree();
  for (int n = 0; n <= r.max_degree(); ++n) {
    RPrimeSlice s = r_prime(r, n);
    for (const auto& x : s.elements)
      for (std::size_t j = 0; j < w.dim(); ++j) {
        const int target = n + w.degree_of(j);
        if (target > w.max_degree()) continue;
        Vector e(w.dim());
        e[j] = 1;
        ActionResult p = m.act(x, e);
        if (p.overflow) {
          ++rep.skipped;
          continue;
        }
        ++rep.checked;
        for (std::size_t i = 0; i < p.value.size(); ++i)
          if (sgn(p.value[i]) != 0 && w.degree_of(i) != target) {
            rep.lsg = false;
            rep.witness = "(" + to_string(x, r.gens()) + ")*" + w.label(j) + " = " + m.vector_to_string(p.value) +
                          " is not in M_" + std::to_string(target);
            return rep;
          }
      }
  }
  return rep;
}

// -------------------------------------------------------------------- torsion

Echelon exact_preimage(const SGModule& m, const std::vector<Element>& rs, const Echelon& target) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  std::vector<std::size_t> domain;
  std::vector<std::vector<Vector>> images(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = 1;
    bool ok = true;
    for (const auto& r : rs) {
      ActionResult p = m.act(r, e);
      if (p.overflow) {
        ok = false;
        break;
      }
      images[j].push_back(target.reduce(p.value));
    }
    if (ok) domain.push_back(j);
  }
  Echelon out(n, f);
  if (domain.empty()) return out;
  Matrix sys(rs.size() * n, domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c)
    for (std::size_t k = 0; k < rs.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) sys(k * n + i, c) = images[domain[c]][k][i];
  Matrix ns = null_space(sys, f);
  for (std::size_t s = 0; s < ns.rows(); ++s) {
    Vector v(n);
    for (std::size_t c = 0; c < domain.size(); ++c) v[domain[c]] = ns(s, c);
    out.insert(v);
  }
  return out;
}

TorsionReport torsion(const SGModule& m) {
  const Field& f = m.field();
  const int d = m.max_degree();
  auto ring = m.ring_ptr();
  TorsionReport rep;
  rep.space = Echelon(m.dim(), f);
  rep.bound = d;

  std::vector<std::vector<Element>> left_gens(static_cast<std::size_t>(d + 1));
  for (int t = 1; t <= d; ++t) {
    SGIdeal it = r_geq(ring, t);
    for (const auto& g : minimal_generators(it.space.basis(), ring->window(), ring->left_actions(), f))
      left_gens[static_cast<std::size_t>(t)].push_back(ring->to_element(g));
  }
  std::vector<Echelon> current(static_cast<std::size_t>(d + 1), Echelon(m.dim(), f));
  for (int n = 1; n <= d; ++n) {
    for (int t = 1; t <= d; ++t) {
      Echelon& k = current[static_cast<std::size_t>(t)];
      k = exact_preimage(m, left_gens[static_cast<std::size_t>(t)], k);
      for (const auto& v : k.rows())
        if (rep.space.insert(v)) {
          rep.basis.push_back(v);
          rep.witnesses.push_back({n, t});
        }
    }
  }
  // Least (n, t) whose annihilated subspace is all of T.
  for (int n = 1; n <= d && !rep.uniform && rep.space.rank() > 0; ++n) {
    for (int t = 1; t <= d && !rep.uniform; ++t) {
      Echelon k(m.dim(), f);
      for (int i = 1; i <= n; ++i) k = exact_preimage(m, left_gens[static_cast<std::size_t>(t)], k);
      if (k.contains(rep.space)) rep.uniform = TorsionWitness{n, t};
    }
  }
  rep.degreewise = predicate_degreewise(rep.space, m.window());
  for (const auto& v : rep.space.rows())
    for (GenIndex g = 0; g < ring->gens().size(); ++g) {
      ActionResult p = m.act(g, v);
      if (!p.overflow && !rep.space.contains(p.value)) rep.action_closed = false;
    }
  return rep;
}

Echelon kappa(const Element& s, int k_max, const SGModule& m) {
  const Field& f = m.field();
  Echelon out(m.dim(), f);
  Element power = m.ring().one();
  Echelon zero(m.dim(), f);
  for (int k = 1; k <= k_max; ++k) {
    power = m.ring().multiply(power, s);
    Echelon ker = exact_preimage(m, {power}, zero);
    for (const auto& v : ker.rows()) out.insert(v);
  }
  return out;
}

}  // namespace sgk
