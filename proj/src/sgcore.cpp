#include "sgk/sgcore.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace sgk {

std::vector<Monomial> monomials_of_degree(const GeneratorTable& gens, int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  Monomial cur = Monomial::one(gens.size());
  std::function<void(GenIndex, int)> rec = [&](GenIndex i, int remaining) {
    if (i == gens.size()) {
      if (remaining == 0) {
        cur.degree = k;
        out.push_back(cur);
      }
      return;
    }
    const int d = gens.degree(i);
    for (int e = 0; e * d <= remaining; ++e) {
      cur.exponents[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, remaining - e * d);
    }
    cur.exponents[i] = 0;
  };
  rec(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

ActionResult apply(const Action& a, const Vector& v, const Field& f) {
  if (v.size() != a.dim()) throw WindowOverflow("vector does not match action dimension");
  ActionResult r{Vector(v.size()), false};
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) == 0) continue;
    if (a.overflow[j]) r.overflow = true;
    for (const auto& [i, c] : a.columns[j]) f.axpy(r.value[i], c, v[j]);
  }
  return r;
}

Matrix to_matrix(const Action& a) {
  Matrix m(a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (const auto& [i, c] : a.columns[j]) m(i, j) = c;
  return m;
}

// --------------------------------------------------------------------- ring

SGRing::SGRing(std::shared_ptr<const Presentation> p, int max_degree) : presentation_(std::move(p)) {
  if (max_degree < 0) throw std::invalid_argument("degree bound must be >= 0");
  ValidationReport v = validate_presentation(*presentation_);
  if (!v.ok) {
    std::string msg = "presentation '" + presentation_->name() + "' is invalid:";
    for (const auto& i : v.issues) msg += " [" + i.rule + ": " + i.message + "]";
    throw std::invalid_argument(msg);
  }
  ConfluenceReport c = check_confluence(*presentation_, max_degree);
  if (!c.confluent)
    throw std::invalid_argument("presentation '" + presentation_->name() + "' is not confluent: overlap " +
                                to_string(c.unresolved.front().word, gens()) + " does not resolve");

  std::vector<std::vector<std::string>> labels;
  for (int k = 0; k <= max_degree; ++k) {
    labels.emplace_back();
    for (auto& m : monomials_of_degree(gens(), k)) {
      index_.emplace(m, basis_.size());
      labels.back().push_back(to_string(m, gens()));
      basis_.push_back(std::move(m));
    }
  }
  window_ = Window(max_degree, labels);

  const std::size_t n = basis_.size();
  for (GenIndex g = 0; g < gens().size(); ++g) {
    Action l{std::vector<SparseColumn>(n), std::vector<char>(n, 0)};
    Action r{std::vector<SparseColumn>(n), std::vector<char>(n, 0)};
    Element gen = generator(g);
    for (std::size_t j = 0; j < n; ++j) {
      Element b = Element::monomial(basis_[j]);
      for (auto [act, prod] : {std::pair{&l, multiply(gen, b)}, std::pair{&r, multiply(b, gen)}}) {
        for (const auto& [m, c] : prod.terms()) {
          auto it = index_.find(m);
          if (it == index_.end())
            act->overflow[j] = 1;
          else
            act->columns[j].emplace_back(it->second, c);
        }
      }
    }
    left_.push_back(std::move(l));
    right_.push_back(std::move(r));
  }
}

std::optional<std::size_t> SGRing::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vector SGRing::to_vector(const Element& e) const {
  ActionResult r = to_vector_truncated(e);
  if (r.overflow)
    throw WindowOverflow("element " + to_string(e, gens()) + " exceeds window degree " + std::to_string(max_degree()));
  return r.value;
}

ActionResult SGRing::to_vector_truncated(const Element& e) const {
  ActionResult r{Vector(basis_.size()), false};
  for (const auto& [m, c] : e.terms()) {
    auto it = index_.find(m);
    if (it == index_.end())
      r.overflow = true;
    else
      r.value[it->second] = c;
  }
  return r;
}

Element SGRing::to_element(const Vector& v) const {
  Element e;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) e.add_term(basis_[i], v[i], field());
  return e;
}

Element SGRing::multiply(const Element& a, const Element& b) const { return sgk::multiply(a, b, *presentation_); }
Element SGRing::generator(GenIndex g) const { return Element::monomial(Monomial::generator(g, gens())); }
Element SGRing::one() const { return Element::constant(1, gens().size(), field()); }

std::vector<const Action*> SGRing::left_actions() const {
  std::vector<const Action*> out;
  for (const auto& a : left_) out.push_back(&a);
  return out;
}

std::vector<const Action*> SGRing::two_sided_actions() const {
  std::vector<const Action*> out = left_actions();
  for (const auto& a : right_) out.push_back(&a);
  return out;
}

// ------------------------------------------------------------------ closures

namespace {

/// Splits a flat window vector into its nonzero homogeneous components.
std::vector<std::pair<int, Vector>> components(const Vector& v, const Window& w) {
  std::vector<std::pair<int, Vector>> out;
  for (int k = 0; k <= w.max_degree(); ++k) {
    const std::size_t off = w.offset(k);
    Vector part(v.size());
    bool nz = false;
    for (std::size_t i = off; i < off + w.dim(k); ++i)
      if (sgn(v[i]) != 0) {
        part[i] = v[i];
        nz = true;
      }
    if (nz) out.emplace_back(k, std::move(part));
  }
  return out;
}

Vector slice_of(const Vector& v, const Window& w, int k) {
  const std::size_t off = w.offset(k);
  return Vector(v.begin() + static_cast<long>(off), v.begin() + static_cast<long>(off + w.dim(k)));
}

}  // namespace

GradedSubspace sg_closure(const std::vector<Vector>& x, const Window& w, const std::vector<const Action*>& actions,
                          const Field& f) {
  GradedSubspace s(w, f);
  std::deque<Vector> queue;
  auto absorb = [&](const Vector& v) {
    for (auto& [k, part] : components(v, w))
      if (s.add_homogeneous(k, slice_of(part, w, k))) queue.push_back(std::move(part));
  };
  for (const auto& v : x) absorb(v);
  bool truncated = false;
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const Action* a : actions) {
      ActionResult r = apply(*a, v, f);
      // Components below the window edge are exact even when the top part overflowed.
      truncated |= r.overflow;
      absorb(r.value);
    }
  }
  s.set_truncated(truncated);
  return s;
}

FlatSubspace action_closure(const std::vector<Vector>& x, std::size_t dim, const std::vector<const Action*>& actions,
                            const Field& f) {
  FlatSubspace out{Echelon(dim, f), false};
  std::deque<Vector> queue;
  for (const auto& v : x)
    if (out.space.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const Action* a : actions) {
      ActionResult r = apply(*a, v, f);
      if (r.overflow) {
        out.truncated = true;
        continue;
      }
      if (out.space.insert(r.value)) queue.push_back(std::move(r.value));
    }
  }
  return out;
}

namespace {

int top_degree(const Vector& v, const Window& w) {
  for (std::size_t i = v.size(); i-- > 0;)
    if (sgn(v[i]) != 0) return w.degree_of(i);
  return -1;
}

}  // namespace

std::vector<Vector> minimal_generators(const std::vector<Vector>& vectors, const Window& w,
                                       const std::vector<const Action*>& actions, const Field& f) {
  std::vector<Vector> sorted = vectors;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const Vector& a, const Vector& b) { return top_degree(a, w) < top_degree(b, w); });
  std::vector<Vector> gens;
  Echelon span(w.dim(), f);
  for (const auto& v : sorted) {
    if (span.contains(v)) continue;
    gens.push_back(v);
    std::vector<Vector> seed = span.rows();
    seed.push_back(v);
    span = action_closure(seed, w.dim(), actions, f).space;
  }
  return gens;
}

std::vector<Element> component(const SGRing& r, int n) {
  if (n < 0 || n > r.max_degree())
    throw WindowOverflow("degree " + std::to_string(n) + " outside window 0.." + std::to_string(r.max_degree()));
  std::vector<Element> out;
  for (std::size_t i = r.window().offset(n); i < r.window().offset(n + 1); ++i)
    out.push_back(Element::monomial(r.basis()[i]));
  return out;
}

// -------------------------------------------------------------------- ideals

std::vector<Element> SGIdeal::basis_elements() const {
  std::vector<Element> out;
  for (const auto& v : space.basis()) out.push_back(ring->to_element(v));
  return out;
}

SGIdeal sg_ideal(const RingPtr& r, const std::vector<Element>& gens, Side side, std::string name) {
  std::vector<Vector> x;
  for (const auto& g : gens) x.push_back(r->to_vector(g));
  auto actions = side == Side::TwoSided ? r->two_sided_actions() : r->left_actions();
  return SGIdeal{std::move(name), r, side, gens, sg_closure(x, r->window(), actions, r->field())};
}

SGIdeal r_geq(const RingPtr& r, int t) {
  if (t < 0 || t > r->max_degree()) throw WindowOverflow("threshold outside window");
  std::vector<Element> gens;
  for (int k = t; k <= r->max_degree(); ++k)
    for (auto& e : component(*r, k)) gens.push_back(std::move(e));
  return sg_ideal(r, gens, Side::TwoSided, "R>=" + std::to_string(t));
}

// ----------------------------------------------------------------- R' / R''

std::optional<std::string> prime_violation(const SGRing& r, const Element& x, bool double_prime) {
  const auto& gens = r.gens();
  if (!x.is_homogeneous()) return to_string(x, gens) + " is not homogeneous";
  if (x.is_zero()) return std::nullopt;
  const int n = x.max_degree();
  const std::string xs = x.size() == 1 ? to_string(x, gens) : "(" + to_string(x, gens) + ")";
  auto wrong = [](const Element& p, int target) { return !p.is_zero() && !(p.is_homogeneous() && p.max_degree() == target); };
  for (std::size_t i = 0; i < r.window().dim_upto(r.max_degree() - n); ++i) {
    Element h = Element::monomial(r.basis()[i]);
    const int target = n + r.basis()[i].degree;
    const std::string rn = " \u2209 R_" + std::to_string(target);
    Element xh = r.multiply(x, h);
    if (wrong(xh, target)) return xs + "*" + to_string(h, gens) + " = " + to_string(xh, gens) + rn;
    if (double_prime) {
      Element hx = r.multiply(h, x);
      if (wrong(hx, target)) return to_string(h, gens) + "*" + xs + " = " + to_string(hx, gens) + rn;
    }
  }
  return std::nullopt;
}

namespace {

RPrimeSlice prime_slice(const SGRing& r, int n, bool double_prime) {
  if (n < 0 || n > r.max_degree()) throw WindowOverflow("degree outside window");
  const Field& f = r.field();
  const std::size_t off = r.window().offset(n);
  const std::size_t dn = r.window().dim(n);
  const std::size_t hcount = r.window().dim_upto(r.max_degree() - n);

  // Each row: one coefficient of a wrong-degree monomial in b_i*h (or h*b_i), as a functional of r.
  std::vector<Vector> rows;
  auto collect = [&](const std::vector<Element>& products, int target) {
    std::map<Monomial, Vector> coeff;
    for (std::size_t i = 0; i < dn; ++i)
      for (const auto& [m, c] : products[i].terms())
        if (m.degree != target) {
          auto [it, _] = coeff.try_emplace(m, Vector(dn));
          it->second[i] = c;
        }
    for (auto& [m, row] : coeff) rows.push_back(std::move(row));
  };
  for (std::size_t hi = 0; hi < hcount; ++hi) {
    Element h = Element::monomial(r.basis()[hi]);
    const int target = n + r.basis()[hi].degree;
    std::vector<Element> right, left;
    for (std::size_t i = 0; i < dn; ++i) {
      Element b = Element::monomial(r.basis()[off + i]);
      right.push_back(r.multiply(b, h));
      if (double_prime) left.push_back(r.multiply(h, b));
    }
    collect(right, target);
    if (double_prime) collect(left, target);
  }

  RPrimeSlice s;
  s.degree = n;
  s.double_prime = double_prime;
  s.certified_to = r.max_degree() - n;
  Matrix sys = rows.empty() ? Matrix(0, dn) : Matrix::from_rows(rows, dn);
  Matrix ns = null_space(sys, f);
  for (std::size_t i = 0; i < ns.rows(); ++i) {
    Vector v = ns.row(i);
    Element e;
    for (std::size_t j = 0; j < dn; ++j) e.add_term(r.basis()[off + j], v[j], f);
    s.basis.push_back(std::move(v));
    s.elements.push_back(std::move(e));
  }
  if (ns.rows() < dn) {
    Echelon span = span_of(s.basis, dn, f);
    for (std::size_t j = 0; j < dn; ++j) {
      Vector unit(dn);
      unit[j] = 1;
      if (span.contains(unit)) continue;
      s.witness = prime_violation(r, Element::monomial(r.basis()[off + j]), double_prime);
      if (s.witness) break;
    }
  }
  return s;
}

}  // namespace

RPrimeSlice r_prime(const SGRing& r, int n) { return prime_slice(r, n, false); }
RPrimeSlice r_double_prime(const SGRing& r, int n) { return prime_slice(r, n, true); }

FlatSubspace ideal_power(const SGRing& r, const SGIdeal& ideal, int n) {
  const Field& f = r.field();
  const std::size_t dim = r.window().dim();
  if (n <= 0) {
    std::vector<Vector> one{r.to_vector(r.one())};
    return action_closure(one, dim, r.two_sided_actions(), f);
  }
  std::vector<Vector> basis = ideal.space.basis();
  FlatSubspace current = action_closure(basis, dim, r.two_sided_actions(), f);
  current.truncated = ideal.space.truncated();
  if (n == 1) return current;
  // I^{k+1} = I^k * I = right-ideal closure of { p * g : g two-sided generators of I }.
  std::vector<Vector> tsgens = minimal_generators(basis, r.window(), r.two_sided_actions(), f);
  std::vector<Element> gen_elems;
  for (const auto& g : tsgens) gen_elems.push_back(r.to_element(g));
  bool truncated = current.truncated;
  for (int k = 2; k <= n; ++k) {
    std::vector<Vector> products;
    for (const auto& p : current.space.rows()) {
      Element pe = r.to_element(p);
      for (const auto& g : gen_elems) {
        ActionResult v = r.to_vector_truncated(r.multiply(pe, g));
        if (v.overflow) {
          truncated = true;
          continue;
        }
        products.push_back(std::move(v.value));
      }
    }
    current = action_closure(products, dim, r.two_sided_actions(), f);
    truncated |= current.truncated;
  }
  current.truncated = truncated;
  return current;
}

// ------------------------------------------------------------- quotient ring

QuotientRing::QuotientRing(RingPtr ring, IdealPtr ideal) : ring_(std::move(ring)), ideal_(std::move(ideal)) {
  const Window& w = ring_->window();
  const Field& f = ring_->field();
  std::vector<std::vector<std::string>> labels;
  for (int k = 0; k <= w.max_degree(); ++k) {
    labels.emplace_back();
    for (std::size_t c : ideal_->space.slice(k).free_columns()) {
      standard_.push_back(w.offset(k) + c);
      labels.back().push_back(w.label(w.offset(k) + c));
    }
  }
  window_ = Window(w.max_degree(), labels);
  canonical_ = GradedMap(w, window_);
  section_ = GradedMap(window_, w);
  for (int k = 0; k <= w.max_degree(); ++k) {
    const Echelon& slice = ideal_->space.slice(k);
    std::vector<std::size_t> free = slice.free_columns();
    for (std::size_t c = 0; c < w.dim(k); ++c) {
      Vector unit(w.dim(k));
      unit[c] = 1;
      Vector red = slice.reduce(unit);
      for (std::size_t q = 0; q < free.size(); ++q) canonical_.block(k)(q, c) = red[free[q]];
    }
    for (std::size_t q = 0; q < free.size(); ++q) section_.block(k)(free[q], q) = 1;
  }
  (void)f;
}

Vector QuotientRing::project(const Vector& ring_vector) const {
  return canonical_.apply(ring_vector, ring_->field());
}

std::optional<Vector> QuotientRing::multiply_in_window(const Vector& a, const Vector& b) const {
  const Field& f = ring_->field();
  Element ea = ring_->to_element(section_.apply(a, f));
  Element eb = ring_->to_element(section_.apply(b, f));
  ActionResult prod = ring_->to_vector_truncated(ring_->multiply(ea, eb));
  if (prod.overflow) return std::nullopt;
  return project(prod.value);
}

Vector QuotientRing::multiply(const Vector& a, const Vector& b) const {
  auto r = multiply_in_window(a, b);
  if (!r) throw WindowOverflow("quotient product exceeds the window");
  return *r;
}

namespace {

std::optional<std::string> sg_ideal_violation(const SGRing& r, const Echelon& flat) {
  const Field& f = r.field();
  const Window& w = r.window();
  for (const auto& v : flat.rows()) {
    for (const Action* a : r.two_sided_actions()) {
      ActionResult p = apply(*a, v, f);
      if (!p.overflow && !flat.contains(p.value))
        return "ideal is not closed under multiplication: " + to_string(r.to_element(v), r.gens());
    }
  }
  for (const auto& v : flat.rows()) {
    for (auto& [k, part] : components(v, w))
      if (!flat.contains(part))
        return "component " + to_string(r.to_element(part), r.gens()) + " of " + to_string(r.to_element(v), r.gens()) +
               " escapes the ideal";
  }
  return std::nullopt;
}

}  // namespace

std::shared_ptr<const QuotientRing> quotient_ring(const RingPtr& r, const IdealPtr& j) {
  if (j->side != Side::TwoSided) throw std::invalid_argument("quotient ring needs a two-sided ideal");
  Echelon flat = span_of(j->space.basis(), r->window().dim(), r->field());
  if (auto why = sg_ideal_violation(*r, flat)) throw NotSGClosed("ideal " + j->name + " is not an SG ideal", *why);
  return std::make_shared<const QuotientRing>(r, j);
}

std::shared_ptr<const QuotientRing> quotient_ring(const RingPtr& r, const Echelon& flat_ideal) {
  if (auto why = sg_ideal_violation(*r, flat_ideal)) throw NotSGClosed("ideal is not an SG ideal", *why);
  auto ideal = std::make_shared<SGIdeal>();
  ideal->name = "J";
  ideal->ring = r;
  ideal->space = GradedSubspace(r->window(), r->field());
  for (const auto& v : flat_ideal.rows()) {
    ideal->space.add_components(v);
    ideal->generators.push_back(r->to_element(v));
  }
  return std::make_shared<const QuotientRing>(r, ideal);
}

// --------------------------------------------------------------- localization

int Localization::degree(const Fraction& q) const { return q.numerator.max_degree() - q.power * s_.max_degree(); }

Element Localization::common_numerator(const Fraction& q) const {
  return ring_->multiply(power(s_, k_max_ - q.power, ring_->presentation()), q.numerator);
}

bool Localization::equal(const Fraction& a, const Fraction& b) const {
  return common_numerator(a) == common_numerator(b);
}

Element Localization::conjugate(const Element& f, int times) const {
  // phi(h) = s h s^{-1}, multiplicative, determined on generators by conjugation_.
  const Field& fld = ring_->field();
  Element cur = f;
  for (int t = 0; t < times; ++t) {
    Element next;
    for (const auto& [m, c] : cur.terms()) {
      Element img = ring_->one();
      for (GenIndex g : m.to_word()) img = ring_->multiply(img, conjugation_[g]);
      next.add_scaled(img, c, fld);
    }
    cur = std::move(next);
  }
  return cur;
}

Localization::Fraction Localization::multiply(const Fraction& a, const Fraction& b) const {
  Fraction out;
  out.power = a.power + b.power;
  out.numerator = ring_->multiply(conjugate(a.numerator, b.power), b.numerator);
  return out;
}

int Localization::min_degree() const { return -k_max_ * s_.max_degree(); }

std::vector<Localization::Fraction> Localization::component(int n) const {
  const Field& f = ring_->field();
  const int ds = s_.max_degree();
  std::vector<Fraction> candidates;
  for (int k = 0; k <= k_max_; ++k) {
    const int d = n + k * ds;
    if (d < 0 || d > ring_->max_degree()) continue;
    for (auto& m : monomials_of_degree(ring_->gens(), d)) candidates.push_back({k, Element::monomial(m)});
  }
  std::map<Monomial, std::size_t> cols;
  std::vector<Element> nums;
  for (const auto& q : candidates) {
    nums.push_back(common_numerator(q));
    for (const auto& [m, c] : nums.back().terms()) cols.try_emplace(m, cols.size());
  }
  Echelon span(cols.size(), f);
  std::vector<Fraction> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Vector v(cols.size());
    for (const auto& [m, c] : nums[i].terms()) v[cols[m]] = c;
    if (span.insert(v)) out.push_back(candidates[i]);
  }
  return out;
}

std::shared_ptr<const Localization> localize_at_normal(const RingPtr& r, const Element& s, int k_max) {
  const auto& gens = r->gens();
  const Field& f = r->field();
  if (s.is_zero() || !s.is_homogeneous())
    throw LocalizationError("denominator must be a nonzero homogeneous element", to_string(s, gens));
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  auto loc = std::shared_ptr<Localization>(new Localization());
  loc->ring_ = r;
  loc->s_ = s;
  loc->k_max_ = k_max;

  // Solve s * h = g * s (twist) and h * s = s * g (conjugation) for h of degree <= deg g.
  for (GenIndex g = 0; g < gens.size(); ++g) {
    Element gen = r->generator(g);
    std::vector<Monomial> cand;
    for (int k = 0; k <= gens.degree(g); ++k)
      for (auto& m : monomials_of_degree(gens, k)) cand.push_back(m);
    for (bool left_side : {true, false}) {
      Element target = left_side ? r->multiply(gen, s) : r->multiply(s, gen);
      std::vector<Element> images;
      std::map<Monomial, std::size_t> cols;
      for (const auto& m : cand) {
        Element h = Element::monomial(m);
        images.push_back(left_side ? r->multiply(s, h) : r->multiply(h, s));
        for (const auto& [mm, c] : images.back().terms()) cols.try_emplace(mm, cols.size());
      }
      for (const auto& [mm, c] : target.terms()) cols.try_emplace(mm, cols.size());
      auto to_vec = [&](const Element& e) {
        Vector v(cols.size());
        for (const auto& [mm, c] : e.terms()) v[cols[mm]] = c;
        return v;
      };
      std::vector<Vector> gvecs;
      for (const auto& e : images) gvecs.push_back(to_vec(e));
      auto sol = solve_combination(gvecs, to_vec(target), cols.size(), f);
      if (!sol) {
        std::string side = left_side ? to_string(s, gens) + "*h = " : "h*" + to_string(s, gens) + " = ";
        throw LocalizationError(to_string(s, gens) + " is not normal",
                                to_string(gen, gens) + "*" + to_string(s, gens) + " = " + to_string(target, gens) +
                                    " has no h of degree <= " + std::to_string(gens.degree(g)) + " with " + side +
                                    "that product");
      }
      Element h;
      for (std::size_t i = 0; i < cand.size(); ++i) h.add_term(cand[i], (*sol)[i], f);
      (left_side ? loc->twist_ : loc->conjugation_).push_back(h);
    }
  }

  // Nonzerodivisor on the window: left and right multiplication by s injective on R_{<= D - deg s}.
  const int ds = s.max_degree();
  const std::size_t n = r->window().dim_upto(r->max_degree() - ds);
  for (bool left_side : {true, false}) {
    Matrix m(r->window().dim(), n);
    for (std::size_t j = 0; j < n; ++j) {
      Element b = Element::monomial(r->basis()[j]);
      Vector v = r->to_vector(left_side ? r->multiply(s, b) : r->multiply(b, s));
      for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = v[i];
    }
    Matrix ker = null_space(m, f);
    if (ker.rows() > 0) {
      Vector k = ker.row(0);
      k.resize(r->window().dim());
      throw LocalizationError(to_string(s, gens) + " is a zero divisor on the window",
                              to_string(r->to_element(k), gens));
    }
  }
  return loc;
}

}  // namespace sgk
