#include "sgk/checkers.hpp"

#include <map>

namespace sgk {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

OreSetSpec OreSetSpec::powers(const RingPtr& r, Element s, std::string name, int k_max) {
  if (s.is_zero() || !s.is_homogeneous())
    throw std::invalid_argument("Ore set " + name + " needs a nonzero homogeneous generator");
  const int d = s.max_degree();
  if (k_max < 0) k_max = d == 0 ? 1 : r->max_degree() / d;
  return OreSetSpec{std::move(name), r, std::move(s), k_max};
}

Element OreSetSpec::power(int k) const { return sgk::power(s, k, ring->presentation()); }

namespace {

/// Left ideal sum_i R x_i on the window, spanned by m * x_i with provenance.
struct LeftSpan {
  std::vector<Vector> vectors;
  std::vector<std::pair<std::size_t, Monomial>> origin;  // (i, m)
  Echelon space;
};

LeftSpan left_span(const SGRing& r, const std::vector<Element>& xs) {
  LeftSpan ls{{}, {}, Echelon(r.window().dim(), r.field())};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const int dx = xs[i].max_degree();
    for (std::size_t b = 0; b < r.window().dim_upto(r.max_degree() - dx); ++b) {
      ActionResult v = r.to_vector_truncated(r.multiply(Element::monomial(r.basis()[b]), xs[i]));
      if (v.overflow) continue;
      if (ls.space.insert(v.value)) {
        ls.vectors.push_back(std::move(v.value));
        ls.origin.emplace_back(i, r.basis()[b]);
      }
    }
  }
  return ls;
}

/// Expresses target through the left span; u_i collects the monomials for x_i.
std::optional<std::vector<Element>> left_cover(const SGRing& r, const LeftSpan& ls, std::size_t nx,
                                               const Vector& target) {
  if (!ls.space.contains(target)) return std::nullopt;
  auto c = solve_combination(ls.vectors, target, target.size(), r.field());
  if (!c) return std::nullopt;
  std::vector<Element> u(nx);
  for (std::size_t k = 0; k < c->size(); ++k)
    if (sgn((*c)[k]) != 0) u[ls.origin[k].first].add_term(ls.origin[k].second, (*c)[k], r.field());
  return u;
}

std::vector<Element> window_monomials_upto(const SGRing& r, int bound) {
  std::vector<Element> out;
  if (bound < 0) return out;
  for (std::size_t b = 0; b < r.window().dim_upto(std::min(bound, r.max_degree())); ++b)
    out.push_back(Element::monomial(r.basis()[b]));
  return out;
}

}  // namespace

// ------------------------------------------------------------------ left Ore

OreReport check_left_ore(const OreSetSpec& spec) {
  const SGRing& r = *spec.ring;
  const auto& gens = r.gens();
  const int ds = spec.degree();
  OreReport rep;
  rep.bound = (r.max_degree() - ds) / 2;
  LeftSpan rs = left_span(r, {spec.s});
  std::vector<Element> rvals = window_monomials_upto(r, rep.bound);
  if (std::find(rvals.begin(), rvals.end(), spec.s) == rvals.end()) rvals.push_back(spec.s);
  for (const auto& x : rvals) {
    bool found = false;
    for (int k = 0; k <= spec.k_max && k * ds + x.max_degree() <= r.max_degree(); ++k) {
      Element lhs = r.multiply(spec.power(k), x);
      auto u = left_cover(r, rs, 1, r.to_vector(lhs));
      if (!u) continue;
      rep.witnesses.push_back({x, k, (*u)[0]});
      found = true;
      break;
    }
    if (!found) {
      rep.status = Status::Fail;
      rep.failure = "no power s^k (k <= " + std::to_string(spec.k_max) + ", within degree " +
                    std::to_string(r.max_degree()) + ") with s^k*" + to_string(x, gens) + " in R*" +
                    to_string(spec.s, gens);
      return rep;
    }
  }
  return rep;
}

// ------------------------------------------------------------------ good Ore

GoodOreReport check_good_ore(const OreSetSpec& spec) {
  const SGRing& r = *spec.ring;
  const auto& gens = r.gens();
  const int ds = spec.degree();
  GoodOreReport rep;
  rep.bound = (r.max_degree() - ds) / 2;
  for (int k = 1; k <= spec.k_max && k * ds <= r.max_degree(); ++k) {
    if (auto why = prime_violation(r, spec.power(k), true)) {
      rep.status = Status::Fail;
      rep.failure = *why;
      return rep;
    }
    rep.powers_in_r2.push_back(k);
  }
  std::map<int, RPrimeSlice> slices;
  auto slice = [&](int n) -> const RPrimeSlice& {
    auto it = slices.find(n);
    if (it == slices.end()) it = slices.emplace(n, r_prime(r, n)).first;
    return it->second;
  };
  for (int n = 0; n <= rep.bound; ++n) {
    for (const auto& x : slice(n).elements) {
      bool found = false;
      for (int k = 0; k <= spec.k_max && k * ds + n <= r.max_degree(); ++k) {
        const int du = n + (k - 1) * ds;
        if (du < 0) continue;
        Element lhs = r.multiply(spec.power(k), x);
        std::vector<Vector> cand;
        for (const auto& u : slice(du).elements) cand.push_back(r.to_vector(r.multiply(u, spec.s)));
        auto c = solve_combination(cand, r.to_vector(lhs), r.window().dim(), r.field());
        if (!c) continue;
        Element u;
        for (std::size_t i = 0; i < c->size(); ++i) u.add_scaled(slice(du).elements[i], (*c)[i], r.field());
        rep.witnesses.push_back({x, k, u});
        found = true;
        break;
      }
      if (!found) {
        rep.status = Status::Fail;
        rep.failure = "no u in R' and k <= " + std::to_string(spec.k_max) + " with u*" + to_string(spec.s, gens) +
                      " = s^k*(" + to_string(x, gens) + ")";
        return rep;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- schematic

SchematicReport check_schematic(const RingPtr& rp, const std::vector<OreSetSpec>& ore_sets,
                                const std::vector<std::vector<Element>>& samples, int m_max) {
  const SGRing& r = *rp;
  const auto& gens = r.gens();
  const int d = r.max_degree();
  SchematicReport rep;
  rep.bound = d;
  for (const auto& o : ore_sets) {
    if (!o.non_trivial()) rep.preconditions.push_back(o.name + " is trivial (degree 0 generator)");
    GoodOreReport g = check_good_ore(o);
    if (g.status != Status::Pass) rep.preconditions.push_back(o.name + " is not a good Ore set: " + *g.failure);
  }

  std::vector<std::vector<Element>> tuples = samples;
  std::vector<Element> gen_tuple;
  for (const auto& o : ore_sets) gen_tuple.push_back(o.s);
  if (std::find(tuples.begin(), tuples.end(), gen_tuple) == tuples.end()) tuples.push_back(gen_tuple);

  for (const auto& tuple : tuples) {
    if (tuple.size() != ore_sets.size())
      throw std::invalid_argument("sample tuple needs one element per Ore set");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      bool member = false;
      for (int k = 0; k <= ore_sets[i].k_max && !member; ++k) {
        Element pk = ore_sets[i].power(k);
        const Monomial& lead = pk.terms().rbegin()->first;
        Scalar c = r.field().div(tuple[i].coefficient(lead), pk.terms().rbegin()->second);
        member = sgn(c) != 0 && pk.scaled(c, r.field()) == tuple[i];
      }
      if (!member)
        throw std::invalid_argument(to_string(tuple[i], gens) + " is not in the Ore set " + ore_sets[i].name);
    }
  }

  std::map<int, SGIdeal> geq;
  auto power_of = [&](int t, int m) {
    auto it = geq.find(t);
    if (it == geq.end()) it = geq.emplace(t, r_geq(rp, t)).first;
    return ideal_power(r, it->second, m);
  };
  auto covered = [&](const FlatSubspace& p, const LeftSpan& ls) -> std::optional<Vector> {
    for (const auto& v : p.space.rows())
      if (!ls.space.contains(v)) return v;
    return std::nullopt;
  };

  for (const auto& tuple : tuples) {
    SchematicResult res;
    res.sample = tuple;
    LeftSpan ls = left_span(r, tuple);
    bool found = false;
    for (int m = 1; m <= m_max && !found; ++m)
      for (int t = 1; t <= d && !found; ++t) {
        FlatSubspace p = power_of(t, m);
        // A power that vanishes on the window certifies nothing.
        if (p.space.rank() == 0 || covered(p, ls)) continue;
        found = true;
        res.t = t;
        res.m = m;
        res.window_truncated = p.truncated && !r.is_graded();
        for (const auto& v : p.space.rows()) {
          auto u = left_cover(r, ls, tuple.size(), v);
          res.certificates.push_back({r.to_element(v), *u});
        }
        if (t + 1 <= d) res.monotone_next_t = !covered(power_of(t + 1, m), ls);
      }
    if (!found) {
      res.status = Status::Fail;
      FlatSubspace p = power_of(d, 1);
      auto miss = covered(p, ls);
      std::string names;
      for (const auto& x : tuple) names += (names.empty() ? "" : ", ") + to_string(x, gens);
      res.failure = (miss ? to_string(r.to_element(*miss), gens) : std::string("?")) + " ∉ " + "R*(" + names +
                    ") for every t <= " + std::to_string(d) + ", m <= " + std::to_string(m_max);
    } else if (!res.monotone_next_t) {
      res.status = Status::Fail;
      res.failure = "inclusion fails again at t + 1";
    } else if (res.window_truncated) {
      res.status = Status::Inconclusive;
    }
    rep.tuples.push_back(std::move(res));
  }
  rep.status = rep.preconditions.empty() ? Status::Pass : Status::Fail;
  for (const auto& t : rep.tuples) {
    if (t.status == Status::Fail) rep.status = Status::Fail;
    if (t.status == Status::Inconclusive && rep.status == Status::Pass) rep.status = Status::Inconclusive;
  }
  return rep;
}

// --------------------------------------------------------------- compatible

std::vector<Vector> quotient_prime_slice(const QuotientRing& q, int n) {
  const Window& w = q.window();
  const Field& f = q.ring().field();
  const std::size_t dn = w.dim(n);
  std::vector<Vector> rows;
  for (std::size_t hi = 0; hi < w.dim_upto(w.max_degree() - n); ++hi) {
    const int target = n + w.degree_of(hi);
    Vector h(w.dim());
    h[hi] = 1;
    std::map<std::size_t, Vector> coeff;
    for (std::size_t i = 0; i < dn; ++i) {
      Vector b(w.dim());
      b[w.offset(n) + i] = 1;
      Vector prod = q.multiply(b, h);
      for (std::size_t c = 0; c < prod.size(); ++c)
        if (sgn(prod[c]) != 0 && w.degree_of(c) != target) {
          auto [it, _] = coeff.try_emplace(c, Vector(dn));
          it->second[i] = prod[c];
        }
    }
    for (auto& [c, row] : coeff) rows.push_back(std::move(row));
  }
  Matrix sys = rows.empty() ? Matrix(0, dn) : Matrix::from_rows(rows, dn);
  Matrix ns = null_space(sys, f);
  std::vector<Vector> out;
  for (std::size_t s = 0; s < ns.rows(); ++s) {
    Vector v(w.dim());
    for (std::size_t i = 0; i < dn; ++i) v[w.offset(n) + i] = ns(s, i);
    out.push_back(std::move(v));
  }
  return out;
}

CompatibleReport check_compatible(const QuotientContext& ctx) {
  const SGRing& r = *ctx.ring;
  const QuotientRing& q = *ctx.quotient;
  const Field& f = r.field();
  CompatibleReport rep;
  rep.bound = r.max_degree();
  for (int n = 0; n <= r.max_degree(); ++n) {
    CompatibleDegree cd;
    cd.degree = n;
    RPrimeSlice s = r_prime(r, n);
    Echelon image(q.window().dim(), f);
    for (const auto& x : s.elements)
      if (image.insert(q.project(r.to_vector(x)))) cd.image_basis.push_back(x);
    Echelon inside = span_of(quotient_prime_slice(q, n), q.window().dim(), f);
    cd.image_dim = image.rank();
    cd.quotient_dim = inside.rank();
    cd.equal = image == inside;
    if (!cd.equal && rep.status == Status::Pass) {
      rep.status = Status::Fail;
      rep.failure = "degree " + std::to_string(n) + ": image of R'_" + std::to_string(n) + " has dimension " +
                    std::to_string(cd.image_dim) + " but (R/J)'_" + std::to_string(n) + " has dimension " +
                    std::to_string(cd.quotient_dim);
    }
    rep.degrees.push_back(std::move(cd));
  }
  return rep;
}

// --------------------------------------------------------------- condition (*)

StarReport check_star(const QuotientContext& ctx, const StarBounds& bounds) {
  const RingPtr& rp = ctx.ring;
  const SGRing& r = *rp;
  const Field& f = r.field();
  const auto& gens = r.gens();
  const int d = r.max_degree();
  const std::size_t dim = r.window().dim();
  StarReport rep;
  rep.bound = d;
  Echelon jflat = span_of(ctx.ideal->space.basis(), dim, f);

  std::map<int, SGIdeal> geq;
  std::map<std::pair<int, int>, FlatSubspace> powers;
  auto power_of = [&](int t, int n) -> const FlatSubspace& {
    auto key = std::make_pair(t, n);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto g = geq.find(t);
    if (g == geq.end()) g = geq.emplace(t, r_geq(rp, t)).first;
    return powers.emplace(key, ideal_power(r, g->second, n)).first->second;
  };
  std::map<std::pair<int, int>, std::vector<Element>> left_gens;
  auto gens_of = [&](int t, int n) -> const std::vector<Element>& {
    auto key = std::make_pair(t, n);
    auto it = left_gens.find(key);
    if (it != left_gens.end()) return it->second;
    std::vector<Element> out;
    for (const auto& v : minimal_generators(power_of(t, n).space.rows(), r.window(), r.left_actions(), f))
      out.push_back(r.to_element(v));
    return left_gens.emplace(key, std::move(out)).first->second;
  };

  for (int t : bounds.t_values)
    for (int n : bounds.n_values) {
      if (t > d) continue;
      const FlatSubspace& p = power_of(t, n);
      Echelon x_space = intersect(jflat, p.space);
      if (x_space.rank() == 0) continue;
      // J * P spanned by products of basis elements; keep an independent subset with provenance.
      std::vector<Vector> prod_vecs;
      std::vector<std::pair<Element, Element>> prod_src;
      Echelon jp(dim, f);
      std::vector<Element> jel, pel;
      for (const auto& v : jflat.rows()) jel.push_back(r.to_element(v));
      for (const auto& v : p.space.rows()) pel.push_back(r.to_element(v));
      for (const auto& a : jel)
        for (const auto& b : pel) {
          if (a.max_degree() + b.max_degree() > d && r.is_graded()) continue;
          ActionResult v = r.to_vector_truncated(r.multiply(a, b));
          if (v.overflow) continue;
          if (jp.insert(v.value)) {
            prod_vecs.push_back(std::move(v.value));
            prod_src.emplace_back(a, b);
          }
        }
      for (const auto& xv : x_space.rows()) {
        StarItem item;
        item.t = t;
        item.n = n;
        item.x = r.to_element(xv);
        const int dx = item.x.max_degree();
        bool evaluable_beyond_zero = false;
        bool done = false;
        for (int tx = 0; tx <= d && !done; ++tx)
          for (int nx = 1; nx <= (tx == 0 ? 1 : bounds.n_x_max) && !done; ++nx) {
            std::vector<Element> g = tx == 0 ? std::vector<Element>{r.one()} : gens_of(tx, nx);
            if (g.empty()) continue;
            bool fits = true;
            for (const auto& e : g) fits &= e.max_degree() + dx <= d;
            if (!fits) continue;
            if (tx > 0) evaluable_beyond_zero = true;
            std::vector<StarCertificate> certs;
            bool all = true;
            for (const auto& e : g) {
              Vector gx = r.to_vector(r.multiply(e, item.x));
              if (!jp.contains(gx)) {
                all = false;
                break;
              }
              auto c = solve_combination(prod_vecs, gx, dim, f);
              StarCertificate cert{e, {}, {}};
              for (std::size_t i = 0; i < c->size(); ++i)
                if (sgn((*c)[i]) != 0) {
                  cert.coefficients.push_back((*c)[i]);
                  cert.products.push_back(prod_src[i]);
                }
              certs.push_back(std::move(cert));
            }
            if (!all) continue;
            item.t_x = tx;
            item.n_x = nx;
            item.certificates = std::move(certs);
            done = true;
          }
        if (!done) {
          if (evaluable_beyond_zero) {
            item.status = Status::Fail;
            item.note = "no (t_x, n_x) within the window";
            if (rep.status != Status::Fail) {
              rep.status = Status::Fail;
              rep.failure = to_string(item.x, gens) + " in J ∩ (R_{>=" + std::to_string(t) + "})^" +
                            std::to_string(n) + ": no power of R_{>=t_x} pushes it into J(R_{>=" +
                            std::to_string(t) + "})^" + std::to_string(n);
            }
          } else {
            item.status = Status::Inconclusive;
            item.note = "beyond the certification bound";
            if (rep.status == Status::Pass) rep.status = Status::Inconclusive;
          }
        }
        rep.items.push_back(std::move(item));
      }
    }
  return rep;
}

// --------------------------------------------------------------- re-verifier

bool verify(const OreReport& rep, const OreSetSpec& spec) {
  const SGRing& r = *spec.ring;
  for (const auto& w : rep.witnesses)
    if (r.multiply(spec.power(w.k), w.r) != r.multiply(w.u, spec.s)) return false;
  return true;
}

bool verify(const GoodOreReport& rep, const OreSetSpec& spec) {
  const SGRing& r = *spec.ring;
  for (int k : rep.powers_in_r2)
    if (prime_violation(r, spec.power(k), true)) return false;
  for (const auto& w : rep.witnesses) {
    if (r.multiply(spec.power(w.k), w.r) != r.multiply(w.u, spec.s)) return false;
    if (!w.u.is_homogeneous() || prime_violation(r, w.u, false)) return false;
  }
  return true;
}

bool verify(const SchematicResult& res, const SGRing& r) {
  for (const auto& c : res.certificates) {
    Element sum;
    for (std::size_t i = 0; i < c.u.size(); ++i) sum.add_scaled(r.multiply(c.u[i], res.sample[i]), 1, r.field());
    if (sum != c.p) return false;
  }
  return true;
}

bool verify(const CompatibleReport& rep, const QuotientContext& ctx) {
  const SGRing& r = *ctx.ring;
  const QuotientRing& q = *ctx.quotient;
  for (const auto& cd : rep.degrees) {
    Echelon inside = span_of(quotient_prime_slice(q, cd.degree), q.window().dim(), r.field());
    for (const auto& x : cd.image_basis) {
      if (prime_violation(r, x, false)) return false;
      if (!inside.contains(q.project(r.to_vector(x)))) return false;
    }
    if (cd.equal && cd.image_basis.size() != inside.rank()) return false;
  }
  return true;
}

bool verify(const StarReport& rep, const QuotientContext& ctx) {
  const SGRing& r = *ctx.ring;
  const Field& f = r.field();
  Echelon jflat = span_of(ctx.ideal->space.basis(), r.window().dim(), f);
  for (const auto& item : rep.items)
    for (const auto& c : item.certificates) {
      Element sum;
      for (std::size_t i = 0; i < c.products.size(); ++i) {
        if (!jflat.contains(r.to_vector(c.products[i].first))) return false;
        sum.add_scaled(r.multiply(c.products[i].first, c.products[i].second), c.coefficients[i], f);
      }
      if (sum != r.multiply(c.g, item.x)) return false;
    }
  return true;
}

Echelon kappa_checked(const OreSetSpec& spec, const SGModule& m) {
  OreReport rep = check_left_ore(spec);
  if (rep.status == Status::Fail)
    throw std::invalid_argument(spec.name + " is not a left Ore set on the window: " + *rep.failure);
  return kappa(spec.s, spec.k_max, m);
}

}  // namespace sgk
