#include "sgk/functors.hpp"

#include <map>

namespace sgk {

QuotientContext make_context(const RingPtr& r, const IdealPtr& j) {
  QuotientContext ctx;
  ctx.ring = r;
  ctx.ideal = j;
  ctx.quotient = quotient_ring(r, j);
  for (const auto& g : minimal_generators(j->space.basis(), r->window(), r->two_sided_actions(), r->field()))
    ctx.ideal_generators.push_back(r->to_element(g));
  return ctx;
}

void require_annihilated(const QuotientContext& ctx, const SGModule& m) {
  for (const auto& j : ctx.ideal_generators)
    for (std::size_t i = 0; i < m.dim(); ++i) {
      Vector e(m.dim());
      e[i] = 1;
      Vector v = m.act(j, e).value;
      if (!is_zero(v))
        throw std::invalid_argument("module " + m.name() + " is not annihilated by " + ctx.ideal->name + ": (" +
                                    to_string(j, ctx.ring->gens()) + ")*" + m.window().label(i) + " = " +
                                    m.vector_to_string(v));
    }
}

ModulePtr restrict_scalars(const QuotientContext& ctx, const ModulePtr& m) {
  require_annihilated(ctx, *m);
  return with_annihilator(*m, nullptr, m->name());
}

namespace {

/// {v in P : g v in P for all generators g}, truncated products.
Echelon stable_part(const Echelon& p, const SGModule& m) {
  const Field& f = m.field();
  const std::size_t k = p.rank();
  const std::size_t ng = m.ring().gens().size();
  Echelon out(m.dim(), f);
  if (k == 0) return out;
  Matrix sys(ng * m.dim(), k);
  for (std::size_t c = 0; c < k; ++c)
    for (GenIndex g = 0; g < ng; ++g) {
      Vector r = p.reduce(m.act(g, p.rows()[c]).value);
      for (std::size_t i = 0; i < m.dim(); ++i) sys(g * m.dim() + i, c) = r[i];
    }
  Matrix ns = null_space(sys, f);
  for (std::size_t s = 0; s < ns.rows(); ++s) {
    Vector v(m.dim());
    for (std::size_t c = 0; c < k; ++c) axpy(v, ns(s, c), p.rows()[c], f);
    out.insert(v);
  }
  return out;
}

GradedSubspace graded_from(const Echelon& e, const Window& w, const Field& f) {
  GradedSubspace s(w, f);
  for (const auto& v : e.rows()) s.add_components(v);
  return s;
}

/// Coordinates of v (inside s) on the echelon basis of s, degree by degree.
Vector subspace_coordinates(const GradedSubspace& s, const Vector& v) {
  const Window& w = s.window();
  Vector out;
  for (int k = 0; k <= w.max_degree(); ++k)
    for (std::size_t p : s.slice(k).pivots()) out.push_back(v[w.offset(k) + p]);
  return out;
}

}  // namespace

ShriekResult shriek(const QuotientContext& ctx, const ModulePtr& m) {
  const Field& f = m->field();
  // Common kernel of the generators of J, then the largest submodule inside it that is degreewise.
  Echelon p(m->dim(), f);
  for (std::size_t i = 0; i < m->dim(); ++i) {
    Vector e(m->dim());
    e[i] = 1;
    p.insert(e);
  }
  for (const auto& j : ctx.ideal_generators) {
    Matrix a = m->truncated_matrix(j);
    p = intersect(p, span_of(null_space(a, f).row_vectors(), m->dim(), f));
  }
  while (true) {
    Echelon next = stable_part(degreewise_part(p, m->window()), *m);
    if (next == p) break;
    p = std::move(next);
  }
  GradedSubspace space = graded_from(p, m->window(), f);
  SubmoduleModule sub = submodule_as_module(m, space, "f^!(" + m->name() + ")");
  return ShriekResult{with_annihilator(*sub.module, ctx.ideal, sub.module->name()), std::move(sub.inclusion),
                      std::move(space)};
}

UpperStarResult upper_star(const QuotientContext& ctx, const ModulePtr& m) {
  std::vector<Vector> jm;
  for (const auto& j : ctx.ideal_generators)
    for (std::size_t i = 0; i < m->dim(); ++i) {
      Vector e(m->dim());
      e[i] = 1;
      jm.push_back(m->act(j, e).value);
    }
  GradedSubspace killed = sg_closure(jm, m->window(), m->actions(), m->field());
  QuotientModule q = quotient_module(m, killed, "f^*(" + m->name() + ")");
  return UpperStarResult{with_annihilator(*q.module, ctx.ideal, q.module->name()), std::move(q.projection),
                         std::move(q.section), std::move(killed)};
}

// ----------------------------------------------------------------- hom spaces

Vector map_coordinates(const GradedMap& phi) {
  Vector out;
  for (int k = 0; k <= phi.max_degree(); ++k) {
    const Matrix& b = phi.block(k);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out.push_back(b(r, c));
  }
  return out;
}

HomSpace hom_sg(const ModulePtr& source, const ModulePtr& target) {
  const SGModule& m = *source;
  const SGModule& n = *target;
  if (m.max_degree() != n.max_degree() || m.ring_ptr() != n.ring_ptr())
    throw std::invalid_argument("hom spaces need modules over the same ring window");
  const Field& f = m.field();
  const Window& mw = m.window();
  const Window& nw = n.window();
  const int d = mw.max_degree();

  std::vector<std::size_t> var_off(static_cast<std::size_t>(d + 2), 0);
  for (int k = 0; k <= d; ++k)
    var_off[static_cast<std::size_t>(k + 1)] = var_off[static_cast<std::size_t>(k)] + nw.dim(k) * mw.dim(k);
  const std::size_t nvars = var_off.back();
  auto var = [&](int k, std::size_t p, std::size_t i) {
    return var_off[static_cast<std::size_t>(k)] + p * mw.dim(k) + i;
  };

  // phi(g e_j) = g phi(e_j), one equation per target coordinate.
  std::vector<Vector> rows;
  for (GenIndex g = 0; g < m.ring().gens().size(); ++g) {
    const Action& na = n.action(g);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const int kj = mw.degree_of(j);
      const std::size_t jj = j - mw.offset(kj);
      Vector e(m.dim());
      e[j] = 1;
      Vector a = m.act(g, e).value;
      std::map<std::size_t, std::map<std::size_t, Scalar>> eq;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        const int k = mw.degree_of(i);
        const std::size_t ii = i - mw.offset(k);
        for (std::size_t pp = 0; pp < nw.dim(k); ++pp) {
          Scalar& c = eq[nw.offset(k) + pp][var(k, pp, ii)];
          c = f.add(c, a[i]);
        }
      }
      for (std::size_t ll = 0; ll < nw.dim(kj); ++ll)
        for (const auto& [p, c] : na.columns[nw.offset(kj) + ll]) {
          Scalar& x = eq[p][var(kj, ll, jj)];
          x = f.sub(x, c);
        }
      for (auto& [p, terms] : eq) {
        Vector row(nvars);
        bool nz = false;
        for (auto& [v, c] : terms)
          if (sgn(c) != 0) {
            row[v] = c;
            nz = true;
          }
        if (nz) rows.push_back(std::move(row));
      }
    }
  }
  HomSpace hs{source, target, {}};
  if (nvars == 0) return hs;
  Matrix ns = null_space(rows.empty() ? Matrix(0, nvars) : Matrix::from_rows(rows, nvars), f);
  for (std::size_t s = 0; s < ns.rows(); ++s) {
    GradedMap phi(mw, nw);
    for (int k = 0; k <= d; ++k)
      for (std::size_t p = 0; p < nw.dim(k); ++p)
        for (std::size_t i = 0; i < mw.dim(k); ++i) phi.block(k)(p, i) = ns(s, var(k, p, i));
    hs.basis.push_back(std::move(phi));
  }
  return hs;
}

bool is_homomorphism(const GradedMap& phi, const SGModule& source, const SGModule& target) {
  const Field& f = source.field();
  for (GenIndex g = 0; g < source.ring().gens().size(); ++g)
    for (std::size_t j = 0; j < source.dim(); ++j) {
      Vector e(source.dim());
      e[j] = 1;
      if (phi.apply(source.act(g, e).value, f) != target.act(g, phi.apply(e, f)).value) return false;
    }
  return true;
}

GradedMap shriek_map(const ShriekResult& source, const ShriekResult& target, const GradedMap& beta, const Field& f) {
  const Window& sw = source.module->window();
  const Window& tw = target.module->window();
  GradedMap out(sw, tw);
  for (std::size_t j = 0; j < sw.dim(); ++j) {
    Vector e(sw.dim());
    e[j] = 1;
    Vector img = beta.apply(source.inclusion.apply(e, f), f);
    if (!target.space.contains(img)) throw std::invalid_argument("morphism does not map f^! into f^!");
    Vector c = subspace_coordinates(target.space, img);
    const int k = sw.degree_of(j);
    for (std::size_t p = 0; p < tw.dim(k); ++p) out.block(k)(p, j - sw.offset(k)) = c[tw.offset(k) + p];
  }
  return out;
}

GradedMap upper_star_map(const UpperStarResult& source, const UpperStarResult& target, const GradedMap& alpha,
                         const Field& f) {
  return target.projection.compose_after(alpha.compose_after(source.section, f), f);
}

// ---------------------------------------------------------------- adjunctions

namespace {

std::vector<GradedMap> samples(const ModulePtr& m, const Field& f) {
  std::vector<GradedMap> out = hom_sg(m, m).basis;
  out.push_back(GradedMap::identity(m->window()).scaled(2, f));
  return out;
}

/// Rank of the coordinate vectors of the given maps.
std::size_t map_rank(const std::vector<GradedMap>& maps, const Field& f) {
  if (maps.empty()) return 0;
  std::vector<Vector> rows;
  for (const auto& m : maps) rows.push_back(map_coordinates(m));
  return span_of(rows, rows.front().size(), f).rank();
}

}  // namespace

AdjunctionReport verify_adjunction_shriek(const QuotientContext& ctx, const ModulePtr& m, const ModulePtr& n,
                                          AdjunctionOptions opts) {
  const Field& f = ctx.ring->field();
  require_annihilated(ctx, *m);
  ShriekResult sn = shriek(ctx, n);
  ModulePtr fm = restrict_scalars(ctx, m);
  HomSpace left = hom_sg(m, sn.module);
  HomSpace right = hom_sg(fm, n);

  AdjunctionReport rep;
  rep.truncated = !ctx.ring->is_graded();
  rep.left_dim = left.dim();
  rep.right_dim = right.dim();
  rep.dimensions_equal = left.dim() == right.dim();

  std::optional<GradedMap> shift;
  if (opts.corrupt && !left.basis.empty()) shift = sn.inclusion.compose_after(left.basis.front(), f);
  auto mu = [&](const GradedMap& g) {
    GradedMap out = sn.inclusion.compose_after(g, f);
    return shift ? out.plus(*shift, f) : out;
  };

  std::vector<GradedMap> images;
  bool homs = true;
  for (const auto& g : left.basis) {
    images.push_back(mu(g));
    homs &= is_homomorphism(images.back(), *fm, *n);
  }
  rep.bijection = homs && rep.dimensions_equal && map_rank(images, f) == left.dim();

  // Inverse on the right basis: express h through the images, then map back.
  rep.inverse_identities = rep.bijection;
  if (rep.bijection) {
    std::vector<Vector> coords;
    for (const auto& im : images) coords.push_back(map_coordinates(im));
    for (const auto& h : right.basis) {
      Vector hc = map_coordinates(h);
      auto c = solve_combination(coords, hc, hc.size(), f);
      if (!c) {
        rep.inverse_identities = false;
        break;
      }
      GradedMap pre(m->window(), sn.module->window());
      for (std::size_t i = 0; i < left.basis.size(); ++i) pre = pre.plus(left.basis[i].scaled((*c)[i], f), f);
      if (!(mu(pre) == h)) {
        rep.inverse_identities = false;
        break;
      }
    }
  }

  std::vector<GradedMap> alphas = samples(m, f);
  for (std::size_t a = 0; a < alphas.size(); ++a)
    for (std::size_t i = 0; i < left.basis.size(); ++i) {
      ++rep.squares_checked;
      const GradedMap& g = left.basis[i];
      if (!(mu(g.compose_after(alphas[a], f)) == mu(g).compose_after(alphas[a], f)))
        rep.failures.push_back({"M", a, i, "mu(g o alpha) != mu(g) o f_*(alpha)"});
    }
  std::vector<GradedMap> betas = samples(n, f);
  for (std::size_t b = 0; b < betas.size(); ++b) {
    GradedMap sb = shriek_map(sn, sn, betas[b], f);
    for (std::size_t i = 0; i < left.basis.size(); ++i) {
      ++rep.squares_checked;
      const GradedMap& g = left.basis[i];
      if (!(mu(sb.compose_after(g, f)) == betas[b].compose_after(mu(g), f)))
        rep.failures.push_back({"N", b, i, "mu(f^!(beta) o g) != beta o mu(g)"});
    }
  }
  return rep;
}

AdjunctionReport verify_adjunction_star(const QuotientContext& ctx, const ModulePtr& m, const ModulePtr& n,
                                        AdjunctionOptions opts) {
  const Field& f = ctx.ring->field();
  require_annihilated(ctx, *n);
  ModulePtr fn = restrict_scalars(ctx, n);
  UpperStarResult um = upper_star(ctx, m);
  HomSpace left = hom_sg(m, fn);
  HomSpace right = hom_sg(um.module, n);

  AdjunctionReport rep;
  rep.truncated = !ctx.ring->is_graded();
  rep.left_dim = left.dim();
  rep.right_dim = right.dim();
  rep.dimensions_equal = left.dim() == right.dim();

  std::optional<GradedMap> shift;
  if (opts.corrupt && !left.basis.empty()) shift = left.basis.front().compose_after(um.section, f);
  auto lambda = [&](const GradedMap& h) {
    GradedMap out = h.compose_after(um.section, f);
    return shift ? out.plus(*shift, f) : out;
  };
  auto lambda_prime = [&](const GradedMap& g) { return g.compose_after(um.projection, f); };

  bool ok = rep.dimensions_equal;
  bool ids = true;
  for (const auto& h : left.basis) {
    GradedMap g = lambda(h);
    ok &= is_homomorphism(g, *um.module, *n);
    ids &= lambda_prime(g) == h;
  }
  for (const auto& g : right.basis) {
    GradedMap h = lambda_prime(g);
    ok &= is_homomorphism(h, *m, *fn);
    ids &= lambda(h) == g;
  }
  rep.bijection = ok && ids;
  rep.inverse_identities = ids;

  std::vector<GradedMap> alphas = samples(m, f);
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    GradedMap sa = upper_star_map(um, um, alphas[a], f);
    for (std::size_t i = 0; i < left.basis.size(); ++i) {
      ++rep.squares_checked;
      const GradedMap& h = left.basis[i];
      if (!(lambda(h.compose_after(alphas[a], f)) == lambda(h).compose_after(sa, f)))
        rep.failures.push_back({"M", a, i, "lambda(h o alpha) != lambda(h) o f^*(alpha)"});
    }
  }
  std::vector<GradedMap> betas = samples(n, f);
  for (std::size_t b = 0; b < betas.size(); ++b)
    for (std::size_t i = 0; i < left.basis.size(); ++i) {
      ++rep.squares_checked;
      const GradedMap& h = left.basis[i];
      if (!(lambda(betas[b].compose_after(h, f)) == betas[b].compose_after(lambda(h), f)))
        rep.failures.push_back({"N", b, i, "lambda(f_*(beta) o h) != beta o lambda(h)"});
    }
  return rep;
}

}  // namespace sgk
