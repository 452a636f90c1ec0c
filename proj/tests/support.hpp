#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "sgk/checkers.hpp"
#include "sgk/parse.hpp"

namespace sgk::test {

inline std::string data_path(const std::string& file) { return std::string(SGK_DATA_DIR) + "/" + file; }

struct Loaded {
  RingFile file;
  RingPtr ring;

  const Presentation& p() const { return *file.presentation; }
  Element el(const std::string& text) const { return parse_element(text, p()); }
  std::string str(const Element& e) const { return to_string(e, p().gens()); }
  IdealPtr ideal(const std::string& name) const {
    const IdealDecl& d = file.ideal(name);
    return std::make_shared<const SGIdeal>(sg_ideal(ring, d.generators, d.side, name));
  }
  IdealPtr ideal_of(const std::vector<Element>& gens, Side side = Side::TwoSided) const {
    return std::make_shared<const SGIdeal>(sg_ideal(ring, gens, side));
  }
  OreSetSpec ore(const std::string& name) const { return OreSetSpec::powers(ring, file.ore(name).s, name); }
  ModulePtr module(const std::string& file_name, IdealPtr ann = nullptr) const {
    return build_module(ring, load_module_file(data_path(file_name), p()), ann);
  }
};

inline Loaded load(const std::string& file, int d = 8) {
  Loaded l{load_ring_file(data_path(file)), nullptr};
  l.ring = std::make_shared<const SGRing>(l.file.presentation, d);
  return l;
}

inline Loaded load_text(const std::string& text, int d = 8) {
  Loaded l{parse_ring_file(text), nullptr};
  l.ring = std::make_shared<const SGRing>(l.file.presentation, d);
  return l;
}

using Rng = std::mt19937_64;

inline Scalar random_scalar(Rng& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Scalar(d(rng));
}

inline Scalar random_nonzero(Rng& rng) {
  Scalar s;
  do s = random_scalar(rng);
  while (sgn(s) == 0);
  return s;
}

/// Random element supported on window monomials of degree in [lo, hi].
inline Element random_element(const SGRing& r, Rng& rng, int lo, int hi, int terms) {
  Element e;
  std::size_t from = lo > 0 ? r.window().dim_upto(lo - 1) : 0;
  std::size_t to = r.window().dim_upto(std::min(hi, r.max_degree()));
  if (from >= to) return e;
  std::uniform_int_distribution<std::size_t> pick(from, to - 1);
  for (int i = 0; i < terms; ++i) e.add_term(r.basis()[pick(rng)], random_nonzero(rng), r.field());
  return e;
}

inline Element random_homogeneous(const SGRing& r, Rng& rng, int k, int terms) {
  return random_element(r, rng, k, k, terms);
}

inline Vector random_vector(std::size_t n, Rng& rng, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  Vector v(n);
  for (auto& x : v)
    if (keep(rng)) x = random_scalar(rng);
  return v;
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, double density = 0.5) {
  Matrix m(rows, cols);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) m(i, j) = random_scalar(rng, -5, 5);
  return m;
}

/// Unit vector in a window of dimension n.
inline Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

}  // namespace sgk::test

namespace sgk::test {

/// Module on one or two generators with random homogeneous relations.
/// With an annihilator J the relations J*e are added, making it an R/J-module.
inline ModulePtr random_module(const Loaded& l, Rng& rng, IdealPtr ann = nullptr, int max_rel_degree = 3) {
  const SGRing& r = *l.ring;
  std::uniform_int_distribution<int> ngens(1, 2), gdeg(0, 1), nrel(1, 2), rdeg(1, max_rel_degree);
  std::vector<ModuleGenerator> gens;
  const int ng = ngens(rng);
  for (int i = 0; i < ng; ++i) gens.push_back({"e" + std::to_string(i), i == 0 ? 0 : gdeg(rng)});
  std::vector<FreeElement> rels;
  const int nr = nrel(rng);
  for (int i = 0; i < nr; ++i) {
    FreeElement rel(gens.size());
    const int total = rdeg(rng);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int k = total - gens[g].degree;
      if (k >= 0 && k <= r.max_degree()) rel[g] = random_homogeneous(r, rng, k, 2);
    }
    rels.push_back(std::move(rel));
  }
  if (ann)
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (const auto& j : ann->basis_elements()) {
        if (j.max_degree() + gens[g].degree > r.max_degree()) continue;
        FreeElement rel(gens.size());
        rel[g] = j;
        rels.push_back(std::move(rel));
      }
  return module_from_presentation(l.ring, "M", gens, rels, ann);
}

/// Random combination of a hom-space basis.
inline GradedMap random_morphism(const HomSpace& h, Rng& rng, const Field& f) {
  GradedMap out(h.source->window(), h.target->window());
  for (const auto& b : h.basis) out = out.plus(b.scaled(random_scalar(rng), f), f);
  return out;
}

}  // namespace sgk::test
