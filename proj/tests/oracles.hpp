#pragma once

// Independent models used to cross-check the library.

#include <tuple>
#include <vector>

#include "support.hpp"

namespace sgk::test {

/// A1 acting on k[t]: x = multiplication by t, y = d/dt. Polynomials are
/// coefficient vectors of length n.
struct WeylOperators {
  std::size_t n;

  std::vector<Scalar> apply_letter(GenIndex g, const std::vector<Scalar>& p) const {
    std::vector<Scalar> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(p[i]) == 0) continue;
      if (g == 0) {
        if (i + 1 < n) out[i + 1] += p[i];
      } else if (i > 0) {
        out[i - 1] += p[i] * Scalar(static_cast<long>(i));
      }
    }
    return out;
  }

  /// Word acting on t^j, letters applied right to left.
  std::vector<Scalar> apply_word(const Word& w, std::size_t j) const {
    std::vector<Scalar> p(n);
    p[j] = 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) p = apply_letter(*it, p);
    return p;
  }

  /// sum c x^a y^b acting on t^j as sum c t^a d^b/dt^b.
  std::vector<Scalar> apply_element(const Element& e, std::size_t j) const {
    std::vector<Scalar> out(n);
    for (const auto& [m, c] : e.terms()) {
      const std::size_t a = m.exponents[0], b = m.exponents[1];
      if (b > j) continue;
      Scalar falling = 1;
      for (std::size_t i = 0; i < b; ++i) falling *= Scalar(static_cast<long>(j - i));
      const std::size_t k = j - b + a;
      if (k < n) out[k] += c * falling;
    }
    return out;
  }
};

/// Quantum plane y x = q x y acting on itself by exponents:
/// x . x^a y^b = x^{a+1} y^b, y . x^a y^b = q^a x^a y^{b+1}.
inline std::tuple<Scalar, int, int> qplane_word(const Word& w, const Scalar& q) {
  Scalar c = 1;
  int a = 0, b = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == 0) {
      ++a;
    } else {
      for (int i = 0; i < a; ++i) c *= q;
      ++b;
    }
  }
  return {c, a, b};
}

/// Least subspace containing X, closed under taking homogeneous components
/// and under multiplication by generators (left, and right if two_sided),
/// found by naive iteration with exact ring products. Components beyond the
/// window are dropped.
inline Echelon brute_force_closure(const SGRing& r, const std::vector<Element>& xs, bool two_sided) {
  const int d = r.max_degree();
  Echelon span(r.window().dim(), r.field());
  auto absorb = [&](const Element& e) {
    bool grew = false;
    for (const auto& [k, c] : degree_decompose(e))
      if (k <= d) grew |= span.insert(r.to_vector(c));
    return grew;
  };
  for (const auto& x : xs) absorb(x);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Vector> rows = span.rows();
    for (const auto& v : rows) {
      Element e = r.to_element(v);
      for (GenIndex g = 0; g < r.gens().size(); ++g) {
        Element gen = r.generator(g);
        changed |= absorb(multiply(gen, e, r.presentation()));
        if (two_sided) changed |= absorb(multiply(e, gen, r.presentation()));
      }
    }
  }
  return span;
}

inline Echelon flat(const GradedSubspace& s) { return span_of(s.basis(), s.window().dim(), s.field()); }

}  // namespace sgk::test
