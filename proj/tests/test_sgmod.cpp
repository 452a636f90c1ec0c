#include <doctest.h>

#include "oracles.hpp"

using namespace sgk;
using namespace sgk::test;

namespace {

ModulePtr cyclic(const Loaded& l, const std::vector<std::string>& rels, IdealPtr ann = nullptr) {
  std::vector<FreeElement> fr;
  for (const auto& r : rels) fr.push_back({l.el(r)});
  return module_from_presentation(l.ring, "M", {{"e", 0}}, fr, ann);
}

}  // namespace

TEST_CASE("module presentations") {
  Loaded k = load("kx.sgr");
  CHECK(free_module(k.ring, {{"e", 0}})->dims() == k.ring->window().dims());
  CHECK(cyclic(k, {"x^2"})->dims() == std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0, 0, 0});
  Loaded q = load("qplane.sgr");
  ModulePtr m = cyclic(q, {"x"});
  CHECK(m->dims() == std::vector<std::size_t>(9, 1));
  const std::size_t d = m->dim();
  for (std::size_t i = 0; i < d; ++i) {
    CHECK(is_zero(m->act(0, unit(d, i)).value));
    if (i + 1 < d) CHECK(m->act(1, unit(d, i)).value == unit(d, i + 1));
  }
  // Generator degrees shift the window.
  ModulePtr shifted = free_module(k.ring, {{"f", 2}});
  CHECK(shifted->dims() == std::vector<std::size_t>{0, 0, 1, 1, 1, 1, 1, 1, 1});
  CHECK_THROWS_AS(cyclic(k, {"x^9"}), WindowOverflow);
}

TEST_CASE("module files") {
  Loaded k = load("kx.sgr");
  CHECK(k.module("kx_mod_x2.sgm")->dims() == std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0, 0, 0});
  ModulePtr triv = k.module("kx_trivial.sgm", k.ideal("Jx"));
  CHECK(triv->dims() == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0, 0, 0});
  ModulePtr drop = k.module("lsg_fail.sgm");
  CHECK(drop->dims() == std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0, 0, 0});
  CHECK_FALSE(drop->is_graded());
}

TEST_CASE("explicit modules must satisfy the ring relations") {
  Loaded q = load("qplane.sgr", 2);
  // x e0 = y e0 = e1 and both kill e1, so y*x = 2*x*y holds on e0.
  std::vector<std::vector<Vector>> images(2, std::vector<Vector>(2, Vector(2)));
  images[0][0] = unit(2, 1);
  images[1][0] = unit(2, 1);
  CHECK_NOTHROW(explicit_module(q.ring, "ok", {{"e0", 0}, {"e1", 1}}, images));
  Loaded k = load("kxy.sgr", 2);
  std::vector<std::vector<Vector>> bad(2, std::vector<Vector>(3, Vector(3)));
  bad[0][0] = unit(3, 1);  // x e0 = e1
  bad[1][1] = unit(3, 2);  // y e1 = e2, but x e1 = 0 and y e0 = 0, so xy e0 != yx e0
  CHECK_THROWS_AS(explicit_module(k.ring, "bad", {{"e0", 0}, {"e1", 1}, {"e2", 2}}, bad), std::invalid_argument);
}

TEST_CASE("A1 x is not an SG submodule of A1") {
  Loaded a = load("weyl1.sgr", 6);
  ModulePtr reg = regular_module(a.ring);
  const SGRing& r = *a.ring;
  FlatSubspace ax = action_closure({r.to_vector(a.el("x"))}, r.window().dim(), r.left_actions(), r.field());
  std::vector<Vector> span{r.to_vector(a.el("x")), r.to_vector(a.el("y*x"))};
  for (const auto& v : ax.space.rows()) span.push_back(v);
  SubmoduleCheck c = is_sg_submodule(span, *reg);
  CHECK_FALSE(c.sg);
  REQUIRE(c.component);
  CHECK(*c.component == r.to_vector(a.el("1")));
  CHECK(a.str(r.to_element(*c.element)) == "x*y + 1");
}

TEST_CASE("is_sg_submodule requires action closure") {
  Loaded k = load("kx.sgr");
  ModulePtr reg = regular_module(k.ring);
  CHECK_THROWS_AS(is_sg_submodule({k.ring->to_vector(k.el("x"))}, *reg), NotActionClosed);
  std::vector<Vector> xs;
  for (int i = 2; i <= 8; ++i) xs.push_back(k.ring->to_vector(k.el("x^" + std::to_string(i))));
  CHECK(is_sg_submodule(xs, *reg).sg);
}

TEST_CASE("degreewise predicates agree on random action-closed subspaces") {
  Rng rng(41);
  int disagreements = 0, non_sg = 0;
  for (const char* f : {"weyl1.sgr", "lie.sgr", "qplane.sgr"}) {
    Loaded l = load(f, 5);
    const SGRing& r = *l.ring;
    for (int trial = 0; trial < 10; ++trial) {
      Element x = random_element(r, rng, 1, 4, 2);
      FlatSubspace n = action_closure({r.to_vector(x)}, r.window().dim(), r.left_actions(), r.field());
      bool a = predicate_degreewise(n.space, r.window());
      bool b = predicate_component_closed(n.space, r.window());
      bool c = predicate_quotient_consistent(n.space, r.window());
      disagreements += (a != b) + (b != c);
      non_sg += !a;
      if (a) CHECK(flat(sg_closure(n.space.rows(), r.window(), r.left_actions(), r.field())) == n.space);
    }
  }
  CHECK(disagreements == 0);
  CHECK(non_sg > 0);
}

TEST_CASE("quotient modules subtract dimensions") {
  Rng rng(42);
  Loaded h = load("heis.sgr", 5);
  ModulePtr reg = regular_module(h.ring);
  for (int trial = 0; trial < 5; ++trial) {
    Element x = random_homogeneous(*h.ring, rng, 2, 2);
    GradedSubspace n = sg_closure({h.ring->to_vector(x)}, reg->window(), reg->actions(), h.ring->field());
    QuotientModule q = quotient_module(reg, n);
    for (int d = 0; d <= 5; ++d) CHECK(q.module->dims()[d] + n.dim(d) == reg->dims()[d]);
    // The projection kills N and the section splits it.
    for (const auto& v : n.basis()) CHECK(is_zero(q.projection.apply(v, h.ring->field())));
    CHECK(q.projection.compose_after(q.section, h.ring->field()) == GradedMap::identity(q.module->window()));
  }
}

TEST_CASE("LSG modules") {
  CHECK(is_lsg(*regular_module(load("qplane.sgr").ring)).lsg);
  CHECK(is_lsg(*regular_module(load("weyl1.sgr", 6).ring)).lsg);
  Loaded k = load("kx.sgr");
  LsgReport bad = is_lsg(*k.module("lsg_fail.sgm"));
  CHECK_FALSE(bad.lsg);
  REQUIRE(bad.witness);
  CHECK(bad.witness->find("e1") != std::string::npos);
}

TEST_CASE("torsion") {
  Loaded k = load("kx.sgr");
  TorsionReport t = torsion(*k.module("kx_mod_x2.sgm"));
  CHECK(t.space.rank() == 2);
  REQUIRE(t.uniform);
  CHECK(t.uniform->n == 1);
  CHECK(t.uniform->t == 2);
  CHECK(t.bound == 8);
  CHECK(torsion(*regular_module(k.ring)).space.rank() == 0);
  Loaded q = load("qplane.sgr");
  TorsionReport tq = torsion(*cyclic(q, {"x"}));
  CHECK(tq.space.rank() == 0);
  CHECK_FALSE(tq.uniform);
}

TEST_CASE("torsion is an SG submodule with valid witnesses") {
  Rng rng(43);
  for (const char* f : {"qplane.sgr", "heis.sgr", "kxy.sgr"}) {
    Loaded l = load(f, 5);
    for (int trial = 0; trial < 4; ++trial) {
      ModulePtr m = module_from_presentation(l.ring, "M", {{"e", 0}},
                                             {{random_homogeneous(*l.ring, rng, 2, 2)}, {random_homogeneous(*l.ring, rng, 1, 1)}});
      TorsionReport t = torsion(*m);
      CHECK(t.action_closed);
      CHECK(t.degreewise);
      // Each witness (n, t): every product of n elements of R_{>=t} kills the element.
      for (std::size_t i = 0; i < t.basis.size(); ++i) {
        const auto w = t.witnesses[i];
        FlatSubspace p = ideal_power(*l.ring, r_geq(l.ring, w.t), w.n);
        for (const auto& rv : p.space.rows()) {
          ActionResult a = m->act(l.ring->to_element(rv), t.basis[i]);
          if (!a.overflow) CHECK(is_zero(a.value));
        }
      }
    }
  }
}

TEST_CASE("kappa") {
  Loaded q = load("qplane.sgr");
  ModulePtr m = cyclic(q, {"x"});
  CHECK(kappa(q.el("x"), 8, *m).rank() == m->dim());
  CHECK(kappa(q.el("y"), 8, *m).rank() == 0);
  CHECK(intersect(kappa(q.el("x"), 8, *m), kappa(q.el("y"), 8, *m)) == torsion(*m).space);
}
