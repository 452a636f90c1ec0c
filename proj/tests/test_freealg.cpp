#include <doctest.h>

#include "oracles.hpp"

using namespace sgk;
using namespace sgk::test;

namespace {

Word random_word(Rng& rng, std::size_t ngens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), letter(0, ngens - 1);
  Word w(len(rng));
  for (auto& l : w) l = letter(rng);
  return w;
}

}  // namespace

TEST_CASE("validate_presentation accepts the Weyl algebra and quantum plane") {
  CHECK(validate_presentation(load("weyl1.sgr").p()).ok);
  CHECK(validate_presentation(load("qplane.sgr").p()).ok);
}

TEST_CASE("validate_presentation rejects a degree-raising rule") {
  RingFile f = load_ring_file(data_path("baddegree.sgr"));
  ValidationReport v = validate_presentation(*f.presentation);
  CHECK_FALSE(v.ok);
  REQUIRE_FALSE(v.issues.empty());
  CHECK(v.issues.front().rule == "y*x");
  CHECK(v.issues.front().message.find("degree 3 > 2") != std::string::npos);
}

TEST_CASE("normal forms of the worked examples") {
  Loaded a = load("weyl1.sgr");
  CHECK(a.str(a.el("y*x")) == "x*y + 1");
  CHECK(a.str(a.el("x*y")) == "x*y");
  CHECK(a.str(a.el("y^2*x")) == "x*y^2 + 2*y");
  CHECK(a.str(a.el("x^2*y")) == "x^2*y");
  Loaded q = load("qplane.sgr");
  CHECK(q.str(q.el("y*x")) == "2*x*y");
  CHECK(q.str(q.el("y^2*x")) == "4*x*y^2");
}

TEST_CASE("multiply agrees with the normal form of the concatenation") {
  Loaded a = load("weyl1.sgr");
  CHECK(a.str(multiply(a.el("y"), a.el("x"), a.p())) == "x*y + 1");
  CHECK(a.str(multiply(a.el("x"), a.el("y"), a.p())) == "x*y");
}

TEST_CASE("degree_decompose") {
  Loaded a = load("weyl1.sgr");
  auto parts = degree_decompose(a.el("x*y + 1"));
  REQUIRE(parts.size() == 2);
  CHECK(a.str(parts.at(2)) == "x*y");
  CHECK(a.str(parts.at(0)) == "1");
  CHECK(degree_decompose(Element()).empty());
  auto p3 = degree_decompose(a.el("y^2*x"));
  CHECK(a.str(p3.at(3)) == "x*y^2");
  CHECK(a.str(p3.at(1)) == "2*y");
}

TEST_CASE("Weyl normal forms match differential operators on polynomials") {
  Loaded a = load("weyl1.sgr");
  WeylOperators ops{15};
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 2, 6);
    Element e = normal_form(w, a.p());
    for (std::size_t j = 0; j <= 8; ++j) CHECK(ops.apply_word(w, j) == ops.apply_element(e, j));
  }
}

TEST_CASE("quantum plane normal forms match the exponent representation") {
  Loaded q = load("qplane.sgr");
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 2, 6);
    auto [c, ea, eb] = qplane_word(w, Scalar(2));
    Element expect;
    Monomial m = Monomial::one(2);
    m.exponents = {static_cast<std::uint16_t>(ea), static_cast<std::uint16_t>(eb)};
    m.degree = ea + eb;
    expect.add_term(m, c, q.p().field());
    CHECK(normal_form(w, q.p()) == expect);
  }
}

TEST_CASE("confluence of the standard presentations") {
  for (const char* f : {"weyl1.sgr", "qplane.sgr", "jordan.sgr", "heis.sgr", "kxy.sgr"}) {
    RingFile rf = load_ring_file(data_path(f));
    CHECK_MESSAGE(check_confluence(*rf.presentation, 8).confluent, f);
  }
}

TEST_CASE("a non-confluent overlap is reported") {
  RingFile rf = load_ring_file(data_path("nonconfluent.sgr"));
  ConfluenceReport c = check_confluence(*rf.presentation, 8);
  CHECK_FALSE(c.confluent);
  REQUIRE(c.unresolved.size() == 1);
  CHECK(to_string(c.unresolved[0].word, rf.presentation->gens()) == "z*y*x");
  // Below the overlap degree nothing is checked.
  CHECK(check_confluence(*rf.presentation, 2).confluent);
}

TEST_CASE("ring properties on random elements") {
  Rng rng(13);
  for (const char* f : {"weyl1.sgr", "jordan.sgr", "heis.sgr", "lie.sgr"}) {
    Loaded l = load(f, 8);
    const auto& p = l.p();
    for (int trial = 0; trial < 30; ++trial) {
      Element a = random_element(*l.ring, rng, 0, 2, 3);
      Element b = random_element(*l.ring, rng, 0, 2, 3);
      Element c = random_element(*l.ring, rng, 0, 2, 3);
      // Idempotence.
      CHECK(normal_form(a, p) == a);
      // Degree bound.
      Element ab = multiply(a, b, p);
      if (!ab.is_zero()) CHECK(ab.max_degree() <= a.max_degree() + b.max_degree());
      // Associativity.
      CHECK(multiply(ab, c, p) == multiply(a, multiply(b, c, p), p));
      // Canonical printing round-trips.
      CHECK(parse_element(to_string(ab, p.gens()), p) == ab);
    }
  }
}

TEST_CASE("graded presentations multiply degree-additively") {
  Rng rng(14);
  for (const char* f : {"qplane.sgr", "jordan.sgr", "heis.sgr"}) {
    Loaded l = load(f, 8);
    REQUIRE(l.p().is_graded());
    for (int trial = 0; trial < 20; ++trial) {
      Element a = random_homogeneous(*l.ring, rng, 2, 2);
      Element b = random_homogeneous(*l.ring, rng, 3, 2);
      Element ab = multiply(a, b, l.p());
      if (!ab.is_zero()) {
        CHECK(ab.is_homogeneous());
        CHECK(ab.max_degree() == 5);
      }
    }
  }
  CHECK_FALSE(load("weyl1.sgr").p().is_graded());
}

TEST_CASE("prime field coefficients") {
  Loaded l = load_text("ring Q5\nfield GF(5)\ngen x : 1\ngen y : 1\nrel y*x -> 3*x*y\n", 6);
  CHECK(l.str(l.el("y^2*x")) == "4*x*y^2");
  CHECK(l.str(l.el("5*x")) == "0");
}
