#include <doctest.h>

#include "support.hpp"

using namespace sgk;
using namespace sgk::test;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_ring_file(text, "t.sgr");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("ring files") {
  RingFile rf = load_ring_file(data_path("weyl1.sgr"));
  CHECK(rf.presentation->name() == "A1");
  CHECK(rf.presentation->gens().names() == std::vector<std::string>{"x", "y"});
  CHECK(rf.ideal("Jx").side == Side::TwoSided);
  CHECK(rf.ideal("Lx").side == Side::Left);
  CHECK(rf.ore("Sx").s.max_degree() == 1);
  CHECK_THROWS(rf.ideal("nope"));
}

TEST_CASE("ring file errors carry line and column") {
  const std::string head = "ring R\nfield QQ\ngen x : 1\ngen y : 1\n";
  CHECK(parse_error(head) .find("t.sgr:") == 0);  // missing rule for y*x
  CHECK(parse_error(head + "rel x*y -> x*y\n").find("t.sgr:5:") == 0);
  CHECK(parse_error(head + "rel y*x -> x*q\n").find("t.sgr:5:") == 0);
  CHECK(parse_error(head + "rel y*x -> x*y\nrel y*x -> x*y\n").find("t.sgr:6:") == 0);
  CHECK(parse_error("ring R\nfield GF(4)\n").find("t.sgr:2:") == 0);
  CHECK(parse_error("ring R\nbogus\n").find("t.sgr:2:1:") == 0);
  CHECK(parse_error(head + "rel y*x -> x*y\n").empty());
}

TEST_CASE("element expressions") {
  Loaded a = load("weyl1.sgr", 4);
  CHECK(a.str(a.el("(x + y)^2")) == "x^2 + 2*x*y + y^2 + 1");
  CHECK(a.str(a.el("1/2*x - 3/4")) == "1/2*x - 3/4");
  CHECK(a.str(a.el("-(y*x)")) == "-x*y - 1");
  auto list = parse_element_list("x^2,(x + 1)*y", a.p());
  REQUIRE(list.size() == 2);
  CHECK(a.str(list[1]) == "x*y + y");
  try {
    a.el("x + + ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 5);
  }
}

TEST_CASE("module files") {
  RingFile rf = load_ring_file(data_path("kx.sgr"));
  ModuleDecl d = parse_module_file("module M over kx/Jx\ngen e : 0\ngen f : 1\nrel x*e - f\n", *rf.presentation);
  CHECK(d.over_ideal == "Jx");
  CHECK(d.generators.size() == 2);
  REQUIRE(d.relations.size() == 1);
  CHECK_THROWS_AS(parse_module_file("module M over kx\ngen e : 0\nrel x\n", *rf.presentation), ParseError);
  CHECK_THROWS_AS(parse_module_file("module M over kx\ngen e : 0\nact x * g = e\n", *rf.presentation), ParseError);
}
