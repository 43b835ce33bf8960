#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coquiver/fixtures.hpp"
#include "coquiver/io.hpp"
#include "support.hpp"

using namespace coquiver;
using testsupport::label;
using testsupport::vec;

namespace {

const char* kSweedlerText = R"(# Sweedler's four-dimensional coalgebra
coalgebra sweedler
field Q
basis 1 g x gx
delta 1 = (1,1)
delta g = (g,g)
delta x = 1*(x,1) + 1*(g,x)
delta gx = 0*(x,x) + (gx,g) + (1,gx)   # a zero coefficient disappears
counit 1 = 1
counit g = 1
)";

ParseError parse_error(const std::string& text) {
  try {
    parse_coalgebra(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError");
  return ParseError("unreachable", 0);
}

ParseError quiver_error(const std::string& text) {
  try {
    parse_quiver(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError");
  return ParseError("unreachable", 0);
}

}  // namespace

TEST_CASE("parsing the sweedler file") {
  Coalgebra c = parse_coalgebra(kSweedlerText);
  CHECK(c.name() == "sweedler");
  CHECK(c.dim() == 4);
  CHECK(c.check_axioms().ok());
  const std::size_t x = label(c, "x");
  Vector dx = c.apply_delta(unit_vector(4, x));
  CHECK(dx == add(tensor(vec(c, {{"x", 1}}), vec(c, {{"1", 1}})), tensor(vec(c, {{"g", 1}}), vec(c, {{"x", 1}}))));
  CHECK(c.delta_matrix() == sweedler4().delta_matrix());
  CHECK(c.counit() == sweedler4().counit());
}

TEST_CASE("coefficients") {
  Coalgebra c = parse_coalgebra(
      "coalgebra d\nbasis c0 c1 c2\ndelta c0 = (c0,c0)\ndelta c1 = (c0,c1) + (c1,c0)\n"
      "delta c2 = (c0,c2) + 2/2*(c1,c1) + 3*(c2,c0) - 2*(c2,c0)\ncounit c0 = 1\n");
  CHECK(c.delta_matrix() == divided(3).delta_matrix());
  Coalgebra half = change_basis(divided(3), Matrix{{1, 0, 0}, {0, Scalar(1, 2), 0}, {0, 0, Scalar(-1, 3)}});
  std::string text = emit_coalgebra(half);
  CHECK(text.find("/3") != std::string::npos);
  CHECK(text.find("-") != std::string::npos);
  CHECK(parse_coalgebra(text).delta_matrix() == half.delta_matrix());
}

TEST_CASE("broken axioms are reported with a witness") {
  const char* text = "coalgebra bad\nbasis 1 g\ndelta 1 = (1,1)\ndelta g = (g,g)\ncounit 1 = 1\ncounit g = 0\n";
  try {
    parse_coalgebra(text);
    FAIL("accepted a broken counit");
  } catch (const AxiomError& e) {
    std::string msg = e.what();
    CHECK(msg.find("counit") != std::string::npos);
    CHECK(msg.find("at g") != std::string::npos);
  }
}

TEST_CASE("syntax errors carry line and column") {
  SUBCASE("unknown label") {
    ParseError e = parse_error("basis a b\ndelta a = (a,a)\ndelta b = (a,zz)\ncounit a = 1\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 14);
    CHECK(std::string(e.what()).find("zz") != std::string::npos);
  }
  SUBCASE("duplicate basis element") {
    ParseError e = parse_error("basis a b a\n");
    CHECK(e.line() == 1);
    CHECK(e.column() == 11);
  }
  SUBCASE("bad coefficient") {
    ParseError e = parse_error("basis a\ndelta a = 1/0*(a,a)\n");
    CHECK(e.line() == 2);
  }
  SUBCASE("missing parenthesis") {
    ParseError e = parse_error("basis a\ndelta a = (a,a\n");
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
  SUBCASE("unknown keyword") {
    ParseError e = parse_error("basis a\ncomult a = (a,a)\n");
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
  SUBCASE("delta twice") {
    ParseError e = parse_error("basis a\ndelta a = (a,a)\ndelta a = (a,a)\n");
    CHECK(e.line() == 3);
  }
  SUBCASE("no basis") { CHECK_THROWS_AS(parse_coalgebra("coalgebra empty\n"), ParseError); }
}

TEST_CASE("emit then parse is the identity on every fixture") {
  for (const auto& name : builtin_fixture_names()) {
    CAPTURE(name);
    Coalgebra c = fixture(name);
    std::string once = emit_coalgebra(c);
    Coalgebra back = parse_coalgebra(once);
    CHECK(back.name() == c.name());
    CHECK(back.labels() == c.labels());
    CHECK(back.delta_matrix() == c.delta_matrix());
    CHECK(back.counit() == c.counit());
    CHECK(emit_coalgebra(back) == once);
  }
  // whitespace and term order do not matter after one normalization pass
  Coalgebra a = parse_coalgebra(kSweedlerText);
  Coalgebra b = parse_coalgebra(emit_coalgebra(a));
  CHECK(emit_coalgebra(a) == emit_coalgebra(b));
}

TEST_CASE("prime fields") {
  std::string text = emit_coalgebra(sweedler4());
  Coalgebra c = parse_coalgebra(text, Field::parse("fp:3"));
  CHECK(c.field().p == 3);
  CHECK(c.check_axioms().ok());
  std::string fp = emit_coalgebra(c);
  CHECK(fp.find("field fp:3") != std::string::npos);
  CHECK(parse_coalgebra(fp).field().p == 3);
  // 3 = 0 in F_3, so this counit is broken there but fine over Q
  const char* scaled = "basis g\ndelta g = 1/4*(g,g)\ncounit g = 4\n";
  CHECK(parse_coalgebra(scaled).check_axioms().ok());
  CHECK(parse_coalgebra(scaled, Field::parse("fp:5")).field().p == 5);
  CHECK_THROWS(parse_coalgebra(scaled, Field::parse("fp:2")));
}

TEST_CASE("quiver files") {
  Quiver q = parse_quiver("quiver kr\nvertex v w\na : v -> w\nb : v -> w\nl : w -> w\n");
  CHECK(q.name() == "kr");
  CHECK(q.vertices() == std::vector<std::string>{"v", "w"});
  CHECK(q.counts() == CountMatrix{{0, 2}, {0, 1}});
  Quiver back = parse_quiver(emit_quiver(q));
  CHECK(back.counts() == q.counts());
  CHECK(emit_quiver(back) == emit_quiver(q));

  ParseError dup = quiver_error("vertex v w\na : v -> w\na : w -> v\n");
  CHECK(dup.line() == 3);
  CHECK(std::string(dup.what()).find("duplicate arrow") != std::string::npos);
  ParseError undeclared = quiver_error("vertex v\na : v -> u\n");
  CHECK(undeclared.line() == 2);
  CHECK(std::string(undeclared.what()).find("undeclared") != std::string::npos);
  CHECK_THROWS_AS(parse_quiver("vertex v v\n"), ParseError);
}

TEST_CASE("loading by name or path") {
  CHECK(load_coalgebra("sweedler4").dim() == 4);
  CHECK(load_coalgebra("divided_3", Field::parse("fp:7")).field().p == 7);
  CHECK(load_quiver("kronecker").arrow_count() == 2);
  CHECK_THROWS_AS(load_coalgebra("no_such_thing"), PreconditionError);
}
