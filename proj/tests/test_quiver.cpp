#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coquiver/cotensor.hpp"
#include "coquiver/fixtures.hpp"
#include "coquiver/oracle.hpp"
#include "coquiver/quiver.hpp"
#include "support.hpp"

using namespace coquiver;
using testsupport::span_of;
using testsupport::vec;

namespace {

CountMatrix counts(std::initializer_list<std::initializer_list<std::size_t>> rows) {
  CountMatrix m;
  for (const auto& r : rows) m.emplace_back(r);
  return m;
}

void all_three(const Structure& s, const CountMatrix& expected) {
  CHECK(gabriel_quiver(s).counts() == expected);
  CHECK(ext_quiver(s).counts() == expected);
  CHECK(link_quiver(s).counts() == expected);
}

}  // namespace

TEST_CASE("quivers of the small fixtures") {
  SUBCASE("sweedler: x gives 1 -> g, gx gives g -> 1") {
    Structure s = analyze(sweedler4());
    CHECK(block_names(s) == std::vector<std::string>{"1", "g"});
    all_three(s, counts({{0, 1}, {1, 0}}));
  }
  SUBCASE("divided powers: one loop") { all_three(analyze(divided(3)), counts({{1}})); }
  SUBCASE("group-likes: no arrows") { all_three(analyze(grouplike(2)), counts({{0, 0}, {0, 0}})); }
  SUBCASE("matrix coalgebra: one vertex, no loop") { all_three(analyze(matrix_coalgebra(2)), counts({{0}})); }
  SUBCASE("tri_block: a single arrow from the matrix block") {
    Structure s = analyze(tri_block());
    all_three(s, counts({{0, 0}, {1, 0}}));
    Quiver q = gabriel_quiver(s);
    CHECK(q.sources() == std::vector<std::size_t>{1});
    CHECK(q.sinks() == std::vector<std::size_t>{0});
    CHECK(q.is_connected());
  }
}

TEST_CASE("link counts are wedge dimensions divided by n_i n_j") {
  Structure s = analyze(tri_block());
  const Coalgebra& c = s.coalgebra;
  const Subspace &d1 = s.blocks[0].subspace, &d2 = s.blocks[1].subspace;
  // independent of the library: quotient dimension 2, n_1 n_2 = 2
  Subspace w = wedge(c, d1, d2);
  CHECK(w.dim() - sum(d1, d2).dim() == 2);
  CHECK(wedge(c, d2, d1).dim() - sum(d1, d2).dim() == 0);
  Structure sw = analyze(sweedler4());
  Subspace k1 = span_of(sw.coalgebra, {"1"}), kg = span_of(sw.coalgebra, {"g"});
  CHECK(wedge(sw.coalgebra, kg, k1).dim() - 2 == 1);
}

TEST_CASE("the three constructions agree on every fixture") {
  for (const auto& name : builtin_fixture_names()) {
    CAPTURE(name);
    Structure s = analyze(fixture(name));
    CountMatrix g = gabriel_quiver(s).counts();
    CHECK(ext_quiver(s).counts() == g);
    CHECK(link_quiver(s).counts() == g);
  }
}

TEST_CASE("rad-square-zero duals and length-1 path coalgebras recover their quiver") {
  for (const char* q : {"loop", "kronecker", "a_3", "cycle_3", "loops_2", "empty_2"}) {
    CAPTURE(q);
    Quiver quiver = quiver_fixture(q);
    for (Coalgebra c : {rad_square_zero_dual(quiver), path_coalgebra(quiver, 1).coalgebra}) {
      Structure s = analyze(c);
      // blocks are the vertices in basis order, named by their labels
      CHECK(block_names(s) == quiver.vertices());
      all_three(s, quiver.counts());
    }
  }
}

TEST_CASE("truncating above level 1 keeps the quiver") {
  for (const char* name : {"divided_4", "pathcoalg(cycle_2,3)", "tri_block", "tensor(sweedler4,divided_2)"}) {
    CAPTURE(name);
    Structure s = analyze(fixture(name));
    CountMatrix full = gabriel_quiver(s).counts();
    for (std::size_t k = 1; k < s.filtration.size(); ++k) {
      Structure t = analyze(restrict(s.coalgebra, s.filtration[k], "trunc"));
      CHECK(gabriel_quiver(t).counts() == full);
      CHECK(ext_quiver(t).counts() == full);
      CHECK(link_quiver(t).counts() == full);
    }
  }
}

TEST_CASE("taft-wilson reports") {
  SUBCASE("sweedler") {
    Structure s = analyze(sweedler4());
    TaftWilsonReport r = taft_wilson(s);
    CHECK(r.ok());
    CHECK(r.c1_dim == 4);
    REQUIRE(r.pointed.applicable);
    Vector one = vec(s.coalgebra, {{"1", 1}}), g = vec(s.coalgebra, {{"g", 1}});
    Subspace p = primitives(s.coalgebra, one, g);
    CHECK(p == Subspace::span({vec(s.coalgebra, {{"x", 1}}), vec(s.coalgebra, {{"1", 1}, {"g", -1}})}, 4));
    CHECK(r.pointed.decomposition_ok);
    std::size_t quotient = 0;
    for (const auto& pr : r.pairs) quotient += pr.quotient_dim;
    CHECK(quotient == 2);
  }
  SUBCASE("group-likes") {
    TaftWilsonReport r = taft_wilson(analyze(grouplike(3)));
    CHECK(r.ok());
    for (const auto& pr : r.pairs) {
      CHECK(pr.quotient_dim == 0);
      CHECK(pr.wedge_dim == pr.sum_dim);
    }
  }
  SUBCASE("divided powers") {
    TaftWilsonReport r = taft_wilson(analyze(divided(3)));
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].wedge_dim == 2);
    CHECK(r.pairs[0].overlap_dim == 1);
    CHECK(r.pairs[0].quotient_dim == 1);
  }
  SUBCASE("all fixtures") {
    for (const auto& name : builtin_fixture_names()) {
      CAPTURE(name);
      Structure s = analyze(fixture(name));
      TaftWilsonReport r = taft_wilson(s);
      CHECK(r.sum_is_c1);
      CHECK(r.quotients_ok);
      CHECK(r.blocks_ok);
      for (const auto& pr : r.pairs) CHECK(pr.overlap_ok);
      if (r.pointed.applicable) CHECK(r.pointed.decomposition_ok);
    }
  }
}

TEST_CASE("graph predicates") {
  Quiver two = Quiver::from_counts("two", {"a", "b"}, counts({{0, 1}, {1, 0}}));
  CHECK(two.sources().empty());
  CHECK(two.sinks().empty());
  CHECK(two.is_connected());
  Quiver loop = Quiver::from_counts("loop", {"v"}, counts({{1}}));
  CHECK(loop.sources().empty());
  CHECK(loop.sinks().empty());
  CHECK(loop.is_connected());
  Quiver line = Quiver::from_counts("line", {"a", "b", "c", "d"}, counts({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 0, 0}}));
  CHECK(line.sources() == std::vector<std::size_t>{0, 2});
  CHECK(line.sinks() == std::vector<std::size_t>{1, 3});
  CHECK_FALSE(line.is_connected());
  CHECK(line.components() == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
  CHECK(line.arrow_count() == 3);
  CHECK(Quiver::from_counts("empty", {}, {}).is_connected());
}

TEST_CASE("dot output") {
  Quiver q("k", {"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}});
  CHECK(q.to_dot() == "digraph \"k\" {\n  \"1\";\n  \"2\";\n  \"1\" -> \"2\" [label=\"a\"];\n  \"1\" -> \"2\" [label=\"b\"];\n}\n");
}

TEST_CASE("oracle instances under random changes of basis" * doctest::timeout(20)) {
  OracleGenerator gen(99);
  for (int k = 0; k < 40; ++k) {
    OracleInstance inst = gen.next();
    CAPTURE(inst.description());
    OracleOutcome r = run_oracle(inst);
    CHECK(r.agree);
    CHECK(r.matches);
  }
  for (int k = 0; k < 10; ++k) {
    OracleInstance inst = gen.nakayama_cycle();
    CAPTURE(inst.description());
    CHECK(run_oracle(inst).matches);
  }
}
