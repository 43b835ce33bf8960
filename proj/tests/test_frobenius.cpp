#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coquiver/comodule.hpp"
#include "coquiver/fixtures.hpp"
#include "coquiver/frobenius.hpp"
#include "coquiver/oracle.hpp"
#include "support.hpp"

using namespace coquiver;

namespace {

// Nakayama criterion for a basic algebra (every block 1 x 1 over K), done by
// hand: soc(A f) = {x in A f : J x = 0} must be one-dimensional, and so must
// soc(f A); the induced maps on vertices must be permutations.
bool basic_qf_by_hand(const Structure& s) {
  const Algebra& a = s.dual;
  const std::size_t n = a.dim();
  std::vector<Vector> fs;
  for (const auto& block : lifted_primitives(s))
    for (const auto& f : block) fs.push_back(f);
  Matrix kill_left(0, n), kill_right(0, n);
  for (std::size_t r = 0; r < s.radical.dim(); ++r) {
    kill_left = Matrix::vstack(kill_left, a.left_mult(s.radical.vector(r)));
    kill_right = Matrix::vstack(kill_right, a.right_mult(s.radical.vector(r)));
  }
  Subspace ann_left = kill_left.rows() ? kernel(kill_left) : Subspace::full(n);
  Subspace ann_right = kill_right.rows() ? kernel(kill_right) : Subspace::full(n);
  auto side = [&](bool left) {
    std::vector<bool> hit(fs.size());
    for (const auto& f : fs) {
      Subspace proj = image(left ? a.right_mult(f) : a.left_mult(f));  // A f or f A
      Subspace soc = intersect(proj, left ? ann_left : ann_right);
      if (soc.dim() != 1) return false;
      std::size_t owners = 0, owner = 0;
      for (std::size_t j = 0; j < fs.size(); ++j) {
        Vector v = left ? a.multiply(fs[j], soc.vector(0)) : a.multiply(soc.vector(0), fs[j]);
        if (!is_zero(v)) owner = j, ++owners;
      }
      if (owners != 1 || hit[owner]) return false;
      hit[owner] = true;
    }
    return true;
  };
  return side(true) && side(false);
}

bool pointed(const Structure& s) {
  for (const auto& b : s.blocks)
    if (b.n != 1 || b.d != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("indecomposability") {
  CHECK(is_indecomposable(sweedler4()));
  CHECK_FALSE(is_indecomposable(grouplike(2)));
  CHECK(is_indecomposable(tri_block()));
  for (const auto& name : builtin_fixture_names()) {
    CAPTURE(name);
    Structure s = analyze(fixture(name));
    Quiver q = gabriel_quiver(s);
    CHECK(is_indecomposable(s) == q.is_connected());
    auto z = central_idempotents(s);
    CHECK(z.size() == q.components().size());
    Vector total(s.coalgebra.dim());
    for (std::size_t i = 0; i < z.size(); ++i) {
      CHECK(s.dual.is_idempotent(z[i]));
      for (std::size_t r = 0; r < s.coalgebra.dim(); ++r) {
        Vector e = unit_vector(s.coalgebra.dim(), r);
        CHECK(s.dual.multiply(z[i], e) == s.dual.multiply(e, z[i]));
      }
      for (std::size_t j = i + 1; j < z.size(); ++j) CHECK(is_zero(s.dual.multiply(z[i], z[j])));
      total = add(total, z[i]);
    }
    CHECK(total == s.dual.unit());
  }
}

TEST_CASE("direct sums decompose") {
  Coalgebra ab = direct_sum(sweedler4(), tri_block());
  CHECK(ab.check_axioms().ok());
  Structure s = analyze(ab);
  CHECK_FALSE(is_indecomposable(s));
  auto parts = components(s);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].subspace == Subspace::coordinate(ab.dim(), {0, 1, 2, 3}));
  CHECK(parts[0].coalgebra.check_axioms().ok());
  CHECK(parts[1].coalgebra.dim() == tri_block().dim());
  CHECK(is_indecomposable(parts[0].coalgebra));
  CHECK(is_indecomposable(parts[1].coalgebra));
}

TEST_CASE("components partition the coalgebra") {
  for (const auto& name : builtin_fixture_names()) {
    CAPTURE(name);
    Structure s = analyze(fixture(name));
    Subspace total(s.coalgebra.dim());
    std::size_t dims = 0, blocks = 0;
    for (const auto& c : components(s)) {
      CHECK(is_subcoalgebra(s.coalgebra, c.subspace));
      CHECK(c.coalgebra.check_axioms().ok());
      total = sum(total, c.subspace);
      dims += c.subspace.dim();
      blocks += c.blocks.size();
    }
    CHECK(total.is_full());
    CHECK(dims == s.coalgebra.dim());
    CHECK(blocks == s.blocks.size());
  }
}

TEST_CASE("quasi-Frobenius duals") {
  CHECK(is_quasi_frobenius_dual(analyze(sweedler4())).is_qf);
  CHECK(is_quasi_frobenius_dual(analyze(divided(3))).is_qf);
  QFReport t = is_quasi_frobenius_dual(analyze(tri_block()));
  CHECK_FALSE(t.is_qf);
  CHECK(is_quasi_frobenius_dual(analyze(matrix_coalgebra(3))).is_qf);
  CHECK(is_quasi_frobenius_dual(analyze(fixture("groupdual_2x2"))).is_qf);
  CHECK_FALSE(is_quasi_frobenius_dual(analyze(fixture("pathcoalg(a_3,2)"))).is_qf);
  CHECK_FALSE(is_quasi_frobenius_dual(analyze(fixture("rad_square_zero_dual(loops_2)"))).is_qf);
}

TEST_CASE("the Nakayama check agrees with a hand computation on pointed coalgebras") {
  std::size_t checked = 0;
  for (const auto& name : builtin_fixture_names()) {
    Structure s = analyze(fixture(name));
    if (!pointed(s)) continue;
    CAPTURE(name);
    CHECK(is_quasi_frobenius_dual(s).is_qf == basic_qf_by_hand(s));
    ++checked;
  }
  OracleGenerator gen(5);
  for (int k = 0; k < 20; ++k) {
    OracleInstance inst = k % 2 ? gen.nakayama_cycle() : gen.next(24);
    CAPTURE(inst.description());
    Structure s = analyze(inst.coalgebra);
    bool qf = is_quasi_frobenius_dual(s).is_qf;
    CHECK(qf == basic_qf_by_hand(s));
    if (inst.family == OracleFamily::nakayama_cycle) CHECK(qf);
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("sources and sinks of quasi-coFrobenius components") {
  SUBCASE("sweedler") {
    QFTheoremReport r = qf_quiver_theorem(analyze(sweedler4()));
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].verdict == "holds");
    CHECK(r.components[0].sources.empty());
    CHECK(r.components[0].sinks.empty());
  }
  SUBCASE("divided powers") {
    for (std::size_t n = 2; n <= 5; ++n) {
      QFTheoremReport r = qf_quiver_theorem(analyze(divided(n)));
      REQUIRE(r.components.size() == 1);
      CHECK(r.components[0].verdict == "holds");
    }
  }
  SUBCASE("tri_block") {
    QFTheoremReport r = qf_quiver_theorem(analyze(tri_block()));
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].verdict == "not-qf");
    CHECK(r.components[0].sources.size() == 1);
    CHECK(r.components[0].sinks.size() == 1);
    CHECK(r.ok());
  }
  SUBCASE("cosemisimple components are simple") {
    QFTheoremReport r = qf_quiver_theorem(analyze(fixture("groupdual_2x2")));
    CHECK(r.components.size() == 4);
    for (const auto& c : r.components) CHECK(c.verdict == "simple");
  }
  SUBCASE("every fixture and nakayama cycles") {
    for (const auto& name : builtin_fixture_names()) {
      CAPTURE(name);
      QFTheoremReport r = qf_quiver_theorem(analyze(fixture(name)));
      CHECK(r.ok());
      for (const auto& c : r.components)
        if (c.qf && !c.simple) CHECK((c.sources.empty() && c.sinks.empty()));
    }
    OracleGenerator gen(17);
    for (int k = 0; k < 10; ++k) {
      OracleInstance inst = gen.nakayama_cycle();
      CAPTURE(inst.description());
      QFTheoremReport r = qf_quiver_theorem(analyze(inst.coalgebra));
      CHECK(r.ok());
      CHECK(r.qf.is_qf);
    }
  }
}
