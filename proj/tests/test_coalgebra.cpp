#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <tuple>

#include "coquiver/coalgebra.hpp"
#include "coquiver/fixtures.hpp"
#include "support.hpp"

using namespace coquiver;
using testsupport::Gen;
using testsupport::label;
using testsupport::vec;

namespace {

// Both triple coproducts straight from the structure constants, as sparse maps.
using Triple = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar>;

bool naive_coassociative(const Coalgebra& c, std::size_t k) {
  Triple left, right;
  for (const Term& t : c.delta(k)) {
    for (const Term& u : c.delta(t.i)) left[{u.i, u.j, t.j}] += t.q * u.q;
    for (const Term& u : c.delta(t.j)) right[{t.i, u.i, u.j}] += t.q * u.q;
  }
  std::erase_if(left, [](const auto& e) { return e.second.is_zero(); });
  std::erase_if(right, [](const auto& e) { return e.second.is_zero(); });
  return left == right;
}

bool naive_counital(const Coalgebra& c, std::size_t k) {
  Vector l(c.dim()), r(c.dim());
  for (const Term& t : c.delta(k)) {
    l[t.j] += c.counit()[t.i] * t.q;
    r[t.i] += c.counit()[t.j] * t.q;
  }
  Vector e = unit_vector(c.dim(), k);
  return l == e && r == e;
}

bool naive_axioms(const Coalgebra& c) {
  for (std::size_t k = 0; k < c.dim(); ++k)
    if (!naive_coassociative(c, k) || !naive_counital(c, k)) return false;
  return true;
}

Coalgebra sweedler_without_gx_term() {
  Coalgebra s = sweedler4();
  std::vector<std::vector<Term>> delta;
  const std::size_t x = label(s, "x"), g = label(s, "g");
  for (std::size_t k = 0; k < s.dim(); ++k) {
    std::vector<Term> ts;
    for (const Term& t : s.delta(k))
      if (!(k == x && t.i == g && t.j == x)) ts.push_back(t);
    delta.push_back(ts);
  }
  return Coalgebra("broken", s.labels(), delta, s.counit());
}

// (f g)(c) = sum f(c_1) g(c_2), evaluated from the terms.
Scalar convolution(const Coalgebra& c, const Vector& f, const Vector& g, std::size_t k) {
  Scalar s;
  for (const Term& t : c.delta(k)) s += f[t.i] * g[t.j] * t.q;
  return s;
}

const char* kSmall[] = {"grouplike_2", "divided_3", "divided_4", "sweedler4", "matrix_2",
                        "tri_block", "groupdual_3", "pathcoalg(kronecker,2)", "rad_square_zero_dual(cycle_3)"};

}  // namespace

TEST_CASE("sweedler and group-likes satisfy the axioms") {
  Coalgebra s = sweedler4();
  CHECK(s.dim() == 4);
  CHECK(s.check_axioms().ok());
  CHECK(naive_axioms(s));
  CHECK(grouplike(2).check_axioms().ok());
  for (const auto& name : builtin_fixture_names()) {
    CAPTURE(name);
    Coalgebra c = fixture(name);
    CHECK(c.check_axioms().ok());
    CHECK(naive_axioms(c));
  }
}

TEST_CASE("deleting g (x) x from Delta(x) is caught at x") {
  Coalgebra b = sweedler_without_gx_term();
  AxiomReport r = b.check_axioms();
  REQUIRE_FALSE(r.ok());
  const std::size_t x = label(b, "x");
  for (const auto& v : r.violations) CHECK(v.witness == x);
  // Delta(x) = x (x) 1 alone is still coassociative; the counit law is what breaks
  CHECK(naive_coassociative(b, x));
  CHECK_FALSE(naive_counital(b, x));
  bool counit_named = false;
  for (const auto& v : r.violations) counit_named = counit_named || v.identity.find("counit") != std::string::npos;
  CHECK(counit_named);
  CHECK(r.to_string(b.labels()).find("at x") != std::string::npos);
}

TEST_CASE("breaking coassociativity is reported") {
  Coalgebra d = divided(3);
  std::vector<std::vector<Term>> delta;
  for (std::size_t k = 0; k < 3; ++k) delta.push_back(d.delta(k));
  // an extra c1 (x) c0 in Delta(c2) keeps the counit laws but not coassociativity
  delta[2].push_back({1, 0, Scalar(1)});
  Coalgebra bad("bad", d.labels(), delta, d.counit());
  AxiomReport r = bad.check_axioms();
  REQUIRE_FALSE(r.ok());
  CHECK_FALSE(naive_coassociative(bad, 2));
  CHECK(r.violations.front().identity == "coassociativity");
  CHECK(r.violations.front().witness == 2);
}

TEST_CASE("dual algebras") {
  SUBCASE("matrix coalgebra gives matrix units") {
    Coalgebra m = matrix_coalgebra(2);
    Algebra a = dual_algebra(m);
    auto e = [&](int i, int j) { return label(m, ("e" + std::to_string(i) + std::to_string(j)).c_str()); };
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 2; ++k)
          for (int l = 1; l <= 2; ++l) {
            Vector expect(4);
            if (j == k) expect[e(i, l)] = 1;
            CHECK(a.multiply(unit_vector(4, e(i, j)), unit_vector(4, e(k, l))) == expect);
          }
    CHECK(a.unit() == vec(m, {{"e11", 1}, {"e22", 1}}));
  }
  SUBCASE("divided powers give truncated polynomials") {
    Algebra a = dual_algebra(divided(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Vector expect(3);
        if (i + j < 3) expect[i + j] = 1;
        CHECK(a.multiply(unit_vector(3, i), unit_vector(3, j)) == expect);
      }
  }
  SUBCASE("group-likes give point functions") {
    Algebra a = dual_algebra(grouplike(2));
    CHECK(a.is_idempotent(unit_vector(2, 0)));
    CHECK(a.is_idempotent(unit_vector(2, 1)));
    CHECK(is_zero(a.multiply(unit_vector(2, 0), unit_vector(2, 1))));
  }
  SUBCASE("the product matches the convolution formula") {
    for (const char* name : kSmall) {
      Coalgebra c = fixture(name);
      Algebra a = dual_algebra(c);
      for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j) {
          Vector p = a.multiply(unit_vector(c.dim(), i), unit_vector(c.dim(), j));
          for (std::size_t k = 0; k < c.dim(); ++k)
            CHECK(p[k] == convolution(c, unit_vector(c.dim(), i), unit_vector(c.dim(), j), k));
        }
      CHECK(a.is_associative());
      CHECK(a.is_unital());
    }
  }
}

TEST_CASE("hit actions on sweedler") {
  Coalgebra s = sweedler4();
  Vector x = vec(s, {{"x", 1}});
  Vector d1 = unit_vector(4, label(s, "1")), dg = unit_vector(4, label(s, "g"));
  CHECK(hit_left(s, d1, x) == x);
  CHECK(is_zero(hit_left(s, dg, x)));
  // x <- f = f(x) 1 + f(g) x
  CHECK(hit_right(s, x, dg) == x);
  CHECK(is_zero(hit_right(s, x, d1)));
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(hit_left(s, s.counit(), unit_vector(4, k)) == unit_vector(4, k));
    CHECK(hit_right(s, unit_vector(4, k), s.counit()) == unit_vector(4, k));
  }
  CHECK(hit_left_matrix(s, dg) * x == hit_left(s, dg, x));
  CHECK(hit_right_matrix(s, dg) * x == hit_right(s, x, dg));
}

TEST_CASE("iterated comultiplication") {
  Coalgebra d = divided(3);
  CHECK(iterated_delta(d, 0) == Matrix::identity(3));
  CHECK(iterated_delta(d, 1) == d.delta_matrix());
  Matrix d2 = iterated_delta(d, 2);
  std::size_t terms = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        Scalar coef = d2(i * 9 + j * 3 + k, 2);
        CHECK(coef == Scalar(i + j + k == 2 ? 1 : 0));
        if (!coef.is_zero()) ++terms;
      }
  CHECK(terms == 6);
  Coalgebra g = grouplike(3);
  Matrix g3 = iterated_delta(g, 3);
  for (std::size_t r = 0; r < g3.rows(); ++r) CHECK(g3(r, 1) == Scalar(r == 1 * (27 + 9 + 3 + 1) ? 1 : 0));
}

TEST_CASE("generated subcoalgebras") {
  Coalgebra s = sweedler4();
  CHECK(subcoalgebra_generated(s, vec(s, {{"x", 1}})) == testsupport::span_of(s, {"1", "g", "x"}));
  Coalgebra g = grouplike(2);
  CHECK(subcoalgebra_generated(g, unit_vector(2, 1)) == Subspace::coordinate(2, {1}));
  CHECK(subcoalgebra_generated(divided(3), unit_vector(3, 2)).is_full());
  CHECK(is_subcoalgebra(s, testsupport::span_of(s, {"1", "g", "x"})));
  CHECK_FALSE(is_subcoalgebra(s, testsupport::span_of(s, {"x"})));
}

TEST_CASE("direct sums") {
  Coalgebra one = restrict(grouplike(2), Subspace::coordinate(2, {0}), "one");
  Coalgebra two = restrict(grouplike(2), Subspace::coordinate(2, {1}), "two");
  Coalgebra s = direct_sum(one, two);
  CHECK(s.dim() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    REQUIRE(s.delta(k).size() == 1);
    CHECK(s.delta(k)[0].i == k);
    CHECK(s.delta(k)[0].j == k);
    CHECK(s.counit()[k] == Scalar(1));
  }
  Coalgebra zero("zero", {}, {}, {});
  Coalgebra sw = sweedler4();
  Coalgebra same = direct_sum(sw, zero);
  CHECK(same.dim() == 4);
  CHECK(same.delta_matrix() == sw.delta_matrix());
  // the dual of a sum is the product: mixed products vanish
  Coalgebra ab = direct_sum(sw, divided(2));
  Algebra a = dual_algebra(ab);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 4; j < 6; ++j) {
      CHECK(a.product_of_basis(i, j).empty());
      CHECK(a.product_of_basis(j, i).empty());
    }
}

TEST_CASE("coalgebra maps and changes of basis") {
  Coalgebra s = sweedler4();
  CHECK(is_coalgebra_map(s, s, Matrix::identity(4)));
  Matrix collapse(4, 4);  // onto C_0 killing x, gx is the projection of a splitting
  collapse(label(s, "1"), label(s, "1")) = 1;
  collapse(label(s, "g"), label(s, "g")) = 1;
  CHECK(is_coalgebra_map(s, s, collapse));
  Matrix bad = collapse;
  bad(label(s, "1"), label(s, "g")) = 1;
  CHECK_FALSE(is_coalgebra_map(s, s, bad));
  Gen gen(11);
  Matrix p = testsupport::random_invertible(gen, 4);
  Coalgebra t = change_basis(s, p);
  CHECK(t.check_axioms().ok());
  // p maps new coordinates to old ones, so it is a coalgebra map t -> s
  CHECK(is_coalgebra_map(t, s, p));
  CHECK(is_coalgebra_map(s, t, inverse(p)));
}

TEST_CASE("property suite: random bases of small coalgebras" * doctest::timeout(10)) {
  Gen gen(2024);
  std::size_t instances = 0;
  for (int round = 0; round < 220; ++round) {
    const char* name = kSmall[gen.range(0, std::size(kSmall) - 1)];
    Coalgebra base = fixture(name);
    const std::size_t n = base.dim();
    Coalgebra c = change_basis(base, testsupport::random_invertible(gen, n, 1 + n / 2));
    CAPTURE(name);
    CAPTURE(round);
    REQUIRE(c.check_axioms().ok());
    CHECK(naive_axioms(c));

    Algebra a = dual_algebra(c);
    CHECK(a.is_associative());
    CHECK(a.is_unital());
    CHECK(a.unit() == c.counit());

    Vector f = testsupport::random_vector(gen, n), g = testsupport::random_vector(gen, n);
    Vector v = testsupport::random_vector(gen, n);
    Vector fg = a.multiply(f, g);
    CHECK(hit_left(c, fg, v) == hit_left(c, f, hit_left(c, g, v)));
    CHECK(hit_right(c, v, fg) == hit_right(c, hit_right(c, v, f), g));
    CHECK(hit_right(c, hit_left(c, f, v), g) == hit_left(c, f, hit_right(c, v, g)));

    // contracting any slot of Delta_2 with the counit gives Delta_1
    Matrix d2 = iterated_delta(c, 2), d1 = c.delta_matrix();
    for (std::size_t slot = 0; slot < 3; ++slot) {
      Matrix contracted(n * n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            std::size_t idx[3] = {i, j, k};
            std::size_t kept[2], w = 0;
            for (std::size_t s = 0; s < 3; ++s)
              if (s != slot) kept[w++] = idx[s];
            const Scalar& eps = c.counit()[idx[slot]];
            if (eps.is_zero()) continue;
            for (std::size_t col = 0; col < n; ++col)
              contracted(kept[0] * n + kept[1], col) += eps * d2((i * n + j) * n + k, col);
          }
      CHECK(contracted == d1);
    }

    Subspace gen_sub = subcoalgebra_generated(c, v);
    CHECK(gen_sub.contains(v));
    CHECK(is_subcoalgebra(c, gen_sub));
    ++instances;
  }
  CHECK(instances >= 200);
}
