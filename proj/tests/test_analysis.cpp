#include <doctest.h>

#include "gqd/analysis.hpp"
#include "gqd/genus.hpp"

using namespace gqd;

namespace {

// sum over g != 1 of Fix(g) counted two ways
void fixed_point_identity(const GeneratingVector& v) {
  const auto& G = *v.ctx->group;
  auto rep = fixed_point_report(v);
  long lhs = 0;
  for (int g = 1; g < G.order(); ++g) lhs += rep.fixed[g];
  long rhs = 0;
  for (int p : v.ctx->sig.periods) rhs += long(G.order() / p) * (p - 1);
  REQUIRE(lhs == rhs);
}

}  // namespace

TEST_CASE("fixed-point identity on every triangular vector, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    auto v0 = triangular_vector(n);
    for (const auto& v : enumerate_vectors(v0.ctx)) fixed_point_identity(v);
  }
}

TEST_CASE("fixed-point identity on other Fuchsian signatures") {
  for (int n = 2; n <= 4; ++n) {
    auto G = Group::G(n);
    for (const auto& s : enumerate_signatures(Rational(1, 2), element_orders(*G), ShapeFilter{true, false, false})) {
      auto ctx = make_context(s, G, Mode::RiemannSurface);
      if (!rh_integral(s, G->order(), KernelKind::OrientableUnbordered)) continue;
      if (s.periods.size() + 2 * s.h > 4) continue;
      auto vs = enumerate_vectors(ctx);
      for (size_t k = 0; k < vs.size(); k += 1 + vs.size() / 50) fixed_point_identity(vs[k]);
    }
  }
}

TEST_CASE("fixed points are class functions") {
  auto v = triangular_vector(4);
  const auto& G = *v.ctx->group;
  for (int g = 1; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) REQUIRE(fixed_point_count(v, g) == fixed_point_count(v, G.conj(g, h)));
}

TEST_CASE("triangular fixed points") {
  for (int n = 2; n <= 6; ++n) {
    auto v = triangular_vector(n);
    auto G = v.ctx->group;
    CHECK(fixed_point_count(v, G->x(2 * n)) == 2 * n + 2);
    CHECK(fixed_point_count(v, G->x(1)) == 2);
    CHECK(is_purely_non_free(v) == (n % 2 == 0));
  }
}

TEST_CASE("quotients by the trivial group and by everything") {
  for (int n = 2; n <= 5; ++n) {
    auto v = triangular_vector(n);
    auto G = v.ctx->group;
    auto q1 = quotient_signature(v, generate(G, {}));
    CHECK(q1.genus == n);
    CHECK(q1.cone_orders.empty());
    auto qG = quotient_signature(v, generate(G, G->generators()));
    CHECK(qG.genus == 0);
    CHECK(qG.cone_orders == v.ctx->sig.periods);
  }
}

TEST_CASE("quotient genus against Riemann-Hurwitz with fixed-point counts") {
  // 2g(S) - 2 = |H| (2 g(S/H) - 2) + sum over nontrivial h in H of Fix(h)
  for (int n = 2; n <= 12; ++n) {
    auto v = triangular_vector(n);
    auto G = v.ctx->group;
    long gS = n;
    std::vector<std::vector<int>> gens = {{G->y()}, {G->x(2 * n)}, {G->x(2 * n), G->y()}, {G->x(4)}, {G->x(4), G->y()}};
    for (const auto& gs : gens) {
      auto H = generate(G, gs);
      long fix = 0;
      for (int h : H.elements)
        if (h != 0) fix += fixed_point_count(v, h);
      long rhs = 2 * gS - 2 - fix;
      REQUIRE(rhs % (2 * H.order()) == 0);
      long expect = rhs / (2 * H.order()) + 1;
      CHECK(quotient_signature(v, H).genus == expect);
    }
  }
}

TEST_CASE("jacobian ledgers") {
  for (int n = 2; n <= 12; ++n) {
    auto L = jacobian_ledger(n);
    CHECK(L.full_valid());
    CHECK(L.target_genus == n);
  }
  // y has n (odd) or 2n (even) conjugates, so Fix(y) is 4 or 2
  for (int n : {3, 5, 7}) CHECK(jacobian_ledger(n).entries[0].genus == (n - 1) / 2);
  for (int n : {2, 4, 6, 8, 10}) CHECK(jacobian_ledger(n).entries[0].genus == n / 2);
  // the reduced form needs the dihedral quotient to be a sphere; it is a torus for n = 6 and 10
  for (int n : {2, 3, 4, 5, 7, 8}) CHECK(jacobian_ledger(n).valid());
  for (int n : {6, 10}) {
    auto L = jacobian_ledger(n);
    CHECK_FALSE(L.valid());
    CHECK(L.dropped_left.at(0).genus == 1);
  }
}

TEST_CASE("involution parity") {
  for (int n = 2; n <= 9; ++n) {
    auto v = sylow_parity_obstruction(*Group::G(n));
    CHECK(v.involutions == 2 * n + 1);
    CHECK(v.obstructed == (n % 2 == 0));
  }
  CHECK_THROWS(sylow_parity_obstruction(*Group::semidirect(3, 1)));
}

TEST_CASE("smallest odd prime") {
  CHECK(smallest_odd_prime(8) == 0);
  CHECK(smallest_odd_prime(6) == 3);
  CHECK(smallest_odd_prime(10) == 5);
  CHECK(smallest_odd_prime(9) == 3);
}
