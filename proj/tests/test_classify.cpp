#include <doctest.h>

#include <random>

#include "gqd/analysis.hpp"
#include "gqd/classify.hpp"

using namespace gqd;

namespace {

ContextPtr d_case(int n) {
  auto G = Group::G(n);
  return make_context(Signature::parse("(1;-;[2,2,2];{-})"), G, Mode::RiemannSurface, named_index_two(G, "D"));
}

GeneratingVector apply_aut(const GeneratingVector& v, const Automorphism& a) {
  auto img = v.images;
  for (int& x : img) x = a(x);
  return make_vector(v.ctx, img);
}

}  // namespace

TEST_CASE("triangular action is a single orbit") {
  for (int n = 2; n <= 5; ++n) {
    auto cl = classify_all(triangular_vector(n).ctx);
    CHECK(cl.orbits.size() == 1);
    CHECK(cl.orbits[0].size == 2L * n * euler_phi(4 * n));
  }
}

TEST_CASE("orbit sizes partition the input") {
  auto ctx = make_context(Signature::parse("(0;+;[2,2,4,12];{-})"), Group::G(3), Mode::RiemannSurface);
  auto vs = enumerate_vectors(ctx);
  auto cl = classify(vs, verify_moves(moves_for(ctx->sig), vs), automorphisms(*ctx->group));
  long total = 0;
  for (const auto& o : cl.orbits) total += o.size;
  CHECK(total == long(vs.size()));
}

TEST_CASE("reclassifying representatives is idempotent") {
  auto ctx = make_context(Signature::parse("(0;+;[2,2,2,4,12];{-})"), Group::G(3), Mode::RiemannSurface);
  auto vs = enumerate_vectors(ctx);
  auto moves = verify_moves(moves_for(ctx->sig), vs);
  auto auts = automorphisms(*ctx->group);
  auto cl = classify(vs, moves, auts);
  std::vector<GeneratingVector> reps;
  for (const auto& o : cl.orbits) reps.push_back(o.representative);
  auto again = classify(reps, moves, auts);
  REQUIRE(again.orbits.size() == cl.orbits.size());
  for (size_t k = 0; k < cl.orbits.size(); ++k) {
    CHECK(again.orbits[k].representative.images == cl.orbits[k].representative.images);
    CHECK(again.orbits[k].size == 1);
    CHECK(again.orbits[k].invariant == cl.orbits[k].invariant);
  }
}

TEST_CASE("10k random move and automorphism sequences keep validity and invariant") {
  std::mt19937 rng(99);
  for (int n : {2, 3}) {
    auto ctx = d_case(n);
    auto vs = enumerate_vectors(ctx);
    auto moves = verify_moves(moves_for(ctx->sig), vs);
    REQUIRE(!moves.moves.empty());
    auto auts = automorphisms(*ctx->group);
    auto fusion = aut_fusion(*ctx->group, auts);
    bool braid = moves.braid_only();
    for (int it = 0; it < 5000; ++it) {
      auto v = vs[rng() % vs.size()];
      auto inv0 = separating_invariant(v, fusion, braid);
      int steps = 1 + int(rng() % 6);
      for (int s = 0; s < steps; ++s) {
        if (rng() % 2) v = make_vector(ctx, moves.moves[rng() % moves.moves.size()].apply(*ctx, v.images));
        else v = apply_aut(v, auts[rng() % auts.size()]);
        REQUIRE(check_vector(v).ok);
      }
      REQUIRE(separating_invariant(v, fusion, braid) == inv0);
    }
  }
}

TEST_CASE("moved vectors land in the same orbit") {
  auto ctx = d_case(2);
  auto vs = enumerate_vectors(ctx);
  auto moves = verify_moves(moves_for(ctx->sig), vs);
  auto auts = automorphisms(*ctx->group);
  for (size_t k = 0; k < vs.size(); k += 7)
    for (const auto& m : moves.moves) {
      auto w = make_vector(ctx, m.apply(*ctx, vs[k].images));
      CHECK(classify({vs[k], w}, moves, auts).orbits.size() == 1);
    }
}

TEST_CASE("real case bridging identity") {
  for (int n = 2; n <= 5; ++n) {
    auto G = Group::G(n);
    auto ctx = make_context(Signature::parse("(0;+;[2,4];{(-)})"), G, Mode::BorderedKlein);
    auto t1 = make_vector(ctx, {{"beta1", "y"}, {"beta2", "xy"}, {"e1", "x^" + std::to_string(2 * n + 1)}, {"c10", "1"},
                                {"c11", "1"}});
    REQUIRE(check_vector(t1).ok);
    auto ms = moves_for(ctx->sig);
    auto L = std::find_if(ms.moves.begin(), ms.moves.end(), [](const Move& m) { return m.name == "L"; });
    REQUIRE(L != ms.moves.end());
    auto img = L->apply(*ctx, t1.images);
    auto p = psi(*G, 4 * n - 1, 0);
    for (int& x : img) x = p(x);
    // the stated target tuple, element by element
    std::vector<std::string> want = {"x^" + std::to_string(2 * n), "yx", "yx", "y", "yx^" + std::to_string(2 * n + 2)};
    std::vector<std::string> got;
    for (int x : img) got.push_back(G->name(x));
    CHECK(got == want);
  }
}

TEST_CASE("D-case bridge to the stated hat vector") {
  for (int n = 2; n <= 5; ++n) {
    auto ctx = d_case(n);
    auto G = ctx->group;
    auto sx = [](const char* b, long e) { return std::string(b) + "^" + std::to_string(e); };
    auto t1 = make_vector(ctx, {{"d1", "x"}, {"beta1", sx("x", 2 * n - 2) + "y"}, {"beta2", "y"}, {"beta3", sx("x", 2 * n)}});
    auto hat = make_vector(ctx, {{"d1", "xy"}, {"beta1", sx("x", 2 * n)}, {"beta2", sx("x", 2 * n + 2) + "y"},
                                 {"beta3", sx("x", 2 * n + 2) + "y"}});
    REQUIRE(check_vector(t1).ok);
    REQUIRE(check_vector(hat).ok);
    auto ms = moves_for(ctx->sig);
    auto L = std::find_if(ms.moves.begin(), ms.moves.end(), [](const Move& m) { return m.name == "L"; });
    REQUIRE(L != ms.moves.end());
    auto img = L->apply(*ctx, t1.images);
    auto p = psi(*G, 4 * n - 1, 0);
    for (int& x : img) x = p(x);
    CHECK(img == hat.images);
  }
}

TEST_CASE("unsupported shapes fall back to coarse classification") {
  auto G = Group::G(2);
  auto ctx = make_context(Signature::parse("(0;+;[4];{(2,2)})"), G, Mode::UnborderedKlein);
  CHECK_THROWS_AS(default_moves(ctx->sig), UnsupportedShape);
  auto cl = classify_all(ctx);
  CHECK(cl.coarse);
}
