#include <doctest.h>

#include "gqd/genus.hpp"

using namespace gqd;

namespace {

// an inadmissible certificate must really have no vectors, re-checked by the serial enumerator
void recheck(const GenusRecord& r, Mode mode, std::optional<Subgroup> target, GroupPtr G) {
  for (const auto& c : r.certificates) {
    if (c.status != "inadmissible") continue;
    auto ctx = make_context(c.sig, G, mode, target);
    CHECK_MESSAGE(enumerate_vectors_serial(ctx).empty(), c.sig.str());
  }
  REQUIRE(r.witness);
  CHECK(check_vector(*r.witness).ok);
  CHECK(rh_genus(r.witness_sig, G->order(), kernel_kind(mode)) == r.value);
}

}  // namespace

TEST_CASE("strong symmetric genus with certificates") {
  for (int n = 2; n <= 4; ++n) {
    auto r = strong_symmetric_genus(n);
    CHECK(r.value == n);
    recheck(r, Mode::RiemannSurface, std::nullopt, Group::G(n));
    CHECK(r.witness_sig == Signature::parse("(0;+;[2,4," + std::to_string(4 * n) + "];{-})"));
  }
}

TEST_CASE("symmetric hyperbolic genus, D") {
  for (int n = 2; n <= 3; ++n) {
    auto r = symmetric_hyperbolic_genus(n, "D");
    CHECK(r.value == 2 * n + 1);
    auto G = Group::G(n);
    recheck(r, Mode::RiemannSurface, named_index_two(G, "D"), G);
  }
}

TEST_CASE("real genus and crosscap number") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(real_genus(n).value == 2 * n + 1);
    auto c = symmetric_crosscap(n);
    CHECK(c.value == 2 * n + 2);
    recheck(c, Mode::UnborderedKlein, std::nullopt, Group::G(n));
  }
}

TEST_CASE("search is deterministic across worker counts") {
  auto a = symmetric_hyperbolic_genus(3, "DC", {std::nullopt, 1});
  auto b = symmetric_hyperbolic_genus(3, "DC", {std::nullopt, 4});
  CHECK(a.value == b.value);
  CHECK(a.witness_sig == b.witness_sig);
  CHECK(a.witness->images == b.witness->images);
  CHECK(a.certificates.size() == b.certificates.size());
}

TEST_CASE("too small a bound is reported, not guessed") {
  CHECK_THROWS_AS(strong_symmetric_genus(3, {Rational(1, 100), 0}), SearchExhausted);
}

TEST_CASE("extension table halves the area") {
  for (const char* s : {"(0;+;[4,4];{(-)})", "(0;+;[3,4];{(-)})", "(1;-;[4,4];{-})", "(1;-;[2,4];{-})"}) {
    auto sig = Signature::parse(s);
    auto ext = extension_lookup(sig);
    CHECK(!ext.empty());
    for (const auto& e : ext) CHECK(reduced_area(e) * 2 == reduced_area(sig));
  }
  CHECK(extension_lookup(Signature::parse("(0;+;[2,3,7];{-})")).empty());
}

TEST_CASE("family witnesses against their closed forms") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 3; k <= 6; ++k) {
      auto w = tps_witness(n, k);
      CHECK(check_vector(w.vector).ok);
      CHECK(w.genus == 2L * n * k - 4L * n + 1);
    }
  for (int n : {3, 5})
    for (int l : {2, 3})
      for (int r : {1, 3}) {
        auto w = tps1_witness(n, l, r);
        CHECK(check_vector(w.vector).ok);
        CHECK(w.genus == 4L * n * l + 6L * n * r - 8L * n + 1);
      }
  for (int n : {2, 3})
    for (int a : {1, 2})
      for (int b : {2, 4}) {
        auto w = ejemplo_witness(n, a, b);
        CHECK(check_vector(w.vector).ok);
        CHECK(w.genus == 12L * n * b + 8L * n * a - 8L * n + 1);
      }
}

TEST_CASE("subgroup real genus table is bounded by the group value") {
  for (const auto& row : subgroup_rho_table()) CHECK(row.rho <= expected_rho(row.n));
}
