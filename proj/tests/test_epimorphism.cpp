#include <doctest.h>

#include <random>
#include <set>

#include "gqd/epimorphism.hpp"

using namespace gqd;

namespace {

// every |G|^k tuple through the independent validator
std::set<std::vector<int>> naive(const ContextPtr& ctx, bool surjective = true) {
  std::set<std::vector<int>> out;
  int k = int(ctx->pres.gens.size()), m = ctx->group->order();
  std::vector<int> t(k, 0);
  while (true) {
    if (check_images(*ctx, t, surjective).ok) out.insert(t);
    int p = 0;
    while (p < k && ++t[p] == m) t[p++] = 0;
    if (p == k) break;
  }
  return out;
}

std::set<std::vector<int>> as_set(const std::vector<GeneratingVector>& v) {
  std::set<std::vector<int>> s;
  for (const auto& g : v) s.insert(g.images);
  return s;
}

ContextPtr ctx_of(const char* sig, int n, Mode m, const char* target = nullptr) {
  auto G = Group::G(n);
  std::optional<Subgroup> t;
  if (target) t = named_index_two(G, target);
  return make_context(Signature::parse(sig), G, m, t);
}

}  // namespace

TEST_CASE("backtracking equals naive enumeration, n = 2") {
  struct Case {
    const char* sig;
    Mode mode;
    const char* target;
  };
  std::vector<Case> cases = {
      {"(0;+;[2,4,8];{-})", Mode::RiemannSurface, nullptr},
      {"(0;+;[2,2,2,4];{-})", Mode::RiemannSurface, nullptr},
      {"(1;-;[2,2,2];{-})", Mode::RiemannSurface, "D"},
      {"(0;+;[4];{(4)})", Mode::RiemannSurface, "DC"},
      {"(0;+;[8];{(4)})", Mode::RiemannSurface, "C"},
      {"(0;+;[2,4];{(-)})", Mode::BorderedKlein, nullptr},
      {"(0;+;[2,4];{(-)})", Mode::UnborderedKlein, nullptr},
      {"(0;+;[4];{(2,2)})", Mode::UnborderedKlein, nullptr},
      {"(1;-;[2,4];{-})", Mode::UnborderedKlein, nullptr},
  };
  for (const auto& c : cases) {
    auto ctx = ctx_of(c.sig, 2, c.mode, c.target);
    auto expect = naive(ctx);
    CHECK_MESSAGE(as_set(enumerate_vectors_serial(ctx)) == expect, c.sig);
    CHECK_MESSAGE(as_set(enumerate_vectors(ctx, {4, true})) == expect, c.sig);
    CHECK(count_vectors(ctx) == long(expect.size()));
    CHECK(admissible(ctx) == !expect.empty());
  }
}

TEST_CASE("non-surjective enumeration contains the epimorphisms") {
  for (const char* sig : {"(0;+;[2,4,8];{-})", "(0;+;[2,2,2,4];{-})"}) {
    auto ctx = ctx_of(sig, 2, Mode::RiemannSurface);
    auto all = as_set(enumerate_vectors(ctx, {0, false}));
    auto epi = as_set(enumerate_vectors(ctx, {0, true}));
    CHECK(all.size() >= epi.size());
    for (const auto& v : epi) CHECK(all.count(v));
    CHECK(all == naive(ctx, false));
  }
}

TEST_CASE("worker count does not change the result") {
  auto ctx = ctx_of("(0;+;[2,2,4,12];{-})", 3, Mode::RiemannSurface);
  auto a = enumerate_vectors(ctx, {1, true});
  for (int w : {2, 3, 8}) {
    auto b = enumerate_vectors(ctx, {w, true});
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) CHECK(a[k].images == b[k].images);
    auto f1 = find_vector(ctx, nullptr, 1), fw = find_vector(ctx, nullptr, w);
    REQUIRE(f1);
    CHECK(f1->images == fw->images);
  }
}

TEST_CASE("triangular vectors: count and shape") {
  for (int n = 2; n <= 5; ++n) {
    auto ctx = ctx_of(("(0;+;[2,4," + std::to_string(4 * n) + "];{-})").c_str(), n, Mode::RiemannSurface);
    CHECK(count_vectors(ctx) == 2L * n * euler_phi(4 * n));
  }
}

TEST_CASE("diagnoses") {
  auto ctx = ctx_of("(0;+;[2,4,8];{-})", 2, Mode::RiemannSurface);
  auto ok = make_vector(ctx, {{"beta1", "y"}, {"beta2", "yx^7"}, {"beta3", "x"}});
  CHECK(check_vector(ok).ok);
  auto bad = make_vector(ctx, {{"beta1", "x^4"}, {"beta2", "x^2"}, {"beta3", "x^2"}});
  CHECK_FALSE(check_vector(bad).ok);
  CHECK_FALSE(check_vector(bad, false).ok);  // orders fail regardless of surjectivity
  // Fuchsian signatures have no reversing generator, so they never give closed Klein surfaces
  auto k = ctx_of("(0;+;[2,4,8];{-})", 2, Mode::UnborderedKlein);
  CHECK(count_vectors(k) == 0);
}

TEST_CASE("orientation character agrees with the target on random words") {
  std::mt19937 rng(7);
  for (const char* sig : {"(1;-;[2,2,2];{-})", "(0;+;[4];{(4)})"}) {
    auto ctx = ctx_of(sig, 2, Mode::RiemannSurface, sig[1] == '1' ? "D" : "DC");
    auto vs = enumerate_vectors(ctx);
    REQUIRE(!vs.empty());
    int k = int(ctx->pres.gens.size());
    for (int it = 0; it < 2000; ++it) {
      const auto& v = vs[rng() % vs.size()];
      Word w;
      int len = 1 + int(rng() % 8);
      for (int a = 0; a < len; ++a) w.push_back({int(rng() % k), int(rng() % 5) - 2});
      bool in_target = ctx->target->contains(v.eval(w));
      REQUIRE(in_target == (ctx->pres.character(w) == 1));
    }
  }
}
