#include <doctest.h>

#include <set>

#include "gqd/group.hpp"

using namespace gqd;

// ---- affine oracle: y^j x^i acts on Z/4n as k -> t^j k + i ----

namespace {

struct Affine {
  int a, b;  // k -> a k + b
  bool operator==(const Affine&) const = default;
  auto operator<=>(const Affine&) const = default;
};

Affine affine_of(const Group& G, int id) {
  const auto& e = G.elem(id);
  int a = e.j ? G.t() : 1;
  return {a, e.i};
}

// right action: k.(gh) = (k.g).h
Affine then(const Affine& f, const Affine& g, int N) { return {int((1L * g.a * f.a) % N), int((1L * g.a * f.b + g.b) % N)}; }

}  // namespace

TEST_CASE("multiplication agrees with the affine permutation model") {
  for (int n : {2, 3, 5}) {
    auto G = Group::G(n);
    int N = 4 * n;
    std::set<Affine> seen;
    for (int a = 0; a < G->order(); ++a) {
      seen.insert(affine_of(*G, a));
      for (int b = 0; b < G->order(); ++b)
        REQUIRE(affine_of(*G, G->mul(a, b)) == then(affine_of(*G, a), affine_of(*G, b), N));
    }
    CHECK(seen.size() == size_t(G->order()));  // faithful
  }
}

TEST_CASE("word parsing against repeated multiplication") {
  auto G = Group::G(2);
  int x = G->x(1), y = G->y();
  CHECK(G->parse("yxy") == G->mul(G->mul(y, x), y));
  CHECK(G->parse("yxy") == G->x(3));  // t = 3
  CHECK(G->parse("x^8") == 0);
  CHECK(G->parse("x^-1") == G->inv(x));
  CHECK(G->parse("y^2") == 0);
  for (int g = 0; g < G->order(); ++g) CHECK(G->parse(G->name(g)) == g);
}

TEST_CASE("class and involution counts against brute force") {
  for (int n = 2; n <= 8; ++n) {
    auto G = Group::G(n);
    // brute conjugacy classes
    std::vector<int> seen(G->order(), -1);
    int classes = 0;
    for (int g = 0; g < G->order(); ++g) {
      if (seen[g] >= 0) continue;
      for (int h = 0; h < G->order(); ++h) seen[G->conj(g, h)] = classes;
      ++classes;
    }
    CHECK(int(conjugacy_classes(*G).size()) == classes);
    CHECK(classes == (n % 2 == 0 ? 2 * n + 3 : 2 * n + 6));
    int inv = 0;
    for (int g = 1; g < G->order(); ++g) inv += G->mul(g, g) == 0;
    CHECK(involution_count(*G) == inv);
    CHECK(inv == 2 * n + 1);
  }
}

TEST_CASE("automorphism count against an independent relation search") {
  for (int n : {2, 3, 4}) {
    auto G = Group::G(n);
    int N = 4 * n, t = 2 * n - 1;
    long count = 0;
    for (int a = 0; a < G->order(); ++a) {
      if (G->elem_order(a) != N) continue;
      for (int b = 0; b < G->order(); ++b) {
        if (b == 0 || G->mul(b, b) != 0) continue;
        if (G->mul(G->mul(b, a), b) != G->pow(a, t)) continue;
        if (!generates(*G, {a, b})) continue;
        ++count;
      }
    }
    CHECK(count == long(euler_phi(N)) * 2 * n);
    CHECK(long(automorphism_group(*G).size()) == count);
    CHECK(long(brute_automorphisms(*G).size()) == count);
  }
}

TEST_CASE("automorphisms are bijective homomorphisms") {
  auto G = Group::G(3);
  for (const auto& A : automorphism_group(*G)) {
    std::set<int> img(A.map.begin(), A.map.end());
    REQUIRE(img.size() == size_t(G->order()));
    for (int a = 0; a < G->order(); ++a)
      for (int b = 0; b < G->order(); ++b) REQUIRE(A(G->mul(a, b)) == G->mul(A(a), A(b)));
  }
}

TEST_CASE("index-two subgroups") {
  for (int n = 2; n <= 6; ++n) {
    auto G = Group::G(n);
    auto subs = index_two_subgroups(G);
    CHECK(subs.size() == 3);
    for (const auto& H : subs) CHECK(H.order() * 2 == G->order());
    CHECK(involution_count(*as_group(named_index_two(G, "D"))) == 2 * n + 1);
    CHECK(involution_count(*as_group(named_index_two(G, "C"))) == 1);
    CHECK(involution_count(*as_group(named_index_two(G, "DC"))) == 1);
  }
}

TEST_CASE("other families") {
  CHECK(Group::Ghat(3)->order() == 48);
  CHECK(Group::K(2)->order() == 64);
  CHECK(Group::H(2)->order() == 32);
  auto Gh = Group::Ghat(3);
  CHECK(Gh->parse("x") == Gh->parse("z^2"));
  CHECK_THROWS_AS(Group::semidirect(8, 2), DomainError);
}
