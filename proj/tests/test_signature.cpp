#include <doctest.h>

#include <random>
#include <set>

#include "gqd/signature.hpp"

using namespace gqd;

TEST_CASE("parse and print") {
  auto s = Signature::parse("(0;+;[2,4,8];{-})");
  CHECK(s.h == 0);
  CHECK(s.orientable);
  CHECK(s.periods == std::vector<int>{2, 4, 8});
  CHECK(s.cycles.empty());
  CHECK(s.str() == "(0;+;[2,4,8];{-})");
  auto k = Signature::parse("(0;+;[-];{(2,2,3,4)})");
  CHECK(k.periods.empty());
  CHECK(k.cycles.size() == 1);
  auto e = Signature::parse("(0;+;[2,4];{(-)})");
  CHECK(e.cycles.size() == 1);
  CHECK(e.cycles[0].empty());
  CHECK(Signature::parse("(1;-;[2,2,2];{-})").reflection_count() == 0);
}

TEST_CASE("parse errors carry positions") {
  try {
    Signature::parse("(0;+;[2,4,x])");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.pos == 10);
  }
  CHECK_THROWS_AS(Signature::parse("(0;*;[2])"), ParseError);
  CHECK_THROWS_AS(Signature::parse("(0;+;[1];{-})"), ParseError);
}

TEST_CASE("canonical form sorts periods and rotates cycles") {
  auto s = Signature::parse("(0;+;[4,2];{(3,2,2),(2)})").canonical();
  CHECK(s.periods == std::vector<int>{2, 4});
  CHECK(s.cycles[0] == std::vector<int>{2});
  CHECK(s.cycles[1] == std::vector<int>{2, 2, 3});
}

TEST_CASE("reduced area and Riemann-Hurwitz") {
  CHECK(reduced_area(Signature::parse("(0;+;[2,4,8];{-})")) == Rational(1, 8));
  CHECK(reduced_area(Signature::parse("(0;+;[2,4];{(-)})")) == Rational(1, 4));
  CHECK(reduced_area(Signature::parse("(0;+;[4];{(2,2)})")) == Rational(1, 4));
  CHECK(rh_genus(Signature::parse("(0;+;[2,4,8];{-})"), 16, KernelKind::OrientableUnbordered) == 2);
  // bordered: 2g - 2 + k = |G| area... genus of the Klein surface uses algebraic genus
  CHECK(rh_genus(Signature::parse("(0;+;[2,4];{(-)})"), 16, KernelKind::Bordered) == 5);
  CHECK(rh_genus(Signature::parse("(0;+;[2,4];{(-)})"), 16, KernelKind::NonOrientableUnbordered) == 6);
  CHECK_THROWS_AS(rh_genus(Signature::parse("(0;+;[3,3,4];{-})"), 16, KernelKind::OrientableUnbordered),
                  IncompatibleOrder);
  CHECK_FALSE(hyperbolic(Signature::parse("(0;+;[2,2,2,2];{-})")));
}

TEST_CASE("presentation sizes") {
  auto p = presentation(Signature::parse("(0;+;[4];{(2,2)})"));
  // beta1, e1, c10, c11, c12
  CHECK(p.gens.size() == 5);
  auto q = presentation(Signature::parse("(1;-;[2,2,2];{-})"));
  CHECK(q.gens.size() == 4);
  CHECK(q.character({{q.find(GenKind::Glide, 1), 1}}) == -1);
  CHECK(q.character({{q.find(GenKind::Glide, 1), 2}}) == 1);
}

TEST_CASE("round trip on 1000 generated signatures") {
  std::mt19937 rng(20241016);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int it = 0; it < 1000; ++it) {
    Signature s;
    s.orientable = pick(0, 1) == 0;
    s.h = s.orientable ? pick(0, 3) : pick(1, 4);
    int k = pick(0, 5);
    for (int a = 0; a < k; ++a) s.periods.push_back(pick(2, 30));
    int c = pick(0, 3);
    for (int a = 0; a < c; ++a) {
      std::vector<int> cyc;
      int l = pick(0, 4);
      for (int b = 0; b < l; ++b) cyc.push_back(pick(2, 12));
      s.cycles.push_back(cyc);
    }
    auto canon = s.canonical();
    auto text = canon.str();
    auto back = Signature::parse(text);
    REQUIRE_MESSAGE(back == canon, text);
    REQUIRE(back.str() == text);
    REQUIRE(Signature::parse(s.str()).canonical() == canon);
  }
}

// ---- enumeration against a dumb box search ----

TEST_CASE("signature enumeration matches a brute-force box") {
  const Rational bound(1, 2);
  const std::vector<int> allowed{2, 4};
  // bound 1/2 caps: eta h + cycles <= 2, at most 5 periods, at most 6 link periods overall
  std::set<std::string> brute;
  std::vector<std::vector<int>> seqs{{}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<std::vector<int>> more;
    for (const auto& s : seqs)
      if (int(s.size()) == len - 1)
        for (int a : allowed) {
          auto t = s;
          t.push_back(a);
          more.push_back(t);
        }
    seqs.insert(seqs.end(), more.begin(), more.end());
  }
  std::vector<std::vector<int>> period_lists{{}};
  for (int len = 1; len <= 5; ++len)
    for (int twos = 0; twos <= len; ++twos) {
      std::vector<int> p(twos, 2);
      p.resize(len, 4);
      period_lists.push_back(p);
    }
  for (int ori = 0; ori < 2; ++ori)
    for (int h = ori ? 1 : 0; h <= (ori ? 2 : 1); ++h)
      for (const auto& P : period_lists) {
        std::vector<std::vector<std::vector<int>>> cycle_sets{{}};
        for (const auto& a : seqs) {
          cycle_sets.push_back({a});
          for (const auto& b : seqs)
            if (a.size() + b.size() <= 6) cycle_sets.push_back({a, b});
        }
        for (const auto& C : cycle_sets) {
          Signature s{h, ori == 0, P, C};
          auto a = reduced_area(s);
          if (a > 0 && a <= bound) brute.insert(s.canonical().str());
        }
      }
  std::set<std::string> got;
  for (const auto& s : enumerate_signatures(bound, allowed, {})) got.insert(s.str());
  CHECK(got == brute);
}

TEST_CASE("enumeration is sorted by area") {
  auto v = enumerate_signatures(Rational(1), {2, 3, 4, 8}, {});
  for (size_t k = 1; k < v.size(); ++k) CHECK(reduced_area(v[k - 1]) <= reduced_area(v[k]));
}
