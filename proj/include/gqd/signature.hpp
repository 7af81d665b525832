#pragma once

#include <boost/rational.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gqd {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view s);

// (h;+|-;[m1,...];{(n11,...),...})
struct Signature {
  int h = 0;
  bool orientable = true;
  std::vector<int> periods;
  std::vector<std::vector<int>> cycles;

  bool operator==(const Signature&) const = default;

  bool fuchsian() const { return orientable && cycles.empty(); }
  int reflection_count() const;
  Signature canonical() const;
  std::string str() const;
  static Signature parse(std::string_view text);
};

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& what, size_t p) : std::runtime_error(what), pos(p) {}
};

// total order: area, then lexicographic on the canonical fields
bool signature_less(const Signature& a, const Signature& b);

Rational reduced_area(const Signature& sig);
bool hyperbolic(const Signature& sig);

enum class KernelKind { OrientableUnbordered, NonOrientableUnbordered, Bordered };
const char* to_string(KernelKind k);

struct IncompatibleOrder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// genus of the kernel surface; throws IncompatibleOrder when not integral
long rh_genus(const Signature& sig, long group_order, KernelKind kind);
bool rh_integral(const Signature& sig, long group_order, KernelKind kind);

// ---- canonical presentation ----

enum class GenKind { Elliptic, Boundary, Reflection, HypA, HypB, Glide };

struct Generator {
  GenKind kind;
  int i = 0;      // 1-based index (cycle index for boundary/reflection)
  int j = 0;      // reflection index inside its cycle
  int order = 0;  // elliptic period
  int character = 1;

  std::string label() const;   // elliptic:1, reflection:1.0, ...
  std::string symbol() const;  // beta1, c10, e1, a1, b1, d1
};

using Word = std::vector<std::pair<int, int>>;  // (generator index, exponent)

enum class RelKind { Power, ReflectionSquare, Link, EmptyCycle, Boundary, Long };

struct Relation {
  RelKind kind;
  Word word;
  int power = 1;  // the word is raised to this power
  int cycle = -1;
};

struct Presentation {
  Signature sig;
  std::vector<Generator> gens;
  std::vector<Relation> relations;

  int find(GenKind k, int i, int j = 0) const;  // -1 if absent
  std::string word_text(const Word& w) const;
  std::string relation_text(const Relation& r) const;
  int character(const Word& w) const;
};

Presentation presentation(const Signature& sig);

struct UnsupportedShape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Delta^+ for non-orientable signatures without period cycles
Signature orientation_double(const Signature& sig);

struct ShapeFilter {
  bool orientable = true;
  bool nonorientable = true;
  bool allow_cycles = true;
  bool require_non_fuchsian = false;
  bool require_cycles = false;
  // empty period cycle, or two cyclically consecutive link periods equal to 2
  bool boundary_capable = false;
  std::function<bool(const Signature&)> extra;

  bool accepts(const Signature& s) const;
};

bool has_boundary_capable_cycle(const Signature& s);

// every signature with 0 < area <= bound, periods and link periods from allowed;
// sorted by signature_less, canonical, duplicate free
std::vector<Signature> enumerate_signatures(Rational bound, std::vector<int> allowed, const ShapeFilter& filter);

}  // namespace gqd
