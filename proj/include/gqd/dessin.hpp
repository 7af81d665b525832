#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gqd/group.hpp"

namespace gqd {

using Perm = std::vector<int>;  // 0-based images

Perm perm_compose(const Perm& p, const Perm& q);  // apply p then q
Perm perm_inverse(const Perm& p);
Perm perm_power(const Perm& p, long k);
bool perm_is_identity(const Perm& p);
std::vector<std::vector<int>> perm_cycles(const Perm& p);
// order of the permutation group generated by gens (orbit-stabiliser on tuples is overkill here:
// a regular-action check is all callers need, so this closes the set of products)
long perm_group_order(const std::vector<Perm>& gens, long cap = 1 << 20);

struct MonodromyPair {
  int edges = 0;
  Perm white, black;
  std::vector<int> labels;  // edge k is the group element labels[k] (empty for raw pairs)
};

// edges are the group elements; white acts as e -> e a, black as e -> e b
MonodromyPair regular_monodromy(const Group& G, int a, int b);

struct DessinGraph {
  std::vector<int> white_valency, black_valency, face_length;
  std::vector<std::tuple<int, int, int>> edges;  // (white, black, multiplicity)
  int genus = 0;

  int faces() const { return static_cast<int>(face_length.size()); }
  // complete bipartite with the given multiplicity on every pair
  bool complete_bipartite(int multiplicity) const;
  std::string dot() const;
  std::string json() const;
};

DessinGraph dessin_data(const MonodromyPair& p);

// generating pairs up to simultaneous conjugation; representatives are least in (a, b) order
std::vector<std::pair<int, int>> generator_pair_classes(const Group& G, int workers = 0);

// the G_n pair used in the regular dessin: eta = x, sigma = y, tau = y x^-1
struct GnDessin {
  int eta, sigma, tau;
  MonodromyPair monodromy;  // (eta, tau)
};
GnDessin gn_dessin(const Group& Gn);

}  // namespace gqd
