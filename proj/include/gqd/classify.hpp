#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gqd/epimorphism.hpp"

namespace gqd {

// rewrites the image tuple of one signature shape; returns the new images
using MoveFn = std::function<std::vector<int>(const ActionContext&, const std::vector<int>&)>;

struct Move {
  std::string name;
  MoveFn apply;
  bool braid = false;
};

struct MoveSet {
  std::vector<Move> moves;
  bool coarse = false;  // no registered shape: Aut orbits only
  std::vector<std::string> rejected;

  bool braid_only() const;
};

// braid moves on the elliptic generators of every signature, plus the shape specific
// moves for (1;-;[m,m,m];{-}) and (0;+;[m1,m2];{(-)}); throws UnsupportedShape("no-move-set")
// when nothing applies
MoveSet default_moves(const Signature& sig);
// as default_moves, but an unsupported shape gives an empty coarse set
MoveSet moves_for(const Signature& sig);

// drop moves that send some of the vectors to an invalid vector; names go to rejected
MoveSet verify_moves(MoveSet set, const std::vector<GeneratingVector>& vectors);

struct Invariant {
  std::vector<int> elliptic_classes;  // Aut-fused class labels, sorted
  std::vector<int> fixed_classes;     // per fused class: conjugacy classes with fixed points
  bool purely_non_free = false;
  std::vector<int> other_orders;      // orders of non-elliptic images (braid-only sets)
  bool has_fixed_data = false;

  auto operator<=>(const Invariant&) const = default;
  std::string str() const;
};

struct Fusion {
  std::vector<int> label;      // element -> fused class (conjugacy plus Aut)
  std::vector<int> cls;        // element -> conjugacy class
  std::vector<int> class_of_fused_count;  // fused label -> number of conjugacy classes
};
Fusion aut_fusion(const Group& G, const std::vector<Automorphism>& auts);

Invariant separating_invariant(const GeneratingVector& v, const Fusion& fusion, bool include_other_orders);

struct Orbit {
  GeneratingVector representative;
  long size = 0;
  Invariant invariant;
};

struct Classification {
  std::vector<Orbit> orbits;
  bool coarse = false;
  std::vector<std::string> rejected_moves;
  int distinct_invariants = 0;
};

inline constexpr long kOrbitCap = 10'000'000;

// closure under moves and Aut post-composition; orbits ordered by representative
Classification classify(const std::vector<GeneratingVector>& vectors, const MoveSet& moves,
                        const std::vector<Automorphism>& auts);

// enumerate, pick moves, verify them, classify
Classification classify_all(ContextPtr ctx, int workers = 0);

}  // namespace gqd
