#pragma once

#include <map>
#include <string>
#include <vector>

#include "gqd/epimorphism.hpp"

namespace gqd {

// fixed points of g on the surface, via the coset model over the elliptic generators.
// Needs a riemann-mode vector (with or without orientation target); g must be conformal.
long fixed_point_count(const GeneratingVector& v, int g);

struct FixedPointReport {
  std::vector<long> fixed;  // indexed by element id, entry 0 unused
  std::map<int, long> by_class_rep;
};
FixedPointReport fixed_point_report(const GeneratingVector& v);

bool is_purely_non_free(const GeneratingVector& v);

struct QuotientOrbifold {
  long genus = 0;
  bool orientable = true;
  std::vector<int> cone_orders;  // sorted
  std::string str() const;       // (g;+;[..];{-})
};

// S/H for a Fuchsian riemann-mode vector
QuotientOrbifold quotient_signature(const GeneratingVector& v, const Subgroup& H);

struct LedgerEntry {
  std::string factor;  // e.g. "S/<y>"
  int multiplicity = 1;
  long genus = 0;
};

struct JacobianLedger {
  int n = 0;
  long target_genus = 0;
  std::vector<LedgerEntry> entries;
  // terms of the full Kani-Rosen relation that the reduced form assumes to be genus 0
  std::vector<LedgerEntry> dropped_left, dropped_right;
  bool valid() const;       // reduced form: g(S) = sum of entries
  bool full_valid() const;  // with the dropped terms put back
};

// triangular action of G_n and its isogeny dimension bookkeeping
JacobianLedger jacobian_ledger(int n);

// the triangular vector (y, yx^-1, x) on (0;+;[2,4,4n];{-})
GeneratingVector triangular_vector(int n);

// index-2 subgroups holding every involution of G
std::vector<Subgroup> pseudo_real_conformal_part(GroupPtr G);

struct ParityVerdict {
  int involutions = 0;
  int residue = 0;  // involutions mod 4
  bool obstructed = false;
};
// nonexceptional: whether a hypothetical index-2 overgroup has to be non-exceptional
ParityVerdict sylow_parity_obstruction(const Group& G, bool nonexceptional = true);

int smallest_odd_prime(int n);  // 0 when n is a power of two

}  // namespace gqd
