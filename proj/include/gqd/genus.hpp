#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqd/epimorphism.hpp"

namespace gqd {

struct Certificate {
  Signature sig;
  std::string status;  // incompatible-order | below-genus-floor | inadmissible
  long genus = -1;     // kernel genus when integral
};

struct GenusRecord {
  std::string invariant;  // sigma0 | sigma_p | sigma_hyp(H) | rho | crosscap | pseudo_real_min
  int n = 0;
  std::string scenario;   // subgroup or pseudo-real scenario label, empty otherwise
  long value = -1;
  Signature witness_sig;
  std::optional<GeneratingVector> witness;
  Rational bound;
  std::vector<Certificate> certificates;  // every enumerated signature before the witness
  std::vector<Signature> alternatives;    // other admissible signatures of the same area
  int searched = 0;                       // signatures enumerated within the bound
};

struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchSpec {
  std::string invariant;
  std::string scenario;
  int n = 0;
  GroupPtr group;
  Mode mode = Mode::RiemannSurface;
  std::optional<Subgroup> target;
  ShapeFilter filter;
  VectorPredicate predicate;  // extra witness filter
  long min_genus = 2;
  Rational bound;
  int workers = 0;
  bool collect_alternatives = true;
};

// exhaustive search by increasing area; throws SearchExhausted("bound-too-small")
GenusRecord minimal_genus_search(const SearchSpec& spec);

// area that gives kernel genus g for a group of the given order
Rational area_for_genus(long g, long order, KernelKind kind);
// default bound: one genus step above the claimed value
Rational default_bound(long claimed, long order, KernelKind kind);

std::vector<int> element_orders(const Group& G);  // sorted, without 1

struct SearchOptions {
  std::optional<Rational> area_bound;
  int workers = 0;
};

GenusRecord strong_symmetric_genus(int n, const SearchOptions& opt = {});
GenusRecord pure_symmetric_genus(int n, const SearchOptions& opt = {});
// which: C | D | DC
GenusRecord symmetric_hyperbolic_genus(int n, const std::string& which, const SearchOptions& opt = {});
GenusRecord real_genus(int n, const SearchOptions& opt = {});
GenusRecord symmetric_crosscap(int n, const SearchOptions& opt = {});

// conformal_antic | conformal_only_odd | index_two_even
struct Scenario {
  GroupPtr group;
  Subgroup conformal;
  long expected = -1;  // claimed value, -1 when none is claimed
};
Scenario pseudo_real_scenario(int n, const std::string& scenario);
GenusRecord pseudo_real_min(int n, const std::string& scenario, const SearchOptions& opt = {});

// claimed values, used as search hints and test expectations
long expected_sigma0(int n);
long expected_sigma_p(int n);
long expected_sigma_hyp(int n, const std::string& which);
long expected_rho(int n);
long expected_crosscap(int n);

// ---- explicit families ----

struct FamilyWitness {
  GeneratingVector vector;
  long genus = 0;    // rh_genus of the vector's signature
  long formula = 0;  // closed form of the family
};

FamilyWitness tps_witness(int n, int k);
FamilyWitness tps1_witness(int n, int l, int r);
FamilyWitness ejemplo_witness(int n, int alpha, int beta);

// ---- static data ----

std::vector<Signature> extension_lookup(const Signature& sig);

struct SubgroupRho {
  std::string subgroup;
  int n;
  long rho;
};
// real genus of the index-two subgroups as quoted for the spot checks
std::vector<SubgroupRho> subgroup_rho_table();

}  // namespace gqd
