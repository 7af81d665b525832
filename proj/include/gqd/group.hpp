#pragma once

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gqd {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// y^j x^i (and z^c for product groups)
struct Elem {
  int j = 0;
  int i = 0;
  int c = 0;
  auto operator<=>(const Elem&) const = default;
};

enum class Family { SemidirectC2, ProductWithCyclic, SubgroupView };

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Elements are addressed by dense ids 0..order-1 in normal-form order,
// id 0 is always the identity.
class Group {
 public:
  // C_N x| C_2 with y x y = x^t; cyc is the printed name of the cyclic generator
  static GroupPtr semidirect(int N, int t, std::string cyc = "x");
  // inner x C_m, inner must be a semidirect group
  static GroupPtr product(GroupPtr inner, int m, std::string sym = "z");
  // parent_ids need not be sorted; must be a subgroup
  static GroupPtr subgroup_view(GroupPtr parent, std::vector<int> parent_ids, std::string label = "");

  static GroupPtr G(int n);      // G_n
  static GroupPtr Ghat(int n);   // C_8n x| C_2, x = z^2
  static GroupPtr K(int n);      // G_n x C_4
  static GroupPtr H(int n);      // G_n x C_2, as a standalone group

  Family family() const { return family_; }
  int order() const { return static_cast<int>(elems_.size()); }
  int N() const { return N_; }
  int t() const { return t_; }
  int m() const { return m_; }
  const std::string& label() const { return label_; }

  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int elem_order(int a) const { return ord_[a]; }
  int pow(int a, long k) const;
  int conj(int g, int h) const { return mul(mul(inv(h), g), h); }  // h^-1 g h

  const Elem& elem(int id) const { return elems_[id]; }
  int id(const Elem& e) const;

  // convenience constructors of elements (semidirect / product families)
  int x(long i) const;
  int y() const;
  int z(long c) const;

  std::string name(int id) const;
  int parse(std::string_view word) const;

  const std::vector<int>& generators() const { return gens_; }
  bool is_Gn() const;   // SemidirectC2(4n, 2n-1)
  int n_param() const;  // n for the families built by G/Ghat/K/H, else 0

  const Group* parent() const { return parent_.get(); }
  GroupPtr parent_ptr() const { return parent_; }
  int parent_id(int local) const { return parent_ids_.at(local); }
  int local_id(int parent_id) const;

 private:
  Group() = default;
  void finish();
  int mul_raw(int a, int b) const;

  Family family_ = Family::SemidirectC2;
  int N_ = 1, t_ = 1, m_ = 1, n_ = 0;
  int inner_N_ = 1, inner_t_ = 1;
  std::string cyc_ = "x", sym_ = "z", label_;
  GroupPtr parent_;
  std::vector<int> parent_ids_;
  std::vector<int> parent_to_local_;
  std::vector<Elem> elems_;
  std::vector<int> table_;  // empty above the cap
  std::vector<int> inv_, ord_;
  std::vector<int> gens_;
};

inline constexpr int kTableCap = 512;

struct Subgroup {
  GroupPtr group;
  std::vector<char> member;   // indexed by element id of group
  std::vector<int> elements;  // sorted
  std::vector<int> gens;
  std::string label;

  bool contains(int g) const { return member[g] != 0; }
  int order() const { return static_cast<int>(elements.size()); }
  int index() const { return group->order() / order(); }
};

Subgroup generate(GroupPtr G, const std::vector<int>& gens, std::string label = "");
bool generates(const Group& G, const std::vector<int>& gens);
std::vector<char> closure(const Group& G, const std::vector<int>& gens);
GroupPtr as_group(const Subgroup& H);

struct ConjugacyClass {
  int rep;
  int size;
  std::vector<int> members;
};

std::vector<ConjugacyClass> conjugacy_classes(const Group& G);
std::vector<int> class_index(const Group& G);  // element id -> class number
int involution_count(const Group& G);
std::vector<Subgroup> index_two_subgroups(GroupPtr G);
Subgroup center(GroupPtr G);

// for G_n
Subgroup cyclic_part(GroupPtr G);       // <x>
Subgroup dihedral_part(GroupPtr G);     // <x^2, y>
Subgroup dicyclic_part(GroupPtr G);     // <x^2, yx>
Subgroup named_index_two(GroupPtr G, std::string_view which);  // C | D | DC

struct Automorphism {
  int u = -1, v = -1;     // psi_{u,2v} when parametric
  std::vector<int> map;   // element id -> element id
  int operator()(int g) const { return map[g]; }
  std::string label() const;
};

struct UnsupportedFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Automorphism psi(const Group& G, int u, int v);
// parametric family for G_n; throws UnsupportedFamily("generic-automorphisms-unavailable") otherwise
std::vector<Automorphism> automorphism_group(const Group& G);
// all automorphisms by generator-image search; order must be < 128 unless force
std::vector<Automorphism> brute_automorphisms(const Group& G, bool force = false);
// parametric when available, brute force otherwise
std::vector<Automorphism> automorphisms(const Group& G);

// extend generator images to a map; empty if not a homomorphism
std::vector<int> extend_homomorphism(const Group& src, const std::vector<int>& gens,
                                     const Group& dst, const std::vector<int>& images);

int euler_phi(int n);
int mod(long a, long n);

}  // namespace gqd
