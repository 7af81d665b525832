#include "gqd/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace gqd {

int mod(long a, long n) {
  long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

// ---- construction ----

GroupPtr Group::semidirect(int N, int t, std::string cyc) {
  if (N < 1) throw DomainError("semidirect: N must be positive");
  if (mod(static_cast<long>(t) * t, N) != 1 % N)
    throw DomainError("semidirect: t^2 != 1 mod N");
  auto g = std::shared_ptr<Group>(new Group());
  g->family_ = Family::SemidirectC2;
  g->N_ = N;
  g->t_ = mod(t, N);
  g->cyc_ = std::move(cyc);
  g->label_ = "C" + std::to_string(N) + ":C2(" + std::to_string(g->t_) + ")";
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < N; ++i) g->elems_.push_back({j, i, 0});
  g->finish();
  g->gens_ = {g->x(1), g->y()};
  return g;
}

GroupPtr Group::product(GroupPtr inner, int m, std::string sym) {
  if (!inner || inner->family_ != Family::SemidirectC2)
    throw DomainError("product: inner group must be SemidirectC2");
  auto g = std::shared_ptr<Group>(new Group());
  g->family_ = Family::ProductWithCyclic;
  g->N_ = inner->N_;
  g->t_ = inner->t_;
  g->m_ = m;
  g->cyc_ = inner->cyc_;
  g->sym_ = std::move(sym);
  g->n_ = inner->n_;
  g->label_ = inner->label_ + "xC" + std::to_string(m);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < g->N_; ++i)
      for (int c = 0; c < m; ++c) g->elems_.push_back({j, i, c});
  g->finish();
  g->gens_ = {g->x(1), g->y(), g->z(1)};
  return g;
}

GroupPtr Group::subgroup_view(GroupPtr parent, std::vector<int> ids, std::string label) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty() || ids.front() != 0) throw DomainError("subgroup_view: identity missing");
  std::vector<char> in(parent->order(), 0);
  for (int a : ids) in[a] = 1;
  for (int a : ids)
    for (int b : ids)
      if (!in[parent->mul(a, b)]) throw DomainError("subgroup_view: not closed");
  auto g = std::shared_ptr<Group>(new Group());
  g->family_ = Family::SubgroupView;
  g->parent_ = parent;
  g->parent_ids_ = ids;
  g->parent_to_local_.assign(parent->order(), -1);
  for (size_t k = 0; k < ids.size(); ++k) g->parent_to_local_[ids[k]] = static_cast<int>(k);
  g->label_ = label.empty() ? "subgroup of " + parent->label_ : std::move(label);
  for (int a : ids) g->elems_.push_back(parent->elem(a));
  g->finish();
  // greedy generating set, highest order first
  std::vector<int> order_desc(g->order());
  std::iota(order_desc.begin(), order_desc.end(), 0);
  std::stable_sort(order_desc.begin(), order_desc.end(),
                   [&](int a, int b) { return g->ord_[a] > g->ord_[b]; });
  std::vector<char> cl(g->order(), 0);
  cl[0] = 1;
  for (int a : order_desc) {
    if (cl[a]) continue;
    g->gens_.push_back(a);
    cl = closure(*g, g->gens_);
  }
  std::sort(g->gens_.begin(), g->gens_.end());
  return g;
}

GroupPtr Group::G(int n) {
  if (n < 1) throw DomainError("G_n needs n >= 1");
  auto g = semidirect(4 * n, 2 * n - 1, "x");
  auto m = std::const_pointer_cast<Group>(g);
  m->n_ = n;
  m->label_ = "G_" + std::to_string(n);
  return g;
}

GroupPtr Group::Ghat(int n) {
  auto g = semidirect(8 * n, 2 * n - 1, "z");
  auto m = std::const_pointer_cast<Group>(g);
  m->n_ = n;
  m->label_ = "Ghat_" + std::to_string(n);
  return g;
}

GroupPtr Group::K(int n) {
  auto g = product(G(n), 4, "z");
  std::const_pointer_cast<Group>(g)->label_ = "K_" + std::to_string(n);
  return g;
}

GroupPtr Group::H(int n) {
  auto g = product(G(n), 2, "z");
  std::const_pointer_cast<Group>(g)->label_ = "H_" + std::to_string(n);
  return g;
}

void Group::finish() {
  int n = order();
  if (n <= kTableCap) {
    table_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) table_[static_cast<size_t>(a) * n + b] = mul_raw(a, b);
  }
  inv_.assign(n, -1);
  ord_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int p = a, k = 1;
    while (p != 0) {
      p = mul(p, a);
      ++k;
    }
    ord_[a] = k;
    inv_[a] = pow(a, k - 1);
  }
}

int Group::id(const Elem& e) const {
  switch (family_) {
    case Family::SemidirectC2:
      if (e.j < 0 || e.j > 1 || e.i < 0 || e.i >= N_ || e.c != 0)
        throw DomainError("element not reduced");
      return e.j * N_ + e.i;
    case Family::ProductWithCyclic:
      if (e.j < 0 || e.j > 1 || e.i < 0 || e.i >= N_ || e.c < 0 || e.c >= m_)
        throw DomainError("element not reduced");
      return (e.j * N_ + e.i) * m_ + e.c;
    case Family::SubgroupView: {
      int p = parent_->id(e);
      int l = parent_to_local_[p];
      if (l < 0) throw DomainError("element not in subgroup");
      return l;
    }
  }
  return -1;
}

int Group::local_id(int pid) const {
  if (family_ != Family::SubgroupView) return pid;
  int l = parent_to_local_.at(pid);
  if (l < 0) throw DomainError("element not in subgroup");
  return l;
}

int Group::mul_raw(int a, int b) const {
  const Elem& g = elems_[a];
  const Elem& h = elems_[b];
  switch (family_) {
    case Family::SemidirectC2:
    case Family::ProductWithCyclic: {
      // (y^j1 x^i1)(y^j2 x^i2) = y^(j1+j2) x^(i1 t^j2 + i2) using x^i y = y x^(t i)
      long i1 = h.j ? static_cast<long>(g.i) * t_ : g.i;
      Elem r{(g.j + h.j) & 1, mod(i1 + h.i, N_), family_ == Family::ProductWithCyclic ? mod(g.c + h.c, m_) : 0};
      return id(r);
    }
    case Family::SubgroupView:
      return parent_to_local_[parent_->mul(parent_ids_[a], parent_ids_[b])];
  }
  return -1;
}

int Group::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<size_t>(a) * order() + b];
  return mul_raw(a, b);
}

int Group::pow(int a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = 0, base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int Group::x(long i) const {
  if (family_ == Family::SubgroupView) throw DomainError("x(): not available on subgroup views");
  return id({0, mod(i, N_), 0});
}

int Group::y() const {
  if (family_ == Family::SubgroupView) throw DomainError("y(): not available on subgroup views");
  return id({1, 0, 0});
}

int Group::z(long c) const {
  if (family_ == Family::ProductWithCyclic) return id({0, 0, mod(c, m_)});
  if (family_ == Family::SemidirectC2 && cyc_ == "z") return x(c);
  throw DomainError("z(): group has no z");
}

bool Group::is_Gn() const {
  return family_ == Family::SemidirectC2 && N_ % 4 == 0 && N_ >= 8 && t_ == N_ / 2 - 1;
}

int Group::n_param() const { return n_; }

// ---- printing / parsing ----

static std::string power(const std::string& s, int e) {
  if (e == 0) return "";
  if (e == 1) return s;
  return s + "^" + std::to_string(e);
}

std::string Group::name(int a) const {
  const Elem& e = elems_.at(a);
  if (family_ == Family::SubgroupView) return parent_->name(parent_ids_[a]);
  std::string s = (e.j ? "y" : "") + power(cyc_, e.i);
  if (family_ == Family::ProductWithCyclic) s += power(sym_, e.c);
  return s.empty() ? "1" : s;
}

int Group::parse(std::string_view w) const {
  if (family_ == Family::SubgroupView) return local_id(parent_->parse(w));
  size_t p = 0;
  auto fail = [&](const std::string& why) -> int {
    throw DomainError("cannot parse element '" + std::string(w) + "' at " + std::to_string(p) + ": " + why);
  };
  auto skip = [&] {
    while (p < w.size() && (std::isspace(static_cast<unsigned char>(w[p])) || w[p] == '*')) ++p;
  };
  int acc = 0;
  skip();
  if (p < w.size() && w[p] == '1') {
    ++p;
    skip();
    if (p != w.size()) fail("trailing input");
    return 0;
  }
  if (p == w.size()) fail("empty");
  while (p < w.size()) {
    char s = w[p];
    if (s != 'x' && s != 'y' && s != 'z') fail("expected x, y or z");
    ++p;
    long e = 1;
    if (p < w.size() && w[p] == '^') {
      ++p;
      bool brace = p < w.size() && w[p] == '{';
      if (brace) ++p;
      size_t q = p;
      if (q < w.size() && (w[q] == '-' || w[q] == '+')) ++q;
      size_t d = q;
      while (q < w.size() && std::isdigit(static_cast<unsigned char>(w[q]))) ++q;
      if (q == d) fail("expected exponent");
      e = std::stol(std::string(w.substr(p, q - p)));
      p = q;
      if (brace) {
        if (p >= w.size() || w[p] != '}') fail("expected }");
        ++p;
      }
    }
    int g = 0;
    if (s == 'y') {
      g = y();
    } else if (s == 'x') {
      // in Ghat the usual x is z^2
      g = (cyc_ == "z") ? x(2) : x(1);
    } else {
      if (family_ == Family::ProductWithCyclic) g = z(1);
      else if (cyc_ == "z") g = x(1);
      else fail("group has no z");
    }
    acc = mul(acc, pow(g, e));
    skip();
  }
  return acc;
}

// ---- subgroups ----

std::vector<char> closure(const Group& G, const std::vector<int>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> stack{0};
  in[0] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int s : gens) {
      int b = G.mul(a, s);
      if (!in[b]) {
        in[b] = 1;
        stack.push_back(b);
      }
    }
  }
  return in;
}

bool generates(const Group& G, const std::vector<int>& gens) {
  auto in = closure(G, gens);
  return std::all_of(in.begin(), in.end(), [](char c) { return c != 0; });
}

Subgroup generate(GroupPtr G, const std::vector<int>& gens, std::string label) {
  Subgroup H;
  H.group = G;
  H.member = closure(*G, gens);
  for (int a = 0; a < G->order(); ++a)
    if (H.member[a]) H.elements.push_back(a);
  H.gens = gens;
  H.label = std::move(label);
  return H;
}

GroupPtr as_group(const Subgroup& H) { return Group::subgroup_view(H.group, H.elements, H.label); }

Subgroup center(GroupPtr G) {
  std::vector<int> z;
  for (int a = 0; a < G->order(); ++a) {
    bool c = true;
    for (int s : G->generators())
      if (G->mul(a, s) != G->mul(s, a)) {
        c = false;
        break;
      }
    if (c) z.push_back(a);
  }
  return generate(G, z, "Z");
}

std::vector<ConjugacyClass> conjugacy_classes(const Group& G) {
  std::vector<ConjugacyClass> out;
  std::vector<char> seen(G.order(), 0);
  for (int a = 0; a < G.order(); ++a) {  // ascending ids: first unseen is the least rep
    if (seen[a]) continue;
    std::set<int> cls;
    for (int h = 0; h < G.order(); ++h) cls.insert(G.conj(a, h));
    ConjugacyClass c{a, static_cast<int>(cls.size()), {cls.begin(), cls.end()}};
    for (int b : cls) seen[b] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> class_index(const Group& G) {
  std::vector<int> idx(G.order(), -1);
  auto cls = conjugacy_classes(G);
  for (size_t k = 0; k < cls.size(); ++k)
    for (int b : cls[k].members) idx[b] = static_cast<int>(k);
  return idx;
}

int involution_count(const Group& G) {
  int c = 0;
  for (int a = 0; a < G.order(); ++a) c += G.elem_order(a) == 2;
  return c;
}

// kernels of the surjections onto C_2, found by assigning 0/1 to the
// generators and propagating along the Cayley graph
std::vector<Subgroup> index_two_subgroups(GroupPtr G) {
  std::vector<Subgroup> out;
  const auto& gens = G->generators();
  int k = static_cast<int>(gens.size());
  std::set<std::vector<int>> seen;
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> val(G->order(), -1);
    val[0] = 0;
    std::queue<int> q;
    q.push(0);
    bool ok = true;
    while (!q.empty() && ok) {
      int a = q.front();
      q.pop();
      for (int s = 0; s < k; ++s) {
        int b = G->mul(a, gens[s]);
        int v = val[a] ^ ((mask >> s) & 1);
        if (val[b] < 0) {
          val[b] = v;
          q.push(b);
        } else if (val[b] != v) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<int> ker;
    for (int a = 0; a < G->order(); ++a)
      if (val[a] == 0) ker.push_back(a);
    if (static_cast<int>(ker.size()) * 2 != G->order()) continue;
    if (!seen.insert(ker).second) continue;
    Subgroup H;
    H.group = G;
    H.member.assign(G->order(), 0);
    for (int a : ker) H.member[a] = 1;
    H.elements = ker;
    out.push_back(std::move(H));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; });
  // small generating sets for display
  for (auto& H : out) {
    std::vector<int> gs;
    std::vector<char> cl(G->order(), 0);
    cl[0] = 1;
    for (int a : H.elements) {
      if (cl[a]) continue;
      gs.push_back(a);
      cl = closure(*G, gs);
    }
    H.gens = gs;
  }
  return out;
}

static void require_Gn(const Group& G, const char* what) {
  if (!G.is_Gn()) throw UnsupportedFamily(std::string(what) + ": group is not G_n");
}

Subgroup cyclic_part(GroupPtr G) {
  require_Gn(*G, "cyclic_part");
  return generate(G, {G->x(1)}, "C");
}

Subgroup dihedral_part(GroupPtr G) {
  require_Gn(*G, "dihedral_part");
  return generate(G, {G->x(2), G->y()}, "D");
}

Subgroup dicyclic_part(GroupPtr G) {
  require_Gn(*G, "dicyclic_part");
  return generate(G, {G->x(2), G->mul(G->y(), G->x(1))}, "DC");
}

Subgroup named_index_two(GroupPtr G, std::string_view which) {
  if (which == "C") return cyclic_part(G);
  if (which == "D") return dihedral_part(G);
  if (which == "DC") return dicyclic_part(G);
  throw DomainError("unknown subgroup name '" + std::string(which) + "' (expected C, D or DC)");
}

// ---- automorphisms ----

std::string Automorphism::label() const {
  if (u >= 0) return "psi_{" + std::to_string(u) + "," + std::to_string(2 * v) + "}";
  return "aut";
}

std::vector<int> extend_homomorphism(const Group& src, const std::vector<int>& gens, const Group& dst,
                                     const std::vector<int>& images) {
  std::vector<int> f(src.order(), -1);
  f[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (size_t s = 0; s < gens.size(); ++s) {
      int b = src.mul(a, gens[s]);
      int v = dst.mul(f[a], images[s]);
      if (f[b] < 0) {
        f[b] = v;
        q.push(b);
      } else if (f[b] != v) {
        return {};
      }
    }
  }
  for (int v : f)
    if (v < 0) return {};  // gens did not generate
  return f;
}

Automorphism psi(const Group& G, int u, int v) {
  require_Gn(G, "psi");
  int N = G.N();
  if (std::gcd(u, N) != 1) throw DomainError("psi: u must be a unit mod 4n");
  Automorphism a;
  a.u = mod(u, N);
  a.v = mod(v, N / 2);
  a.map.resize(G.order());
  int xu = G.x(a.u);
  int yim = G.mul(G.y(), G.x(2L * a.v));
  for (int g = 0; g < G.order(); ++g) {
    const Elem& e = G.elem(g);
    a.map[g] = G.mul(e.j ? yim : 0, G.pow(xu, e.i));
  }
  return a;
}

std::vector<Automorphism> automorphism_group(const Group& G) {
  if (!G.is_Gn()) throw UnsupportedFamily("generic-automorphisms-unavailable");
  std::vector<Automorphism> out;
  int N = G.N();
  for (int u = 1; u < N; ++u) {
    if (std::gcd(u, N) != 1) continue;
    for (int v = 0; v < N / 2; ++v) out.push_back(psi(G, u, v));
  }
  return out;
}

std::vector<Automorphism> brute_automorphisms(const Group& G, bool force) {
  if (G.order() >= 128 && !force) throw UnsupportedFamily("brute-force automorphism search limited to order < 128");
  const auto& gens = G.generators();
  std::vector<std::vector<int>> cand(gens.size());
  for (size_t s = 0; s < gens.size(); ++s)
    for (int a = 0; a < G.order(); ++a)
      if (G.elem_order(a) == G.elem_order(gens[s])) cand[s].push_back(a);
  std::vector<Automorphism> out;
  std::vector<int> img(gens.size());
  auto rec = [&](auto&& self, size_t s) -> void {
    if (s == gens.size()) {
      if (!generates(G, img)) return;
      auto f = extend_homomorphism(G, gens, G, img);
      if (f.empty()) return;
      Automorphism a;
      a.map = std::move(f);
      out.push_back(std::move(a));
      return;
    }
    for (int c : cand[s]) {
      img[s] = c;
      self(self, s + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Automorphism> automorphisms(const Group& G) {
  if (G.is_Gn()) return automorphism_group(G);
  return brute_automorphisms(G, true);
}

}  // namespace gqd
