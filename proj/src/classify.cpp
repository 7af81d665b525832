#include "gqd/classify.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "gqd/analysis.hpp"

namespace gqd {

bool MoveSet::braid_only() const {
  return std::all_of(moves.begin(), moves.end(), [](const Move& m) { return m.braid; });
}

// ---- moves ----

namespace {

std::vector<int> braid(const ActionContext& c, std::vector<int> v, int i, int times) {
  const Group& G = *c.group;
  for (int t = 0; t < times; ++t) {
    int a = v[i], b = v[i + 1];
    v[i] = G.mul(G.mul(a, b), G.inv(a));
    v[i + 1] = a;
  }
  return v;
}

bool all_equal(const std::vector<int>& p) {
  return std::all_of(p.begin(), p.end(), [&](int m) { return m == p.front(); });
}

}  // namespace

MoveSet moves_for(const Signature& sig) {
  MoveSet set;
  const auto& p = sig.periods;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    int times = p[i] == p[i + 1] ? 1 : 2;
    int at = static_cast<int>(i);
    std::string name = "sigma" + std::to_string(i + 1) + (times == 2 ? "^2" : "");
    set.moves.push_back({name, [at, times](const ActionContext& c, const std::vector<int>& v) {
                           return braid(c, v, at, times);
                         },
                         true});
  }

  if (sig.h == 1 && !sig.orientable && sig.cycles.empty() && p.size() == 3 && all_equal(p)) {
    // (d1, b1, b2, b3) -> (b3 d1 b3^-1, b3, b1, b2)
    set.moves.push_back({"cyclic", [](const ActionContext& c, const std::vector<int>& v) {
                           const Group& G = *c.group;
                           int d = c.pres.find(GenKind::Glide, 1);
                           std::vector<int> w = v;
                           w[d] = G.mul(G.mul(v[2], v[d]), G.inv(v[2]));
                           w[0] = v[2];
                           w[1] = v[0];
                           w[2] = v[1];
                           return w;
                         }});
    if (p.front() == 2) {
      // d1 -> b1 d1^-1, b1 -> d1^-1 b3 d1, b2 -> d1^-1 b2 d1, b3 -> b1
      set.moves.push_back({"L", [](const ActionContext& c, const std::vector<int>& v) {
                             const Group& G = *c.group;
                             int d = c.pres.find(GenKind::Glide, 1);
                             int di = G.inv(v[d]);
                             std::vector<int> w = v;
                             w[d] = G.mul(v[0], di);
                             w[0] = G.mul(G.mul(di, v[2]), v[d]);
                             w[1] = G.mul(G.mul(di, v[1]), v[d]);
                             w[2] = v[0];
                             return w;
                           }});
    }
  }

  if (sig.h == 0 && sig.orientable && p.size() == 2 && sig.cycles.size() == 1 && sig.cycles[0].empty()) {
    // b1 -> b2^2, b2 -> b2^-1, e1 -> b2^-1, c10 -> b1 c10, c11 -> b2^-1 c10 b1 b2
    set.moves.push_back({"L", [](const ActionContext& c, const std::vector<int>& v) {
                           const Group& G = *c.group;
                           const auto& P = c.pres;
                           int e = P.find(GenKind::Boundary, 1);
                           int c0 = P.find(GenKind::Reflection, 1, 0);
                           int c1 = P.find(GenKind::Reflection, 1, 1);
                           int b2i = G.inv(v[1]);
                           std::vector<int> w = v;
                           w[0] = G.mul(v[1], v[1]);
                           w[1] = b2i;
                           w[e] = b2i;
                           w[c0] = G.mul(v[0], v[c0]);
                           w[c1] = G.mul(G.mul(G.mul(b2i, v[c0]), v[0]), v[1]);
                           return w;
                         }});
  }

  if (set.moves.empty()) set.coarse = true;
  return set;
}

MoveSet default_moves(const Signature& sig) {
  auto set = moves_for(sig);
  if (set.coarse) throw UnsupportedShape("no-move-set");
  return set;
}

MoveSet verify_moves(MoveSet set, const std::vector<GeneratingVector>& vectors) {
  MoveSet out;
  out.coarse = set.coarse;
  out.rejected = set.rejected;
  for (auto& m : set.moves) {
    bool ok = true;
    for (const auto& v : vectors) {
      if (!check_images(*v.ctx, m.apply(*v.ctx, v.images)).ok) {
        ok = false;
        break;
      }
    }
    if (ok) out.moves.push_back(std::move(m));
    else out.rejected.push_back(m.name);
  }
  return out;
}

// ---- invariants ----

Fusion aut_fusion(const Group& G, const std::vector<Automorphism>& auts) {
  Fusion f;
  f.cls = class_index(G);
  int nc = *std::max_element(f.cls.begin(), f.cls.end()) + 1;
  std::vector<int> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& a : auts)
    for (int g = 0; g < G.order(); ++g) {
      int x = find(f.cls[g]), y = find(f.cls[a(g)]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  std::vector<int> renum(nc, -1);
  int next = 0;
  for (int c = 0; c < nc; ++c) {
    int r = find(c);
    if (renum[r] < 0) renum[r] = next++;
  }
  f.label.resize(G.order());
  for (int g = 0; g < G.order(); ++g) f.label[g] = renum[find(f.cls[g])];
  f.class_of_fused_count.assign(next, 0);
  for (int c = 0; c < nc; ++c) ++f.class_of_fused_count[renum[find(c)]];
  return f;
}

std::string Invariant::str() const {
  auto list = [](const std::vector<int>& v) {
    std::string s = "[";
    for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + "]";
  };
  std::string s = "classes=" + list(elliptic_classes);
  if (has_fixed_data) s += " fixed=" + list(fixed_classes) + " pnf=" + (purely_non_free ? "1" : "0");
  if (!other_orders.empty()) s += " orders=" + list(other_orders);
  return s;
}

Invariant separating_invariant(const GeneratingVector& v, const Fusion& fusion, bool include_other_orders) {
  const auto& ctx = *v.ctx;
  const Group& G = *ctx.group;
  Invariant inv;
  for (size_t k = 0; k < ctx.pres.gens.size(); ++k) {
    if (ctx.pres.gens[k].kind == GenKind::Elliptic) inv.elliptic_classes.push_back(fusion.label[v.images[k]]);
    else if (include_other_orders) inv.other_orders.push_back(G.elem_order(v.images[k]));
  }
  std::sort(inv.elliptic_classes.begin(), inv.elliptic_classes.end());
  if (ctx.mode == Mode::RiemannSurface) {
    inv.has_fixed_data = true;
    auto rep = fixed_point_report(v);
    inv.fixed_classes.assign(fusion.class_of_fused_count.size(), 0);
    inv.purely_non_free = true;
    for (auto [g, f] : rep.by_class_rep) {
      if (f > 0) ++inv.fixed_classes[fusion.label[g]];
      else inv.purely_non_free = false;
    }
  }
  return inv;
}

// ---- closure ----

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

Classification classify(const std::vector<GeneratingVector>& vectors, const MoveSet& moves,
                        const std::vector<Automorphism>& auts) {
  Classification out;
  out.coarse = moves.coarse;
  out.rejected_moves = moves.rejected;
  if (vectors.empty()) return out;
  auto ctx = vectors.front().ctx;

  std::unordered_map<std::vector<int>, int, VecHash> id;
  std::vector<std::vector<int>> nodes;
  std::vector<int> parent;
  std::deque<int> queue;
  auto node = [&](const std::vector<int>& v) {
    auto [it, fresh] = id.try_emplace(v, static_cast<int>(nodes.size()));
    if (fresh) {
      if (static_cast<long>(nodes.size()) >= kOrbitCap) throw std::length_error("orbit-overflow: more than 10^7 vectors");
      nodes.push_back(v);
      parent.push_back(it->second);
      queue.push_back(it->second);
    }
    return it->second;
  };
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  std::vector<int> input;
  for (const auto& v : vectors) input.push_back(node(v.images));
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const auto& a : auts) {
      std::vector<int> w = nodes[cur];
      for (int& x : w) x = a(x);
      int nb = node(w);
      unite(cur, nb);
    }
    for (const auto& m : moves.moves) {
      int nb = node(m.apply(*ctx, nodes[cur]));
      unite(cur, nb);
    }
  }

  // orbits over the input members, representative = least input member
  std::map<int, std::vector<int>> members;
  for (int k : input) members[find(k)].push_back(k);
  auto fusion = aut_fusion(*ctx->group, auts);
  bool orders = moves.braid_only();
  std::vector<Invariant> seen;
  for (auto& [root, ms] : members) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    int best = *std::min_element(ms.begin(), ms.end(), [&](int a, int b) { return nodes[a] < nodes[b]; });
    GeneratingVector rep{ctx, nodes[best]};
    Orbit o{rep, static_cast<long>(ms.size()), separating_invariant(rep, fusion, orders)};
    seen.push_back(o.invariant);
    out.orbits.push_back(std::move(o));
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const Orbit& a, const Orbit& b) { return a.representative.images < b.representative.images; });
  std::sort(seen.begin(), seen.end());
  out.distinct_invariants = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
  return out;
}

Classification classify_all(ContextPtr ctx, int workers) {
  auto vs = enumerate_vectors(ctx, {workers, true});
  auto moves = verify_moves(moves_for(ctx->sig), vs);
  return classify(vs, moves, automorphisms(*ctx->group));
}

}  // namespace gqd
