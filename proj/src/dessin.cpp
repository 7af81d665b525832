#include "gqd/dessin.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

namespace gqd {

// ---- permutations ----

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t k = 0; k < p.size(); ++k) r[k] = q[p[k]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t k = 0; k < p.size(); ++k) r[p[k]] = static_cast<int>(k);
  return r;
}

Perm perm_power(const Perm& p, long k) {
  Perm base = k < 0 ? perm_inverse(p) : p;
  if (k < 0) k = -k;
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = static_cast<int>(i);
  while (k > 0) {
    if (k & 1) r = perm_compose(r, base);
    base = perm_compose(base, base);
    k >>= 1;
  }
  return r;
}

bool perm_is_identity(const Perm& p) {
  for (size_t k = 0; k < p.size(); ++k)
    if (p[k] != static_cast<int>(k)) return false;
  return true;
}

std::vector<std::vector<int>> perm_cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.size(), 0);
  for (size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = static_cast<int>(s); !seen[x]; x = p[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

long perm_group_order(const std::vector<Perm>& gens, long cap) {
  if (gens.empty()) return 1;
  Perm id(gens.front().size());
  for (size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        auto q = perm_compose(p, g);
        if (seen.insert(q).second) {
          if (static_cast<long>(seen.size()) > cap) throw std::length_error("permutation group larger than cap");
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  return static_cast<long>(seen.size());
}

// ---- monodromy ----

MonodromyPair regular_monodromy(const Group& G, int a, int b) {
  if (!generates(G, {a, b}))
    throw DomainError("(" + G.name(a) + ", " + G.name(b) + ") does not generate the group");
  MonodromyPair p;
  p.edges = G.order();
  p.white.resize(G.order());
  p.black.resize(G.order());
  p.labels.resize(G.order());
  for (int e = 0; e < G.order(); ++e) {
    p.white[e] = G.mul(e, a);
    p.black[e] = G.mul(e, b);
    p.labels[e] = e;
  }
  return p;
}

static bool transitive(const MonodromyPair& p) {
  std::vector<char> seen(p.edges, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    for (int f : {p.white[e], p.black[e]})
      if (!seen[f]) {
        seen[f] = 1;
        ++count;
        stack.push_back(f);
      }
  }
  return count == p.edges;
}

DessinGraph dessin_data(const MonodromyPair& p) {
  if (p.edges <= 0 || !transitive(p)) throw DomainError("monodromy pair is not transitive");
  DessinGraph d;
  auto wc = perm_cycles(p.white), bc = perm_cycles(p.black), fc = perm_cycles(perm_compose(p.white, p.black));
  std::vector<int> w_of(p.edges), b_of(p.edges);
  for (size_t k = 0; k < wc.size(); ++k) {
    d.white_valency.push_back(static_cast<int>(wc[k].size()));
    for (int e : wc[k]) w_of[e] = static_cast<int>(k);
  }
  for (size_t k = 0; k < bc.size(); ++k) {
    d.black_valency.push_back(static_cast<int>(bc[k].size()));
    for (int e : bc[k]) b_of[e] = static_cast<int>(k);
  }
  for (const auto& c : fc) d.face_length.push_back(static_cast<int>(c.size()));
  std::map<std::pair<int, int>, int> mult;
  for (int e = 0; e < p.edges; ++e) ++mult[{w_of[e], b_of[e]}];
  for (auto [wb, m] : mult) d.edges.emplace_back(wb.first, wb.second, m);
  int V = static_cast<int>(wc.size() + bc.size()), F = static_cast<int>(fc.size());
  int chi = V - p.edges + F;
  if (chi % 2 != 0 || chi > 2) throw std::logic_error("internal-consistency: bad Euler characteristic");
  d.genus = (2 - chi) / 2;
  return d;
}

bool DessinGraph::complete_bipartite(int multiplicity) const {
  if (edges.size() != white_valency.size() * black_valency.size()) return false;
  return std::all_of(edges.begin(), edges.end(), [&](const auto& e) { return std::get<2>(e) == multiplicity; });
}

std::string DessinGraph::dot() const {
  std::ostringstream o;
  o << "graph dessin {\n";
  for (size_t k = 0; k < white_valency.size(); ++k)
    o << "  w" << k << " [shape=circle, style=filled, fillcolor=white, label=\"" << white_valency[k] << "\"];\n";
  for (size_t k = 0; k < black_valency.size(); ++k)
    o << "  b" << k << " [shape=circle, style=filled, fillcolor=black, fontcolor=white, label=\"" << black_valency[k]
      << "\"];\n";
  for (auto [w, b, m] : edges)
    for (int k = 0; k < m; ++k) o << "  w" << w << " -- b" << b << ";\n";
  o << "}\n";
  return o.str();
}

std::string DessinGraph::json() const {
  nlohmann::ordered_json j;
  j["white"] = white_valency;
  j["black"] = black_valency;
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [w, b, m] : edges) j["edges"].push_back({{"white", w}, {"black", b}, {"multiplicity", m}});
  j["faces"] = face_length;
  j["genus"] = genus;
  return j.dump(2);
}

// ---- generating pairs ----

std::vector<std::pair<int, int>> generator_pair_classes(const Group& G, int workers) {
  const int N = G.order();
  std::vector<std::vector<std::pair<int, int>>> per(N);
#ifdef _OPENMP
  int threads = workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
#endif
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      bool least = true;
      for (int h = 1; h < N && least; ++h) {
        int ca = G.conj(a, h);
        if (ca < a || (ca == a && G.conj(b, h) < b)) least = false;
      }
      if (least && generates(G, {a, b})) per[a].emplace_back(a, b);
    }
  }
  std::vector<std::pair<int, int>> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

GnDessin gn_dessin(const Group& Gn) {
  if (!Gn.is_Gn()) throw DomainError("gn_dessin needs a G_n group");
  GnDessin d;
  d.eta = Gn.x(1);
  d.sigma = Gn.y();
  d.tau = Gn.mul(Gn.y(), Gn.x(-1));
  d.monodromy = regular_monodromy(Gn, d.eta, d.tau);
  return d;
}

}  // namespace gqd
