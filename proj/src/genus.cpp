#include "gqd/genus.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gqd/analysis.hpp"

namespace gqd {

// ---- search core ----

Rational area_for_genus(long g, long order, KernelKind kind) {
  switch (kind) {
    case KernelKind::OrientableUnbordered: return Rational(2 * g - 2, order);
    case KernelKind::NonOrientableUnbordered: return Rational(g - 2, order);
    case KernelKind::Bordered: return Rational(g - 1, order);
  }
  return Rational(0);
}

Rational default_bound(long claimed, long order, KernelKind kind) {
  // one genus step: OU moves the area by 2/|G|, the others by 1/|G|
  return area_for_genus(claimed + 1, order, kind);
}

std::vector<int> element_orders(const Group& G) {
  std::set<int> s;
  for (int g = 1; g < G.order(); ++g) s.insert(G.elem_order(g));
  return {s.begin(), s.end()};
}

namespace {

struct Outcome {
  std::string status;  // witness | incompatible-order | below-genus-floor | inadmissible | extends-with-reflections
  long genus = -1;
  std::optional<GeneratingVector> witness;
};

bool extends_with_reflections(const Signature& s) {
  auto ext = extension_lookup(s);
  if (ext.empty()) return false;
  return std::all_of(ext.begin(), ext.end(), [](const Signature& e) { return e.reflection_count() > 0 || !e.cycles.empty(); });
}

Outcome evaluate(const SearchSpec& spec, const Signature& sig, bool pseudo_real) {
  Outcome o;
  auto kind = kernel_kind(spec.mode);
  if (!rh_integral(sig, spec.group->order(), kind)) {
    o.status = "incompatible-order";
    return o;
  }
  o.genus = rh_genus(sig, spec.group->order(), kind);
  if (o.genus < spec.min_genus) {
    o.status = "below-genus-floor";
    return o;
  }
  if (pseudo_real && extends_with_reflections(sig)) {
    o.status = "extends-with-reflections";
    return o;
  }
  auto ctx = make_context(sig, spec.group, spec.mode, spec.target);
  o.witness = find_vector(ctx, spec.predicate, 1);
  o.status = o.witness ? "witness" : "inadmissible";
  return o;
}

}  // namespace

GenusRecord minimal_genus_search(const SearchSpec& spec) {
  auto sigs = enumerate_signatures(spec.bound, element_orders(*spec.group), spec.filter);
  const bool pseudo_real = spec.invariant == "pseudo_real_min";
  GenusRecord rec;
  rec.invariant = spec.invariant;
  rec.scenario = spec.scenario;
  rec.n = spec.n;
  rec.bound = spec.bound;
  rec.searched = static_cast<int>(sigs.size());

#ifdef _OPENMP
  const int threads = spec.workers > 0 ? spec.workers : omp_get_max_threads();
#else
  const int threads = 1;
#endif
  const size_t chunk = static_cast<size_t>(std::max(8, 4 * threads));
  std::optional<Rational> witness_area;

  for (size_t start = 0; start < sigs.size(); start += chunk) {
    size_t end = std::min(sigs.size(), start + chunk);
    if (witness_area && reduced_area(sigs[start]) != *witness_area) break;
    std::vector<Outcome> out(end - start);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (size_t k = start; k < end; ++k) out[k - start] = evaluate(spec, sigs[k], pseudo_real);

    for (size_t k = start; k < end; ++k) {
      auto& o = out[k - start];
      if (witness_area) {
        if (reduced_area(sigs[k]) != *witness_area) break;
        if (o.status == "witness") rec.alternatives.push_back(sigs[k]);
        continue;
      }
      if (o.status == "witness") {
        rec.value = o.genus;
        rec.witness_sig = sigs[k];
        rec.witness = std::move(o.witness);
        witness_area = reduced_area(sigs[k]);
        if (!spec.collect_alternatives) break;
        continue;
      }
      rec.certificates.push_back({sigs[k], o.status, o.genus});
    }
    if (witness_area && !spec.collect_alternatives) break;
  }
  if (!witness_area)
    throw SearchExhausted("bound-too-small: no admissible signature with area <= " + to_string(spec.bound) + " (" +
                          std::to_string(sigs.size()) + " signatures exhausted)");
  return rec;
}

// ---- named searches ----

long expected_sigma0(int n) { return n; }
long expected_sigma_p(int n) { return n % 2 == 0 ? n : 3L * n; }
long expected_sigma_hyp(int n, const std::string& which) {
  if (which == "D") return 2L * n + 1;
  if (which == "DC") return n % 2 == 0 ? n : n - 1;
  if (which == "C") return 2L * n - 1;
  throw DomainError("unknown subgroup '" + which + "' (expected C, D or DC)");
}
long expected_rho(int n) { return 2L * n + 1; }
long expected_crosscap(int n) { return 2L * n + 2; }

static void check_n(int n) {
  if (n < 2) throw DomainError("n must be at least 2");
}

static SearchSpec base_spec(const std::string& inv, int n, GroupPtr G, Mode mode, long claimed,
                            const SearchOptions& opt) {
  SearchSpec s;
  s.invariant = inv;
  s.n = n;
  s.group = std::move(G);
  s.mode = mode;
  s.workers = opt.workers;
  s.bound = opt.area_bound ? *opt.area_bound : default_bound(claimed, s.group->order(), kernel_kind(mode));
  return s;
}

GenusRecord strong_symmetric_genus(int n, const SearchOptions& opt) {
  check_n(n);
  auto s = base_spec("sigma0", n, Group::G(n), Mode::RiemannSurface, expected_sigma0(n), opt);
  s.filter.nonorientable = false;
  s.filter.allow_cycles = false;
  return minimal_genus_search(s);
}

GenusRecord pure_symmetric_genus(int n, const SearchOptions& opt) {
  check_n(n);
  auto s = base_spec("sigma_p", n, Group::G(n), Mode::RiemannSurface, expected_sigma_p(n), opt);
  s.filter.nonorientable = false;
  s.filter.allow_cycles = false;
  s.predicate = [](const GeneratingVector& v) { return is_purely_non_free(v); };
  return minimal_genus_search(s);
}

GenusRecord symmetric_hyperbolic_genus(int n, const std::string& which, const SearchOptions& opt) {
  check_n(n);
  auto G = Group::G(n);
  auto s = base_spec("sigma_hyp", n, G, Mode::RiemannSurface, expected_sigma_hyp(n, which), opt);
  s.scenario = which;
  s.target = named_index_two(G, which);
  s.filter.require_non_fuchsian = true;
  return minimal_genus_search(s);
}

GenusRecord real_genus(int n, const SearchOptions& opt) {
  check_n(n);
  auto s = base_spec("rho", n, Group::G(n), Mode::BorderedKlein, expected_rho(n), opt);
  s.filter.require_cycles = true;
  s.filter.boundary_capable = true;
  s.min_genus = 0;
  return minimal_genus_search(s);
}

GenusRecord symmetric_crosscap(int n, const SearchOptions& opt) {
  check_n(n);
  auto s = base_spec("crosscap", n, Group::G(n), Mode::UnborderedKlein, expected_crosscap(n), opt);
  s.filter.require_non_fuchsian = true;
  s.min_genus = 3;
  return minimal_genus_search(s);
}

Scenario pseudo_real_scenario(int n, const std::string& scenario) {
  check_n(n);
  Scenario sc;
  if (scenario == "conformal_antic") {
    sc.group = Group::G(n);
    sc.conformal = named_index_two(sc.group, "D");
    sc.expected = 2L * n + 1;
  } else if (scenario == "conformal_only_odd") {
    if (n % 2 == 0) throw DomainError("conformal_only_odd needs odd n");
    sc.group = Group::Ghat(n);
    sc.conformal = generate(sc.group, {sc.group->z(2), sc.group->y()}, "G_n");
    sc.expected = 6L * n + 1;
  } else if (scenario == "index_two_even") {
    sc.group = Group::K(n);
    sc.conformal = generate(sc.group, {sc.group->x(1), sc.group->y(), sc.group->z(2)}, "H_n");
  } else {
    throw DomainError("unknown scenario '" + scenario + "' (expected conformal_antic, conformal_only_odd or index_two_even)");
  }
  // the conformal part has to hold every involution
  bool ok = false;
  for (const auto& H : pseudo_real_conformal_part(sc.group))
    if (H.elements == sc.conformal.elements) ok = true;
  if (!ok) throw DomainError("scenario conformal part misses an involution");
  return sc;
}

GenusRecord pseudo_real_min(int n, const std::string& scenario, const SearchOptions& opt) {
  auto sc = pseudo_real_scenario(n, scenario);
  // without a claimed value, the smallest member of the explicit family bounds the search
  long claimed = sc.expected >= 0 ? sc.expected : ejemplo_witness(n, 1, 2).genus;
  auto s = base_spec("pseudo_real_min", n, sc.group, Mode::RiemannSurface, claimed, opt);
  s.scenario = scenario;
  s.target = sc.conformal;
  // reflections would need involutions outside the conformal part, and there are none
  s.filter.orientable = false;
  s.filter.allow_cycles = false;
  return minimal_genus_search(s);
}

// ---- families ----

static std::string pw(const std::string& g, long e) { return e == 1 ? g : g + "^" + std::to_string(e); }

static Signature periods_sig(int h, bool orientable, std::vector<int> periods) {
  Signature s;
  s.h = h;
  s.orientable = orientable;
  s.periods = std::move(periods);
  return s;
}

static FamilyWitness finish(ContextPtr ctx, std::vector<std::string> elems, long formula) {
  const Group& G = *ctx->group;
  std::vector<int> ids;
  for (const auto& e : elems) ids.push_back(G.parse(e));
  auto v = make_vector(ctx, ids);
  FamilyWitness w{v, rh_genus(ctx->sig, G.order(), KernelKind::OrientableUnbordered), formula};
  return w;
}

FamilyWitness tps_witness(int n, int k) {
  check_n(n);
  if (k < 3) throw DomainError("tps family needs k >= 3");
  auto G = Group::G(n);
  auto ctx = make_context(periods_sig(1, false, std::vector<int>(k, 2)), G, Mode::RiemannSurface,
                          named_index_two(G, "D"));
  std::vector<std::string> e;
  for (int i = 1; i < k; ++i) e.push_back("y");
  e.push_back((k % 2 == 0 ? "y" : "") + pw("x", 2L * n));
  e.push_back("yx");  // d1
  return finish(ctx, e, 2L * n * k - 4L * n + 1);
}

FamilyWitness tps1_witness(int n, int l, int r) {
  if (n < 3 || n % 2 == 0) throw DomainError("tps1 family needs odd n >= 3");
  if (l < 2 || r < 1 || r % 2 == 0) throw DomainError("tps1 family needs l >= 2 and odd r >= 1");
  auto G = Group::Ghat(n);
  std::vector<int> periods(l, 2);
  periods.insert(periods.end(), r, 4);
  auto target = generate(G, {G->z(2), G->y()}, "G_n");
  auto ctx = make_context(periods_sig(1, false, periods), G, Mode::RiemannSurface, target);
  std::vector<std::string> e;
  std::string d;
  if (l % 2 == 0) {
    e.push_back("y" + pw("z", 2L * n + 2));
    for (int j = 2; j <= l; ++j) e.push_back("y");
    d = "z";
  } else {
    for (int j = 1; j < l; ++j) e.push_back("y");
    e.push_back(pw("z", 4L * n));
    d = "yz";
  }
  e.push_back(pw("z", 2L * n));
  for (int s = 2; s + 1 <= r; s += 2) {
    e.push_back(pw("z", 2L * n));
    e.push_back(pw("z", -2L * n));
  }
  e.push_back(d);
  return finish(ctx, e, 4L * n * l + 6L * n * r - 8L * n + 1);
}

FamilyWitness ejemplo_witness(int n, int alpha, int beta) {
  check_n(n);
  if (alpha < 1 || beta < 2 || beta % 2 != 0) throw DomainError("ejemplo family needs alpha >= 1 and even beta >= 2");
  auto G = Group::K(n);
  std::vector<int> periods(1 + alpha, 2);
  periods.insert(periods.end(), beta, 4);
  auto target = generate(G, {G->x(1), G->y(), G->z(2)}, "H_n");
  auto ctx = make_context(periods_sig(1, false, periods), G, Mode::RiemannSurface, target);
  const int m = 1;  // free parameter of the construction
  std::vector<std::string> e{"z^2yx^2", "y"};
  int first_pair = 2;
  if (alpha % 2 == 0) {
    e.push_back(pw("x", 2L * n));
    first_pair = 3;
  }
  for (int i = first_pair; i + 1 <= alpha; i += 2) {
    e.push_back("y");  // yx^{m_i} with m_i = 0
    e.push_back("y");
  }
  e.push_back("yx");
  e.push_back(alpha % 2 == 1 ? "y" + pw("x", 2L * n - 2 * m + 3) : "y" + pw("x", -2 * m + 3));
  for (int j = 3; j + 1 <= beta; j += 2) {
    e.push_back("yx");  // yx^{m_j} with m_j = 1, followed by its inverse
    e.push_back("yx^" + std::to_string(2 * n + 1));
  }
  e.push_back("z" + pw("x", m));
  return finish(ctx, e, 12L * n * beta + 8L * n * alpha - 8L * n + 1);
}

// ---- static tables ----

std::vector<Signature> extension_lookup(const Signature& sig) {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
      {"(0;+;[4,4];{(-)})", {"(0;+;[2,4];{(-)})", "(0;+;[4];{(2,2)})"}},
      {"(0;+;[3,4];{(-)})", {"(0;+;[-];{(2,2,3,4)})"}},
      {"(1;-;[4,4];{-})", {"(0;+;[2,4];{(-)})"}},
      {"(1;-;[2,4];{-})", {"(0;+;[2];{(2,4)})"}},
  };
  auto c = sig.canonical();
  std::vector<Signature> out;
  for (const auto& [from, to] : table)
    if (Signature::parse(from).canonical() == c)
      for (const auto& t : to) out.push_back(Signature::parse(t));
  return out;
}

std::vector<SubgroupRho> subgroup_rho_table() {
  std::vector<SubgroupRho> t;
  for (int n = 2; n <= 10; ++n) {
    t.push_back({"C", n, 0});
    t.push_back({"D", n, 0});
    t.push_back({"DC", n, n == 3 ? 6 : 2L * n + 1});
  }
  return t;
}

}  // namespace gqd
