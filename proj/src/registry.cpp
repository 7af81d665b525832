#include "gqd/registry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gqd {

const char* to_string(Status s) {
  switch (s) {
    case Status::Confirmed: return "confirmed";
    case Status::Refuted: return "refuted";
    case Status::Inconclusive: return "inconclusive";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Refuted: return 2;
    case Status::Inconclusive: return 3;
    default: return 0;
  }
}

int VerifyReport::exit_code() const {
  int c = 0;
  for (const auto& r : results) c = std::max(c, gqd::exit_code(r.status));
  return c;
}

Json VerifyReport::to_json() const {
  Json j;
  j["theorem"] = theorem;
  j["statement"] = statement;
  Json per = Json::array();
  for (const auto& r : results) per.push_back({{"n", r.n}, {"status", to_string(r.status)}, {"evidence", r.evidence}});
  j["results"] = per;
  return j;
}

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> reg = {
      {"group-structure", "conjugacy classes, involutions, |Aut(G_n)| and the three index-2 subgroups"},
      {"thm-triangular", "G_n acts on genus n with signature (0;+;[2,4,4n];{-}); unique; fixed points; purely-non-free iff n even"},
      {"cor-strong-1", "strong symmetric genus of G_n is n"},
      {"cor-strong-2", "pure symmetric genus is n (n even) and 3n (n odd)"},
      {"thm-hyp1-D", "symmetric hyperbolic genus relative to D_4n is 2n+1"},
      {"thm-hyp1-DC", "symmetric hyperbolic genus relative to DC_4n is n (n even) and n-1 (n odd)"},
      {"thm-hyp1-C", "symmetric hyperbolic genus relative to C_4n is 2n-1"},
      {"thm-real-a", "real genus of G_n is 2n+1 and the action is unique"},
      {"thm-real-b", "symmetric crosscap number of G_n is 2n+2"},
      {"prop-pmprs", "minimal pseudo-real genus with conformal part D_4n is 2n+1, unique action, fixed point counts"},
      {"thm-tps2", "for n even no pseudo-real surface has G_n inside an index-2 overgroup (involution parity)"},
      {"thm-jacobian", "isogeny dimension identities for the triangular action"},
      {"thm-mps-plus", "minimal pseudo-real genus for hat-G_n with conformal part G_n is 6n+1 (n odd), several actions", false},
      {"thm-families", "explicit pseudo-real families tps, tps1 and ejemplo have their closed-form genera", false},
      {"rem-dessin", "regular dessin of G_n: relations, genus n, graph K_{2,2n} doubled", false},
  };
  return reg;
}

std::string theorem_ids_text() {
  std::string s;
  for (const auto& t : theorem_registry()) s += (s.empty() ? "" : ", ") + t.id;
  return s;
}

// ---- helpers ----

namespace {

struct Checks {
  Json items = Json::array();
  bool failed = false;
  bool inconclusive = false;

  bool add(const std::string& name, bool pass, Json detail = nullptr) {
    Json e{{"check", name}, {"pass", pass}};
    if (!detail.is_null()) e["detail"] = std::move(detail);
    items.push_back(std::move(e));
    if (!pass) failed = true;
    return pass;
  }

  NVerdict verdict(int n) const {
    NVerdict v;
    v.n = n;
    v.status = failed ? Status::Refuted : inconclusive ? Status::Inconclusive : Status::Confirmed;
    v.evidence = {{"checks", items}};
    return v;
  }
};

using SearchFn = std::function<GenusRecord(const SearchOptions&)>;

// default bound first, then wider ones so that a refutation carries an actual witness
std::optional<GenusRecord> run_search(Checks& ck, const std::string& name, const SearchFn& f, long expected, long order,
                                      KernelKind kind, const VerifyOptions& opt) {
  std::vector<Rational> bounds;
  if (opt.area_bound) bounds.push_back(*opt.area_bound);
  else {
    Rational b = default_bound(expected, order, kind);
    for (int k = 0; k < 4; ++k, b *= 2) bounds.push_back(b);
  }
  std::string last;
  for (const auto& b : bounds) {
    SearchOptions so;
    so.area_bound = b;
    so.workers = opt.workers;
    try {
      return f(so);
    } catch (const SearchExhausted& e) {
      last = e.what();
    }
  }
  ck.inconclusive = true;
  ck.items.push_back({{"check", name}, {"pass", nullptr}, {"inconclusive", last}});
  return std::nullopt;
}

void genus_value(Checks& ck, const std::string& name, const std::optional<GenusRecord>& r, long expected) {
  if (!r) return;
  Json d = to_json(*r);
  d["expected"] = expected;
  ck.add(name, r->value == expected, d);
}

std::string p(const std::string& g, long e) { return e == 1 ? g : g + "^" + std::to_string(e); }

bool is_cyclic(const Group& H) {
  for (int g = 0; g < H.order(); ++g)
    if (H.elem_order(g) == H.order()) return true;
  return false;
}

bool has_cyclic_index_two(const Group& H) {
  for (int g = 0; g < H.order(); ++g)
    if (2 * H.elem_order(g) == H.order()) return true;
  return false;
}

bool is_abelian(const Group& H) {
  for (int a = 0; a < H.order(); ++a)
    for (int b = 0; b < H.order(); ++b)
      if (H.mul(a, b) != H.mul(b, a)) return false;
  return true;
}

// ---- theorems ----

NVerdict group_structure(int n, const VerifyOptions&) {
  Checks ck;
  auto G = Group::G(n);
  int classes = static_cast<int>(conjugacy_classes(*G).size());
  int want = n % 2 == 0 ? 2 * n + 3 : 2 * n + 6;
  ck.add("conjugacy-classes", classes == want, {{"count", classes}, {"expected", want}});
  int inv = involution_count(*G);
  ck.add("involutions-G", inv == 2 * n + 1, {{"count", inv}, {"expected", 2 * n + 1}});
  for (auto [name, expect] : std::vector<std::pair<std::string, int>>{{"D", 2 * n + 1}, {"C", 1}, {"DC", 1}}) {
    auto H = as_group(named_index_two(G, name));
    int c = involution_count(*H);
    ck.add("involutions-" + name, c == expect, {{"count", c}, {"expected", expect}});
  }
  long aut = static_cast<long>(automorphism_group(*G).size());
  long want_aut = static_cast<long>(euler_phi(4 * n)) * 2 * n;
  ck.add("automorphisms", aut == want_aut, {{"count", aut}, {"expected", want_aut}});
  if (G->order() < 128) {
    long brute = static_cast<long>(brute_automorphisms(*G).size());
    ck.add("automorphisms-brute-force", brute == want_aut, {{"count", brute}});
  }
  auto subs = index_two_subgroups(G);
  ck.add("index-two-count", subs.size() == 3, {{"count", subs.size()}});
  std::vector<std::string> types;
  for (const auto& S : subs) {
    auto H = as_group(S);
    std::string t = "other";
    if (is_cyclic(*H)) t = "cyclic";
    else if (has_cyclic_index_two(*H) && !is_abelian(*H) && involution_count(*H) == 1) t = "dicyclic";
    else if (has_cyclic_index_two(*H) && !is_abelian(*H) && involution_count(*H) == H->order() / 2 + 1) t = "dihedral";
    types.push_back(t);
  }
  std::sort(types.begin(), types.end());
  ck.add("index-two-types", types == std::vector<std::string>{"cyclic", "dicyclic", "dihedral"}, types);
  // the named subgroups are the ones found
  std::vector<std::vector<int>> found, named;
  for (const auto& S : subs) found.push_back(S.elements);
  for (auto w : {"C", "D", "DC"}) named.push_back(named_index_two(G, w).elements);
  std::sort(found.begin(), found.end());
  std::sort(named.begin(), named.end());
  ck.add("index-two-named", found == named);
  return ck.verdict(n);
}

NVerdict triangular(int n, const VerifyOptions& opt) {
  Checks ck;
  auto v = triangular_vector(n);
  auto G = v.ctx->group;
  ck.add("theta01-valid", check_vector(v).ok, check_vector(v).diagnosis);
  auto all = enumerate_vectors(v.ctx, {opt.workers, true});
  ck.add("nonempty", !all.empty(), {{"vectors", all.size()}});
  // every vector is theta_{k,r}: beta1 = x^k y (k even), beta3 = x^r (r a unit), beta2 = y x^{-(k+r)}
  bool profile = true;
  for (const auto& w : all) {
    const auto& b1 = G->elem(w.images[0]);
    const auto& b3 = G->elem(w.images[2]);
    if (b1.j != 1 || b3.j != 0 || std::gcd(b3.i, 4 * n) != 1) profile = false;
    else {
      // x^k y = y x^{tk}, so the exponent of b1 in normal form is t k
      int k = mod(static_cast<long>(b1.i) * G->t(), 4 * n);  // t is an involution mod 4n
      if (k % 2 != 0 || w.images[1] != G->mul(G->y(), G->x(-(k + b3.i)))) profile = false;
    }
  }
  long expect_count = 2L * n * euler_phi(4 * n);
  ck.add("theta-kr-profile", profile && static_cast<long>(all.size()) == expect_count,
         {{"vectors", all.size()}, {"expected", expect_count}});
  auto cl = classify(all, verify_moves(moves_for(v.ctx->sig), all), automorphisms(*G));
  ck.add("single-orbit", cl.orbits.size() == 1, to_json(cl)["orbit_count"]);
  long f2n = fixed_point_count(v, G->x(2 * n)), f1 = fixed_point_count(v, G->x(1));
  ck.add("fix-x^2n", f2n == 2 * n + 2, {{"value", f2n}, {"expected", 2 * n + 2}});
  ck.add("fix-x", f1 == 2, {{"value", f1}, {"expected", 2}});
  bool pnf = is_purely_non_free(v);
  ck.add("purely-non-free-iff-even", pnf == (n % 2 == 0), {{"purely_non_free", pnf}});
  return ck.verdict(n);
}

NVerdict strong1(int n, const VerifyOptions& opt) {
  Checks ck;
  auto r = run_search(ck, "sigma0", [n](const SearchOptions& o) { return strong_symmetric_genus(n, o); },
                      expected_sigma0(n), 8L * n, KernelKind::OrientableUnbordered, opt);
  genus_value(ck, "sigma0", r, expected_sigma0(n));
  return ck.verdict(n);
}

NVerdict strong2(int n, const VerifyOptions& opt) {
  Checks ck;
  auto r = run_search(ck, "sigma_p", [n](const SearchOptions& o) { return pure_symmetric_genus(n, o); },
                      expected_sigma_p(n), 8L * n, KernelKind::OrientableUnbordered, opt);
  genus_value(ck, "sigma_p", r, expected_sigma_p(n));
  if (n % 2 == 1) {
    // the quadrilateral vector offered as purely-non-free
    auto G = Group::G(n);
    auto ctx = make_context(Signature::parse("(0;+;[2,2,4," + std::to_string(4 * n) + "];{-})"), G, Mode::RiemannSurface);
    auto q = make_vector(ctx, {{"beta1", "y"}, {"beta2", "yx^2"}, {"beta3", p("x", n)}, {"beta4", p("x", 3L * n - 2)}});
    auto rep = fixed_point_report(q);
    Json fixless = Json::array();
    for (auto [g, f] : rep.by_class_rep)
      if (f == 0) fixless.push_back(G->name(g));
    ck.add("quadrilateral-theta1-purely-non-free", fixless.empty(),
           {{"vector", to_json(q)}, {"valid", check_vector(q).diagnosis}, {"classes_without_fixed_points", fixless}});
  }
  return ck.verdict(n);
}

NVerdict hyp(int n, const std::string& which, const VerifyOptions& opt) {
  Checks ck;
  long e = expected_sigma_hyp(n, which);
  auto r = run_search(ck, "sigma_hyp(" + which + ")",
                      [n, which](const SearchOptions& o) { return symmetric_hyperbolic_genus(n, which, o); }, e, 8L * n,
                      KernelKind::OrientableUnbordered, opt);
  genus_value(ck, "sigma_hyp(" + which + ")", r, e);
  // the explicit vector offered for the case
  auto G = Group::G(n);
  auto H = named_index_two(G, which);
  std::optional<GeneratingVector> pv;
  if (which == "DC") {
    auto ctx = make_context(Signature::parse(n % 2 == 0 ? "(0;+;[4];{(" + std::to_string(2 * n) + ")})"
                                                        : "(0;+;[4];{(" + std::to_string(n) + ")})"),
                            G, Mode::RiemannSurface, H);
    pv = make_vector(ctx, {{"beta1", "yx"}, {"e1", p("yx", 1) + "^" + std::to_string(2 * n + 1)}, {"c10", "y"},
                           {"c11", "yx^" + std::to_string(2 * n + 2)}});
  } else if (which == "C") {
    auto ctx = make_context(Signature::parse("(0;+;[" + std::to_string(4 * n) + "];{(" + std::to_string(2 * n) + ")})"), G,
                            Mode::RiemannSurface, H);
    pv = make_vector(ctx, {{"beta1", "x^-1"}, {"e1", "x"}, {"c10", "y"}, {"c11", "yx^" + std::to_string(2 * n - 2)}});
  } else {
    auto ctx = make_context(Signature::parse("(1;-;[2,2,2];{-})"), G, Mode::RiemannSurface, H);
    pv = make_vector(ctx, {{"d1", "x"}, {"beta1", p("x", 2L * n - 2) + "y"}, {"beta2", "y"}, {"beta3", p("x", 2L * n)}});
  }
  auto d = check_vector(*pv);
  ck.add("stated-vector", d.ok,
         {{"signature", pv->ctx->sig.str()}, {"vector", to_json(*pv)}, {"diagnosis", d.diagnosis},
          {"genus", rh_integral(pv->ctx->sig, G->order(), KernelKind::OrientableUnbordered)
                        ? Json(rh_genus(pv->ctx->sig, G->order(), KernelKind::OrientableUnbordered))
                        : Json(nullptr)}});
  return ck.verdict(n);
}

NVerdict real_a(int n, const VerifyOptions& opt) {
  Checks ck;
  auto r = run_search(ck, "rho", [n](const SearchOptions& o) { return real_genus(n, o); }, expected_rho(n), 8L * n,
                      KernelKind::Bordered, opt);
  genus_value(ck, "rho", r, expected_rho(n));
  auto G = Group::G(n);
  auto ctx = make_context(Signature::parse("(0;+;[2,4];{(-)})"), G, Mode::BorderedKlein);
  auto t1 = make_vector(ctx, {{"beta1", "y"}, {"beta2", "xy"}, {"e1", p("x", 2L * n + 1)}, {"c10", "1"}, {"c11", "1"}});
  ck.add("theta1-valid", check_vector(t1).ok, check_vector(t1).diagnosis);
  auto cl = classify_all(ctx, opt.workers);
  ck.add("single-orbit", cl.orbits.size() == 1, to_json(cl));
  // psi_{4n-1,0} o theta1 o L = theta2 as tuples
  auto t2 = make_vector(ctx, {{"beta1", p("x", 2L * n)}, {"beta2", "yx"}, {"e1", "yx"}, {"c10", "y"},
                              {"c11", "yx^" + std::to_string(2 * n + 2)}});
  auto moves = moves_for(ctx->sig);
  auto L = std::find_if(moves.moves.begin(), moves.moves.end(), [](const Move& m) { return m.name == "L"; });
  auto img = L->apply(*ctx, t1.images);
  auto psi_map = psi(*G, 4 * n - 1, 0);
  for (int& x : img) x = psi_map(x);
  ck.add("bridging-identity", img == t2.images,
         {{"computed", to_json(make_vector(ctx, img))}, {"theta2_check", check_vector(t2).diagnosis}});
  return ck.verdict(n);
}

NVerdict real_b(int n, const VerifyOptions& opt) {
  Checks ck;
  auto r = run_search(ck, "crosscap", [n](const SearchOptions& o) { return symmetric_crosscap(n, o); },
                      expected_crosscap(n), 8L * n, KernelKind::NonOrientableUnbordered, opt);
  genus_value(ck, "crosscap", r, expected_crosscap(n));
  auto G = Group::G(n);
  auto sa = Signature::parse("(0;+;[2,4];{(-)})"), sb = Signature::parse("(0;+;[4];{(2,2)})");
  if (r && n != 3) {
    std::vector<Signature> at_min{r->witness_sig};
    at_min.insert(at_min.end(), r->alternatives.begin(), r->alternatives.end());
    bool both = std::count(at_min.begin(), at_min.end(), sa) && std::count(at_min.begin(), at_min.end(), sb);
    Json list = Json::array();
    for (const auto& s : at_min) list.push_back(s.str());
    ck.add("two-witness-signatures", both, list);
  }
  if (n == 3) {
    auto c = make_context(Signature::parse("(0;+;[-];{(2,2,3,4)})"), G, Mode::UnborderedKlein);
    long cnt = count_vectors(c, {opt.workers, true});
    ck.add("(0;+;[-];{(2,2,3,4)})-inadmissible", cnt == 0, {{"vectors", cnt}});
  }
  auto ca = make_context(sa, G, Mode::UnborderedKlein);
  auto va = make_vector(ca, {{"beta1", "y"}, {"beta2", "yx"}, {"e1", "x^-1"}, {"c10", p("x", 2L * n)}, {"c11", p("x", 2L * n)}});
  ck.add("case-i-vector", check_vector(va).ok, {{"vector", to_json(va)}, {"diagnosis", check_vector(va).diagnosis}});
  auto cb = make_context(sb, G, Mode::UnborderedKlein);
  auto vb = make_vector(cb, {{"beta1", "xy"}, {"e1", "yx^" + std::to_string(4 * n - 1)}, {"c10", "y"}, {"c11", p("x", 2L * n)},
                             {"c12", "yx^" + std::to_string(2 * n - 2)}});
  int b1 = cb->pres.find(GenKind::Elliptic, 1), c10 = cb->pres.find(GenKind::Reflection, 1, 0),
      c11 = cb->pres.find(GenKind::Reflection, 1, 1);
  // (beta1 c10)^{2n} c11 reverses orientation and lies in the kernel
  Word w;
  for (int k = 0; k < 2 * n; ++k) {
    w.push_back({b1, 1});
    w.push_back({c10, 1});
  }
  w.push_back({c11, 1});
  bool reversing = cb->pres.character(w) < 0;
  ck.add("case-ii-vector", check_vector(vb).ok && vb.eval(w) == 0 && reversing,
         {{"vector", to_json(vb)}, {"diagnosis", check_vector(vb).diagnosis}, {"kernel_word", cb->pres.word_text(w)},
          {"kernel_word_image", G->name(vb.eval(w))}, {"orientation_reversing", reversing}});
  return ck.verdict(n);
}

// D-case vectors on (1;-;[2,2,2];{-})
struct DCase {
  ContextPtr ctx;
  GeneratingVector t1, t2, hat;
};

DCase d_case(int n) {
  auto G = Group::G(n);
  auto ctx = make_context(Signature::parse("(1;-;[2,2,2];{-})"), G, Mode::RiemannSurface, named_index_two(G, "D"));
  auto t1 = make_vector(ctx, {{"d1", "x"}, {"beta1", p("x", 2L * n - 2) + "y"}, {"beta2", "y"}, {"beta3", p("x", 2L * n)}});
  auto t2 = make_vector(ctx, {{"d1", "xy"}, {"beta1", "y"}, {"beta2", "y"}, {"beta3", p("x", 2L * n)}});
  auto hat = make_vector(ctx, {{"d1", "xy"}, {"beta1", p("x", 2L * n)}, {"beta2", p("x", 2L * n + 2) + "y"},
                               {"beta3", p("x", 2L * n + 2) + "y"}});
  return {ctx, t1, t2, hat};
}

NVerdict pmprs(int n, const VerifyOptions& opt) {
  Checks ck;
  auto sc = pseudo_real_scenario(n, "conformal_antic");
  auto r = run_search(ck, "pseudo_real_min", [n](const SearchOptions& o) { return pseudo_real_min(n, "conformal_antic", o); },
                      sc.expected, 8L * n, KernelKind::OrientableUnbordered, opt);
  genus_value(ck, "pseudo_real_min", r, sc.expected);
  auto G = sc.group;
  auto parts = pseudo_real_conformal_part(G);
  ck.add("conformal-part-is-D", parts.size() == 1 && parts[0].elements == sc.conformal.elements, {{"candidates", parts.size()}});

  auto dc = d_case(n);
  auto all = enumerate_vectors(dc.ctx, {opt.workers, true});
  auto moves = verify_moves(moves_for(dc.ctx->sig), all);
  auto cl = classify(all, moves, automorphisms(*G));
  ck.add("single-orbit", cl.orbits.size() == 1, to_json(cl));
  auto L = std::find_if(moves.moves.begin(), moves.moves.end(), [](const Move& m) { return m.name == "L"; });
  if (L != moves.moves.end()) {
    auto img = L->apply(*dc.ctx, dc.t1.images);
    auto ps = psi(*G, 4 * n - 1, 0);
    for (int& x : img) x = ps(x);
    ck.add("bridging-identity", img == dc.hat.images, {{"computed", to_json(make_vector(dc.ctx, img))}});
  } else {
    ck.add("bridging-identity", false, "move L rejected");
  }
  // hat and theta2 in one orbit: classify just the two under the verified moves
  auto pair = classify(std::vector<GeneratingVector>{dc.hat, dc.t2}, moves, automorphisms(*G));
  ck.add("hat-equivalent-theta2", pair.orbits.size() == 1);

  // fixed points on the minimal vector
  long f2n = fixed_point_count(dc.t1, G->x(2 * n));
  ck.add("fix-x^2n", f2n == 4L * n, {{"value", f2n}, {"expected", 4 * n}});
  Json bad = Json::array();
  for (int s = 0; s < 2 * n; ++s) {
    int g = G->mul(G->x(2 * s), G->y());
    long f = fixed_point_count(dc.t1, g);
    if (f != 4) bad.push_back({{"element", G->name(g)}, {"fixed_points", f}});
  }
  ck.add("fix-x^2s.y", bad.empty(), {{"vector", to_json(dc.t1)}, {"mismatches", bad}});
  return ck.verdict(n);
}

NVerdict tps2(int n, const VerifyOptions&) {
  Checks ck;
  auto G = Group::G(n);
  auto v = sylow_parity_obstruction(*G, true);
  Json d{{"involutions", v.involutions}, {"mod4", v.residue}, {"obstructed", v.obstructed}};
  if (n % 2 == 0) ck.add("parity-obstruction", v.residue == 1 && v.obstructed, d);
  else ck.add("parity-not-obstructed", v.residue == 3 && !v.obstructed, d);
  return ck.verdict(n);
}

NVerdict jacobian(int n, const VerifyOptions&) {
  Checks ck;
  auto L = jacobian_ledger(n);
  ck.add("dimension-identity", L.valid(), to_json(L));
  ck.add("kani-rosen-full", L.full_valid());
  int p0 = smallest_odd_prime(n);
  long g1 = L.entries[0].genus;
  if (p0 == 0) {
    ck.add("g(S/<y>)=n/2", g1 * 2 == n, {{"value", g1}, {"expected", n / 2}});
  } else if (n % 2 == 1) {
    ck.add("g(S/<y>)=(n-1)/2", g1 == (n - 1) / 2, {{"value", g1}, {"expected", (n - 1) / 2}});
    ck.add("g(S/<x^4k>)=1", L.entries[1].genus == 1, {{"value", L.entries[1].genus}, {"expected", 1}});
  } else {
    ck.add("g(S/<y>)=(n-2)/2", g1 == (n - 2) / 2, {{"value", g1}, {"expected", (n - 2) / 2}});
    ck.add("g(S/<x^4k>)=2", L.entries[1].genus == 2, {{"value", L.entries[1].genus}, {"expected", 2}});
  }
  return ck.verdict(n);
}

NVerdict mps_plus(int n, const VerifyOptions& opt) {
  if (n % 2 == 0) return {n, Status::NotApplicable, {{"note", "statement is for odd n"}}};
  Checks ck;
  auto sc = pseudo_real_scenario(n, "conformal_only_odd");
  auto r = run_search(ck, "pseudo_real_min",
                      [n](const SearchOptions& o) { return pseudo_real_min(n, "conformal_only_odd", o); }, sc.expected,
                      16L * n, KernelKind::OrientableUnbordered, opt);
  genus_value(ck, "pseudo_real_min", r, sc.expected);
  auto ctx = make_context(Signature::parse("(1;-;[2,2,4];{-})"), sc.group, Mode::RiemannSurface, sc.conformal);
  auto t1 = make_vector(ctx, {{"d1", "z"}, {"beta3", p("z", 2L * n)}, {"beta1", p("yz", 1) + "^" + std::to_string(2 * n + 2)},
                              {"beta2", "y"}});
  auto t2 = make_vector(ctx, {{"d1", "yz"}, {"beta3", "yz^" + std::to_string(2 * n)}, {"beta1", "y"}, {"beta2", p("z", 4L * n)}});
  ck.add("theta1-valid", check_vector(t1).ok, check_vector(t1).diagnosis);
  ck.add("theta2-valid", check_vector(t2).ok, check_vector(t2).diagnosis);
  auto cl = classify_all(ctx, opt.workers);
  ck.add("several-orbits", cl.orbits.size() >= 2 && cl.distinct_invariants >= 2,
         {{"orbits", cl.orbits.size()}, {"distinct_invariants", cl.distinct_invariants}});
  auto fusion = aut_fusion(*sc.group, automorphisms(*sc.group));
  auto moves = moves_for(ctx->sig);
  auto i1 = separating_invariant(t1, fusion, moves.braid_only()), i2 = separating_invariant(t2, fusion, moves.braid_only());
  ck.add("theta1-theta2-separated", i1 != i2, {{"theta1", i1.str()}, {"theta2", i2.str()}});
  return ck.verdict(n);
}

NVerdict families(int n, const VerifyOptions&) {
  Checks ck;
  auto fam = [&](const std::string& name, const std::function<FamilyWitness()>& make) {
    try {
      auto w = make();
      auto d = check_vector(w.vector);
      ck.add(name, d.ok && w.genus == w.formula,
             {{"signature", w.vector.ctx->sig.str()}, {"genus", w.genus}, {"formula", w.formula}, {"diagnosis", d.diagnosis}});
    } catch (const std::exception& e) {
      ck.add(name, false, e.what());
    }
  };
  for (int k = 3; k <= 6; ++k) fam("tps k=" + std::to_string(k), [=] { return tps_witness(n, k); });
  if (n % 2 == 1 && n >= 3)
    for (int l : {2, 3})
      for (int r : {1, 3})
        fam("tps1 l=" + std::to_string(l) + " r=" + std::to_string(r), [=] { return tps1_witness(n, l, r); });
  for (int a : {1, 2})
    for (int b : {2, 4})
      fam("ejemplo alpha=" + std::to_string(a) + " beta=" + std::to_string(b), [=] { return ejemplo_witness(n, a, b); });
  return ck.verdict(n);
}

NVerdict dessin(int n, const VerifyOptions& opt) {
  Checks ck;
  auto G = Group::G(n);
  auto d = gn_dessin(*G);
  const auto& m = d.monodromy;
  Perm eta = m.white, tau = m.black;
  Perm sigma = perm_compose(tau, perm_inverse(perm_power(eta, 4L * n - 1)));  // tau = sigma eta^{4n-1}
  bool rel = perm_is_identity(perm_power(sigma, 2)) && perm_is_identity(perm_power(eta, 4L * n)) &&
             perm_compose(perm_compose(sigma, eta), sigma) == perm_power(eta, 2L * n - 1) &&
             perm_is_identity(perm_compose(perm_compose(sigma, tau), eta));
  ck.add("relations", rel);
  long order = perm_group_order({eta, tau});
  ck.add("monodromy-order", order == 8L * n, {{"order", order}});
  auto g = dessin_data(m);
  ck.add("genus", g.genus == n, {{"genus", g.genus}});
  ck.add("valencies", g.white_valency == std::vector<int>(2, 4 * n) && g.black_valency == std::vector<int>(2 * n, 4) &&
                          g.face_length == std::vector<int>(4 * n, 2));
  ck.add("K_{2,2n}-doubled", g.complete_bipartite(2) && g.white_valency.size() == 2 && g.black_valency.size() == 2u * n);
  Signature tri;
  tri.periods = {G->elem_order(d.eta), G->elem_order(d.tau), G->elem_order(G->mul(d.eta, d.tau))};
  std::sort(tri.periods.begin(), tri.periods.end());
  ck.add("genus-matches-riemann-hurwitz", rh_genus(tri, G->order(), KernelKind::OrientableUnbordered) == g.genus,
         tri.str());
  if (n <= 6) {
    auto classes = generator_pair_classes(*G, opt.workers);
    bool found = false;
    for (auto [a, b] : classes)
      for (int h = 0; h < G->order() && !found; ++h)
        if (G->conj(a, h) == G->x(1) && G->conj(b, h) == G->y()) found = true;
    ck.add("pair-(x,y)-listed", found, {{"pair_classes", classes.size()}});
  }
  return ck.verdict(n);
}

}  // namespace

VerifyReport verify_theorem(const std::string& id, const std::vector<int>& ns, const VerifyOptions& opt) {
  const auto& reg = theorem_registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const TheoremInfo& t) { return t.id == id; });
  if (it == reg.end()) throw UnknownTheorem("unknown theorem id '" + id + "'; valid ids: " + theorem_ids_text());
  static const std::map<std::string, std::function<NVerdict(int, const VerifyOptions&)>> impl = {
      {"group-structure", group_structure},
      {"thm-triangular", triangular},
      {"cor-strong-1", strong1},
      {"cor-strong-2", strong2},
      {"thm-hyp1-D", [](int n, const VerifyOptions& o) { return hyp(n, "D", o); }},
      {"thm-hyp1-DC", [](int n, const VerifyOptions& o) { return hyp(n, "DC", o); }},
      {"thm-hyp1-C", [](int n, const VerifyOptions& o) { return hyp(n, "C", o); }},
      {"thm-real-a", real_a},
      {"thm-real-b", real_b},
      {"prop-pmprs", pmprs},
      {"thm-tps2", tps2},
      {"thm-jacobian", jacobian},
      {"thm-mps-plus", mps_plus},
      {"thm-families", families},
      {"rem-dessin", dessin},
  };
  VerifyReport rep;
  rep.theorem = id;
  rep.statement = it->statement;
  for (int n : ns) {
    if (n < 2) throw DomainError("n must be at least 2");
    rep.results.push_back(impl.at(id)(n, opt));
  }
  return rep;
}

}  // namespace gqd
