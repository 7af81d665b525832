#include "gqd/epimorphism.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gqd {

const char* to_string(Mode m) {
  switch (m) {
    case Mode::RiemannSurface: return "riemann";
    case Mode::BorderedKlein: return "bordered";
    case Mode::UnborderedKlein: return "unbordered";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "riemann") return Mode::RiemannSurface;
  if (s == "bordered") return Mode::BorderedKlein;
  if (s == "unbordered") return Mode::UnborderedKlein;
  throw DomainError("unknown mode '" + s + "' (expected riemann, bordered or unbordered)");
}

KernelKind kernel_kind(Mode m) {
  switch (m) {
    case Mode::RiemannSurface: return KernelKind::OrientableUnbordered;
    case Mode::BorderedKlein: return KernelKind::Bordered;
    case Mode::UnborderedKlein: return KernelKind::NonOrientableUnbordered;
  }
  return KernelKind::OrientableUnbordered;
}

ContextPtr make_context(const Signature& sig, GroupPtr G, Mode mode, std::optional<Subgroup> target) {
  auto c = std::make_shared<ActionContext>();
  c->sig = sig;
  c->pres = presentation(sig);
  c->group = std::move(G);
  c->mode = mode;
  if (target) {
    if (target->group.get() != c->group.get() && target->group->order() != c->group->order())
      throw DomainError("orientation target belongs to another group");
    if (target->index() > 2) throw DomainError("orientation target must have index <= 2");
  }
  c->target = std::move(target);
  return c;
}

// ---- vectors ----

int GeneratingVector::image(GenKind k, int i, int j) const {
  int g = ctx->pres.find(k, i, j);
  if (g < 0) throw DomainError("no such generator");
  return images[g];
}

static int eval_word(const Group& G, const Word& w, const std::vector<int>& img) {
  int r = 0;
  for (auto [g, e] : w) r = G.mul(r, G.pow(img[g], e));
  return r;
}

int GeneratingVector::eval(const Word& w) const { return eval_word(*ctx->group, w, images); }

std::string GeneratingVector::text() const {
  std::string s;
  for (size_t k = 0; k < images.size(); ++k)
    s += ctx->pres.gens[k].label() + " -> " + ctx->group->name(images[k]) + "\n";
  return s;
}

GeneratingVector make_vector(ContextPtr ctx, std::vector<int> images) {
  if (images.size() != ctx->pres.gens.size()) throw DomainError("vector arity does not match the presentation");
  return GeneratingVector{std::move(ctx), std::move(images)};
}

GeneratingVector make_vector(ContextPtr ctx, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<int> img(ctx->pres.gens.size(), -1);
  for (const auto& [sym, el] : pairs) {
    int idx = -1;
    for (size_t k = 0; k < ctx->pres.gens.size(); ++k)
      if (ctx->pres.gens[k].symbol() == sym || ctx->pres.gens[k].label() == sym) idx = static_cast<int>(k);
    if (idx < 0) throw DomainError("unknown generator '" + sym + "' for " + ctx->sig.str());
    img[idx] = ctx->group->parse(el);
  }
  for (size_t k = 0; k < img.size(); ++k)
    if (img[k] < 0) throw DomainError("missing image for " + ctx->pres.gens[k].symbol());
  return make_vector(std::move(ctx), std::move(img));
}

// ---- checks ----

static bool link_ok(const Group& G, Mode mode, int a, int b, int n) {
  bool ta = a == 0, tb = b == 0;
  if (mode == Mode::BorderedKlein) {
    if (ta && tb) return false;
    if (ta || tb) return n == 2;
  } else if (ta || tb) {
    return false;
  }
  return G.elem_order(G.mul(a, b)) == n;
}

std::vector<char> positive_image(const ActionContext& ctx, const std::vector<int>& img) {
  const Group& G = *ctx.group;
  const auto& gens = ctx.pres.gens;
  int s0 = -1;
  for (size_t k = 0; k < gens.size(); ++k)
    if (gens[k].character < 0) {
      s0 = static_cast<int>(k);
      break;
    }
  std::vector<int> sg;
  for (size_t k = 0; k < gens.size(); ++k) {
    int s = img[k];
    if (s0 < 0) {
      sg.push_back(s);
      continue;
    }
    int t = img[s0];
    if (gens[k].character > 0) {
      sg.push_back(s);
      sg.push_back(G.mul(G.mul(t, s), G.inv(t)));
    } else {
      sg.push_back(G.mul(s, G.inv(t)));
      sg.push_back(G.mul(t, s));
    }
  }
  return closure(G, sg);
}

// the kernel reverses orientation somewhere iff Delta has orientation reversing elements
// and Delta^+ already maps onto the whole group
static bool kernel_non_orientable(const ActionContext& ctx, const std::vector<int>& img) {
  bool reversing = std::any_of(ctx.pres.gens.begin(), ctx.pres.gens.end(), [](const Generator& g) { return g.character < 0; });
  if (!reversing) return false;
  auto pos = positive_image(ctx, img);
  return std::all_of(pos.begin(), pos.end(), [](char c) { return c != 0; });
}

CheckResult check_images(const ActionContext& ctx, const std::vector<int>& img, bool require_surjective) {
  const Group& G = *ctx.group;
  const auto& P = ctx.pres;
  auto fail = [](std::string d) { return CheckResult{false, std::move(d)}; };
  if (img.size() != P.gens.size()) return fail("arity");
  for (int a : img)
    if (a < 0 || a >= G.order()) return fail("element-out-of-range");
  bool has_refl = ctx.sig.reflection_count() > 0;
  if (ctx.mode == Mode::RiemannSurface && !ctx.target) {
    if (has_refl) return fail("reflections-not-permitted");
    if (!ctx.sig.orientable) return fail("orientation-target-required");
  }
  for (size_t k = 0; k < P.gens.size(); ++k) {
    const auto& g = P.gens[k];
    if (g.kind == GenKind::Elliptic && G.elem_order(img[k]) != g.order) return fail("elliptic-order-violated");
  }
  for (size_t k = 0; k < P.gens.size(); ++k) {
    if (P.gens[k].kind != GenKind::Reflection) continue;
    if (G.elem_order(img[k]) > 2) return fail("reflection-not-involution");
    if (img[k] == 0 && ctx.mode != Mode::BorderedKlein) return fail("reflection-trivial");
  }
  if (ctx.target) {
    for (size_t k = 0; k < P.gens.size(); ++k) {
      bool inside = ctx.target->contains(img[k]);
      if (inside != (P.gens[k].character > 0)) return fail("orientation-violated");
    }
  }
  for (const auto& r : P.relations) {
    switch (r.kind) {
      case RelKind::Power:
      case RelKind::ReflectionSquare:
        break;  // covered above
      case RelKind::Link:
        if (!link_ok(G, ctx.mode, img[r.word[0].first], img[r.word[1].first], r.power))
          return fail("link-order-violated");
        break;
      case RelKind::EmptyCycle:
        if (eval_word(G, r.word, img) != 0) return fail("relation-violated:empty-cycle");
        break;
      case RelKind::Boundary:
        if (eval_word(G, r.word, img) != 0) return fail("relation-violated:boundary");
        break;
      case RelKind::Long:
        if (eval_word(G, r.word, img) != 0) return fail("relation-violated:long");
        break;
    }
  }
  if (require_surjective && !generates(G, img)) return fail("not-surjective");
  if (ctx.mode == Mode::BorderedKlein) {
    bool boundary = false;
    for (size_t k = 0; k < P.gens.size(); ++k)
      if (P.gens[k].kind == GenKind::Reflection && img[k] == 0) boundary = true;
    if (!boundary) return fail("no-boundary");
  }
  if (ctx.mode == Mode::UnborderedKlein && !kernel_non_orientable(ctx, img)) return fail("kernel-orientable");
  return {};
}

CheckResult check_vector(const GeneratingVector& v, bool require_surjective) {
  return check_images(*v.ctx, v.images, require_surjective);
}

void validate_context(const ActionContext& ctx) {
  if (!hyperbolic(ctx.sig)) throw IncompatibleOrder("incompatible-order: " + ctx.sig.str() + " is not hyperbolic");
  if (!rh_integral(ctx.sig, ctx.group->order(), kernel_kind(ctx.mode)))
    (void)rh_genus(ctx.sig, ctx.group->order(), kernel_kind(ctx.mode));  // throws with details
  if (ctx.mode == Mode::RiemannSurface && !ctx.target) {
    if (ctx.sig.reflection_count() > 0) throw DomainError("reflections-not-permitted: riemann mode without orientation target");
    if (!ctx.sig.orientable) throw DomainError("orientation-target-required: non-orientable signature in riemann mode");
  }
}

// ---- backtracking engine ----

namespace {

constexpr int kLeaf = INT_MAX;

struct Engine {
  const ActionContext& ctx;
  const Group& G;
  const Presentation& P;
  bool surj;
  int ng;
  std::vector<std::vector<int>> cand;
  std::vector<char> in_cand_flat;  // ng * |G|
  std::vector<int> search;         // searched generators in search order
  int long_gen = -1;
  std::vector<int> derived;        // reflection generators solved from the boundary relation
  std::vector<int> known_at;       // per generator: depth after which it is known
  std::vector<std::vector<int>> derive_at;  // depth -> derived gens (kLeaf stored at index search.size())
  std::vector<std::vector<int>> check_at;   // depth -> relation indices
  std::vector<std::vector<int>> sqrt_of;    // for glide elimination
  std::vector<int> refl;

  // per cycle: e index, c0 index, last index
  struct Cyc {
    int e, c0, last;
  };
  std::vector<Cyc> cyc_of_last;  // indexed by derived position

  Engine(const ActionContext& c, bool require_surjective)
      : ctx(c), G(*c.group), P(c.pres), surj(require_surjective), ng(static_cast<int>(c.pres.gens.size())) {
    build_candidates();
    plan();
  }

  bool allowed(int g, int a) const { return in_cand_flat[static_cast<size_t>(g) * G.order() + a] != 0; }

  void build_candidates() {
    cand.assign(ng, {});
    in_cand_flat.assign(static_cast<size_t>(ng) * G.order(), 0);
    for (int k = 0; k < ng; ++k) {
      const auto& g = P.gens[k];
      for (int a = 0; a < G.order(); ++a) {
        bool ok = true;
        if (ctx.target && ctx.target->contains(a) != (g.character > 0)) ok = false;
        if (g.kind == GenKind::Elliptic && G.elem_order(a) != g.order) ok = false;
        if (g.kind == GenKind::Reflection) {
          if (G.elem_order(a) > 2) ok = false;
          if (a == 0 && ctx.mode != Mode::BorderedKlein) ok = false;
        }
        if (ok) {
          cand[k].push_back(a);
          in_cand_flat[static_cast<size_t>(k) * G.order() + a] = 1;
        }
      }
      if (g.kind == GenKind::Reflection) refl.push_back(k);
    }
  }

  void plan() {
    // eliminated by the long relation
    const auto& gens = P.gens;
    for (int k = ng - 1; k >= 0 && long_gen < 0; --k)
      if (gens[k].kind == GenKind::HypB || gens[k].kind == GenKind::Glide) long_gen = k;
    for (int k = ng - 1; k >= 0 && long_gen < 0; --k)
      if (gens[k].kind == GenKind::Elliptic) long_gen = k;
    for (int k = ng - 1; k >= 0 && long_gen < 0; --k)
      if (gens[k].kind == GenKind::Boundary) long_gen = k;
    if (long_gen < 0) throw DomainError("signature has no generators to solve");
    if (gens[long_gen].kind == GenKind::Glide) {
      sqrt_of.assign(G.order(), {});
      for (int a = 0; a < G.order(); ++a) sqrt_of[G.mul(a, a)].push_back(a);
    }
    // solved reflections: the last one of each cycle
    std::vector<char> solved(ng, 0);
    solved[long_gen] = 1;
    for (const auto& r : P.relations) {
      if (r.kind != RelKind::Boundary) continue;
      int e = r.word[0].first, c0 = r.word[1].first, last = r.word[3].first;
      derived.push_back(last);
      cyc_of_last.push_back({e, c0, last});
      solved[last] = 1;
    }
    for (int k = 0; k < ng; ++k)
      if (!solved[k]) search.push_back(k);
    std::stable_sort(search.begin(), search.end(),
                     [&](int a, int b) { return cand[a].size() < cand[b].size(); });
    int depth_count = static_cast<int>(search.size());
    known_at.assign(ng, -1);
    for (int p = 0; p < depth_count; ++p) known_at[search[p]] = p;
    known_at[long_gen] = kLeaf;
    derive_at.assign(depth_count + 1, {});
    for (size_t d = 0; d < derived.size(); ++d) {
      const auto& cy = cyc_of_last[d];
      int at = std::max(known_at[cy.e], known_at[cy.c0]);
      known_at[cy.last] = at;
      derive_at[at == kLeaf ? depth_count : at].push_back(static_cast<int>(d));
    }
    check_at.assign(depth_count + 1, {});
    for (size_t r = 0; r < P.relations.size(); ++r) {
      const auto& rel = P.relations[r];
      if (rel.kind != RelKind::Link && rel.kind != RelKind::EmptyCycle && rel.kind != RelKind::Long) continue;
      int at = -1;
      for (auto [g, e] : rel.word) at = std::max(at, known_at[g]);
      check_at[at == kLeaf || at < 0 ? depth_count : at].push_back(static_cast<int>(r));
    }
  }

  bool any_empty() const {
    for (int k : search)
      if (cand[k].empty()) return true;
    return cand[long_gen].empty();
  }

  bool derive(int d, std::vector<int>& img) const {
    const auto& cy = cyc_of_last[d];
    // e c0 e^-1 c_last = 1
    int v = G.mul(G.mul(img[cy.e], G.inv(img[cy.c0])), G.inv(img[cy.e]));
    img[cy.last] = v;
    return allowed(cy.last, v);
  }

  bool check_rel(int r, const std::vector<int>& img) const {
    const auto& rel = P.relations[r];
    if (rel.kind == RelKind::Link) return link_ok(G, ctx.mode, img[rel.word[0].first], img[rel.word[1].first], rel.power);
    return eval_word(G, rel.word, img) == 0;
  }

  bool step_checks(int depth, std::vector<int>& img) const {
    for (int d : derive_at[depth])
      if (!derive(d, img)) return false;
    for (int r : check_at[depth])
      if (!check_rel(r, img)) return false;
    return true;
  }

  bool final_checks(const std::vector<int>& img) const {
    if (surj && !generates(G, img)) return false;
    if (ctx.mode == Mode::BorderedKlein) {
      bool boundary = false;
      for (int k : refl) boundary |= img[k] == 0;
      if (!boundary) return false;
    }
    if (ctx.mode == Mode::UnborderedKlein && !kernel_non_orientable(ctx, img)) return false;
    return true;
  }

  // solve the long relation for long_gen; calls emit for every admissible completion
  template <class F>
  bool leaf(std::vector<int>& img, F&& emit) const {
    const auto& lw = P.relations.back().word;  // Long is always last
    const auto& lg = P.gens[long_gen];
    int depth = static_cast<int>(search.size());
    auto finish = [&]() -> bool {
      if (!step_checks(depth, img)) return true;
      if (!final_checks(img)) return true;
      return emit(img);
    };
    if (lg.kind == GenKind::Glide) {
      int pre = 0;
      for (auto [g, e] : lw) {
        if (g == long_gen) break;
        pre = G.mul(pre, G.pow(img[g], e));
      }
      for (int r : sqrt_of[G.inv(pre)]) {
        if (!allowed(long_gen, r)) continue;
        img[long_gen] = r;
        if (!finish()) return false;
      }
      return true;
    }
    if (lg.kind == GenKind::HypB) {
      int pre = 0;
      size_t k = 0;
      for (; k < lw.size(); ++k) {
        if (lw[k].first == long_gen) break;
        pre = G.mul(pre, G.pow(img[lw[k].first], lw[k].second));
      }
      // pre = P a (the a of the last pair is just before b)
      int w = G.inv(pre);  // need b a^-1 b^-1 = pre^-1
      int a = img[lw[k - 1].first];
      int ainv = G.inv(a);
      for (int b : cand[long_gen]) {
        if (G.mul(G.mul(b, ainv), G.inv(b)) != w) continue;
        img[long_gen] = b;
        if (!finish()) return false;
      }
      return true;
    }
    // elliptic or boundary: appears once with exponent 1
    int pre = 0, post = 0;
    bool after = false;
    for (auto [g, e] : lw) {
      if (g == long_gen) {
        after = true;
        continue;
      }
      if (after) post = G.mul(post, G.pow(img[g], e));
      else pre = G.mul(pre, G.pow(img[g], e));
    }
    int v = G.mul(G.inv(pre), G.inv(post));
    if (!allowed(long_gen, v)) return true;
    img[long_gen] = v;
    return finish();
  }

  template <class F>
  bool dfs(int depth, std::vector<int>& img, F&& emit) const {
    if (depth == static_cast<int>(search.size())) return leaf(img, emit);
    int g = search[depth];
    for (int a : cand[g]) {
      img[g] = a;
      if (!step_checks(depth, img)) continue;
      if (!dfs(depth + 1, img, emit)) return false;
    }
    return true;
  }

  // run only the subtree where the first searched generator takes its p-th candidate
  template <class F>
  bool partition(int p, F&& emit) const {
    std::vector<int> img(ng, 0);
    if (search.empty()) return leaf(img, emit);
    int g = search[0];
    img[g] = cand[g][p];
    if (!step_checks(0, img)) return true;
    return dfs(1, img, emit);
  }

  int partitions() const { return search.empty() ? 1 : static_cast<int>(cand[search[0]].size()); }
};

int thread_count(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

}  // namespace

std::vector<GeneratingVector> enumerate_vectors_serial(ContextPtr ctx, bool require_surjective) {
  validate_context(*ctx);
  Engine E(*ctx, require_surjective);
  std::vector<std::vector<int>> found;
  if (!E.any_empty()) {
    std::vector<int> img(E.ng, 0);
    E.dfs(0, img, [&](const std::vector<int>& v) {
      found.push_back(v);
      return true;
    });
  }
  std::sort(found.begin(), found.end());
  std::vector<GeneratingVector> out;
  out.reserve(found.size());
  for (auto& v : found) out.push_back({ctx, std::move(v)});
  return out;
}

std::vector<GeneratingVector> enumerate_vectors(ContextPtr ctx, const EnumOptions& opt) {
  if (opt.workers == 1) return enumerate_vectors_serial(ctx, opt.require_surjective);
  validate_context(*ctx);
  Engine E(*ctx, opt.require_surjective);
  if (E.any_empty()) return {};
  int np = E.partitions();
  std::vector<std::vector<std::vector<int>>> parts(np);
  int threads = thread_count(opt.workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int p = 0; p < np; ++p) {
    E.partition(p, [&](const std::vector<int>& v) {
      parts[p].push_back(v);
      return true;
    });
  }
  std::vector<std::vector<int>> found;
  for (auto& part : parts)
    for (auto& v : part) found.push_back(std::move(v));
  std::sort(found.begin(), found.end());
  std::vector<GeneratingVector> out;
  out.reserve(found.size());
  for (auto& v : found) out.push_back({ctx, std::move(v)});
  return out;
}

std::optional<GeneratingVector> find_vector(ContextPtr ctx, const VectorPredicate& pred, int workers) {
  validate_context(*ctx);
  Engine E(*ctx, true);
  if (E.any_empty()) return std::nullopt;
  int np = E.partitions();
  std::vector<std::vector<int>> hit(np);
  std::atomic<int> best{INT_MAX};
  int threads = thread_count(workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int p = 0; p < np; ++p) {
    if (p > best.load()) continue;
    E.partition(p, [&](const std::vector<int>& v) {
      if (p > best.load()) return false;
      if (pred && !pred(GeneratingVector{ctx, v})) return true;
      hit[p] = v;
      int cur = best.load();
      while (p < cur && !best.compare_exchange_weak(cur, p)) {
      }
      return false;
    });
  }
  int b = best.load();
  if (b == INT_MAX) return std::nullopt;
  return GeneratingVector{ctx, hit[b]};
}

bool admissible(ContextPtr ctx, int workers) { return find_vector(std::move(ctx), nullptr, workers).has_value(); }

long count_vectors(ContextPtr ctx, const EnumOptions& opt) {
  validate_context(*ctx);
  Engine E(*ctx, opt.require_surjective);
  if (E.any_empty()) return 0;
  int np = E.partitions();
  long total = 0;
  int threads = thread_count(opt.workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) reduction(+ : total)
  for (int p = 0; p < np; ++p) {
    long c = 0;
    E.partition(p, [&](const std::vector<int>&) {
      ++c;
      return true;
    });
    total += c;
  }
  return total;
}

}  // namespace gqd
