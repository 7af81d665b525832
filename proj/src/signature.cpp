#include "gqd/signature.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

namespace gqd {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(std::stoll(std::string(s)));
    long long p = std::stoll(std::string(s.substr(0, slash)));
    long long q = std::stoll(std::string(s.substr(slash + 1)));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + std::string(s) + "'", 0);
  }
}

int Signature::reflection_count() const {
  int c = 0;
  for (const auto& cy : cycles) c += cy.empty() ? 2 : static_cast<int>(cy.size()) + 1;
  return c;
}

static std::vector<int> least_rotation(const std::vector<int>& v) {
  std::vector<int> best = v;
  for (size_t r = 1; r < v.size(); ++r) {
    std::vector<int> w(v.begin() + r, v.end());
    w.insert(w.end(), v.begin(), v.begin() + r);
    if (w < best) best = w;
  }
  return best;
}

static bool cycle_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Signature Signature::canonical() const {
  Signature s = *this;
  std::sort(s.periods.begin(), s.periods.end());
  for (auto& c : s.cycles) c = least_rotation(c);
  std::sort(s.cycles.begin(), s.cycles.end(), cycle_less);
  return s;
}

static std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s;
}

std::string Signature::str() const {
  std::string s = "(" + std::to_string(h) + ";" + (orientable ? "+" : "-") + ";[";
  s += periods.empty() ? "-" : join(periods);
  s += "];{";
  if (cycles.empty()) s += "-";
  for (size_t k = 0; k < cycles.size(); ++k) {
    if (k) s += ",";
    s += "(" + (cycles[k].empty() ? std::string("-") : join(cycles[k])) + ")";
  }
  return s + "})";
}

namespace {
struct Cursor {
  std::string_view s;
  size_t p = 0;
  void ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("signature parse error at position " + std::to_string(p) + ": " + why + "\n  " +
                         std::string(s) + "\n  " + std::string(p, ' ') + "^",
                     p);
  }
  void expect(char c) {
    ws();
    if (p >= s.size() || s[p] != c) fail(std::string("expected '") + c + "'");
    ++p;
  }
  bool peek(char c) {
    ws();
    return p < s.size() && s[p] == c;
  }
  int number() {
    ws();
    size_t q = p;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q == p) fail("expected a number");
    if (q - p > 9) fail("number too large");
    int v = std::stoi(std::string(s.substr(p, q - p)));
    p = q;
    return v;
  }
  int period() {
    size_t at = p;
    int v = number();
    if (v < 2) {
      p = at;
      ws();
      fail("periods must be >= 2");
    }
    return v;
  }
  std::vector<int> list(char close) {
    std::vector<int> v;
    if (peek('-')) {
      ++p;
      expect(close);
      return v;
    }
    v.push_back(period());
    while (peek(',')) {
      ++p;
      v.push_back(period());
    }
    expect(close);
    return v;
  }
};
}  // namespace

Signature Signature::parse(std::string_view text) {
  Cursor c{text};
  Signature sig;
  c.expect('(');
  sig.h = c.number();
  c.expect(';');
  c.ws();
  if (c.peek('+')) {
    sig.orientable = true;
  } else if (c.peek('-')) {
    sig.orientable = false;
  } else {
    c.fail("expected '+' or '-'");
  }
  ++c.p;
  c.expect(';');
  c.expect('[');
  sig.periods = c.list(']');
  c.expect(';');
  c.expect('{');
  if (c.peek('-')) {
    ++c.p;
    c.expect('}');
  } else {
    c.expect('(');
    sig.cycles.push_back(c.list(')'));
    while (c.peek(',')) {
      ++c.p;
      c.expect('(');
      sig.cycles.push_back(c.list(')'));
    }
    c.expect('}');
  }
  c.expect(')');
  c.ws();
  if (c.p != text.size()) c.fail("trailing input");
  if (!sig.orientable && sig.h < 1) {
    c.p = 1;
    c.fail("non-orientable signatures need h >= 1");
  }
  return sig;
}

Rational reduced_area(const Signature& sig) {
  Rational a(static_cast<long long>((sig.orientable ? 2 : 1) * sig.h) + static_cast<long long>(sig.cycles.size()) - 2);
  for (int m : sig.periods) a += Rational(m - 1, m);
  for (const auto& c : sig.cycles)
    for (int n : c) a += Rational(n - 1, 2LL * n);
  return a;
}

bool hyperbolic(const Signature& sig) { return reduced_area(sig) > 0; }

bool signature_less(const Signature& a, const Signature& b) {
  Rational ra = reduced_area(a), rb = reduced_area(b);
  if (ra != rb) return ra < rb;
  auto key = [](const Signature& s) { return std::make_tuple(s.orientable ? 0 : 1, s.h, s.periods, s.cycles.size()); };
  if (key(a) != key(b)) return key(a) < key(b);
  return std::lexicographical_compare(a.cycles.begin(), a.cycles.end(), b.cycles.begin(), b.cycles.end(), cycle_less);
}

const char* to_string(KernelKind k) {
  switch (k) {
    case KernelKind::OrientableUnbordered: return "orientable-unbordered";
    case KernelKind::NonOrientableUnbordered: return "nonorientable-unbordered";
    case KernelKind::Bordered: return "bordered";
  }
  return "?";
}

static Rational kernel_value(const Signature& sig, long order, KernelKind kind) {
  Rational v = reduced_area(sig) * Rational(order);
  switch (kind) {
    case KernelKind::OrientableUnbordered: return (v + 2) / 2;  // 2g-2 = |G| A
    case KernelKind::NonOrientableUnbordered: return v + 2;     // gamma-2 = |G| A
    case KernelKind::Bordered: return v + 1;                    // g-1 = |G| A
  }
  return v;
}

bool rh_integral(const Signature& sig, long order, KernelKind kind) {
  return kernel_value(sig, order, kind).denominator() == 1;
}

long rh_genus(const Signature& sig, long order, KernelKind kind) {
  if (!hyperbolic(sig)) throw IncompatibleOrder("incompatible-order: signature " + sig.str() + " is not hyperbolic");
  Rational v = kernel_value(sig, order, kind);
  if (v.denominator() != 1)
    throw IncompatibleOrder("incompatible-order: order " + std::to_string(order) + " on " + sig.str() +
                            " gives non-integral genus " + to_string(v));
  return static_cast<long>(v.numerator());
}

// ---- presentation ----

std::string Generator::label() const {
  switch (kind) {
    case GenKind::Elliptic: return "elliptic:" + std::to_string(i);
    case GenKind::Boundary: return "boundary:" + std::to_string(i);
    case GenKind::Reflection: return "reflection:" + std::to_string(i) + "." + std::to_string(j);
    case GenKind::HypA: return "hyperbolic_a:" + std::to_string(i);
    case GenKind::HypB: return "hyperbolic_b:" + std::to_string(i);
    case GenKind::Glide: return "glide:" + std::to_string(i);
  }
  return "?";
}

std::string Generator::symbol() const {
  switch (kind) {
    case GenKind::Elliptic: return "beta" + std::to_string(i);
    case GenKind::Boundary: return "e" + std::to_string(i);
    case GenKind::Reflection: return "c" + std::to_string(i) + std::to_string(j);
    case GenKind::HypA: return "a" + std::to_string(i);
    case GenKind::HypB: return "b" + std::to_string(i);
    case GenKind::Glide: return "d" + std::to_string(i);
  }
  return "?";
}

int Presentation::find(GenKind k, int i, int j) const {
  for (size_t g = 0; g < gens.size(); ++g)
    if (gens[g].kind == k && gens[g].i == i && (k != GenKind::Reflection || gens[g].j == j)) return static_cast<int>(g);
  return -1;
}

std::string Presentation::word_text(const Word& w) const {
  std::string s;
  for (auto [g, e] : w) {
    s += gens[g].symbol();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

int Presentation::character(const Word& w) const {
  int c = 1;
  for (auto [g, e] : w)
    if (gens[g].character < 0 && (e % 2 != 0)) c = -c;
  return c;
}

std::string Presentation::relation_text(const Relation& r) const {
  std::string w = word_text(r.word);
  if (r.power == 1) return w + "=1";
  if (r.word.size() == 1) return w + "^" + std::to_string(r.power) + "=1";
  return "(" + w + ")^" + std::to_string(r.power) + "=1";
}

Presentation presentation(const Signature& sig) {
  Presentation P;
  P.sig = sig;
  auto add = [&](Generator g) {
    P.gens.push_back(g);
    return static_cast<int>(P.gens.size()) - 1;
  };
  std::vector<int> betas, es, hyp;
  for (size_t k = 0; k < sig.periods.size(); ++k)
    betas.push_back(add({GenKind::Elliptic, static_cast<int>(k) + 1, 0, sig.periods[k], 1}));
  for (size_t k = 0; k < sig.cycles.size(); ++k) {
    int i = static_cast<int>(k) + 1;
    es.push_back(add({GenKind::Boundary, i, 0, 0, 1}));
    const auto& cy = sig.cycles[k];
    int s = cy.empty() ? 1 : static_cast<int>(cy.size());
    std::vector<int> cs;
    for (int j = 0; j <= s; ++j) cs.push_back(add({GenKind::Reflection, i, j, 0, -1}));
    for (int c : cs) P.relations.push_back({RelKind::ReflectionSquare, {{c, 1}}, 2, i});
    if (cy.empty()) {
      P.relations.push_back({RelKind::EmptyCycle, {{cs[0], 1}, {cs[1], 1}}, 1, i});
    } else {
      for (int j = 1; j <= s; ++j)
        P.relations.push_back({RelKind::Link, {{cs[j - 1], 1}, {cs[j], 1}}, cy[j - 1], i});
    }
    P.relations.push_back({RelKind::Boundary, {{es.back(), 1}, {cs[0], 1}, {es.back(), -1}, {cs[s], 1}}, 1, i});
  }
  for (int i = 1; i <= sig.h; ++i) {
    if (sig.orientable) {
      hyp.push_back(add({GenKind::HypA, i, 0, 0, 1}));
      hyp.push_back(add({GenKind::HypB, i, 0, 0, 1}));
    } else {
      hyp.push_back(add({GenKind::Glide, i, 0, 0, -1}));
    }
  }
  // elliptic power relations first, in the order the generators appear
  std::vector<Relation> rels;
  for (int b : betas) rels.push_back({RelKind::Power, {{b, 1}}, P.gens[b].order, -1});
  rels.insert(rels.end(), P.relations.begin(), P.relations.end());
  Word lw;
  for (int b : betas) lw.push_back({b, 1});
  for (int e : es) lw.push_back({e, 1});
  if (sig.orientable) {
    for (size_t k = 0; k + 1 < hyp.size(); k += 2) {
      lw.push_back({hyp[k], 1});
      lw.push_back({hyp[k + 1], 1});
      lw.push_back({hyp[k], -1});
      lw.push_back({hyp[k + 1], -1});
    }
  } else {
    for (int d : hyp) lw.push_back({d, 2});
  }
  rels.push_back({RelKind::Long, lw, 1, -1});
  P.relations = std::move(rels);
  return P;
}

Signature orientation_double(const Signature& sig) {
  if (sig.orientable || !sig.cycles.empty())
    throw UnsupportedShape("unsupported-shape: orientation_double needs a non-orientable signature without period cycles");
  Signature d;
  d.h = sig.h - 1;
  d.orientable = true;
  for (int m : sig.periods) {
    d.periods.push_back(m);
    d.periods.push_back(m);
  }
  std::sort(d.periods.begin(), d.periods.end());
  return d;
}

// ---- enumeration ----

bool has_boundary_capable_cycle(const Signature& s) {
  for (const auto& c : s.cycles) {
    if (c.empty()) return true;
    if (c.size() < 2) continue;
    for (size_t k = 0; k < c.size(); ++k)
      if (c[k] == 2 && c[(k + 1) % c.size()] == 2) return true;
  }
  return false;
}

bool ShapeFilter::accepts(const Signature& s) const {
  if (s.orientable && !orientable) return false;
  if (!s.orientable && !nonorientable) return false;
  if (!allow_cycles && !s.cycles.empty()) return false;
  if (require_cycles && s.cycles.empty()) return false;
  if (require_non_fuchsian && s.fuchsian()) return false;
  if (boundary_capable && !has_boundary_capable_cycle(s)) return false;
  if (extra && !extra(s)) return false;
  return true;
}

std::vector<Signature> enumerate_signatures(Rational bound, std::vector<int> allowed, const ShapeFilter& filter) {
  std::vector<Signature> out;
  if (bound <= 0) return out;
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  allowed.erase(std::remove_if(allowed.begin(), allowed.end(), [](int m) { return m < 2; }), allowed.end());

  // canonical cycles with their area contribution, sorted by (length, lex)
  std::vector<std::pair<std::vector<int>, Rational>> cyc;
  if (filter.allow_cycles) {
    Rational cap = bound + 1;  // 1 + sum/2 <= bound + 2
    std::vector<int> cur;
    auto rec = [&](auto&& self, Rational used) -> void {
      if (least_rotation(cur) == cur) cyc.push_back({cur, used + 1});
      for (int n : allowed) {
        Rational nu = used + Rational(n - 1, 2LL * n);
        if (nu > cap) break;
        cur.push_back(n);
        self(self, nu);
        cur.pop_back();
      }
    };
    rec(rec, Rational(0));
    std::sort(cyc.begin(), cyc.end(), [](const auto& a, const auto& b) { return cycle_less(a.first, b.first); });
  }

  for (int ori = 0; ori < 2; ++ori) {
    bool orientable = ori == 0;
    if (orientable && !filter.orientable) continue;
    if (!orientable && !filter.nonorientable) continue;
    int eta = orientable ? 2 : 1;
    for (int h = orientable ? 0 : 1; Rational(eta * h - 2) <= bound; ++h) {
      Signature s;
      s.h = h;
      s.orientable = orientable;
      auto periods = [&](auto&& self, size_t from, Rational area) -> void {
        if (area > 0 && area <= bound && filter.accepts(s)) out.push_back(s);
        for (size_t k = from; k < allowed.size(); ++k) {
          Rational na = area + Rational(allowed[k] - 1, allowed[k]);
          if (na > bound) break;
          s.periods.push_back(allowed[k]);
          self(self, k, na);
          s.periods.pop_back();
        }
      };
      auto cycles = [&](auto&& self, size_t from, Rational area) -> void {
        // area lower bound of what follows is 0 (no more cycles, no periods)
        periods(periods, 0, area);
        for (size_t k = from; k < cyc.size(); ++k) {
          Rational na = area + cyc[k].second;
          if (na > bound) continue;  // later cycles may be cheaper (sorted by length, not area)
          s.cycles.push_back(cyc[k].first);
          self(self, k, na);
          s.cycles.pop_back();
        }
      };
      cycles(cycles, 0, Rational(eta * h - 2));
    }
  }
  std::sort(out.begin(), out.end(), signature_less);
  return out;
}

}  // namespace gqd
