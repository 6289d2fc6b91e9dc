#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twideal/kernel/field.hpp"
#include "twideal/kernel/monomial.hpp"

namespace twideal {

template <class K>
struct Term {
  Monomial m;
  K c;
  friend bool operator==(const Term& a, const Term& b) { return a.m == b.m && a.c == b.c; }
};

/// Sparse polynomial (or module vector, when monomials carry components).
/// Terms are strictly decreasing in the owning ring's order with no zero coefficients.
template <class K>
struct Poly {
  std::vector<Term<K>> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  const Monomial& lead() const { return terms.front().m; }
  const K& lead_coeff() const { return terms.front().c; }
  int lead_comp() const { return terms.front().m.comp; }

  /// Common total degree of all terms, if there is one.
  std::optional<int> homogeneous_degree() const {
    if (terms.empty()) return std::nullopt;
    int d = terms.front().m.deg;
    for (const auto& t : terms)
      if (t.m.deg != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const { return terms.empty() || homogeneous_degree().has_value(); }
  bool is_constant() const { return terms.size() == 1 && terms.front().m.deg == 0; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
};

/// k[x_0..x_{n-1}] with a fixed coefficient field and term order.
template <class F>
class PolyRing {
 public:
  using K = typename F::Elem;
  using P = Poly<K>;

  explicit PolyRing(int nvars, F field = F{}, TermOrder order = TermOrder::degrevlex(),
                    std::vector<std::string> names = {})
      : nvars_(nvars), field_(std::move(field)), order_(order), names_(std::move(names)) {
    if (nvars < 1 || nvars > kMaxVars)
      throw Error(ErrorCode::Precondition, "number of variables out of range: " + std::to_string(nvars));
    if (names_.empty())
      for (int i = 0; i < nvars; ++i) names_.push_back("x" + std::to_string(i));
    if (static_cast<int>(names_.size()) != nvars) throw Error(ErrorCode::Precondition, "variable name count mismatch");
  }

  int nvars() const { return nvars_; }
  const F& field() const { return field_; }
  const TermOrder& order() const { return order_; }
  const std::vector<std::string>& names() const { return names_; }

  PolyRing with_order(TermOrder o) const { return PolyRing(nvars_, field_, o, names_); }
  /// Same ring with one extra variable appended.
  PolyRing with_extra_variable(const std::string& name, TermOrder o) const {
    auto n = names_;
    n.push_back(name);
    return PolyRing(nvars_ + 1, field_, o, n);
  }

  int cmp(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

  K zero_coeff() const { return field_.zero(); }
  K one_coeff() const { return field_.one(); }

  P zero() const { return P{}; }
  P constant(const K& c) const {
    P p;
    if (!c.is_zero()) p.terms.push_back({Monomial::one(), c});
    return p;
  }
  P one() const { return constant(field_.one()); }
  P var(int i) const {
    check_var(i);
    return P{{{Monomial::var(i), field_.one()}}};
  }
  P monomial(const Monomial& m, const K& c) const {
    P p;
    if (!c.is_zero()) p.terms.push_back({m, c});
    return p;
  }
  P monomial(const Monomial& m) const { return monomial(m, field_.one()); }

  /// Sorts and combines an arbitrary term list.
  P normalize(std::vector<Term<K>> ts) const {
    std::sort(ts.begin(), ts.end(), [&](const Term<K>& a, const Term<K>& b) { return cmp(a.m, b.m) > 0; });
    P out;
    for (auto& t : ts) {
      if (!out.terms.empty() && out.terms.back().m == t.m) {
        out.terms.back().c += t.c;
        if (out.terms.back().c.is_zero()) out.terms.pop_back();
      } else if (!t.c.is_zero()) {
        out.terms.push_back(std::move(t));
      }
    }
    return out;
  }
  /// Re-sorts a polynomial produced under a different order.
  P resort(const P& f) const { return normalize(f.terms); }

  P add(const P& a, const P& b) const { return combine(a, b, field_.one(), Monomial::one(), true); }
  P sub(const P& a, const P& b) const { return combine(a, b, -field_.one(), Monomial::one(), true); }
  /// a + c * m * b, the workhorse of reduction.
  P add_multiple(const P& a, const K& c, const Monomial& m, const P& b) const { return combine(a, b, c, m, false); }

  P neg(const P& a) const {
    P r = a;
    for (auto& t : r.terms) t.c = -t.c;
    return r;
  }
  P scale(const P& a, const K& c) const {
    if (c.is_zero()) return P{};
    P r = a;
    for (auto& t : r.terms) t.c = t.c * c;
    return r;
  }
  P mul_term(const P& a, const Monomial& m, const K& c) const {
    if (c.is_zero()) return P{};
    P r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.m * m, t.c * c});
    return r;
  }
  P mul(const P& a, const P& b) const {
    if (a.is_zero() || b.is_zero()) return P{};
    if (a.size() == 1) return mul_term(b, a.lead(), a.lead_coeff());
    if (b.size() == 1) return mul_term(a, b.lead(), b.lead_coeff());
    std::vector<Term<K>> ts;
    ts.reserve(a.size() * b.size());
    for (const auto& s : a.terms)
      for (const auto& t : b.terms) ts.push_back({s.m * t.m, s.c * t.c});
    return normalize(std::move(ts));
  }
  P pow(const P& a, int e) const {
    P r = one();
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  P make_monic(const P& a) const {
    if (a.is_zero() || a.lead_coeff().is_one()) return a;
    return scale(a, a.lead_coeff().inv());
  }

  /// Exact quotient a / b; throws if b does not divide a.
  P divide_exact(const P& a, const P& b) const {
    if (b.is_zero()) throw Error(ErrorCode::Precondition, "division by zero polynomial");
    P rem = a, quo;
    K inv = b.lead_coeff().inv();
    while (!rem.is_zero()) {
      if (!b.lead().divides(rem.lead()) || b.lead().comp != 0)
        throw Error(ErrorCode::Precondition, "inexact polynomial division");
      Monomial q = rem.lead() / b.lead();
      q.comp = static_cast<std::int16_t>(rem.lead().comp);
      K c = rem.lead_coeff() * inv;
      quo = add(quo, monomial(q, c));
      rem = add_multiple(rem, -c, q, b);
    }
    return quo;
  }

  K evaluate(const P& f, const std::vector<K>& point) const {
    K acc = field_.zero();
    for (const auto& t : f.terms) {
      K v = t.c;
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < t.m.exp[i]; ++e) v = v * point[i];
      acc += v;
    }
    return acc;
  }

  /// Moves every term into component c (for building module elements).
  P in_component(const P& f, int c) const {
    P r = f;
    for (auto& t : r.terms) t.m.comp = static_cast<std::int16_t>(c);
    return r;
  }

  /// Coefficient-wise conversion of a rational polynomial into this ring.
  P from_rational(const Poly<Rational>& f) const {
    std::vector<Term<K>> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms) ts.push_back({t.m, field_.from_rational(t.c)});
    return normalize(std::move(ts));
  }

  /// Total order on polynomials, used only for deterministic sorting.
  int compare_polys(const P& a, const P& b) const {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = cmp(a.terms[i].m, b.terms[i].m);
      if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() > b.size() ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i)
      if (!(a.terms[i].c == b.terms[i].c)) return a.terms[i].c.str() < b.terms[i].c.str() ? -1 : 1;
    return 0;
  }

  std::string to_string(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < nvars_; ++i) {
      if (m.exp[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names_[i];
      if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s;
  }

  std::string to_string(const P& f) const {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : f.terms) {
      std::string c = t.c.str();
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c = c.substr(1);
      if (first) {
        if (negative) s += "-";
      } else {
        s += negative ? " - " : " + ";
      }
      first = false;
      std::string mono = to_string(t.m);
      if (t.m.comp != 0 || has_module_terms(f)) {
        std::string e = "e" + std::to_string(t.m.comp);
        mono = mono.empty() ? e : mono + "*" + e;
      }
      if (mono.empty()) {
        s += c;
      } else if (c == "1") {
        s += mono;
      } else {
        s += c + "*" + mono;
      }
    }
    return s;
  }

  /// Parses the polynomial text grammar: names, integer or a/b literals, + - * ^ and parentheses.
  P parse(std::string_view text) const {
    Parser ps{*this, text, 0};
    ps.skip();
    if (ps.pos == text.size()) throw Error(ErrorCode::Parse, "empty polynomial");
    P r = ps.expr();
    ps.skip();
    if (ps.pos != text.size())
      throw Error(ErrorCode::Parse, "unexpected '" + std::string(1, text[ps.pos]) + "' at position " +
                                        std::to_string(ps.pos) + " in '" + std::string(text) + "'");
    return r;
  }

 private:
  static bool has_module_terms(const P& f) {
    for (const auto& t : f.terms)
      if (t.m.comp != 0) return true;
    return false;
  }

  void check_var(int i) const {
    if (i < 0 || i >= nvars_) throw Error(ErrorCode::Precondition, "variable index out of range");
  }

  /// a + c * m * b by a single merge.
  P combine(const P& a, const P& b, const K& c, const Monomial& m, bool plain) const {
    P out;
    out.terms.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.terms.push_back(a.terms[i++]);
        continue;
      }
      Monomial bm = plain ? b.terms[j].m : b.terms[j].m * m;
      if (i == a.size()) {
        out.terms.push_back({bm, b.terms[j++].c * c});
        continue;
      }
      int s = cmp(a.terms[i].m, bm);
      if (s > 0) {
        out.terms.push_back(a.terms[i++]);
      } else if (s < 0) {
        out.terms.push_back({bm, b.terms[j++].c * c});
      } else {
        K v = a.terms[i].c + b.terms[j].c * c;
        if (!v.is_zero()) out.terms.push_back({bm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  struct Parser {
    const PolyRing& R;
    std::string_view s;
    std::size_t pos;

    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const {
      throw Error(ErrorCode::Parse, msg + " at position " + std::to_string(pos) + " in '" + std::string(s) + "'");
    }
    P expr() {
      skip();
      P acc = signed_term();
      for (;;) {
        skip();
        if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) return acc;
        char op = s[pos++];
        P t = product();
        acc = op == '+' ? R.add(acc, t) : R.sub(acc, t);
      }
    }
    P signed_term() {
      skip();
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        char op = s[pos++];
        P t = signed_term();
        return op == '-' ? R.neg(t) : t;
      }
      return product();
    }
    P product() {
      P acc = power();
      for (;;) {
        skip();
        if (pos >= s.size() || s[pos] != '*') return acc;
        ++pos;
        acc = R.mul(acc, power());
      }
    }
    P power() {
      P base = atom();
      skip();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        skip();
        std::string digits = read_digits();
        if (digits.empty()) fail("expected exponent");
        if (digits.size() > 4) fail("exponent too large");
        return R.pow(base, std::stoi(digits));
      }
      return base;
    }
    std::string read_digits() {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return std::string(s.substr(start, pos - start));
    }
    P atom() {
      skip();
      if (pos >= s.size()) fail("unexpected end of input");
      char ch = s[pos];
      if (ch == '(') {
        ++pos;
        P inner = expr();
        skip();
        if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
        ++pos;
        return inner;
      }
      if (ch == '-' || ch == '+') return signed_term();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string lit = read_digits();
        std::size_t save = pos;
        skip();
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          skip();
          std::string den = read_digits();
          if (den.empty()) fail("expected denominator");
          lit += "/" + den;
        } else {
          pos = save;
        }
        Rational q = Rational::parse(lit);
        return R.constant(R.field().from_rational(q));
      }
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        std::string name(s.substr(start, pos - start));
        for (int i = 0; i < R.nvars(); ++i)
          if (R.names()[i] == name) return R.var(i);
        pos = start;
        fail("unknown variable '" + name + "'");
      }
      fail("unexpected '" + std::string(1, ch) + "'");
    }
  };

  int nvars_;
  F field_;
  TermOrder order_;
  std::vector<std::string> names_;
};

}  // namespace twideal
