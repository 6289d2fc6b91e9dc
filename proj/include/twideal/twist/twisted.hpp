#pragma once

#include <algorithm>
#include <vector>

#include "twideal/twist/automorphism.hpp"

namespace twideal {

/// f ∘ σ^n: every x_i is replaced by the i-th linear form of σ^n.
template <class F>
Poly<typename F::Elem> pullback(const PolyRing<F>& R, const Poly<typename F::Elem>& f, const ProjAutomorphism& sigma,
                                long n) {
  using P = Poly<typename F::Elem>;
  if (static_cast<int>(sigma.size()) != R.nvars())
    throw Error(ErrorCode::Precondition, "automorphism size does not match the ring");
  if (n == 0 || f.is_zero()) return f;
  const RatMatrix M = sigma.power(n);
  const int nv = R.nvars();
  std::vector<P> forms(nv);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j)
      if (!M[i][j].is_zero())
        forms[i] = R.add(forms[i], R.scale(R.var(j), R.field().from_rational(M[i][j])));
  // powers[i][e] = forms[i]^e, filled lazily
  std::vector<std::vector<P>> powers(nv, std::vector<P>{R.one()});
  auto power_of = [&](int i, int e) -> const P& {
    while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(R.mul(powers[i].back(), forms[i]));
    return powers[i][e];
  };
  P out;
  for (const auto& t : f.terms) {
    P term = R.constant(t.c);
    for (int i = 0; i < nv; ++i)
      if (t.m.exp[i] > 0) term = R.mul(term, power_of(i, t.m.exp[i]));
    out = R.add(out, term);
  }
  return out;
}

/// I^{σ^n}: the ideal generated by pulled-back generators.
template <class F>
HomIdeal<F> pullback_ideal(const HomIdeal<F>& I, const ProjAutomorphism& sigma, long n) {
  std::vector<Poly<typename F::Elem>> g;
  for (const auto& f : I.gens()) g.push_back(pullback(I.ring(), f, sigma, n));
  return HomIdeal<F>(I.ring(), std::move(g), I.saturated());
}

/// Element of B_n: a form of degree n (or zero).
template <class F>
struct TwistedElement {
  int degree = 0;
  Poly<typename F::Elem> poly;
};

template <class F>
TwistedElement<F> twisted(const PolyRing<F>& R, int degree, const Poly<typename F::Elem>& p) {
  (void)R;
  if (degree < 0) throw Error(ErrorCode::Precondition, "negative degree");
  if (!p.is_zero() && (!p.is_homogeneous() || p.lead().deg != degree))
    throw Error(ErrorCode::Precondition, "element is not a form of the declared degree");
  return {degree, p};
}

/// a ⋆ b = a · (b ∘ σ^{deg a}).
template <class F>
TwistedElement<F> twist_multiply(const PolyRing<F>& R, const TwistedElement<F>& a, const TwistedElement<F>& b,
                                 const ProjAutomorphism& sigma) {
  return {a.degree + b.degree, R.mul(a.poly, pullback(R, b.poly, sigma, a.degree))};
}

/// Basis of a graded piece, kept in reduced echelon form over the monomials of that degree.
template <class F>
struct DegreePiece {
  int degree = 0;
  std::vector<Poly<typename F::Elem>> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Coefficient vector of a form of degree n against monomials_of_degree(nvars, n).
template <class F>
std::vector<typename F::Elem> coordinates(const PolyRing<F>& R, const std::vector<Monomial>& monos,
                                          const Poly<typename F::Elem>& f) {
  std::vector<typename F::Elem> v(monos.size(), R.field().zero());
  for (const auto& t : f.terms) {
    auto it = std::lower_bound(monos.begin(), monos.end(), t.m, [](const Monomial& a, const Monomial& b) {
      return a.exp > b.exp;  // monomials_of_degree lists exponents in descending lex order
    });
    if (it == monos.end() || !(it->exp == t.m.exp) || t.m.comp != 0)
      throw Error(ErrorCode::Precondition, "form has a term outside the requested degree");
    v[static_cast<std::size_t>(it - monos.begin())] = t.c;
  }
  return v;
}

template <class F>
Poly<typename F::Elem> from_coordinates(const PolyRing<F>& R, const std::vector<Monomial>& monos,
                                        const std::vector<typename F::Elem>& v) {
  std::vector<Term<typename F::Elem>> ts;
  for (std::size_t k = 0; k < monos.size(); ++k)
    if (!(v[k] == R.field().zero())) ts.push_back({monos[k], v[k]});
  return R.normalize(std::move(ts));
}

/// Canonical piece spanned by the given degree-n forms.
template <class F>
DegreePiece<F> make_piece(const PolyRing<F>& R, int n, const std::vector<Poly<typename F::Elem>>& forms) {
  auto monos = monomials_of_degree(R.nvars(), n);
  std::vector<std::vector<typename F::Elem>> vecs;
  for (const auto& f : forms) vecs.push_back(coordinates(R, monos, f));
  DegreePiece<F> out;
  out.degree = n;
  for (const auto& v : row_space(R.field(), monos.size(), vecs)) out.basis.push_back(from_coordinates(R, monos, v));
  return out;
}

template <class F>
bool operator==(const DegreePiece<F>& a, const DegreePiece<F>& b) {
  return a.degree == b.degree && a.basis == b.basis;
}

/// B_n: all forms of degree n.
template <class F>
DegreePiece<F> graded_piece_B(const PolyRing<F>& R, int n) {
  if (n < 0) throw Error(ErrorCode::Precondition, "negative degree");
  DegreePiece<F> out;
  out.degree = n;
  for (const auto& m : monomials_of_degree(R.nvars(), n)) out.basis.push_back(R.monomial(m, R.field().one()));
  return out;
}

}  // namespace twideal
