#pragma once

#include <map>
#include <vector>

#include "ck/algebra.hpp"
#include "ck/cone.hpp"

namespace ck {

namespace poly_detail {
inline bool coeff_zero(const Complex& c) { return c == Complex(0, 0); }
inline bool coeff_zero(const ExactScalar& c) { return c.is_zero(); }
inline Complex coeff_value(const Complex& c) { return c; }
inline Complex coeff_value(const ExactScalar& c) { return c.value(); }
}  // namespace poly_detail

/// Sparse multivariate polynomial over the m coordinates of F_C.  The
/// coefficient field C is either Complex (numeric paths) or ExactScalar
/// (exact determinant/differentiation calculus).
template <class C>
struct Polynomial {
  using MultiIndex = std::vector<int>;
  int nvars = 0;
  std::map<MultiIndex, C> terms;

  Polynomial() = default;
  explicit Polynomial(int n) : nvars(n) {}

  static Polynomial constant(int n, C c) {
    Polynomial p(n);
    if (!poly_detail::coeff_zero(c)) p.terms[MultiIndex(n, 0)] = std::move(c);
    return p;
  }
  static Polynomial variable(int n, int i, C scale = C(1)) {
    Polynomial p(n);
    MultiIndex mi(n, 0);
    mi[i] = 1;
    if (!poly_detail::coeff_zero(scale)) p.terms[mi] = std::move(scale);
    return p;
  }

  int degree() const {
    int d = 0;
    for (const auto& [mi, c] : terms) {
      int t = 0;
      for (int e : mi) t += e;
      d = std::max(d, t);
    }
    return d;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const MultiIndex& mi, const C& c) {
    auto it = terms.find(mi);
    if (it == terms.end()) {
      if (!poly_detail::coeff_zero(c)) terms.emplace(mi, c);
    } else {
      it->second += c;
      if (poly_detail::coeff_zero(it->second)) terms.erase(it);
    }
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    Polynomial out = p;
    for (const auto& [mi, c] : q.terms) out.add_term(mi, c);
    return out;
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    Polynomial out = p;
    for (const auto& [mi, c] : q.terms) out.add_term(mi, C(0) - c);
    return out;
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial out(p.nvars);
    MultiIndex mi(p.nvars);
    for (const auto& [mp, cp] : p.terms)
      for (const auto& [mq, cq] : q.terms) {
        for (int i = 0; i < p.nvars; ++i) mi[i] = mp[i] + mq[i];
        out.add_term(mi, cp * cq);
      }
    return out;
  }
  friend Polynomial operator*(const C& a, const Polynomial& p) {
    Polynomial out(p.nvars);
    for (const auto& [mi, c] : p.terms) out.add_term(mi, a * c);
    return out;
  }

  Polynomial pow(int e) const {
    Polynomial out = constant(nvars, C(1));
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  /// Partial derivative (d/dx_i)^k.
  Polynomial derivative(int var, int k = 1) const {
    Polynomial out = *this;
    for (int rep = 0; rep < k; ++rep) {
      Polynomial next(nvars);
      for (const auto& [mi, c] : out.terms) {
        if (mi[var] == 0) continue;
        MultiIndex m2 = mi;
        m2[var] -= 1;
        next.add_term(m2, c * C(mi[var]));
      }
      out = std::move(next);
    }
    return out;
  }

  Complex eval(const CVector& x) const {
    Complex out = 0;
    for (const auto& [mi, c] : terms) {
      Complex t = poly_detail::coeff_value(c);
      for (int i = 0; i < nvars; ++i)
        for (int e = 0; e < mi[i]; ++e) t *= x[i];
      out += t;
    }
    return out;
  }
  Complex eval(const Element& x) const { return eval(x.coords); }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.nvars == q.nvars && p.terms == q.terms;
  }
};

using PolyC = Polynomial<Complex>;
using PolyX = Polynomial<ExactScalar>;

inline PolyC to_numeric(const PolyX& p) {
  PolyC out(p.nvars);
  for (const auto& [mi, c] : p.terms) out.add_term(mi, c.value());
  return out;
}

/// p(G x) for a linear coordinate map G (m x m).
PolyC compose_linear(const PolyC& p, const RMatrix& G);

/// Exact principal-minor polynomials det_{A_j}(pr_j x), j = 1..r, in the
/// orthonormal coordinates.
std::vector<PolyX> exact_minor_polynomials(const AlgebraDescriptor& desc);

/// Exact conical generator Delta^s = prod_j minor_j^{s_j - s_{j+1}}, s in
/// N_Omega.
PolyX conical_poly_exact(const AlgebraDescriptor& desc, const SigN& s);

}  // namespace ck
