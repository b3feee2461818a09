#pragma once

#include <functional>

#include "ck/poly.hpp"
#include "ck/riesz.hpp"

namespace ck {

/// The constant-coefficient operator Delta(d/dx): the determinant polynomial
/// expanded in the orthonormal coordinates with each coordinate replaced by
/// the dual derivation (Fischer adjoint).  Normalized so that applying it to
/// Delta^{1_r} gives pochhammer_cone(1_r, 1_r) exactly.
struct BoxOperatorSpec {
  AlgebraDescriptor desc;
  PolyX delta;  // Delta in orthonormal coordinates; acts by x_i -> d/dx_i
};

BoxOperatorSpec build_box(const AlgebraDescriptor& desc);

/// op interpreted as a polynomial in the derivations: sum_alpha c_alpha
/// d^alpha f.
template <class C>
Polynomial<C> apply_diff(const Polynomial<C>& op, const Polynomial<C>& f) {
  if (op.nvars != f.nvars) throw StructuralError("apply_diff: variable count mismatch");
  Polynomial<C> out(f.nvars);
  for (const auto& [alpha, c] : op.terms) {
    Polynomial<C> g = f;
    for (int i = 0; i < f.nvars && !g.is_zero(); ++i)
      if (alpha[i] > 0) g = g.derivative(i, alpha[i]);
    out = out + c * g;
  }
  return out;
}

/// Exact iterated box: Delta(d)^order applied to f.
PolyX apply_box(const BoxOperatorSpec& box, const PolyX& f, int order = 1);

/// Finite-difference realization of Delta(d)^order at z, moving only along
/// the real coordinate directions (central differences, one Richardson
/// extrapolation).  Throws DomainError when no positive step radius exists.
Complex apply_box_numeric(const BoxOperatorSpec& box,
                          const std::function<Complex(const Element&)>& f,
                          const Element& z, int order = 1);

struct KillReport {
  SigN s;       // in N_Omega
  SigN s_diff;  // in N_Omega_star
  bool killed = false;
  Rational coefficient;
};

/// Whether D_{s_diff} annihilates P_s: the exact cone Pochhammer coefficient
/// of the action on the conical generator, with killed <=> coefficient = 0.
KillReport kills(const AlgebraDescriptor& desc, const SigN& s, const SigN& s_diff);

/// All s in N_Omega with |s| <= degree_bound killed by D_{s_diff}.
std::vector<SigN> kernel_D_signatures(const AlgebraDescriptor& desc, const SigN& s_diff,
                                      int degree_bound);

}  // namespace ck
