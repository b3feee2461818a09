#pragma once

#include <cstdint>

#include "ck/box.hpp"
#include "ck/poly.hpp"

namespace ck {

/// Fischer inner product in the orthonormal coordinates:
/// <z^alpha, z^beta> = delta_{alpha beta} * alpha!, conjugate-linear in p.
Complex fischer_inner(const PolyC& p, const PolyC& q);
double fischer_norm(const PolyC& p);

/// Fischer-orthonormal basis of the irreducible space P_s, obtained by
/// sampling group translates of the conical generator.
struct SpaceBasis {
  AlgebraDescriptor desc;
  SigN s;
  std::vector<PolyC> members;  // Fischer-orthonormal, homogeneous of degree |s|
  int dimension() const { return static_cast<int>(members.size()); }
};

/// Span of {Delta^s o g_i} for sampled g = t.k (triangular times rotation),
/// rank-truncated at relative threshold 1e-8 and Fischer-orthonormalized.
/// The sample count is doubled until the numerical rank is stable; throws
/// NumericError if it never stabilizes.
SpaceBasis orbit_basis(const AlgebraDescriptor& desc, const SigN& s, int n_samples,
                       std::uint64_t seed);

/// Fischer-orthogonal projection of f onto the span of the basis.
PolyC project_Q(const PolyC& f, const SpaceBasis& basis);

/// The degree-|s| operator D_{sigma(s)} realized symbolically: the
/// frame-reversed conical polynomial Delta_*^{sigma(s)} with coordinates
/// replaced by derivations.  Annihilates every P_{s'} of matching degree
/// with s' != s, and no other P_s.
PolyX dual_pairing_operator(const AlgebraDescriptor& desc, const SigN& s);

}  // namespace ck
