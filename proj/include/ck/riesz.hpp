#pragma once

#include <optional>

#include "ck/cone.hpp"

namespace ck {

enum class WallachKind { DiscretePoint, ContinuousRange, NotMember };

struct WallachVerdict {
  bool member = false;
  WallachKind kind = WallachKind::NotMember;
  int discrete_j = -1;                    // lambda = j a/2 when DiscretePoint
  std::optional<EpsilonPattern> epsilon;  // for vector membership
};

/// (m^(eps), m'^(eps)): m_j = a sum_{k<j} eps_k, m'_j = a sum_{k>j} eps_k.
std::pair<RationalVec, RationalVec> m_vectors(const EpsilonPattern& eps, int a);

/// Full-pattern m and m' for the descriptor.
std::pair<RationalVec, RationalVec> m_vectors(const AlgebraDescriptor& desc);

/// s <_eps s2: strict on eps=1 slots, equality on eps=0 slots; for eps = 0
/// the strict relation is empty and the weak one is equality.
bool order_lt(const RationalVec& s, const RationalVec& s2, const EpsilonPattern& eps,
              bool strict = true);

/// Gindikin-Wallach membership: exists eps with s >_eps (1/2) m^(eps)
/// (equality on the eps=0 slots).  star applies the sigma reversal first.
WallachVerdict in_gindikin_wallach(const RationalVec& s, const AlgebraDescriptor& desc,
                                   bool star = false);

/// All patterns eps matching the membership condition (the decomposition is
/// disjoint, so this has at most one entry; exposed for the uniqueness test).
std::vector<EpsilonPattern> gindikin_matching_patterns(const RationalVec& s,
                                                       const AlgebraDescriptor& desc);

/// Scalar Wallach set {j a/2 : j = 0..r-1} union (m/r - 1, infinity); the
/// boundary lambda = a(r-1)/2 is reported as DiscretePoint(r-1).
WallachVerdict in_wallach(const Rational& lambda, const AlgebraDescriptor& desc);

/// Gamma_Omega(s) = (2 pi)^{(m-r)/2} prod_j Gamma(s_j - (j-1) a/2).
/// Requires every argument positive (convergence range).
double gindikin_gamma(const std::vector<double>& s, const AlgebraDescriptor& desc);

/// (s + m'/2)_{s'} = prod_j (s_j + m'_j/2)(s_j + m'_j/2 - 1) ...
/// (s_j - s'_j + m'_j/2 + 1), the convolution coefficient of the conical
/// calculus; exact.
Rational pochhammer_cone(const RationalVec& s, const SigN& s_shift,
                         const AlgebraDescriptor& desc);
double pochhammer_cone(const std::vector<double>& s, const SigN& s_shift,
                       const AlgebraDescriptor& desc);

/// (s)^{s'} = prod_j prod_{k=0}^{s'_j - 1} (s_j + k); the primed variant
/// skips zero factors and takes absolute values.
Rational shifted_factorials(const RationalVec& s, const SigN& s_shift, bool primed = false);

RationalVec rational_sig(const SigN& s);
RationalVec uniform_rational_sig(int r, const Rational& lambda);

}  // namespace ck
