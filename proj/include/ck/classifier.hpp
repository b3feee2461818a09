#pragma once

#include <string>

#include "ck/box.hpp"

namespace ck {

/// Number of factors of the characteristic product that vanish at lambda:
/// #{k in 1..r : a(k-1)/2 - lambda is an integer in [0, s_k - 1]}.
int q_multiplicity(const SigN& s, const Rational& lambda, const AlgebraDescriptor& desc);

/// k in {1..r} with a(k-1)/2 - lambda a natural number.
std::vector<int> K_lambda_set(const Rational& lambda, const AlgebraDescriptor& desc);

struct LambdaClassification {
  Rational lambda;
  std::vector<int> K_lambda;  // 1-based k
  int q_lambda = 0;           // = card(K_lambda)
  int degree_bound = 0;
  struct PerK {
    int k = 0;
    std::vector<SigN> N;       // the finite generator set, increasing signatures
    std::vector<SigN> killed;  // polynomial part of V_{lambda,k} up to the bound
  };
  std::vector<PerK> per_k;
};

LambdaClassification classify_lambda(const Rational& lambda, const AlgebraDescriptor& desc,
                                     int degree_bound);

enum class SpaceKind { Zero, Full, A_lambda, A_lambda_lambdaprime, A_plus_kernel, H_lambda };

struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::Zero;
  Rational lambda;
  Rational lambda_prime;  // A_lambda_lambdaprime / A_plus_kernel
  SigN s;                 // A_plus_kernel: increasing differential signature
  bool general_stated = false;  // H_lambda: asserted for general domains, runtime-checked on tubes only

  std::string render() const;
  friend bool operator==(const SpaceDescriptor& x, const SpaceDescriptor& y) = default;
};

/// Admissible semi-Hilbert structures for the affine group on the tube:
/// pairs (step pattern with l trailing ones, s in N*_Omega, |s| <= bound)
/// with lambda*1_r + 2s dominating m'^(eps)/2 in the eps-order, emitted as
/// A_{lambda,s_1} + ker D_s (plain A_lambda when s = 0), deduplicated by s.
std::vector<SpaceDescriptor> classify_affine_tube(const Rational& lambda,
                                                  const AlgebraDescriptor& desc, int bound);

/// Möbius-invariant spaces: A_lambda when lambda is in the scalar Wallach
/// set, and the derived space (A_{lambda, m/r-lambda} on tubes, H_lambda
/// with a provenance flag otherwise) when m/r-1-lambda is a natural number.
/// Both are emitted when both conditions hold (they can, at discrete
/// Wallach points of the form m/r-1-n).
std::vector<SpaceDescriptor> classify_moebius(const Rational& lambda,
                                              const AlgebraDescriptor& desc,
                                              bool general_domain = false);

}  // namespace ck
