#pragma once

#include <optional>
#include <random>
#include <vector>

#include "ck/algebra.hpp"

namespace ck {

/// Signatures s in C^r; helpers for the natural decreasing/increasing cones.
using Sig = std::vector<Complex>;
using SigN = std::vector<int>;

Sig uniform_sig(int r, Complex lambda);
Sig sig_of(const SigN& s);
Sig sig_of(const RationalVec& s);
Sig sigma_reverse(const Sig& s);
SigN sigma_reverse(const SigN& s);
int sig_total(const SigN& s);
bool is_N_Omega(const SigN& s);       // natural, weakly decreasing
bool is_N_Omega_star(const SigN& s);  // natural, weakly increasing

/// All s in N_Omega with |s| <= bound (r entries).
std::vector<SigN> enumerate_N_Omega(int r, int bound);

struct EpsilonPattern {
  std::vector<int> bits;  // in {0,1}
  friend bool operator==(const EpsilonPattern& x, const EpsilonPattern& y) = default;
};

/// Element of the triangular group T_-: lower-triangular with positive
/// diagonal for matrix families, (alpha, beta, gamma) for spin.
struct TriangularFactor {
  AlgebraDescriptor desc;
  CMatrix mat;           // matrix families (real for SymReal)
  double alpha = 1, gamma = 1;
  RVector beta;          // spin, mathematical b-convention

  RVector diag() const;  // positive, length r
};

struct TubePoint {
  Element z;
  explicit TubePoint(Element e) : z(std::move(e)) {}
};

bool cone_contains(const Element& x, double tol = 0.0);

/// x = t . e_Omega with t in T_-; requires x in the open cone.
TriangularFactor cholesky_factor(const Element& x);

/// t . x (= t x t^* for matrices); complex-linear in x.
Element act_triangular(const TriangularFactor& t, const Element& x);

TriangularFactor compose(const TriangularFactor& t1, const TriangularFactor& t2);
TriangularFactor inverse(const TriangularFactor& t);
TriangularFactor identity_triangular(const AlgebraDescriptor& desc);

/// Character value Delta^s(t) = prod_j diag_j^{2 s_j}.
Complex triangular_character(const TriangularFactor& t, const Sig& s);

/// Nested principal minors det_{A_j}(pr_j x), j = 1..r (holomorphic
/// polynomial extension on complex coordinates).
std::vector<Complex> principal_minors(const Element& x);

/// Delta^s(x) for real x in Omega; star = Delta_*^s via frame reversal.
/// Throws DomainError off the cone.
Complex power_function(const Sig& s, const Element& x, bool star = false);
double power_function_real(const RationalVec& s, const Element& x, bool star = false);

/// Continued logarithms of the r principal minors at a complexified point z
/// with Im z in Omega or Re z in Omega.  The branch is fixed by
/// log det_{A_j} = i*j*pi/2 at the base point i*e and 0 at e, continued
/// along the straight segment from the base point (adaptive bisection,
/// per-step phase capped at pi/2).
std::vector<Complex> tube_minor_logs(const Element& z);

/// Same, but along an explicit piecewise-linear path starting at i*e
/// (waypoints must stay inside the tube); used for path-independence tests.
std::vector<Complex> tube_minor_logs_along(const Element& z,
                                           const std::vector<Element>& waypoints);

/// Holomorphically continued Delta^s (star: Delta_*^s) under the declared
/// branch.
Complex power_function_tube(const Sig& s, const Element& z, bool star = false);

/// Continued log of the full determinant log Delta(z) (last minor log).
Complex tube_log_det(const Element& z);

/// Orbit signature of x in the closure of Omega under T_-: epsilon_j = 1 iff
/// the j-th pivot of the sequential elimination exceeds tol.
EpsilonPattern boundary_orbit_signature(const Element& x, double tol_rel = 1e-8);

bool is_tube_point(const Element& z, double tol = 0.0);

TriangularFactor random_triangular(const AlgebraDescriptor& desc, std::mt19937_64& rng);
Element random_cone_point(const AlgebraDescriptor& desc, std::mt19937_64& rng);
Element random_tube_element(const AlgebraDescriptor& desc, std::mt19937_64& rng,
                            double spread = 1.0);

/// min eigenvalue of Im z: a conservative inner radius used for
/// finite-difference step control.
double tube_inner_radius(const Element& z);

}  // namespace ck
