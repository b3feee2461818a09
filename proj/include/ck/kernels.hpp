#pragma once

#include <functional>
#include <optional>

#include "ck/classifier.hpp"
#include "ck/cone.hpp"
#include "ck/spaces.hpp"

namespace ck {

/// B^s(z, w) = Delta^s((z - conj(w))/2i) on the tube domain; the argument
/// has real part (Im z + Im w)/2 in the open cone, so the declared branch
/// applies.
Complex kernel_value(const Sig& s, const Element& z, const Element& w);

enum class GramVerdict { PSD, Indefinite };

struct GramReport {
  double lambda = 0;
  std::vector<Element> points;
  CMatrix gram;
  double min_eigenvalue = 0;
  double max_eigenvalue = 0;
  GramVerdict verdict = GramVerdict::PSD;
};

/// Hermitian Gram matrix of B^{-lambda 1} at the points; PSD iff the least
/// eigenvalue is >= -tol * max |eigenvalue|.
GramReport gram_positivity(double lambda, const std::vector<Element>& points, double tol);

/// Best-effort search for an indefinite Gram configuration: random clouds
/// with near-boundary imaginary parts, refined by coordinate descent on the
/// least eigenvalue.  Returns the certifying report, or nullopt if every
/// restart stays PSD-within-tol.
std::optional<GramReport> search_indefinite(const AlgebraDescriptor& desc, double lambda,
                                            int max_restarts, std::uint64_t seed,
                                            double tol = 1e-6, int cloud_size = 40);

/// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
std::pair<RVector, RVector> gauss_legendre(int n);

/// Integral over the rank-2 cone of SymReal(2):
///   int_Omega g(x) Delta^{s - (3/2) 1}(x) dx
/// in the orthonormal-coordinate Lebesgue measure, via the exponential
/// chart x11 = e^{y1}, x22 = e^{y2}, x12 = sqrt(x11 x22) sin(theta).
double cone_weighted_integral(const std::function<double(const Element&)>& g,
                              const std::vector<double>& s, int n_y = 180,
                              int n_theta = 48);

struct QuadratureResult {
  double value = 0;
  double error_indicator = 0;  // relative change under halved resolution
  bool converged = false;
};

/// Weighted Bergman norm squared
///   int_{T_Omega} |f(z)|^2 Delta^{s - p 1}(Im z) dx dy
/// by tensor quadrature (tangent map on F, exponential chart on Omega).
/// Rank 1 and 2 only.
QuadratureResult bergman_norm(const std::function<Complex(const Element&)>& f,
                              const std::vector<double>& s,
                              const AlgebraDescriptor& desc, int nodes = 24);

enum class NormVariant { A_lambda, H_lambda };

struct NormReport {
  Rational lambda;
  NormVariant variant = NormVariant::A_lambda;
  bool seminorm = false;  // true for the H variant (terms may be omitted)
  struct Term {
    SigN s;
    Rational weight;    // 1 / shifted factorial
    double q_norm_sq;   // ||Q_s f||_F^2
  };
  std::vector<Term> terms;
  std::vector<SigN> omitted;  // signatures excluded by the H filter
  double total = 0;
};

/// Series norm of a polynomial: c_lambda = 1 convention,
///   A: sum over s of ||Q_s f||_F^2 / (lambda 1 - m/2)^{s}, lambda > m/r-1;
///   H: only signatures of maximal zero multiplicity, primed factorials,
///      lambda in m/r-1-N.
NormReport series_norm(const PolyC& f, const Rational& lambda, NormVariant variant,
                       const AlgebraDescriptor& desc, std::uint64_t seed = 12345);

}  // namespace ck
