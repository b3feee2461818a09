#include "ck/kernels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "ck/riesz.hpp"

namespace ck {

Complex kernel_value(const Sig& s, const Element& z, const Element& w) {
  if (!(z.desc == w.desc)) throw StructuralError("kernel_value: descriptor mismatch");
  const Complex half_over_i(0, -0.5);  // 1/(2i)
  Element u(z.desc, (half_over_i * (z.coords - w.coords.conjugate())).eval());
  return power_function_tube(s, u);
}

GramReport gram_positivity(double lambda, const std::vector<Element>& points, double tol) {
  if (points.empty()) throw StructuralError("gram_positivity: need at least one point");
  const int n = static_cast<int>(points.size());
  Sig s = uniform_sig(points[0].desc.rank, Complex(-lambda, 0));
  GramReport rep;
  rep.lambda = lambda;
  rep.points = points;
  CMatrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      G(i, j) = kernel_value(s, points[i], points[j]);
      G(j, i) = std::conj(G(i, j));
    }
  // hermitian-symmetry sanity on independently computed transposed entries
  for (int i = 0; i < n && i < 4; ++i)
    for (int j = i + 1; j < n && j < 4; ++j) {
      Complex other = kernel_value(s, points[j], points[i]);
      if (std::abs(other - std::conj(G(i, j))) > 1e-10 * (1.0 + std::abs(other)))
        throw NumericError("gram_positivity: kernel lost hermitian symmetry");
    }
  rep.gram = G;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(G);
  rep.min_eigenvalue = es.eigenvalues()[0];
  rep.max_eigenvalue = es.eigenvalues()[n - 1];
  double norm = std::max(std::abs(rep.min_eigenvalue), std::abs(rep.max_eigenvalue));
  rep.verdict = rep.min_eigenvalue >= -tol * norm ? GramVerdict::PSD : GramVerdict::Indefinite;
  return rep;
}

namespace {

Element near_boundary_cone_point(const AlgebraDescriptor& desc, double delta,
                                 std::mt19937_64& rng) {
  std::uniform_real_distribution<double> logd(std::log(delta), 0.0);
  Element u = zero_element(desc);
  for (int j = 1; j <= desc.rank; ++j)
    u = u + Complex(std::exp(logd(rng))) * frame_idempotent(desc, j);
  return random_rotation(desc, rng).apply(u);
}

std::vector<Element> random_cloud(const AlgebraDescriptor& desc, int n, double delta,
                                  std::mt19937_64& rng) {
  std::vector<Element> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    Element x = random_element(desc, rng, 1.0).real_part();
    pts.push_back(x + Complex(0, 1) * near_boundary_cone_point(desc, delta, rng));
  }
  return pts;
}

double normalized_min_eig(const GramReport& rep) {
  double norm = std::max(std::abs(rep.min_eigenvalue), std::abs(rep.max_eigenvalue));
  return norm > 0 ? rep.min_eigenvalue / norm : 0.0;
}

/// Coordinate descent on the points, minimizing the normalized least
/// eigenvalue of the Gram matrix.
GramReport refine_cloud(GramReport rep, double lambda, double tol, std::mt19937_64& rng,
                        int sweeps) {
  const int n = static_cast<int>(rep.points.size());
  std::normal_distribution<double> g;
  double current = normalized_min_eig(rep);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (int i = 0; i < n; ++i) {
      for (int attempt = 0; attempt < 6; ++attempt) {
        Element cand = rep.points[i];
        double scale = 0.05 * std::max(1e-3, tube_inner_radius(cand));
        CVector noise(cand.coords.size());
        for (int c = 0; c < noise.size(); ++c) noise[c] = Complex(g(rng), g(rng)) * scale;
        cand.coords += noise;
        if (!is_tube_point(cand)) continue;
        auto pts = rep.points;
        pts[i] = cand;
        GramReport trial;
        try {
          trial = gram_positivity(lambda, pts, tol);
        } catch (const std::exception&) {
          continue;
        }
        double val = normalized_min_eig(trial);
        if (val < current) {
          current = val;
          rep = std::move(trial);
        }
      }
    }
  }
  return rep;
}

}  // namespace

std::optional<GramReport> search_indefinite(const AlgebraDescriptor& desc, double lambda,
                                            int max_restarts, std::uint64_t seed,
                                            double tol, int cloud_size) {
  std::mt19937_64 rng(seed);
  const double deltas[] = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
  std::optional<GramReport> best;
  double best_val = 0;
  for (int restart = 0; restart < max_restarts; ++restart) {
    double delta = deltas[restart % 5];
    GramReport rep;
    try {
      rep = gram_positivity(lambda, random_cloud(desc, cloud_size, delta, rng), tol);
    } catch (const std::exception&) {
      continue;
    }
    double val = normalized_min_eig(rep);
    if (val < best_val) {
      best_val = val;
      best = rep;
    }
    if (val < -tol) {
      best = refine_cloud(std::move(rep), lambda, tol, rng, 2);
      return best;
    }
  }
  if (best && normalized_min_eig(*best) < -tol) return best;
  // last resort: descend from the least-positive cloud seen
  if (best) {
    best = refine_cloud(std::move(*best), lambda, tol, rng, 4);
    if (normalized_min_eig(*best) < -tol) return best;
  }
  return std::nullopt;
}

std::pair<RVector, RVector> gauss_legendre(int n) {
  if (n < 1) throw StructuralError("gauss_legendre: n must be positive");
  RMatrix J = RMatrix::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    double b = i / std::sqrt(4.0 * i * i - 1.0);
    J(i, i - 1) = b;
    J(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> es(J);
  RVector nodes = es.eigenvalues();
  RVector weights(n);
  for (int i = 0; i < n; ++i) {
    double v0 = es.eigenvectors()(0, i);
    weights[i] = 2.0 * v0 * v0;
  }
  return {nodes, weights};
}

double cone_weighted_integral(const std::function<double(const Element&)>& g,
                              const std::vector<double>& s, int n_y, int n_theta) {
  if (s.size() != 2) throw StructuralError("cone_weighted_integral: rank-2 signature");
  auto desc = AlgebraDescriptor::sym_real(2);
  auto [tn, tw] = gauss_legendre(n_theta);
  const double y_lo = -30.0, y_hi = 8.0;
  const double hy = (y_hi - y_lo) / (n_y - 1);
  double total = 0;
  CVector coords(3);
  for (int a = 0; a < n_y; ++a) {
    double y1 = y_lo + a * hy;
    double wa = (a == 0 || a == n_y - 1) ? 0.5 : 1.0;
    double x11 = std::exp(y1);
    for (int b = 0; b < n_y; ++b) {
      double y2 = y_lo + b * hy;
      double wb = (b == 0 || b == n_y - 1) ? 0.5 : 1.0;
      double x22 = std::exp(y2);
      double geo = std::sqrt(x11 * x22);
      for (int t = 0; t < n_theta; ++t) {
        double theta = 0.5 * M_PI * tn[t];
        double wt = 0.5 * M_PI * tw[t];
        double cth = std::cos(theta);
        double x12 = geo * std::sin(theta);
        double det = x11 * x22 * cth * cth;
        // Delta^{s-(3/2)1} times the chart Jacobian sqrt2 (x11 x22)^{3/2} cos
        double weight = std::pow(x11, s[0] - s[1]) * std::pow(det, s[1] - 1.5) *
                        std::sqrt(2.0) * std::pow(x11 * x22, 1.5) * cth;
        coords << x11, x22, std::sqrt(2.0) * x12;
        total += wa * wb * wt * hy * hy * weight * g(Element(desc, coords));
      }
    }
  }
  return total;
}

namespace {

double bergman_rank1(const std::function<Complex(const Element&)>& f, double s1,
                     int n_x, int n_y) {
  auto desc = AlgebraDescriptor::sym_real(1);
  auto [xn, xw] = gauss_legendre(n_x);
  const double y_lo = -25.0, y_hi = 6.0;
  const double hy = (y_hi - y_lo) / (n_y - 1);
  double total = 0;
  CVector coords(1);
  for (int i = 0; i < n_x; ++i) {
    double phi = 0.5 * M_PI * xn[i];
    double c = std::cos(phi);
    double x = std::tan(phi);
    double wx = 0.5 * M_PI * xw[i] / (c * c);
    for (int j = 0; j < n_y; ++j) {
      double y = y_lo + j * hy;
      double wy = hy * ((j == 0 || j == n_y - 1) ? 0.5 : 1.0);
      double u = std::exp(y);
      coords << Complex(x, u);
      double fv = std::norm(f(Element(desc, coords)));
      total += wx * wy * fv * std::pow(u, s1 - 1.0);  // u^{s-2} du = u^{s-1} dy
    }
  }
  return total;
}

double bergman_rank2(const std::function<Complex(const Element&)>& f,
                     const std::vector<double>& s, int nodes) {
  auto desc = AlgebraDescriptor::sym_real(2);
  auto [xn, xw] = gauss_legendre(nodes);
  auto [tn, tw] = gauss_legendre(nodes);
  const double y_lo = -14.0, y_hi = 4.0;
  const int n_y = 3 * nodes;
  const double hy = (y_hi - y_lo) / (n_y - 1);
  const double p = 3.0;  // genus of SymReal(2)
  // precompute the tangent map for the three real directions
  std::vector<double> xv(nodes), xwt(nodes);
  for (int i = 0; i < nodes; ++i) {
    double phi = 0.5 * M_PI * xn[i];
    double c = std::cos(phi);
    xv[i] = std::tan(phi);
    xwt[i] = 0.5 * M_PI * xw[i] / (c * c);
  }
  double total = 0;
  CVector coords(3);
  for (int a = 0; a < n_y; ++a) {
    double u11 = std::exp(y_lo + a * hy);
    double wa = hy * ((a == 0 || a == n_y - 1) ? 0.5 : 1.0);
    for (int b = 0; b < n_y; ++b) {
      double u22 = std::exp(y_lo + b * hy);
      double wb = hy * ((b == 0 || b == n_y - 1) ? 0.5 : 1.0);
      double geo = std::sqrt(u11 * u22);
      for (int t = 0; t < nodes; ++t) {
        double theta = 0.5 * M_PI * tn[t];
        double wt = 0.5 * M_PI * tw[t];
        double cth = std::cos(theta);
        double u12 = geo * std::sin(theta);
        double det = u11 * u22 * cth * cth;
        double wu = wa * wb * wt * std::pow(u11, s[0] - s[1]) * std::pow(det, s[1] - p) *
                    std::sqrt(2.0) * std::pow(u11 * u22, 1.5) * cth;
        for (int i = 0; i < nodes; ++i)
          for (int j = 0; j < nodes; ++j)
            for (int k = 0; k < nodes; ++k) {
              coords << Complex(xv[i], u11), Complex(xv[j], u22),
                  Complex(xv[k], std::sqrt(2.0) * u12);
              total += wu * xwt[i] * xwt[j] * xwt[k] * std::norm(f(Element(desc, coords)));
            }
      }
    }
  }
  return total;
}

}  // namespace

QuadratureResult bergman_norm(const std::function<Complex(const Element&)>& f,
                              const std::vector<double>& s,
                              const AlgebraDescriptor& desc, int nodes) {
  if (static_cast<int>(s.size()) != desc.rank)
    throw StructuralError("bergman_norm: signature length != rank");
  QuadratureResult out;
  if (desc.rank == 1) {
    double full = bergman_rank1(f, s[0], 6 * nodes, 6 * nodes);
    double half = bergman_rank1(f, s[0], 3 * nodes, 3 * nodes);
    out.value = full;
    out.error_indicator = std::abs(full - half) / std::max(1e-300, std::abs(full));
  } else if (desc.rank == 2 && desc.family == Family::SymReal) {
    double full = bergman_rank2(f, s, nodes);
    double half = bergman_rank2(f, s, std::max(4, nodes / 2));
    out.value = full;
    out.error_indicator = std::abs(full - half) / std::max(1e-300, std::abs(full));
  } else {
    throw DomainError("bergman_norm: quadrature supports rank 1 and SymReal(2) only");
  }
  out.converged = out.error_indicator < 1e-2;
  return out;
}

NormReport series_norm(const PolyC& f, const Rational& lambda, NormVariant variant,
                       const AlgebraDescriptor& desc, std::uint64_t seed) {
  const int r = desc.rank, a = desc.peirce_a();
  Rational edge = Rational(desc.dim_m(), r) - 1;
  if (variant == NormVariant::A_lambda && !(lambda > edge))
    throw DomainError("series_norm: A_lambda requires lambda > m/r - 1");
  if (variant == NormVariant::H_lambda && K_lambda_set(lambda, desc).empty())
    throw DomainError(
        "series_norm: H_lambda requires a degenerate factor (K_lambda nonempty)");

  NormReport rep;
  rep.lambda = lambda;
  rep.variant = variant;
  rep.seminorm = variant == NormVariant::H_lambda;
  RationalVec base(r);
  for (int k = 0; k < r; ++k) base[k] = lambda - Rational(a * k, 2);
  const int q_lam = static_cast<int>(K_lambda_set(lambda, desc).size());

  std::uint64_t salt = 0;
  for (const auto& s : enumerate_N_Omega(r, f.degree())) {
    ++salt;
    auto basis = orbit_basis(desc, s, 4, seed + salt);
    PolyC proj = project_Q(f, basis);
    double nsq = fischer_inner(proj, proj).real();
    if (variant == NormVariant::H_lambda && q_multiplicity(s, lambda, desc) != q_lam) {
      rep.omitted.push_back(s);
      continue;
    }
    Rational denom = shifted_factorials(base, s, variant == NormVariant::H_lambda);
    NormReport::Term term;
    term.s = s;
    term.weight = 1 / denom;
    term.q_norm_sq = nsq;
    rep.total += to_double(term.weight) * nsq;
    rep.terms.push_back(std::move(term));
  }
  return rep;
}

}  // namespace ck
