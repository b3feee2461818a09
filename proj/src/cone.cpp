#include "ck/cone.hpp"

#include <algorithm>
#include <cmath>

namespace ck {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kPi = 3.14159265358979323846;

bool is_matrix_family(const AlgebraDescriptor& d) {
  return d.family == Family::SymReal || d.family == Family::HermComplex;
}
}  // namespace

Sig uniform_sig(int r, Complex lambda) { return Sig(r, lambda); }

Sig sig_of(const SigN& s) {
  Sig out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = static_cast<double>(s[i]);
  return out;
}

Sig sig_of(const RationalVec& s) {
  Sig out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = to_double(s[i]);
  return out;
}

Sig sigma_reverse(const Sig& s) { return Sig(s.rbegin(), s.rend()); }
SigN sigma_reverse(const SigN& s) { return SigN(s.rbegin(), s.rend()); }

int sig_total(const SigN& s) {
  int t = 0;
  for (int v : s) t += v;
  return t;
}

bool is_N_Omega(const SigN& s) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] < 0) return false;
    if (j && s[j] > s[j - 1]) return false;
  }
  return true;
}

bool is_N_Omega_star(const SigN& s) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] < 0) return false;
    if (j && s[j] < s[j - 1]) return false;
  }
  return true;
}

std::vector<SigN> enumerate_N_Omega(int r, int bound) {
  std::vector<SigN> out;
  SigN cur(r, 0);
  // lexicographic recursion over weakly decreasing tuples with sum <= bound
  auto rec = [&](auto&& self, int pos, int maxv, int budget) -> void {
    if (pos == r) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(maxv, budget); ++v) {
      cur[pos] = v;
      self(self, pos + 1, v, budget - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, bound, bound);
  return out;
}

RVector TriangularFactor::diag() const {
  if (is_matrix_family(desc)) return mat.diagonal().real();
  RVector d(2);
  d[0] = alpha;
  d[1] = gamma;
  return d;
}

bool cone_contains(const Element& x, double tol) {
  if (!x.is_real(1e-9)) return false;
  auto dec = spectral_decompose(x);
  return dec.eigenvalues.minCoeff() > tol;
}

TriangularFactor cholesky_factor(const Element& x) {
  if (!cone_contains(x)) throw DomainError("cholesky_factor: element not in the open cone");
  TriangularFactor t;
  t.desc = x.desc;
  if (x.desc.family == Family::SymReal) {
    Eigen::LLT<RMatrix> llt(to_matrix(x).real());
    if (llt.info() != Eigen::Success) throw NumericError("cholesky failed");
    t.mat = RMatrix(llt.matrixL()).cast<Complex>();
  } else if (x.desc.family == Family::HermComplex) {
    CMatrix M = to_matrix(x);
    Eigen::LLT<CMatrix> llt(0.5 * (M + M.adjoint()));
    if (llt.info() != Eigen::Success) throw NumericError("cholesky failed");
    t.mat = llt.matrixL();
  } else {
    double a = spin_a(x).real();
    double det = jordan_det(x).real();
    t.alpha = std::sqrt(a);
    t.beta = spin_b(x).real() / t.alpha;
    t.gamma = std::sqrt(det / a);
  }
  return t;
}

Element act_triangular(const TriangularFactor& t, const Element& x) {
  if (!(t.desc == x.desc)) throw StructuralError("descriptor mismatch");
  if (is_matrix_family(t.desc))
    return from_matrix(t.desc, t.mat * to_matrix(x) * t.mat.adjoint());
  Complex a = spin_a(x), c = spin_c(x);
  CVector b = spin_b(x);
  const double al = t.alpha, ga = t.gamma;
  const RVector& be = t.beta;
  Complex beta_b = be.cast<Complex>().transpose() * b;
  Complex ra = al * al * a;
  CVector rb = al * ga * b + (al * a) * be.cast<Complex>();
  Complex rc = ga * ga * c + 2.0 * ga * beta_b + be.squaredNorm() * a;
  return spin_element(t.desc, ra, rb, rc);
}

TriangularFactor compose(const TriangularFactor& t1, const TriangularFactor& t2) {
  if (!(t1.desc == t2.desc)) throw StructuralError("descriptor mismatch");
  TriangularFactor t;
  t.desc = t1.desc;
  if (is_matrix_family(t.desc)) {
    t.mat = t1.mat * t2.mat;
  } else {
    t.alpha = t1.alpha * t2.alpha;
    t.gamma = t1.gamma * t2.gamma;
    t.beta = t2.alpha * t1.beta + t1.gamma * t2.beta;
  }
  return t;
}

TriangularFactor inverse(const TriangularFactor& t) {
  TriangularFactor inv;
  inv.desc = t.desc;
  if (is_matrix_family(t.desc)) {
    inv.mat = t.mat.inverse();
  } else {
    inv.alpha = 1.0 / t.alpha;
    inv.gamma = 1.0 / t.gamma;
    inv.beta = -t.beta / (t.alpha * t.gamma);
  }
  return inv;
}

TriangularFactor identity_triangular(const AlgebraDescriptor& desc) {
  TriangularFactor t;
  t.desc = desc;
  if (is_matrix_family(desc)) {
    t.mat = CMatrix::Identity(desc.rank, desc.rank);
  } else {
    t.beta = RVector::Zero(desc.spin_k);
  }
  return t;
}

Complex triangular_character(const TriangularFactor& t, const Sig& s) {
  RVector d = t.diag();
  Complex out = 1.0;
  for (int j = 0; j < d.size(); ++j) out *= std::exp(2.0 * s[j] * std::log(d[j]));
  return out;
}

std::vector<Complex> principal_minors(const Element& x) {
  const auto& d = x.desc;
  std::vector<Complex> out(d.rank);
  if (is_matrix_family(d)) {
    CMatrix M = to_matrix(x);
    for (int j = 1; j <= d.rank; ++j) out[j - 1] = M.topLeftCorner(j, j).determinant();
  } else {
    out[0] = spin_a(x);
    out[1] = jordan_det(x);
  }
  return out;
}

Complex power_function(const Sig& s, const Element& x, bool star) {
  if (star) return power_function(sigma_reverse(s), frame_reversal(x), false);
  const int r = x.desc.rank;
  if (static_cast<int>(s.size()) != r) throw StructuralError("signature length != rank");
  if (!cone_contains(x)) throw DomainError("power_function: element not in the open cone");
  auto minors = principal_minors(x);
  Complex log_sum = 0.0;
  for (int j = 0; j < r; ++j) {
    double mj = minors[j].real();
    if (mj <= 0) throw NumericError("nonpositive principal minor");
    Complex expo = s[j] - (j + 1 < r ? s[j + 1] : Complex(0));
    log_sum += expo * std::log(mj);
  }
  return std::exp(log_sum);
}

double power_function_real(const RationalVec& s, const Element& x, bool star) {
  return power_function(sig_of(s), x, star).real();
}

namespace {

/// Walk log-minors continuously along the straight segment [from, to].
void continue_logs(const Element& from, const Element& to, std::vector<Complex>& logs) {
  const int r = from.desc.rank;
  auto at = [&](double tau) {
    return Element(from.desc, CVector((1.0 - tau) * from.coords + tau * to.coords));
  };
  std::vector<Complex> cur = principal_minors(from);
  double tau = 0.0, step = 1.0;
  int evals = 0;
  while (tau < 1.0) {
    double tau2 = std::min(1.0, tau + step);
    auto next = principal_minors(at(tau2));
    bool ok = true;
    for (int j = 0; j < r; ++j) {
      Complex ratio = next[j] / cur[j];
      if (!(std::abs(ratio) > 0) || std::abs(std::arg(ratio)) >= 0.5 * kPi) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      step *= 0.5;
      if (step < 1e-12) throw NumericError("log-minor continuation: step subdivision limit");
      continue;
    }
    for (int j = 0; j < r; ++j) logs[j] += std::log(next[j] / cur[j]);
    cur = std::move(next);
    tau = tau2;
    step = std::min(1.0, step * 2.0);
    if (++evals > 100000) throw NumericError("log-minor continuation: too many steps");
  }
}

Element scaled_identity(const AlgebraDescriptor& d, Complex c) {
  return c * identity_element(d);
}

}  // namespace

std::vector<Complex> tube_minor_logs(const Element& z) {
  const int r = z.desc.rank;
  std::vector<Complex> logs(r);
  if (cone_contains(z.imag_part())) {
    // base point i e, log det_{A_j} = i j pi/2 there
    for (int j = 0; j < r; ++j) logs[j] = Complex(0, (j + 1) * kPi / 2.0);
    continue_logs(scaled_identity(z.desc, Complex(0, 1)), z, logs);
  } else if (cone_contains(z.real_part())) {
    continue_logs(scaled_identity(z.desc, 1.0), z, logs);
  } else {
    throw DomainError("tube_minor_logs: neither Im z nor Re z in the open cone");
  }
  return logs;
}

std::vector<Complex> tube_minor_logs_along(const Element& z,
                                           const std::vector<Element>& waypoints) {
  const int r = z.desc.rank;
  std::vector<Complex> logs(r);
  for (int j = 0; j < r; ++j) logs[j] = Complex(0, (j + 1) * kPi / 2.0);
  Element cur = scaled_identity(z.desc, Complex(0, 1));
  for (const Element& w : waypoints) {
    continue_logs(cur, w, logs);
    cur = w;
  }
  continue_logs(cur, z, logs);
  return logs;
}

Complex power_function_tube(const Sig& s, const Element& z, bool star) {
  if (star) return power_function_tube(sigma_reverse(s), frame_reversal(z), false);
  const int r = z.desc.rank;
  if (static_cast<int>(s.size()) != r) throw StructuralError("signature length != rank");
  auto logs = tube_minor_logs(z);
  Complex log_sum = 0.0;
  for (int j = 0; j < r; ++j)
    log_sum += (s[j] - (j + 1 < r ? s[j + 1] : Complex(0))) * logs[j];
  return std::exp(log_sum);
}

Complex tube_log_det(const Element& z) { return tube_minor_logs(z).back(); }

EpsilonPattern boundary_orbit_signature(const Element& x, double tol_rel) {
  const auto& d = x.desc;
  const double tol = tol_rel * std::max(1e-300, x.norm());
  {
    auto dec = spectral_decompose(x);
    if (dec.eigenvalues.minCoeff() < -tol)
      throw DomainError("boundary_orbit_signature: element not in the closed cone");
  }
  EpsilonPattern eps;
  eps.bits.assign(d.rank, 0);
  if (is_matrix_family(d)) {
    CMatrix M = to_matrix(x);
    const int r = d.rank;
    for (int j = 0; j < r; ++j) {
      double pivot = M(j, j).real();
      if (pivot > tol) {
        eps.bits[j] = 1;
        CVector col = M.col(j);
        M -= (col * col.adjoint()) / pivot;
      }
      // pivot ~ 0: the closed-cone constraint forces the whole row to ~0
    }
  } else {
    double a = spin_a(x).real(), c = spin_c(x).real();
    RVector b = spin_b(x).real();
    if (a > tol) {
      eps.bits[0] = 1;
      c -= b.squaredNorm() / a;
    }
    if (c > tol) eps.bits[1] = 1;
  }
  return eps;
}

bool is_tube_point(const Element& z, double tol) { return cone_contains(z.imag_part(), tol); }

TriangularFactor random_triangular(const AlgebraDescriptor& desc, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> logd(std::log(0.5), std::log(2.0));
  std::normal_distribution<double> gauss(0.0, 0.3);
  TriangularFactor t;
  t.desc = desc;
  if (is_matrix_family(desc)) {
    const int r = desc.rank;
    CMatrix L = CMatrix::Zero(r, r);
    for (int j = 0; j < r; ++j) L(j, j) = std::exp(logd(rng));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < j; ++k)
        L(j, k) = desc.family == Family::SymReal ? Complex(gauss(rng))
                                                 : Complex(gauss(rng), gauss(rng));
    t.mat = L;
  } else {
    t.alpha = std::exp(logd(rng));
    t.gamma = std::exp(logd(rng));
    t.beta = RVector::NullaryExpr(desc.spin_k, [&](Eigen::Index) { return gauss(rng); });
  }
  return t;
}

Element random_cone_point(const AlgebraDescriptor& desc, std::mt19937_64& rng) {
  return act_triangular(random_triangular(desc, rng), identity_element(desc));
}

Element random_tube_element(const AlgebraDescriptor& desc, std::mt19937_64& rng,
                            double spread) {
  Element re = random_element(desc, rng, spread);
  Element im = random_cone_point(desc, rng);
  return re.real_part() + Complex(0, 1) * im;
}

double tube_inner_radius(const Element& z) {
  auto dec = spectral_decompose(z.imag_part());
  return dec.eigenvalues.minCoeff();
}

}  // namespace ck
