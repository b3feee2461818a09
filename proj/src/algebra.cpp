#include "ck/algebra.hpp"

#include <cmath>

namespace ck {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;

[[noreturn]] void mismatch() { throw StructuralError("descriptor mismatch"); }

bool is_matrix_family(const AlgebraDescriptor& d) {
  return d.family == Family::SymReal || d.family == Family::HermComplex;
}
}  // namespace

AlgebraDescriptor AlgebraDescriptor::sym_real(int r) {
  if (r < 1) throw StructuralError("rank must be >= 1");
  return {Family::SymReal, r, 0};
}

AlgebraDescriptor AlgebraDescriptor::herm_complex(int r) {
  if (r < 1) throw StructuralError("rank must be >= 1");
  return {Family::HermComplex, r, 0};
}

AlgebraDescriptor AlgebraDescriptor::spin(int k) {
  if (k < 1) throw StructuralError("spin parameter k must be >= 1");
  return {Family::Spin, 2, k};
}

int AlgebraDescriptor::peirce_a() const {
  switch (family) {
    case Family::SymReal: return 1;
    case Family::HermComplex: return 2;
    case Family::Spin: return spin_k;
  }
  throw StructuralError("bad family");
}

int AlgebraDescriptor::dim_m() const {
  return rank + peirce_a() * rank * (rank - 1) / 2;
}

std::string AlgebraDescriptor::name() const {
  switch (family) {
    case Family::SymReal: return "sym-real(" + std::to_string(rank) + ")";
    case Family::HermComplex: return "herm-complex(" + std::to_string(rank) + ")";
    case Family::Spin: return "spin(" + std::to_string(spin_k) + ")";
  }
  return "?";
}

bool Element::is_real(double tol) const {
  return coords.imag().cwiseAbs().maxCoeff() <= tol * (1.0 + coords.norm());
}

Element Element::real_part() const { return {desc, coords.real().cast<Complex>()}; }
Element Element::imag_part() const { return {desc, coords.imag().cast<Complex>()}; }
Element Element::conjugate() const { return {desc, coords.conjugate()}; }

Element operator+(const Element& x, const Element& y) {
  if (!(x.desc == y.desc)) mismatch();
  return {x.desc, x.coords + y.coords};
}
Element operator-(const Element& x, const Element& y) {
  if (!(x.desc == y.desc)) mismatch();
  return {x.desc, x.coords - y.coords};
}
Element operator*(Complex a, const Element& x) { return {x.desc, a * x.coords}; }

Element zero_element(const AlgebraDescriptor& desc) {
  return {desc, CVector::Zero(desc.dim_m())};
}

Element identity_element(const AlgebraDescriptor& desc) {
  CVector c = CVector::Zero(desc.dim_m());
  if (is_matrix_family(desc)) {
    for (int j = 0; j < desc.rank; ++j) c[j] = 1.0;
  } else {
    c[0] = 1.0;
    c[desc.dim_m() - 1] = 1.0;
  }
  return {desc, c};
}

CMatrix to_matrix(const Element& x) {
  const auto& d = x.desc;
  if (!is_matrix_family(d)) throw StructuralError("to_matrix: matrix families only");
  const int r = d.rank;
  CMatrix M = CMatrix::Zero(r, r);
  for (int j = 0; j < r; ++j) M(j, j) = x.coords[j];
  int idx = r;
  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      if (d.family == Family::SymReal) {
        Complex v = x.coords[idx++] / kSqrt2;
        M(j, k) = v;
        M(k, j) = v;
      } else {
        Complex re = x.coords[idx++];
        Complex im = x.coords[idx++];
        M(j, k) = (re + Complex(0, 1) * im) / kSqrt2;
        M(k, j) = (re - Complex(0, 1) * im) / kSqrt2;
      }
    }
  }
  return M;
}

Element from_matrix(const AlgebraDescriptor& desc, const CMatrix& M) {
  if (!is_matrix_family(desc)) throw StructuralError("from_matrix: matrix families only");
  const int r = desc.rank;
  CVector c(desc.dim_m());
  for (int j = 0; j < r; ++j) c[j] = M(j, j);
  int idx = r;
  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      if (desc.family == Family::SymReal) {
        c[idx++] = (M(j, k) + M(k, j)) / kSqrt2;
      } else {
        c[idx++] = (M(j, k) + M(k, j)) / kSqrt2;
        c[idx++] = (M(j, k) - M(k, j)) / (kSqrt2 * Complex(0, 1));
      }
    }
  }
  return {desc, c};
}

Complex spin_a(const Element& x) { return x.coords[0]; }
Complex spin_c(const Element& x) { return x.coords[x.coords.size() - 1]; }

CVector spin_b(const Element& x) {
  const int k = x.desc.spin_k;
  return x.coords.segment(1, k) / kSqrt2;
}

Element spin_element(const AlgebraDescriptor& desc, Complex a, const CVector& b, Complex c) {
  if (desc.family != Family::Spin) throw StructuralError("spin_element: spin family only");
  CVector v(desc.dim_m());
  v[0] = a;
  v.segment(1, desc.spin_k) = kSqrt2 * b;
  v[desc.dim_m() - 1] = c;
  return {desc, v};
}

Element jordan_product(const Element& x, const Element& y) {
  if (!(x.desc == y.desc)) mismatch();
  const auto& d = x.desc;
  if (is_matrix_family(d)) {
    CMatrix X = to_matrix(x), Y = to_matrix(y);
    return from_matrix(d, 0.5 * (X * Y + Y * X));
  }
  Complex a = spin_a(x), c = spin_c(x);
  Complex a2 = spin_a(y), c2 = spin_c(y);
  CVector b = spin_b(x), b2 = spin_b(y);
  Complex bb = b.transpose() * b2;  // bilinear, no conjugation
  Complex ra = a * a2 + bb;
  Complex rc = c * c2 + bb;
  CVector rb = 0.5 * ((a + c) * b2 + (a2 + c2) * b);
  return spin_element(d, ra, rb, rc);
}

Complex jordan_det(const Element& x) {
  const auto& d = x.desc;
  if (is_matrix_family(d)) return to_matrix(x).determinant();
  CVector b = spin_b(x);
  Complex bb = b.transpose() * b;
  return spin_a(x) * spin_c(x) - bb;
}

Element jordan_inverse(const Element& x, double tol) {
  const auto& d = x.desc;
  Complex det = jordan_det(x);
  if (std::abs(det) <= tol * std::pow(1.0 + x.norm(), d.rank))
    throw DomainError("jordan_inverse: singular element, |det| = " + std::to_string(std::abs(det)));
  if (is_matrix_family(d)) return from_matrix(d, to_matrix(x).inverse());
  return spin_element(d, spin_c(x) / det, CVector(-spin_b(x) / det), spin_a(x) / det);
}

Complex bilinear_pair(const Element& x, const Element& y) {
  if (!(x.desc == y.desc)) mismatch();
  return x.coords.transpose() * y.coords;
}

Complex inner_product(const Element& x, const Element& y) {
  if (!(x.desc == y.desc)) mismatch();
  return x.coords.dot(y.coords);  // Eigen: conjugates the first argument
}

Complex jordan_trace(const Element& x) {
  if (is_matrix_family(x.desc)) {
    Complex t = 0;
    for (int j = 0; j < x.desc.rank; ++j) t += x.coords[j];
    return t;
  }
  return spin_a(x) + spin_c(x);
}

SpectralDecomposition spectral_decompose(const Element& x) {
  const auto& d = x.desc;
  if (!x.is_real(1e-9)) throw StructuralError("spectral_decompose: real elements only");
  SpectralDecomposition out;
  const int r = d.rank;
  out.eigenvalues.resize(r);
  out.frame.reserve(r);
  if (d.family == Family::SymReal) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(to_matrix(x).real());
    if (es.info() != Eigen::Success) throw NumericError("eigen-solver failed");
    for (int j = 0; j < r; ++j) {
      int src = r - 1 - j;  // descending
      out.eigenvalues[j] = es.eigenvalues()[src];
      RVector v = es.eigenvectors().col(src);
      out.frame.push_back(from_matrix(d, (v * v.transpose()).cast<Complex>()));
    }
  } else if (d.family == Family::HermComplex) {
    CMatrix M = to_matrix(x);
    M = 0.5 * (M + M.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(M);
    if (es.info() != Eigen::Success) throw NumericError("eigen-solver failed");
    for (int j = 0; j < r; ++j) {
      int src = r - 1 - j;
      out.eigenvalues[j] = es.eigenvalues()[src];
      CVector v = es.eigenvectors().col(src);
      out.frame.push_back(from_matrix(d, v * v.adjoint()));
    }
  } else {
    double a = spin_a(x).real(), c = spin_c(x).real();
    RVector b = spin_b(x).real();
    double mid = 0.5 * (a + c);
    double rho = std::hypot(0.5 * (a - c), b.norm());
    out.eigenvalues[0] = mid + rho;
    out.eigenvalues[1] = mid - rho;
    if (rho < 1e-14 * (1.0 + std::abs(mid))) {
      out.frame.push_back(frame_idempotent(d, 1));
      out.frame.push_back(frame_idempotent(d, 2));
    } else {
      double da = 0.5 * (a - c) / rho;
      CVector bu = (0.5 / rho) * b.cast<Complex>();
      out.frame.push_back(spin_element(d, 0.5 * (1 + da), bu, 0.5 * (1 - da)));
      out.frame.push_back(spin_element(d, 0.5 * (1 - da), CVector(-bu), 0.5 * (1 + da)));
    }
  }
  return out;
}

Element frame_reversal(const Element& x) {
  const auto& d = x.desc;
  if (is_matrix_family(d)) {
    const int r = d.rank;
    CMatrix M = to_matrix(x), R(r, r);
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) R(j, k) = M(r - 1 - j, r - 1 - k);
    return from_matrix(d, R);
  }
  CVector c = x.coords;
  std::swap(c[0], c[c.size() - 1]);
  return {d, c};
}

Element frame_idempotent(const AlgebraDescriptor& desc, int j) {
  if (j < 1 || j > desc.rank) throw StructuralError("frame index out of range");
  CVector c = CVector::Zero(desc.dim_m());
  if (is_matrix_family(desc)) {
    c[j - 1] = 1.0;
  } else {
    c[j == 1 ? 0 : desc.dim_m() - 1] = 1.0;
  }
  return {desc, c};
}

Element Rotation::apply(const Element& x) const {
  if (!(x.desc == desc)) mismatch();
  if (is_matrix_family(desc))
    return from_matrix(desc, conjugator * to_matrix(x) * conjugator.adjoint());
  const int k = desc.spin_k, m = desc.dim_m();
  CVector block(k + 1);
  block.head(k) = x.coords.segment(1, k);
  block[k] = (x.coords[0] - x.coords[m - 1]) / kSqrt2;
  CVector rotated = spin_block.cast<Complex>() * block;
  Complex t = (x.coords[0] + x.coords[m - 1]) / kSqrt2;
  CVector c(m);
  c[0] = (t + rotated[k]) / kSqrt2;
  c.segment(1, k) = rotated.head(k);
  c[m - 1] = (t - rotated[k]) / kSqrt2;
  return {desc, c};
}

Rotation Rotation::inverse() const {
  Rotation inv = *this;
  if (is_matrix_family(desc)) inv.conjugator = conjugator.adjoint();
  else inv.spin_block = spin_block.transpose();
  return inv;
}

namespace {
RMatrix random_special_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  RMatrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = gauss(rng);
  Eigen::HouseholderQR<RMatrix> qr(G);
  RMatrix Q = qr.householderQ();
  RMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (R(j, j) < 0) Q.col(j) = -Q.col(j);
  if (Q.determinant() < 0) Q.col(0) = -Q.col(0);
  return Q;
}

CMatrix random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  CMatrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<CMatrix> qr(G);
  CMatrix Q = qr.householderQ();
  CMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Complex d = R(j, j);
    if (std::abs(d) > 0) Q.col(j) *= d / std::abs(d);
  }
  return Q;
}
}  // namespace

Rotation random_rotation(const AlgebraDescriptor& desc, std::mt19937_64& rng) {
  Rotation rot;
  rot.desc = desc;
  if (desc.family == Family::SymReal) {
    rot.conjugator = random_special_orthogonal(desc.rank, rng).cast<Complex>();
  } else if (desc.family == Family::HermComplex) {
    rot.conjugator = random_unitary(desc.rank, rng);
  } else {
    rot.spin_block = random_special_orthogonal(desc.spin_k + 1, rng);
  }
  return rot;
}

Element random_element(const AlgebraDescriptor& desc, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> gauss;
  CVector c(desc.dim_m());
  for (int i = 0; i < c.size(); ++i) c[i] = scale * gauss(rng);
  return {desc, c};
}

}  // namespace ck
