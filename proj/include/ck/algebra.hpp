#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

#include "ck/errors.hpp"
#include "ck/rational.hpp"

namespace ck {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

enum class Family { SymReal, HermComplex, Spin };

/// Which simple Euclidean Jordan algebra: symmetric real r x r matrices
/// (a = 1), hermitian complex r x r matrices (a = 2), or the spin factor of
/// a k-dimensional vector part (rank 2, a = k, m = k + 2).
struct AlgebraDescriptor {
  Family family = Family::SymReal;
  int rank = 1;
  int spin_k = 0;  // only meaningful for Family::Spin

  static AlgebraDescriptor sym_real(int r);
  static AlgebraDescriptor herm_complex(int r);
  static AlgebraDescriptor spin(int k);

  int peirce_a() const;
  int dim_m() const;
  Rational genus_p() const { return Rational(2 * dim_m(), rank); }

  std::string name() const;

  friend bool operator==(const AlgebraDescriptor& x, const AlgebraDescriptor& y) {
    return x.family == y.family && x.rank == y.rank && x.spin_k == y.spin_k;
  }
};

/// Element of the algebra F or its complexification F_C, stored as complex
/// coordinates in the fixed orthonormal basis of F.  Real elements simply
/// have (numerically) vanishing imaginary parts.
///
/// Basis layout:
///   SymReal(r):     E_jj (j = 0..r-1), then (E_jk + E_kj)/sqrt2 for j < k
///                   in lexicographic (j,k) order.
///   HermComplex(r): E_jj, then for each j < k the pair
///                   (E_jk + E_kj)/sqrt2 and (iE_jk - iE_kj)/sqrt2.
///   Spin(k):        (a, sqrt2 * b_1, ..., sqrt2 * b_k, c); the rescaling
///                   makes the spin inner product aa' + 2<b,b'> + cc' the
///                   coordinate dot product.
struct Element {
  AlgebraDescriptor desc;
  CVector coords;

  Element() = default;
  Element(AlgebraDescriptor d, CVector c) : desc(d), coords(std::move(c)) {
    if (coords.size() != desc.dim_m()) throw StructuralError("coordinate length != m");
  }

  bool is_real(double tol = 1e-12) const;
  Element real_part() const;
  Element imag_part() const;
  Element conjugate() const;
  double norm() const { return coords.norm(); }

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator*(Complex a, const Element& x);
};

struct SpectralDecomposition {
  RVector eigenvalues;           // weakly decreasing, length r
  std::vector<Element> frame;    // primitive idempotents c_1..c_r
};

Element zero_element(const AlgebraDescriptor& desc);
Element identity_element(const AlgebraDescriptor& desc);

/// Matrix families only: reconstruct the (complex) r x r matrix.
CMatrix to_matrix(const Element& x);
Element from_matrix(const AlgebraDescriptor& desc, const CMatrix& M);

/// Spin accessors (the mathematical (a, b, c) parts, undoing the sqrt2
/// coordinate rescaling of b).
Complex spin_a(const Element& x);
Complex spin_c(const Element& x);
CVector spin_b(const Element& x);
Element spin_element(const AlgebraDescriptor& desc, Complex a, const CVector& b, Complex c);

Element jordan_product(const Element& x, const Element& y);

/// Determinant polynomial det_A, evaluated as the holomorphic extension on
/// complex coordinates (matrix determinant resp. ac - b.b).
Complex jordan_det(const Element& x);

Element jordan_inverse(const Element& x, double tol = 1e-13);

/// Real bilinear trace form extended bilinearly (no conjugation):
/// coordinate dot product in the orthonormal basis.
Complex bilinear_pair(const Element& x, const Element& y);

/// The Euclidean inner product; sesquilinear (conjugate-linear in x) on
/// complexified elements, coinciding with bilinear_pair on real ones.
Complex inner_product(const Element& x, const Element& y);

/// <x, e>: matrix trace resp. a + c.
Complex jordan_trace(const Element& x);

/// Eigenvalues + Jordan frame; eigen-decomposition for matrix families,
/// closed form for spin.  Real elements only.
SpectralDecomposition spectral_decompose(const Element& x);

/// The order-reversing orthogonal algebra automorphism sending the standard
/// frame e_j to e_{r+1-j}: conjugation by the antidiagonal permutation for
/// matrix families, the (a,b,c) -> (c,b,a) swap for spin.  Complex-linear on
/// complexified elements.
Element frame_reversal(const Element& x);

/// j-th standard frame idempotent, 1-based (E_jj resp. (1,0,0)/(0,0,1)).
Element frame_idempotent(const AlgebraDescriptor& desc, int j);

/// An orthogonal Jordan-algebra automorphism fixing e (an element of the
/// sampled K_0): conjugation by a rotation for matrix families, a rotation
/// of the (b, (a-c)/sqrt2) block for spin.
struct Rotation {
  AlgebraDescriptor desc;
  CMatrix conjugator;  // matrix families: O resp. U acting as M -> U M U^*
  RMatrix spin_block;  // spin: SO(k+1) on coords (b~_1..b~_k, (a-c)/sqrt2)

  Element apply(const Element& x) const;
  Rotation inverse() const;
};

Rotation random_rotation(const AlgebraDescriptor& desc, std::mt19937_64& rng);

/// m x m real matrix of a linear map on F given by its action on elements.
template <class Map>
RMatrix coordinate_matrix(const AlgebraDescriptor& desc, Map&& map) {
  const int m = desc.dim_m();
  RMatrix A(m, m);
  for (int j = 0; j < m; ++j) {
    CVector unit = CVector::Zero(m);
    unit[j] = 1.0;
    Element image = map(Element(desc, unit));
    A.col(j) = image.coords.real();
  }
  return A;
}

Element random_element(const AlgebraDescriptor& desc, std::mt19937_64& rng, double scale = 1.0);

}  // namespace ck
