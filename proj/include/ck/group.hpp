#pragma once

#include <functional>

#include "ck/box.hpp"
#include "ck/cone.hpp"
#include "ck/spaces.hpp"

namespace ck {

/// One generator of the tube-domain Moebius group: affine maps plus the
/// inversion z -> -z^{-1}.
struct Generator {
  enum class Kind { Translate, Triangular, Rotate, Invert };
  Kind kind = Kind::Invert;
  Element shift;         // Translate
  TriangularFactor tri;  // Triangular
  Rotation rot;          // Rotate

  static Generator translate(Element x);
  static Generator triangular(TriangularFactor t);
  static Generator rotate(Rotation k);
  static Generator invert(const AlgebraDescriptor& desc);
};

/// Composition word; gens.front() acts last:
/// w(z) = gens[0](gens[1](... gens.back()(z))).
struct GroupWord {
  AlgebraDescriptor desc;
  std::vector<Generator> gens;
};

Element apply_generator(const Generator& g, const Element& z);
Element apply_word(const GroupWord& w, const Element& z);
GroupWord inverse(const GroupWord& w);

/// The inversion iota(z) = -z^{-1} (a biholomorphism of the tube fixing ie).
Element invert_point(const Element& z);

/// (J_w(z))^exponent with the complex Jacobian determinant accumulated by
/// the chain rule along the word; the inversion contributes
/// Delta^{-p 1}(z) under the declared branch, linear generators their real
/// determinants.  |result| is branch-independent.
Complex jacobian_factor(const GroupWord& w, const Element& z, const Rational& exponent);

/// Values of U_lambda(w) f = (f o w^{-1}) (J w^{-1})^{lambda/p} at the
/// points (one tracked representative of the ray).
std::vector<Complex> act_U_lambda(const GroupWord& w, const Rational& lambda,
                                  const std::function<Complex(const Element&)>& f,
                                  const std::vector<Element>& pts);

/// Cayley transform C(z) = (z + ie)^{-1} (z - ie) into the bounded
/// realization, and its inverse i (z + e)(e - z)^{-1}.
Element cayley(const Element& z);
Element cayley_inverse(const Element& z);

/// Max relative residual over the points of
///   box^{m/r-lambda}[(f o iota) B0^{-lambda 1}]
///     = c * 4^{r lambda - m} B0^{-(2m/r-lambda) 1} (box^{m/r-lambda} f) o iota
/// with a fitted unimodular constant c (the two sides agree up to a
/// modulus-one factor; see the ray-representation normalization).  The left
/// side is evaluated by finite differences, the right symbolically.
double intertwining_residual(const Rational& lambda, const PolyC& f,
                             const std::vector<Element>& pts);

}  // namespace ck
