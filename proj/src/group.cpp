#include "ck/group.hpp"

#include <cmath>

namespace ck {

Generator Generator::translate(Element x) {
  Generator g;
  g.kind = Kind::Translate;
  g.shift = std::move(x);
  return g;
}

Generator Generator::triangular(TriangularFactor t) {
  Generator g;
  g.kind = Kind::Triangular;
  g.tri = std::move(t);
  return g;
}

Generator Generator::rotate(Rotation k) {
  Generator g;
  g.kind = Kind::Rotate;
  g.rot = std::move(k);
  return g;
}

Generator Generator::invert(const AlgebraDescriptor& desc) {
  Generator g;
  g.kind = Kind::Invert;
  g.shift = zero_element(desc);
  return g;
}

Element invert_point(const Element& z) {
  return Complex(-1) * jordan_inverse(z);
}

Element apply_generator(const Generator& g, const Element& z) {
  switch (g.kind) {
    case Generator::Kind::Translate:
      return z + g.shift;
    case Generator::Kind::Triangular:
      return act_triangular(g.tri, z);
    case Generator::Kind::Rotate:
      return g.rot.apply(z);
    case Generator::Kind::Invert:
      return invert_point(z);
  }
  throw StructuralError("apply_generator: unknown generator kind");
}

Element apply_word(const GroupWord& w, const Element& z) {
  Element cur = z;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it)
    cur = apply_generator(*it, cur);
  return cur;
}

GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  out.desc = w.desc;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
    Generator g = *it;
    switch (g.kind) {
      case Generator::Kind::Translate:
        g.shift = Complex(-1) * g.shift;
        break;
      case Generator::Kind::Triangular:
        g.tri = inverse(g.tri);
        break;
      case Generator::Kind::Rotate:
        g.rot = g.rot.inverse();
        break;
      case Generator::Kind::Invert:
        break;  // an involution
    }
    out.gens.push_back(std::move(g));
  }
  return out;
}

namespace {

Complex log_real_det(double det) {
  if (det == 0) throw NumericError("singular linear generator");
  Complex out(std::log(std::abs(det)), 0);
  if (det < 0) out += Complex(0, M_PI);
  return out;
}

Complex generator_log_jacobian(const AlgebraDescriptor& desc, const Generator& g,
                               const Element& at) {
  switch (g.kind) {
    case Generator::Kind::Translate:
      return Complex(0);
    case Generator::Kind::Triangular: {
      RMatrix A = coordinate_matrix(
          desc, [&](const Element& x) { return act_triangular(g.tri, x); });
      return log_real_det(A.determinant());
    }
    case Generator::Kind::Rotate: {
      RMatrix A = coordinate_matrix(desc, [&](const Element& x) { return g.rot.apply(x); });
      return log_real_det(A.determinant());
    }
    case Generator::Kind::Invert:
      // d(-z^{-1}) has complex determinant Delta^{-p 1}(z); continued branch.
      return -to_double(desc.genus_p()) * tube_log_det(at);
  }
  throw StructuralError("generator_log_jacobian: unknown generator kind");
}

}  // namespace

Complex jacobian_factor(const GroupWord& w, const Element& z, const Rational& exponent) {
  Complex log_total(0);
  Element cur = z;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
    log_total += generator_log_jacobian(w.desc, *it, cur);
    cur = apply_generator(*it, cur);
  }
  return std::exp(to_double(exponent) * log_total);
}

std::vector<Complex> act_U_lambda(const GroupWord& w, const Rational& lambda,
                                  const std::function<Complex(const Element&)>& f,
                                  const std::vector<Element>& pts) {
  GroupWord winv = inverse(w);
  Rational lam_over_p = lambda * Rational(w.desc.rank, 2 * w.desc.dim_m());
  std::vector<Complex> out;
  out.reserve(pts.size());
  for (const auto& z : pts)
    out.push_back(f(apply_word(winv, z)) * jacobian_factor(winv, z, lam_over_p));
  return out;
}

Element cayley(const Element& z) {
  Element ie = Complex(0, 1) * identity_element(z.desc);
  return jordan_product(jordan_inverse(z + ie), z - ie);
}

Element cayley_inverse(const Element& z) {
  Element e = identity_element(z.desc);
  return Complex(0, 1) * jordan_product(z + e, jordan_inverse(e - z));
}

double intertwining_residual(const Rational& lambda, const PolyC& f,
                             const std::vector<Element>& pts) {
  if (pts.empty()) throw StructuralError("intertwining_residual: no points");
  const AlgebraDescriptor desc = pts[0].desc;
  const int r = desc.rank;
  const int m = desc.dim_m();
  if (f.nvars != m) throw StructuralError("intertwining_residual: variable count mismatch");

  Rational order_rat = Rational(m, r) - lambda;
  if (!is_natural(order_rat) || order_rat == Rational(0))
    throw DomainError("intertwining order m/r - lambda must be a positive integer");
  const int h = static_cast<int>(to_long(order_rat));

  auto B0 = [&](const Rational& mu, const Element& z) {
    // Delta^{-mu 1}(z / 2i); the argument has real part Im(z)/2 in the cone.
    Element zi(z.desc, (Complex(0, -0.5) * z.coords).eval());
    return power_function_tube(uniform_sig(r, Complex(-to_double(mu), 0)), zi);
  };

  BoxOperatorSpec box = build_box(desc);
  PolyC opn = to_numeric(box.delta);
  PolyC box_f = f;
  for (int i = 0; i < h; ++i) box_f = apply_diff(opn, box_f);

  auto lhs_fun = [&](const Element& wpt) {
    return f.eval(invert_point(wpt)) * B0(lambda, wpt);
  };
  double scale4 = std::pow(4.0, to_double(lambda * r) - m);
  Rational mu_out = Rational(2 * m, r) - lambda;

  std::vector<Complex> lhs, rhs;
  for (const auto& z : pts) {
    lhs.push_back(apply_box_numeric(box, lhs_fun, z, h));
    rhs.push_back(scale4 * B0(mu_out, z) * box_f.eval(invert_point(z)));
  }

  // The two sides agree up to a modulus-one constant per (lambda, f); fit it.
  Complex pairing(0);
  for (std::size_t i = 0; i < pts.size(); ++i) pairing += lhs[i] * std::conj(rhs[i]);
  Complex c = std::abs(pairing) > 0 ? pairing / std::abs(pairing) : Complex(1);

  double denom = 0, worst = 0;
  for (const auto& v : rhs) denom = std::max(denom, std::abs(v));
  for (std::size_t i = 0; i < pts.size(); ++i)
    worst = std::max(worst, std::abs(lhs[i] - c * rhs[i]));
  return worst / (1.0 + denom);
}

}  // namespace ck
