#include <doctest.h>

#include <cmath>

#include "ck/kernels.hpp"
#include "ck/riesz.hpp"

using namespace ck;

TEST_CASE("kernel worked values and hermitian symmetry") {
  for (auto desc : {AlgebraDescriptor::sym_real(2), AlgebraDescriptor::herm_complex(2),
                    AlgebraDescriptor::spin(3)}) {
    Element ie = Complex(0, 1) * identity_element(desc);
    for (double lam : {0.5, 2.0, 3.7}) {
      Sig s = uniform_sig(desc.rank, Complex(-lam, 0));
      CHECK(std::abs(kernel_value(s, ie, ie) - Complex(1)) < 1e-12);
    }
  }

  auto r1 = AlgebraDescriptor::sym_real(1);
  CVector c(1);
  c << Complex(0, 2);
  Element z2i(r1, c);
  CHECK(std::abs(kernel_value({Complex(-1.5, 0)}, z2i, z2i) - Complex(std::pow(2.0, -1.5))) <
        1e-12);

  std::mt19937_64 rng(301);
  for (auto desc : {AlgebraDescriptor::sym_real(2), AlgebraDescriptor::spin(4)}) {
    Sig s = uniform_sig(desc.rank, Complex(-1.3, 0));
    for (int it = 0; it < 30; ++it) {
      Element z = random_tube_element(desc, rng), w = random_tube_element(desc, rng);
      Complex a = kernel_value(s, z, w), b = kernel_value(s, w, z);
      CHECK(std::abs(a - std::conj(b)) <= 1e-10 * (1.0 + std::abs(a)));
    }
  }
}

TEST_CASE("affine invariance of the kernel") {
  std::mt19937_64 rng(303);
  for (auto desc : {AlgebraDescriptor::sym_real(2), AlgebraDescriptor::herm_complex(2),
                    AlgebraDescriptor::spin(3)}) {
    Sig s_neg = uniform_sig(desc.rank, Complex(-1.7, 0));
    Sig s_pos = uniform_sig(desc.rank, Complex(1.7, 0));
    for (int it = 0; it < 25; ++it) {
      Element z = random_tube_element(desc, rng), w = random_tube_element(desc, rng);
      Complex base = kernel_value(s_neg, z, w);

      // translation by a real element
      Element x = random_element(desc, rng).real_part();
      CHECK(std::abs(kernel_value(s_neg, z + x, w + x) - base) <=
            1e-8 * (1.0 + std::abs(base)));

      // triangular maps: Delta^{lambda 1}(t) B^{-lambda 1}(t z, t w) = B
      TriangularFactor t = random_triangular(desc, rng);
      Complex moved = triangular_character(t, s_pos) *
                      kernel_value(s_neg, act_triangular(t, z), act_triangular(t, w));
      CHECK(std::abs(moved - base) <= 1e-8 * (1.0 + std::abs(base)));
    }
  }
}

TEST_CASE("Gram positivity verdicts") {
  auto d = AlgebraDescriptor::sym_real(2);
  std::mt19937_64 rng(307);

  // single point: 1x1 positive
  auto one = gram_positivity(0.25, {random_tube_element(d, rng)}, 1e-9);
  CHECK(one.verdict == GramVerdict::PSD);

  // lambda in the continuous Wallach range: PSD on random clouds
  std::vector<Element> pts;
  for (int i = 0; i < 40; ++i) pts.push_back(random_tube_element(d, rng));
  auto rep = gram_positivity(2.0, pts, 1e-9);
  CHECK(rep.verdict == GramVerdict::PSD);
  CHECK(rep.min_eigenvalue >= -1e-9 * std::abs(rep.max_eigenvalue));

  // discrete point lambda = 1/2: still PSD
  CHECK(gram_positivity(0.5, pts, 1e-9).verdict == GramVerdict::PSD);

  // non-member lambda: the search must certify indefiniteness
  auto bad = search_indefinite(d, 0.25, 200, 11, 1e-6);
  REQUIRE(bad.has_value());
  double norm = std::max(std::abs(bad->min_eigenvalue), std::abs(bad->max_eigenvalue));
  CHECK(bad->min_eigenvalue <= -1e-6 * norm);
  CHECK(bad->verdict == GramVerdict::Indefinite);
}

TEST_CASE("Gauss-Legendre rule") {
  auto [n5, w5] = gauss_legendre(5);
  double s8 = 0, s0 = 0;
  for (int i = 0; i < 5; ++i) {
    s8 += w5[i] * std::pow(n5[i], 8);
    s0 += w5[i];
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(s8 == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("cone integral reproduces the product formula") {
  auto d = AlgebraDescriptor::sym_real(2);
  Element e = identity_element(d);
  for (auto s : {std::vector<double>{1.5, 1.5}, {2, 1}, {3, 2}}) {
    double quad = cone_weighted_integral(
        [&](const Element& x) { return std::exp(-inner_product(e, x).real()); }, s);
    double exact = gindikin_gamma(s, d);
    CHECK(std::abs(quad - exact) <= 1e-3 * exact);
  }
}

TEST_CASE("Laplace transform of the Riesz measure") {
  auto d = AlgebraDescriptor::sym_real(2);
  std::vector<double> s{2, 1};
  double gamma = gindikin_gamma(s, d);
  std::mt19937_64 rng(311);
  for (int it = 0; it < 5; ++it) {
    Element xi = random_cone_point(d, rng);
    double quad = cone_weighted_integral(
                      [&](const Element& x) {
                        return std::exp(-inner_product(xi, x).real());
                      },
                      s) /
                  gamma;
    double expect = power_function_real(RationalVec{-2, -1}, xi, true);
    CHECK(std::abs(quad - expect) <= 1e-3 * std::abs(expect));
  }
}

TEST_CASE("Bergman norm quadrature on the half plane") {
  auto r1 = AlgebraDescriptor::sym_real(1);
  Element i_pt(r1, [] {
    CVector c(1);
    c << Complex(0, 1);
    return c;
  }());
  auto f = [&](const Element& z) {
    return kernel_value({Complex(-3, 0)}, z, i_pt);
  };
  auto res = bergman_norm(f, {3.0}, r1);
  CHECK(res.converged);
  CHECK(std::abs(res.value - 2 * M_PI) <= 1e-3 * 2 * M_PI);

  auto zero = bergman_norm([](const Element&) { return Complex(0); }, {3.0}, r1);
  CHECK(zero.value == 0.0);

  // homogeneity: ||f(rho .)||^2 = rho^{-s} ||f||^2
  double rho = 1.7;
  auto g = [&](const Element& z) {
    return f(Element(z.desc, (Complex(rho) * z.coords).eval()));
  };
  auto res_g = bergman_norm(g, {3.0}, r1);
  CHECK(std::abs(res_g.value / res.value - std::pow(rho, -3.0)) <=
        1e-3 * std::pow(rho, -3.0));
}

TEST_CASE("Bergman norm smoke test on the rank-2 cone") {
  auto d = AlgebraDescriptor::sym_real(2);
  Element ie = Complex(0, 1) * identity_element(d);
  Sig s_neg = uniform_sig(2, Complex(-4, 0));
  auto f = [&](const Element& z) { return kernel_value(s_neg, z, ie); };
  auto res = bergman_norm(f, {4.0, 4.0}, d, 6);
  CHECK(res.value > 0);
  CHECK(std::isfinite(res.value));
  double rho = 1.5;
  auto g = [&](const Element& z) {
    return f(Element(z.desc, (Complex(rho) * z.coords).eval()));
  };
  auto res_g = bergman_norm(g, {4.0, 4.0}, d, 6);
  CHECK(res_g.value / res.value == doctest::Approx(std::pow(rho, -8.0)).epsilon(0.1));
}

TEST_CASE("series norms") {
  auto d = AlgebraDescriptor::sym_real(2);
  PolyC c5 = PolyC::constant(3, Complex(2, 1));
  auto rep = series_norm(c5, 2, NormVariant::A_lambda, d);
  REQUIRE(rep.terms.size() == 1);
  CHECK(rep.terms[0].weight == Rational(1));
  CHECK(rep.total == doctest::Approx(5.0).epsilon(1e-12));

  PolyC det = to_numeric(conical_poly_exact(d, {1, 1}));
  auto rd = series_norm(det, 2, NormVariant::A_lambda, d);
  double total = 0;
  bool found = false;
  for (const auto& t : rd.terms) {
    total += to_double(t.weight) * t.q_norm_sq;
    if (t.s == SigN{1, 1}) {
      found = true;
      CHECK(t.weight == Rational(1, 3));
      CHECK(t.q_norm_sq == doctest::Approx(1.5).epsilon(1e-8));
    }
  }
  CHECK(found);
  CHECK(rd.total == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(rd.total == doctest::Approx(total).epsilon(1e-12));

  // H_0: constants fall below the maximal multiplicity and are annihilated
  auto h0 = series_norm(c5, 0, NormVariant::H_lambda, d);
  CHECK(h0.seminorm);
  CHECK(h0.total == 0.0);
  REQUIRE(h0.omitted.size() == 1);
  CHECK(h0.omitted[0] == SigN{0, 0});

  // H_0 of det: included with the primed weight 1/|(-1/2)| = 2
  auto hdet = series_norm(det, 0, NormVariant::H_lambda, d);
  bool det_term = false;
  for (const auto& t : hdet.terms)
    if (t.s == SigN{1, 1}) {
      det_term = true;
      CHECK(t.weight == Rational(2));
    }
  CHECK(det_term);
  CHECK(hdet.total == doctest::Approx(3.0).epsilon(1e-8));

  CHECK_THROWS_AS(series_norm(c5, Rational(1, 2), NormVariant::A_lambda, d), DomainError);
  CHECK_THROWS_AS(series_norm(c5, Rational(1, 4), NormVariant::H_lambda, d), DomainError);
}
