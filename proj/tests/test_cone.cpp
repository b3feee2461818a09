#include <doctest.h>

#include <cmath>
#include <complex>

#include "ck/cone.hpp"

using namespace ck;

namespace {

Element sym2(double a11, double a12, double a22) {
  CMatrix M(2, 2);
  M << a11, a12, a12, a22;
  return from_matrix(AlgebraDescriptor::sym_real(2), M);
}

std::vector<AlgebraDescriptor> test_descs() {
  return {AlgebraDescriptor::sym_real(2), AlgebraDescriptor::sym_real(3),
          AlgebraDescriptor::herm_complex(2), AlgebraDescriptor::spin(1),
          AlgebraDescriptor::spin(3)};
}

Sig random_real_sig(int r, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  Sig s(r);
  for (auto& v : s) v = u(rng);
  return s;
}

}  // namespace

TEST_CASE("cone membership") {
  auto s1 = AlgebraDescriptor::spin(1);
  CHECK(cone_contains(identity_element(s1)));
  CVector b(1);
  b[0] = 2;
  CHECK_FALSE(cone_contains(spin_element(s1, 1, b, 1)));  // det = -3
  CHECK_FALSE(cone_contains(sym2(1, 0, 0)));
}

TEST_CASE("cholesky factorization") {
  auto s1 = AlgebraDescriptor::spin(1);
  CVector b(1);
  b[0] = 2;
  Element x = spin_element(s1, 4, b, 2);
  auto t = cholesky_factor(x);
  CHECK(t.alpha == doctest::Approx(2.0));
  CHECK(t.beta[0] == doctest::Approx(1.0));
  CHECK(t.gamma == doctest::Approx(1.0));
  CHECK((act_triangular(t, identity_element(s1)) - x).norm() <= 1e-10);

  auto tid = cholesky_factor(identity_element(AlgebraDescriptor::sym_real(3)));
  CHECK(tid.diag().isApprox(RVector::Ones(3)));

  auto t2 = cholesky_factor(sym2(4, 2, 2));
  CMatrix L = t2.mat;
  CHECK(L(0, 0).real() == doctest::Approx(2.0));
  CHECK(L(1, 0).real() == doctest::Approx(1.0));
  CHECK(L(1, 1).real() == doctest::Approx(1.0));

  CHECK_THROWS_AS(cholesky_factor(sym2(1, 2, 1)), DomainError);
}

TEST_CASE("triangular action composition and cone preservation") {
  std::mt19937_64 rng(17);
  for (const auto& desc : test_descs()) {
    for (int it = 0; it < 30; ++it) {
      auto t1 = random_triangular(desc, rng);
      auto t2 = random_triangular(desc, rng);
      Element x = random_element(desc, rng).real_part();
      Element lhs = act_triangular(t1, act_triangular(t2, x));
      Element rhs = act_triangular(compose(t1, t2), x);
      CHECK((lhs - rhs).norm() <= 1e-10 * (1 + x.norm()));
      Element xi = act_triangular(inverse(t1), act_triangular(t1, x));
      CHECK((xi - x).norm() <= 1e-9 * (1 + x.norm()));
      CHECK(cone_contains(act_triangular(t1, random_cone_point(desc, rng))));
    }
  }
}

TEST_CASE("power function worked values") {
  auto s1 = AlgebraDescriptor::spin(1);
  CVector b(1);
  b[0] = 2;
  Element x = spin_element(s1, 4, b, 2);
  Sig s = {Complex(2), Complex(1)};
  CHECK(power_function(s, x).real() == doctest::Approx(16.0));

  CHECK(power_function(uniform_sig(2, 2.0), sym2(2, 0, 3)).real() == doctest::Approx(36.0));
  std::mt19937_64 rng(23);
  for (const auto& desc : test_descs()) {
    Sig rs = random_real_sig(desc.rank, rng);
    CHECK(power_function(rs, identity_element(desc)).real() == doctest::Approx(1.0));
  }
}

TEST_CASE("minor vs cholesky routes, multiplicativity, frame reversal") {
  std::mt19937_64 rng(29);
  for (const auto& desc : test_descs()) {
    for (int it = 0; it < 60; ++it) {
      Element x = random_cone_point(desc, rng);
      Sig s = random_real_sig(desc.rank, rng);
      double via_minors = power_function(s, x).real();
      double via_chol = triangular_character(cholesky_factor(x), s).real();
      CHECK(via_minors == doctest::Approx(via_chol).epsilon(1e-9));

      auto t = random_triangular(desc, rng);
      double lhs = power_function(s, act_triangular(t, x)).real();
      double rhs = triangular_character(t, s).real() * via_minors;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));

      Sig neg(s);
      for (auto& v : neg) v = -v;
      double inv_val = power_function(s, jordan_inverse(x)).real();
      double star_val = power_function(neg, x, true).real();
      CHECK(inv_val == doctest::Approx(star_val).epsilon(1e-9));

      // Delta^s(x) = Delta_*^{sigma(s)}(k x)
      CHECK(power_function(sigma_reverse(s), frame_reversal(x), true).real() ==
            doctest::Approx(via_minors).epsilon(1e-9));
    }
  }
}

TEST_CASE("tube continuation base point and branch") {
  auto d2 = AlgebraDescriptor::sym_real(2);
  Element ie = Complex(0, 1) * identity_element(d2);
  Complex v = power_function_tube(uniform_sig(2, 3.0), ie);
  CHECK(v.real() == doctest::Approx(-1.0).epsilon(1e-10));  // i^6
  CHECK(std::abs(v.imag()) <= 1e-10);

  // (1+i)e: continued log det = r Log(1+i)
  Element z = Complex(1, 1) * identity_element(d2);
  Complex lam(0.7, 0.0);
  Complex expect = std::exp(2.0 * lam * std::log(Complex(1, 1)));
  Complex got = power_function_tube(uniform_sig(2, lam), z);
  CHECK(std::abs(got - expect) <= 1e-10);

  CHECK(std::abs(power_function_tube(uniform_sig(2, 0.0), z) - 1.0) <= 1e-12);
}

TEST_CASE("tube continuation on polynomial signatures and real points") {
  std::mt19937_64 rng(31);
  for (const auto& desc : test_descs()) {
    for (int it = 0; it < 20; ++it) {
      Element x = random_cone_point(desc, rng);
      SigN s(desc.rank);
      std::uniform_int_distribution<int> d(0, 3);
      for (int j = 0; j < desc.rank; ++j) s[j] = d(rng);
      std::sort(s.rbegin(), s.rend());
      // homogeneity of the polynomial Delta^s: Delta^s(ix) = i^{|s|} Delta^s(x)
      Complex lhs = power_function_tube(sig_of(s), Complex(0, 1) * x);
      Complex rhs = std::pow(Complex(0, 1), sig_total(s)) * power_function(sig_of(s), x);
      CHECK(std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(rhs)));
      // real cone points continue through the right-half-plane chart
      Complex direct = power_function(sig_of(s), x);
      CHECK(std::abs(power_function_tube(sig_of(s), x) - direct) <=
            1e-9 * (1 + std::abs(direct)));
    }
  }
}

TEST_CASE("path independence of the continuation") {
  std::mt19937_64 rng(37);
  for (const auto& desc : test_descs()) {
    for (int it = 0; it < 10; ++it) {
      Element z = random_tube_element(desc, rng);
      auto direct = tube_minor_logs(z);
      Element w1 = random_tube_element(desc, rng);
      Element w2 = random_tube_element(desc, rng);
      auto via = tube_minor_logs_along(z, {w1, w2});
      for (int j = 0; j < desc.rank; ++j)
        CHECK(std::abs(direct[j] - via[j]) <= 1e-9 * (1 + std::abs(direct[j])));
    }
  }
}

TEST_CASE("holomorphy: Cauchy-Riemann residual of the continued power function") {
  std::mt19937_64 rng(41);
  auto desc = AlgebraDescriptor::sym_real(2);
  Sig s = {Complex(1.3), Complex(-0.4)};
  for (int it = 0; it < 10; ++it) {
    Element z = random_tube_element(desc, rng, 0.5);
    double h = 1e-4 * tube_inner_radius(z);
    for (int k = 0; k < desc.dim_m(); ++k) {
      CVector dir = CVector::Zero(desc.dim_m());
      dir[k] = 1.0;
      auto shifted = [&](Complex step) {
        return power_function_tube(s, Element(desc, CVector(z.coords + step * dir)));
      };
      Complex dx = (shifted(h) - shifted(-h)) / (2 * h);
      Complex dy = (shifted(Complex(0, h)) - shifted(Complex(0, -h))) / (2 * h);
      // holomorphic: d/dy = i d/dx
      CHECK(std::abs(dy - Complex(0, 1) * dx) <= 1e-6 * (1 + std::abs(dx)));
    }
  }
}

TEST_CASE("boundary orbit signatures") {
  auto d2 = AlgebraDescriptor::sym_real(2);
  std::mt19937_64 rng(43);
  CHECK(boundary_orbit_signature(random_cone_point(d2, rng)).bits == std::vector<int>{1, 1});
  CHECK(boundary_orbit_signature(zero_element(d2)).bits == std::vector<int>{0, 0});
  CHECK(boundary_orbit_signature(sym2(1, 0, 0)).bits == std::vector<int>{1, 0});
  CHECK(boundary_orbit_signature(sym2(0, 0, 1)).bits == std::vector<int>{0, 1});
  CHECK_THROWS_AS(boundary_orbit_signature(sym2(-1, 0, 1)), DomainError);

  auto s2 = AlgebraDescriptor::spin(2);
  CVector b = CVector::Zero(2);
  CHECK(boundary_orbit_signature(spin_element(s2, 1, b, 0)).bits == std::vector<int>{1, 0});
  CHECK(boundary_orbit_signature(spin_element(s2, 0, b, 2)).bits == std::vector<int>{0, 1});
  // rank-one orbit representatives t . e_eps
  for (const auto& desc : test_descs()) {
    Element x = act_triangular(random_triangular(desc, rng), frame_idempotent(desc, 1));
    auto eps = boundary_orbit_signature(x);
    CHECK(eps.bits[0] == 1);
    for (int j = 1; j < desc.rank; ++j) CHECK(eps.bits[j] == 0);
  }
}

TEST_CASE("signature helpers") {
  CHECK(is_N_Omega({3, 2, 2}));
  CHECK_FALSE(is_N_Omega({1, 2}));
  CHECK(is_N_Omega_star({0, 2}));
  CHECK(sigma_reverse(SigN{1, 2, 3}) == SigN{3, 2, 1});
  auto all = enumerate_N_Omega(2, 3);
  int count = 0;
  for (int s1 = 0; s1 <= 3; ++s1)
    for (int s2 = 0; s2 <= s1; ++s2)
      if (s1 + s2 <= 3) ++count;
  CHECK(static_cast<int>(all.size()) == count);
}
