#include <doctest.h>

#include <algorithm>

#include "ck/classifier.hpp"
#include "ck/riesz.hpp"

using namespace ck;

namespace {
bool contains(const std::vector<SigN>& v, const SigN& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}
}  // namespace

TEST_CASE("q multiplicity worked values") {
  auto d = AlgebraDescriptor::sym_real(2);
  CHECK(q_multiplicity({0, 0}, 0, d) == 0);
  CHECK(q_multiplicity({1, 1}, 0, d) == 1);
  CHECK(q_multiplicity({2, 2}, Rational(1, 2), d) == 1);
  CHECK(q_multiplicity({3, 3}, 0, d) == 1);  // k=2 root 1/2 never integral
  CHECK(q_multiplicity({2, 2}, Rational(1, 4), d) == 0);
  CHECK_THROWS_AS(q_multiplicity({0, 1}, 0, d), StructuralError);

  // q(lambda) = max over s of q(s, lambda) = card(K_lambda) on a grid
  for (auto desc : {d, AlgebraDescriptor::herm_complex(3), AlgebraDescriptor::spin(4)}) {
    for (int n = -12; n <= 12; ++n) {
      Rational lambda(n, 4);
      int card = static_cast<int>(K_lambda_set(lambda, desc).size());
      // the max over s is attained at a large uniform signature (every root
      // a(k-1)/2 - lambda is at most a(r-1)/2 + 3 on this grid)
      int big = desc.peirce_a() * (desc.rank - 1) / 2 + 5;
      SigN uniform(desc.rank, big);
      CHECK(q_multiplicity(uniform, lambda, desc) == card);
      for (const auto& s : enumerate_N_Omega(desc.rank, 10))
        CHECK(q_multiplicity(s, lambda, desc) <= card);
    }
  }
}

TEST_CASE("lambda classification worked cases") {
  auto d = AlgebraDescriptor::sym_real(2);

  auto c0 = classify_lambda(0, d, 8);
  CHECK(c0.K_lambda == std::vector<int>{1});
  CHECK(c0.q_lambda == 1);
  REQUIRE(c0.per_k.size() == 1);
  CHECK(c0.per_k[0].N == std::vector<SigN>{{0, 1}, {1, 1}});

  auto ch = classify_lambda(Rational(1, 2), d, 8);
  CHECK(ch.K_lambda == std::vector<int>{2});
  REQUIRE(ch.per_k.size() == 1);
  CHECK(ch.per_k[0].N == std::vector<SigN>{{1, 1}});
  // V_{1/2,2} = ker box: signatures with s_2 = 0
  for (const auto& s : ch.per_k[0].killed) CHECK(s[1] == 0);
  CHECK(contains(ch.per_k[0].killed, {8, 0}));

  auto c3 = classify_lambda(Rational(3, 10), d, 8);
  CHECK(c3.K_lambda.empty());
  CHECK(c3.q_lambda == 0);
  CHECK(c3.per_k.empty());
}

TEST_CASE("chain property of the invariant lattice") {
  // along increasing k in K_lambda the killed sets are nested
  for (auto desc : {AlgebraDescriptor::sym_real(3), AlgebraDescriptor::herm_complex(3),
                    AlgebraDescriptor::sym_real(4)}) {
    int bound = desc.rank >= 3 ? 6 : 8;
    for (int n = -12; n <= 12; ++n) {
      auto c = classify_lambda(Rational(n, 4), desc, bound);
      for (std::size_t i = 0; i + 1 < c.per_k.size(); ++i) {
        const auto& lo = c.per_k[i].killed;
        const auto& hi = c.per_k[i + 1].killed;
        bool lo_in_hi = std::all_of(lo.begin(), lo.end(),
                                    [&](const SigN& s) { return contains(hi, s); });
        bool hi_in_lo = std::all_of(hi.begin(), hi.end(),
                                    [&](const SigN& s) { return contains(lo, s); });
        CHECK((lo_in_hi || hi_in_lo));
      }
    }
  }
}

TEST_CASE("affine classification on the tube") {
  auto d = AlgebraDescriptor::sym_real(2);
  auto two = classify_affine_tube(2, d, 4);
  bool has_hilbert = false;
  for (const auto& sd : two)
    if (sd.kind == SpaceKind::A_lambda) has_hilbert = true;
  CHECK(has_hilbert);

  // lambda = 0: the eps = 0 degenerate family admits exactly s = 0
  auto zero = classify_affine_tube(0, d, 4);
  bool has_plain = false;
  for (const auto& sd : zero)
    if (sd.kind == SpaceKind::A_lambda) has_plain = true;
  CHECK(has_plain);

  // rank 1, lambda = -2: strict branch admits s >= 2, minimal lambda' = 2;
  // the equality branch contributes s = 1
  auto r1 = classify_affine_tube(-2, AlgebraDescriptor::sym_real(1), 6);
  Rational min_strict = 100;
  bool has_equality = false;
  for (const auto& sd : r1) {
    REQUIRE(sd.kind == SpaceKind::A_plus_kernel);
    if (sd.s == SigN{1})
      has_equality = true;
    else {
      CHECK(sd.s[0] >= 2);
      min_strict = std::min(min_strict, sd.lambda_prime);
    }
  }
  CHECK(min_strict == Rational(2));
  CHECK(has_equality);

  // descriptors are deduplicated
  for (std::size_t i = 0; i < two.size(); ++i)
    for (std::size_t j = i + 1; j < two.size(); ++j) CHECK(!(two[i] == two[j]));
}

TEST_CASE("Moebius classification") {
  auto d = AlgebraDescriptor::sym_real(2);

  auto at2 = classify_moebius(2, d);
  REQUIRE(at2.size() == 1);
  CHECK(at2[0].kind == SpaceKind::A_lambda);
  CHECK(at2[0].render() == "A_2");

  auto half = classify_moebius(Rational(1, 2), d);
  bool derived = false, plain = false;
  for (const auto& sd : half) {
    if (sd.kind == SpaceKind::A_lambda_lambdaprime) {
      derived = true;
      CHECK(sd.lambda_prime == Rational(1));
      CHECK(sd.render() == "A_{1/2,1}");
    }
    if (sd.kind == SpaceKind::A_lambda) plain = true;
  }
  CHECK(derived);
  CHECK(plain);  // 1/2 is also the top discrete Wallach point

  CHECK(classify_moebius(Rational(3, 10), d).empty());

  auto gen = classify_moebius(Rational(-1, 2), d, true);
  REQUIRE(gen.size() == 1);
  CHECK(gen[0].kind == SpaceKind::H_lambda);
  CHECK(gen[0].general_stated);
  CHECK(gen[0].render() == "H_{-1/2}");

  // branch disjointness holds against the continuous Wallach range
  for (auto desc : {d, AlgebraDescriptor::herm_complex(3), AlgebraDescriptor::spin(4)}) {
    Rational edge = Rational(desc.dim_m(), desc.rank) - 1;
    for (int n = -12; n <= 12; ++n) {
      Rational lambda(n, 4);
      bool continuous = in_wallach(lambda, desc).member &&
                        in_wallach(lambda, desc).kind == WallachKind::ContinuousRange;
      CHECK(!(continuous && is_natural(edge - lambda)));
    }
  }
}

TEST_CASE("kill-set consistency for the continuous range") {
  // for s' = h 1_r the kernel within a degree bound is {s: s_r < h}
  auto d = AlgebraDescriptor::sym_real(2);
  for (int h = 1; h <= 3; ++h) {
    auto ker = kernel_D_signatures(d, SigN(2, h), 8);
    for (const auto& s : enumerate_N_Omega(2, 8))
      CHECK(contains(ker, s) == (s[1] < h));
  }
}
