#include "ck/spaces.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "ck/cone.hpp"

namespace ck {

Complex fischer_inner(const PolyC& p, const PolyC& q) {
  if (p.nvars != q.nvars) throw StructuralError("fischer_inner: variable count mismatch");
  Complex out = 0;
  for (const auto& [mi, c] : p.terms) {
    auto it = q.terms.find(mi);
    if (it == q.terms.end()) continue;
    double fact = 1;
    for (int e : mi)
      for (int i = 2; i <= e; ++i) fact *= i;
    out += std::conj(c) * it->second * fact;
  }
  return out;
}

double fischer_norm(const PolyC& p) {
  return std::sqrt(std::max(0.0, fischer_inner(p, p).real()));
}

namespace {

RMatrix sample_group_matrix(const AlgebraDescriptor& desc, std::mt19937_64& rng) {
  TriangularFactor t = random_triangular(desc, rng);
  Rotation k = random_rotation(desc, rng);
  return coordinate_matrix(
      desc, [&](const Element& x) { return act_triangular(t, k.apply(x)); });
}

std::vector<PolyC> orthonormalize(const std::vector<PolyC>& polys, int* rank_out) {
  const int n = static_cast<int>(polys.size());
  CMatrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      gram(i, j) = fischer_inner(polys[i], polys[j]);
      gram(j, i) = std::conj(gram(i, j));
    }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
  const RVector& lam = es.eigenvalues();  // ascending
  double lam_max = lam[n - 1];
  int rank = 0;
  for (int i = 0; i < n; ++i)
    if (lam[i] > 1e-8 * lam_max) ++rank;
  *rank_out = rank;
  std::vector<PolyC> basis;
  for (int j = n - rank; j < n; ++j) {
    PolyC b(polys[0].nvars);
    double scale = 1.0 / std::sqrt(lam[j]);
    for (int i = 0; i < n; ++i) {
      Complex w = es.eigenvectors()(i, j) * scale;
      if (w != Complex(0, 0)) b = b + w * polys[i];
    }
    basis.push_back(std::move(b));
  }
  return basis;
}

}  // namespace

SpaceBasis orbit_basis(const AlgebraDescriptor& desc, const SigN& s, int n_samples,
                       std::uint64_t seed) {
  if (!is_N_Omega(s)) throw StructuralError("orbit_basis: s must be natural decreasing");
  std::mt19937_64 rng(seed);
  PolyC gen = to_numeric(conical_poly_exact(desc, s));
  std::vector<PolyC> polys{gen};
  int n = std::max(n_samples, 2);
  int prev_rank = -1;
  std::vector<PolyC> basis;
  while (true) {
    while (static_cast<int>(polys.size()) < n)
      polys.push_back(compose_linear(gen, sample_group_matrix(desc, rng)));
    int rank = 0;
    basis = orthonormalize(polys, &rank);
    if (rank == prev_rank && rank < n) break;  // stable under doubling, not saturated
    prev_rank = rank;
    n *= 2;
    if (n > 8192)
      throw NumericError("orbit_basis: rank did not stabilize under sample doubling");
  }
  SpaceBasis out;
  out.desc = desc;
  out.s = s;
  out.members = std::move(basis);
  return out;
}

PolyC project_Q(const PolyC& f, const SpaceBasis& basis) {
  PolyC out(f.nvars);
  for (const auto& b : basis.members) out = out + fischer_inner(b, f) * b;
  return out;
}

PolyX dual_pairing_operator(const AlgebraDescriptor& desc, const SigN& s) {
  // frame reversal is a signed coordinate permutation, so the composition
  // stays exact
  RMatrix K = coordinate_matrix(desc, [](const Element& x) { return frame_reversal(x); });
  const int m = desc.dim_m();
  std::vector<int> target(m, -1);
  std::vector<int> sign(m, 1);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      double v = K(i, j);
      if (std::abs(v) > 0.5) {
        target[j] = i;
        sign[j] = v > 0 ? 1 : -1;
      } else if (std::abs(v) > 1e-9) {
        throw StructuralError("frame reversal is not a signed permutation");
      }
    }
    if (target[j] < 0) throw StructuralError("frame reversal is not a signed permutation");
  }
  PolyX gen = conical_poly_exact(desc, s);
  PolyX out(m);
  for (const auto& [mi, c] : gen.terms) {
    PolyX::MultiIndex mapped(m, 0);
    int flip = 1;
    for (int j = 0; j < m; ++j) {
      mapped[target[j]] = mi[j];
      if (sign[j] < 0 && mi[j] % 2 == 1) flip = -flip;
    }
    out.add_term(mapped, flip < 0 ? -c : c);
  }
  return out;
}

}  // namespace ck
