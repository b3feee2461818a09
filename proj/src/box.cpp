#include "ck/box.hpp"

#include <cmath>
#include <map>

#include "ck/cone.hpp"

namespace ck {

BoxOperatorSpec build_box(const AlgebraDescriptor& desc) {
  auto minors = exact_minor_polynomials(desc);
  return {desc, minors.back()};
}

PolyX apply_box(const BoxOperatorSpec& box, const PolyX& f, int order) {
  if (order < 0) throw StructuralError("apply_box: order must be >= 0");
  PolyX out = f;
  for (int i = 0; i < order; ++i) out = apply_diff(box.delta, out);
  return out;
}

namespace {

double binom(int n, int k) {
  double out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

double min_real_eigenvalue(const Element& x) {
  auto spec = spectral_decompose(x);
  return spec.eigenvalues[spec.eigenvalues.size() - 1];
}

/// Central-difference value of the full operator polynomial at step h,
/// sharing function evaluations across terms through an offset cache
/// (offsets keyed in units of h/2, since odd derivative orders use
/// half-integer stencil points).
Complex stencil_pass(const PolyC& op, const std::function<Complex(const Element&)>& f,
                     const Element& z, double h) {
  const int m = op.nvars;
  std::map<std::vector<int>, Complex> cache;
  auto value_at = [&](const std::vector<int>& half_steps) {
    auto it = cache.find(half_steps);
    if (it != cache.end()) return it->second;
    CVector c = z.coords;
    for (int i = 0; i < m; ++i) c[i] += 0.5 * h * half_steps[i];
    Complex v = f(Element(z.desc, c));
    cache.emplace(half_steps, v);
    return v;
  };

  Complex total = 0;
  for (const auto& [alpha, coeff] : op.terms) {
    int n_total = 0;
    std::vector<int> vars;
    for (int i = 0; i < m; ++i)
      if (alpha[i] > 0) {
        vars.push_back(i);
        n_total += alpha[i];
      }
    if (vars.empty()) {
      total += coeff * value_at(std::vector<int>(m, 0));
      continue;
    }
    // tensor product of 1-d central stencils: for each variable i with
    // exponent n, points (n - 2k)h/2 with weight (-1)^k C(n,k)
    std::vector<int> ks(vars.size(), 0);
    Complex term = 0;
    while (true) {
      double w = 1;
      std::vector<int> half_steps(m, 0);
      for (std::size_t v = 0; v < vars.size(); ++v) {
        int n = alpha[vars[v]], k = ks[v];
        w *= ((k % 2) ? -1.0 : 1.0) * binom(n, k);
        half_steps[vars[v]] = n - 2 * k;
      }
      term += w * value_at(half_steps);
      std::size_t v = 0;
      while (v < vars.size()) {
        if (++ks[v] <= alpha[vars[v]]) break;
        ks[v++] = 0;
      }
      if (v == vars.size()) break;
    }
    total += coeff * term / std::pow(h, n_total);
  }
  return total;
}

}  // namespace

Complex apply_box_numeric(const BoxOperatorSpec& box,
                          const std::function<Complex(const Element&)>& f,
                          const Element& z, int order) {
  if (order < 0) throw StructuralError("apply_box_numeric: order must be >= 0");
  if (order == 0) return f(z);
  const int r = box.desc.rank;

  double dist = std::max(min_real_eigenvalue(z.imag_part()),
                         min_real_eigenvalue(z.real_part()));
  if (!(dist > 0))
    throw DomainError("apply_box_numeric: no positive stencil radius at this point");

  // Base step 1e-3 * dist / (order * r); for iterated application the
  // stencil differentiates to order ~2*order*r, so widen the step to keep
  // rounding noise below truncation (see the decisions ledger).
  double h = (order == 1) ? 1e-3 * dist / r
                          : dist * std::pow(1e-3, 1.0 / (order + 1)) / (order * r);

  PolyX op_exact = box.delta;
  for (int i = 1; i < order; ++i) op_exact = op_exact * box.delta;
  PolyC op = to_numeric(op_exact);

  Complex coarse = stencil_pass(op, f, z, h);
  Complex fine = stencil_pass(op, f, z, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;  // one Richardson extrapolation
}

KillReport kills(const AlgebraDescriptor& desc, const SigN& s, const SigN& s_diff) {
  if (!is_N_Omega(s)) throw StructuralError("kills: s must be natural decreasing");
  if (!is_N_Omega_star(s_diff))
    throw StructuralError("kills: s_diff must be natural increasing");
  KillReport out;
  out.s = s;
  out.s_diff = s_diff;
  out.coefficient = pochhammer_cone(rational_sig(s), s_diff, desc);
  out.killed = (out.coefficient == 0);
  return out;
}

std::vector<SigN> kernel_D_signatures(const AlgebraDescriptor& desc, const SigN& s_diff,
                                      int degree_bound) {
  if (degree_bound < 0) throw StructuralError("kernel_D_signatures: bound must be >= 0");
  std::vector<SigN> out;
  for (const auto& s : enumerate_N_Omega(desc.rank, degree_bound))
    if (kills(desc, s, s_diff).killed) out.push_back(s);
  return out;
}

}  // namespace ck
