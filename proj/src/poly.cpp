#include "ck/poly.hpp"

namespace ck {

PolyC compose_linear(const PolyC& p, const RMatrix& G) {
  const int m = p.nvars;
  if (G.rows() != m || G.cols() != m)
    throw StructuralError("compose_linear: matrix size != nvars");
  std::vector<PolyC> image(m);
  for (int i = 0; i < m; ++i) {
    PolyC img(m);
    for (int j = 0; j < m; ++j)
      if (G(i, j) != 0.0) img.add_term([&] {
        PolyC::MultiIndex mi(m, 0);
        mi[j] = 1;
        return mi;
      }(), Complex(G(i, j)));
    image[i] = std::move(img);
  }
  PolyC out(m);
  for (const auto& [mi, c] : p.terms) {
    PolyC t = PolyC::constant(m, c);
    for (int i = 0; i < m; ++i)
      for (int e = 0; e < mi[i]; ++e) t = t * image[i];
    out = out + t;
  }
  return out;
}

namespace {

using PolyMatrix = std::vector<std::vector<PolyX>>;

PolyX det_recursive(const PolyMatrix& M, std::vector<int> rows, std::vector<int> cols) {
  const int n = static_cast<int>(rows.size());
  if (n == 1) return M[rows[0]][cols[0]];
  PolyX out(M[0][0].nvars);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (int c = 0; c < n; ++c) {
    std::vector<int> sub_cols;
    for (int c2 = 0; c2 < n; ++c2)
      if (c2 != c) sub_cols.push_back(cols[c2]);
    PolyX cof = M[rows[0]][cols[c]] * det_recursive(M, sub_rows, sub_cols);
    out = (c % 2 == 0) ? out + cof : out - cof;
  }
  return out;
}

PolyMatrix symbolic_matrix(const AlgebraDescriptor& desc) {
  const int r = desc.rank, m = desc.dim_m();
  PolyMatrix M(r, std::vector<PolyX>(r, PolyX(m)));
  for (int j = 0; j < r; ++j) M[j][j] = PolyX::variable(m, j);
  const ExactScalar inv_s2 = ExactScalar::inv_sqrt2();
  const ExactScalar i_inv_s2 = ExactScalar::i_unit() * inv_s2;
  int idx = r;
  for (int j = 0; j < r; ++j)
    for (int k = j + 1; k < r; ++k) {
      if (desc.family == Family::SymReal) {
        PolyX v = PolyX::variable(m, idx++, inv_s2);
        M[j][k] = v;
        M[k][j] = v;
      } else {
        PolyX re = PolyX::variable(m, idx, inv_s2);
        PolyX im = PolyX::variable(m, idx + 1, i_inv_s2);
        idx += 2;
        M[j][k] = re + im;
        M[k][j] = re - im;
      }
    }
  return M;
}

}  // namespace

std::vector<PolyX> exact_minor_polynomials(const AlgebraDescriptor& desc) {
  const int r = desc.rank, m = desc.dim_m();
  std::vector<PolyX> out;
  if (desc.family == Family::Spin) {
    out.push_back(PolyX::variable(m, 0));
    PolyX det = PolyX::variable(m, 0) * PolyX::variable(m, m - 1);
    for (int i = 1; i <= desc.spin_k; ++i) {
      PolyX xi = PolyX::variable(m, i);
      det = det - ExactScalar(Rational(1, 2)) * (xi * xi);
    }
    out.push_back(det);
    return out;
  }
  PolyMatrix M = symbolic_matrix(desc);
  for (int j = 1; j <= r; ++j) {
    std::vector<int> idxs(j);
    for (int i = 0; i < j; ++i) idxs[i] = i;
    out.push_back(det_recursive(M, idxs, idxs));
  }
  return out;
}

PolyX conical_poly_exact(const AlgebraDescriptor& desc, const SigN& s) {
  const int r = desc.rank;
  if (static_cast<int>(s.size()) != r) throw StructuralError("signature length != rank");
  if (!is_N_Omega(s)) throw StructuralError("conical_poly_exact: s must be natural decreasing");
  auto minors = exact_minor_polynomials(desc);
  PolyX out = PolyX::constant(desc.dim_m(), ExactScalar(1));
  for (int j = 0; j < r; ++j) {
    int e = (j + 1 < r) ? s[j] - s[j + 1] : s[j];
    out = out * minors[j].pow(e);
  }
  return out;
}

}  // namespace ck
