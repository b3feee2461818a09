#include "ck/riesz.hpp"

#include <cmath>

namespace ck {

std::pair<RationalVec, RationalVec> m_vectors(const EpsilonPattern& eps, int a) {
  const int r = static_cast<int>(eps.bits.size());
  RationalVec m(r), mp(r);
  for (int j = 0; j < r; ++j) {
    int below = 0, above = 0;
    for (int k = 0; k < j; ++k) below += eps.bits[k];
    for (int k = j + 1; k < r; ++k) above += eps.bits[k];
    m[j] = a * below;
    mp[j] = a * above;
  }
  return {m, mp};
}

std::pair<RationalVec, RationalVec> m_vectors(const AlgebraDescriptor& desc) {
  EpsilonPattern ones;
  ones.bits.assign(desc.rank, 1);
  return m_vectors(ones, desc.peirce_a());
}

bool order_lt(const RationalVec& s, const RationalVec& s2, const EpsilonPattern& eps,
              bool strict) {
  if (s.size() != s2.size() || s.size() != eps.bits.size())
    throw StructuralError("order_lt: length mismatch");
  bool all_equal = true;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (eps.bits[j]) {
      if (!(s[j] < s2[j])) return false;
      all_equal = false;
    } else if (s[j] != s2[j]) {
      return false;
    }
  }
  if (strict && all_equal) return false;  // eps = 0 case: s != s2 required
  return true;
}

std::vector<EpsilonPattern> gindikin_matching_patterns(const RationalVec& s,
                                                       const AlgebraDescriptor& desc) {
  const int r = desc.rank, a = desc.peirce_a();
  if (static_cast<int>(s.size()) != r) throw StructuralError("signature length != rank");
  std::vector<EpsilonPattern> out;
  for (int mask = 0; mask < (1 << r); ++mask) {
    EpsilonPattern eps;
    eps.bits.resize(r);
    for (int j = 0; j < r; ++j) eps.bits[j] = (mask >> j) & 1;
    auto [m, mp] = m_vectors(eps, a);
    bool ok = true;
    for (int j = 0; j < r && ok; ++j) {
      Rational half_m = m[j] / 2;
      ok = eps.bits[j] ? (s[j] > half_m) : (s[j] == half_m);
    }
    if (ok) out.push_back(eps);
  }
  return out;
}

WallachVerdict in_gindikin_wallach(const RationalVec& s, const AlgebraDescriptor& desc,
                                   bool star) {
  RationalVec sig = s;
  if (star) std::reverse(sig.begin(), sig.end());
  auto matches = gindikin_matching_patterns(sig, desc);
  WallachVerdict out;
  if (!matches.empty()) {
    out.member = true;
    out.epsilon = matches.front();
  }
  return out;
}

WallachVerdict in_wallach(const Rational& lambda, const AlgebraDescriptor& desc) {
  const int a = desc.peirce_a();
  WallachVerdict out;
  for (int j = 0; j <= desc.rank - 1; ++j) {
    if (lambda == Rational(j * a, 2)) {
      out.member = true;
      out.kind = WallachKind::DiscretePoint;
      out.discrete_j = j;
      return out;
    }
  }
  if (lambda > Rational(desc.dim_m(), desc.rank) - 1) {
    out.member = true;
    out.kind = WallachKind::ContinuousRange;
  }
  return out;
}

double gindikin_gamma(const std::vector<double>& s, const AlgebraDescriptor& desc) {
  const int r = desc.rank, m = desc.dim_m(), a = desc.peirce_a();
  if (static_cast<int>(s.size()) != r) throw StructuralError("signature length != rank");
  double log_out = 0.5 * (m - r) * std::log(2 * M_PI);
  for (int j = 0; j < r; ++j) {
    double arg = s[j] - 0.5 * j * a;
    if (arg <= 0)
      throw DomainError("gindikin_gamma: argument " + std::to_string(arg) +
                        " outside the convergence range");
    log_out += std::lgamma(arg);
  }
  return std::exp(log_out);
}

Rational pochhammer_cone(const RationalVec& s, const SigN& s_shift,
                         const AlgebraDescriptor& desc) {
  const int r = desc.rank, a = desc.peirce_a();
  if (static_cast<int>(s.size()) != r || static_cast<int>(s_shift.size()) != r)
    throw StructuralError("signature length != rank");
  Rational out = 1;
  for (int j = 0; j < r; ++j) {
    if (s_shift[j] < 0) throw StructuralError("pochhammer_cone: shift must be natural");
    Rational base = s[j] + Rational(a * (r - 1 - j), 2);
    for (int i = 0; i < s_shift[j]; ++i) out *= base - i;
  }
  return out;
}

double pochhammer_cone(const std::vector<double>& s, const SigN& s_shift,
                       const AlgebraDescriptor& desc) {
  const int r = desc.rank, a = desc.peirce_a();
  double out = 1;
  for (int j = 0; j < r; ++j) {
    double base = s[j] + 0.5 * a * (r - 1 - j);
    for (int i = 0; i < s_shift[j]; ++i) out *= base - i;
  }
  return out;
}

Rational shifted_factorials(const RationalVec& s, const SigN& s_shift, bool primed) {
  if (s.size() != s_shift.size()) throw StructuralError("length mismatch");
  Rational out = 1;
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (int k = 0; k < s_shift[j]; ++k) {
      Rational f = s[j] + k;
      if (primed) {
        if (f != 0) out *= abs(f);
      } else {
        out *= f;
      }
    }
  }
  return out;
}

RationalVec rational_sig(const SigN& s) {
  RationalVec out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i];
  return out;
}

RationalVec uniform_rational_sig(int r, const Rational& lambda) {
  return RationalVec(r, lambda);
}

}  // namespace ck
