#include "ck/classifier.hpp"

#include <algorithm>

#include "ck/riesz.hpp"

namespace ck {

int q_multiplicity(const SigN& s, const Rational& lambda, const AlgebraDescriptor& desc) {
  const int r = desc.rank, a = desc.peirce_a();
  if (static_cast<int>(s.size()) != r || !is_N_Omega(s))
    throw StructuralError("q_multiplicity: s must be in N_Omega");
  int count = 0;
  for (int k = 1; k <= r; ++k) {
    Rational root = Rational(a * (k - 1), 2) - lambda;  // m_k/2 - lambda
    if (is_natural(root) && root <= s[k - 1] - 1) ++count;
  }
  return count;
}

std::vector<int> K_lambda_set(const Rational& lambda, const AlgebraDescriptor& desc) {
  const int a = desc.peirce_a();
  std::vector<int> out;
  for (int k = 1; k <= desc.rank; ++k)
    if (is_natural(Rational(a * (k - 1), 2) - lambda)) out.push_back(k);
  return out;
}

namespace {

/// All increasing natural signatures whose last k entries equal `tail` and
/// whose leading entries weakly increase up to it.
std::vector<SigN> generator_set(int r, int k, long tail) {
  std::vector<SigN> out;
  std::vector<int> lead(std::max(r - k, 0), 0);
  std::function<void(int, int)> walk = [&](int pos, int lo) {
    if (pos == r - k) {
      SigN full(r);
      for (int j = 0; j < r - k; ++j) full[j] = lead[j];
      for (int j = r - k; j < r; ++j) full[j] = static_cast<int>(tail);
      out.push_back(full);
      return;
    }
    for (int v = lo; v <= static_cast<int>(tail); ++v) {
      lead[pos] = v;
      walk(pos + 1, v);
    }
  };
  walk(0, 0);
  return out;
}

}  // namespace

LambdaClassification classify_lambda(const Rational& lambda, const AlgebraDescriptor& desc,
                                     int degree_bound) {
  if (degree_bound < 0) throw StructuralError("classify_lambda: bound must be >= 0");
  LambdaClassification out;
  out.lambda = lambda;
  out.K_lambda = K_lambda_set(lambda, desc);
  out.q_lambda = static_cast<int>(out.K_lambda.size());
  out.degree_bound = degree_bound;
  const int r = desc.rank, a = desc.peirce_a();
  auto all_sigs = enumerate_N_Omega(r, degree_bound);
  for (int k : out.K_lambda) {
    LambdaClassification::PerK pk;
    pk.k = k;
    long tail = to_long(Rational(a * (k - 1), 2) - lambda + 1);  // m_k/2 - lambda + 1
    pk.N = generator_set(r, k, tail);
    for (const auto& s : all_sigs) {
      bool all_killed = true;
      for (const auto& sd : pk.N)
        if (!kills(desc, s, sd).killed) {
          all_killed = false;
          break;
        }
      if (all_killed) pk.killed.push_back(s);
    }
    out.per_k.push_back(std::move(pk));
  }
  return out;
}

std::string SpaceDescriptor::render() const {
  auto wrap = [](const std::string& t) {
    return t.find('/') == std::string::npos && t.find('-') == std::string::npos &&
                   t.size() == 1
               ? t
               : "{" + t + "}";
  };
  auto sig_text = [](const SigN& sig) {
    std::string t = "(";
    for (std::size_t i = 0; i < sig.size(); ++i)
      t += (i ? "," : "") + std::to_string(sig[i]);
    return t + ")";
  };
  switch (kind) {
    case SpaceKind::Zero:
      return "{0}";
    case SpaceKind::Full:
      return "Hol(D)";
    case SpaceKind::A_lambda:
      return "A_" + wrap(to_string(lambda));
    case SpaceKind::A_lambda_lambdaprime:
      return "A_{" + to_string(lambda) + "," + to_string(lambda_prime) + "}";
    case SpaceKind::A_plus_kernel:
      return "A_{" + to_string(lambda) + "," + to_string(lambda_prime) + "}+ker D_" +
             sig_text(s);
    case SpaceKind::H_lambda:
      return "H_" + wrap(to_string(lambda));
  }
  return {};
}

std::vector<SpaceDescriptor> classify_affine_tube(const Rational& lambda,
                                                  const AlgebraDescriptor& desc, int bound) {
  const int r = desc.rank;
  std::vector<SpaceDescriptor> out;
  auto emit = [&](const SigN& s_inc) {
    SpaceDescriptor d;
    d.lambda = lambda;
    if (sig_total(s_inc) == 0) {
      d.kind = SpaceKind::A_lambda;
    } else {
      d.kind = SpaceKind::A_plus_kernel;
      d.lambda_prime = s_inc.front();
      d.s = s_inc;
    }
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  };
  for (int l = 0; l <= r; ++l) {
    EpsilonPattern eps;
    eps.bits.assign(r, 0);
    for (int j = r - l; j < r; ++j) eps.bits[j] = 1;
    auto [mv, mp] = m_vectors(eps, desc.peirce_a());
    RationalVec half_mp(r);
    for (int j = 0; j < r; ++j) half_mp[j] = mp[j] / 2;
    for (const auto& dec : enumerate_N_Omega(r, bound)) {
      SigN s_inc = sigma_reverse(dec);
      RationalVec shifted(r);
      for (int j = 0; j < r; ++j) shifted[j] = lambda + 2 * s_inc[j];
      if (order_lt(half_mp, shifted, eps, false)) emit(s_inc);
    }
  }
  return out;
}

std::vector<SpaceDescriptor> classify_moebius(const Rational& lambda,
                                              const AlgebraDescriptor& desc,
                                              bool general_domain) {
  std::vector<SpaceDescriptor> out;
  Rational edge = Rational(desc.dim_m(), desc.rank) - 1;  // m/r - 1
  if (is_natural(edge - lambda)) {
    SpaceDescriptor d;
    d.lambda = lambda;
    if (general_domain) {
      d.kind = SpaceKind::H_lambda;
      d.general_stated = true;
    } else {
      d.kind = SpaceKind::A_lambda_lambdaprime;
      d.lambda_prime = edge + 1 - lambda;  // m/r - lambda
    }
    out.push_back(d);
  }
  if (in_wallach(lambda, desc).member) {
    SpaceDescriptor d;
    d.kind = SpaceKind::A_lambda;
    d.lambda = lambda;
    out.push_back(d);
  }
  return out;
}

}  // namespace ck
