#include "ck/rational.hpp"

#include <cctype>

namespace ck {

namespace {
bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}
}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
      throw DomainError("malformed rational: '" + text + "'");
    Integer d(den);
    if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (whole.empty() || whole == "+" || whole == "-") whole += "0";
    if (!valid_integer(whole) || frac.empty() || !valid_integer(frac) || frac[0] == '+' ||
        frac[0] == '-')
      throw DomainError("malformed rational: '" + text + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r{Integer(whole)};
    Rational f{Integer(frac), scale};
    return r < 0 || whole == "-0" ? Rational(r - f) : Rational(r + f);
  }
  if (!valid_integer(text)) throw DomainError("malformed rational: '" + text + "'");
  return Rational(Integer(text));
}

std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace ck
