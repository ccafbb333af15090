#include "gkm/rational.hpp"

#include <stdexcept>

namespace gkm {

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Int(std::string(s)));
    }
    Int num{std::string(s.substr(0, slash))};
    Int den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
  }
}

}  // namespace gkm
