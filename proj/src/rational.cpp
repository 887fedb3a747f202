#include "freedim/rational.hpp"

#include <stdexcept>

namespace freedim {

std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return std::invalid_argument("malformed rational: '" + text + "'"); };
  std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    std::int64_t num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw bad();
    std::int64_t den = 1;
    if (slash != std::string::npos) {
      std::string den_part = text.substr(slash + 1);
      den = std::stoll(den_part, &used);
      if (used != den_part.size()) throw bad();
    }
    if (den == 0) throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

}  // namespace freedim
