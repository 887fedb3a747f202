#include "freedim/bitset.hpp"

#include <stdexcept>

namespace freedim {

Bitset bitset_of(std::size_t width, const std::vector<std::size_t>& indices) {
  Bitset bits(width);
  for (std::size_t i : indices) {
    if (i >= width) {
      throw std::out_of_range("index " + std::to_string(i) + " out of range for ground of size " +
                              std::to_string(width));
    }
    bits.set(i);
  }
  return bits;
}

std::vector<std::size_t> indices_of(const Bitset& bits) {
  std::vector<std::size_t> out;
  out.reserve(bits.count());
  for (std::size_t i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

bool lex_less(const Bitset& a, const Bitset& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return b[i];
  }
  return false;
}

std::string bit_string(const Bitset& bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) s[i] = '1';
  }
  return s;
}

std::string index_string(const Bitset& bits) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  s += "}";
  return s;
}

}  // namespace freedim
