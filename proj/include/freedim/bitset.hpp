#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace freedim {

/// Subsets of a ground set 0..N-1 are characteristic vectors; bit i set
/// means point i is in the set.
using Bitset = boost::dynamic_bitset<>;

/// Builds a bitset of width `width` with the given indices set.
/// Throws std::out_of_range on an index >= width.
Bitset bitset_of(std::size_t width, const std::vector<std::size_t>& indices);

/// The set bits, in increasing order.
std::vector<std::size_t> indices_of(const Bitset& bits);

/// Lexicographic order reading index 0 first, with 0 < 1.
/// Both operands must have the same size.
bool lex_less(const Bitset& a, const Bitset& b);

/// Renders as a 0/1 string, index 0 leftmost ("110" = {0,1} of width 3).
std::string bit_string(const Bitset& bits);

/// Renders as a sorted index list, e.g. "{0,2,5}".
std::string index_string(const Bitset& bits);

}  // namespace freedim
