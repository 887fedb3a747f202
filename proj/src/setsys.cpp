#include "freedim/setsys.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>

namespace freedim {

namespace {

using boost::multiprecision::cpp_int;

std::uint64_t narrow_u64(const cpp_int& value, const char* what) {
  if (value > cpp_int(UINT64_MAX)) {
    throw std::overflow_error(std::string(what) + " exceeds 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

void check_member_index(const SetFamily& family, std::size_t index) {
  if (index >= family.size()) {
    throw std::out_of_range("member index " + std::to_string(index) +
                            " out of range for family of size " + std::to_string(family.size()));
  }
}

// Sorts cells by smallest point; partitions always have disjoint nonempty
// cells, so find_first is a total key.
void order_by_min_point(std::vector<AtomCell>& cells) {
  std::sort(cells.begin(), cells.end(), [](const AtomCell& a, const AtomCell& b) {
    return a.points.find_first() < b.points.find_first();
  });
}

}  // namespace

SetFamily make_set_family(std::size_t ground_size,
                          const std::vector<std::vector<std::size_t>>& sets) {
  SetFamily family;
  family.ground.size = ground_size;
  family.members.reserve(sets.size());
  for (const auto& set : sets) {
    family.members.push_back(bitset_of(ground_size, set));
  }
  return family;
}

std::vector<std::size_t> duplicate_member_indices(const SetFamily& family) {
  std::vector<std::size_t> dups;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (family.members[i] == family.members[j]) {
        dups.push_back(i);
        break;
      }
    }
  }
  return dups;
}

TraceSet make_trace_set(std::size_t width, const std::vector<Signature>& patterns) {
  TraceSet trace;
  trace.width = width;
  trace.patterns = patterns;
  for (const auto& p : trace.patterns) {
    if (p.size() != width) {
      throw std::invalid_argument("pattern width " + std::to_string(p.size()) +
                                  " does not match trace width " + std::to_string(width));
    }
  }
  std::sort(trace.patterns.begin(), trace.patterns.end(), lex_less);
  trace.patterns.erase(std::unique(trace.patterns.begin(), trace.patterns.end()),
                       trace.patterns.end());
  return trace;
}

AtomPartition atoms(const SetFamily& family) {
  AtomPartition partition;
  partition.ground = family.ground;
  const std::size_t n = family.ground.size;
  if (n == 0) return partition;

  // Start from the trivial partition and split every cell against each
  // member in turn, extending signatures one bit at a time.
  std::vector<AtomCell> cells;
  Bitset ground(n);
  ground.set();
  cells.push_back(AtomCell{ground, Signature()});

  for (const Bitset& member : family.members) {
    std::vector<AtomCell> next;
    next.reserve(cells.size() * 2);
    for (AtomCell& cell : cells) {
      Bitset inside = cell.points & member;
      Bitset outside = cell.points - member;
      if (inside.any()) {
        Signature sig = cell.signature;
        sig.push_back(true);
        next.push_back(AtomCell{std::move(inside), std::move(sig)});
      }
      if (outside.any()) {
        Signature sig = cell.signature;
        sig.push_back(false);
        next.push_back(AtomCell{std::move(outside), std::move(sig)});
      }
    }
    cells = std::move(next);
  }

  order_by_min_point(cells);
  partition.cells = std::move(cells);
  return partition;
}

IrredundancyResult is_irredundant(const SetFamily& family) {
  for (std::size_t g = 0; g < family.size(); ++g) {
    SetFamily rest;
    rest.ground = family.ground;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (i != g) rest.members.push_back(family.members[i]);
    }
    // g is in the subalgebra generated by the rest iff it is a union of
    // their atoms, i.e. no atom straddles it.
    bool straddles = false;
    for (const AtomCell& cell : atoms(rest).cells) {
      const bool meets = cell.points.intersects(family.members[g]);
      const bool inside = cell.points.is_subset_of(family.members[g]);
      if (meets && !inside) {
        straddles = true;
        break;
      }
    }
    if (!straddles) return IrredundancyResult{false, g};
  }
  return IrredundancyResult{true, std::nullopt};
}

bool is_independent(const SetFamily& family, const std::vector<std::size_t>& indices) {
  for (std::size_t index : indices) check_member_index(family, index);

  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;  // a = a forces the cell a and not-a empty
  }

  const std::size_t k = sorted.size();
  const std::size_t n = family.ground.size;
  // All 2^k cells nonempty needs 2^k distinct point patterns, so at most
  // n of them can be realized.
  if (k >= 64 || (std::uint64_t{1} << k) > n) {
    return k == 0 && n > 0;
  }

  const std::uint64_t want = std::uint64_t{1} << k;
  std::vector<bool> seen(want, false);
  std::uint64_t distinct = 0;
  for (std::size_t point = 0; point < n; ++point) {
    std::uint64_t pattern = 0;
    for (std::size_t b = 0; b < k; ++b) {
      if (family.members[sorted[b]][point]) pattern |= std::uint64_t{1} << b;
    }
    if (!seen[pattern]) {
      seen[pattern] = true;
      if (++distinct == want) return true;
    }
  }
  return false;
}

IndependenceNumber independence_number(const SetFamily& family) {
  IndependenceNumber result;
  if (family.ground.size == 0) return result;  // no nonempty cell exists

  // Level-wise extension: every independent (k+1)-set extends an
  // independent k-set by a larger index, so generating in index order
  // keeps each level lexicographically sorted.
  std::vector<std::vector<std::size_t>> level = {{}};
  while (true) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& base : level) {
      std::size_t start = base.empty() ? 0 : base.back() + 1;
      for (std::size_t j = start; j < family.size(); ++j) {
        std::vector<std::size_t> candidate = base;
        candidate.push_back(j);
        if (is_independent(family, candidate)) next.push_back(std::move(candidate));
      }
    }
    if (next.empty()) break;
    result.value = next.front().size();
    result.witness = next.front();
    level = std::move(next);
  }
  return result;
}

std::uint64_t binomial_bound(std::uint64_t n, std::uint64_t d) {
  cpp_int sum = 0;
  cpp_int term = 1;  // C(n, 0)
  const std::uint64_t top = std::min(n, d);
  for (std::uint64_t i = 0; i <= top; ++i) {
    sum += term;
    term = term * (n - i) / (i + 1);  // C(n, i+1), exact at every step
  }
  return narrow_u64(sum, "binomial bound");
}

std::optional<std::vector<std::size_t>> sauer_shelah_find(const TraceSet& trace,
                                                          std::uint64_t d) {
  const std::size_t width = trace.width;
  if (d >= width) return std::nullopt;  // no (d+1)-subset of positions exists
  const std::size_t k = static_cast<std::size_t>(d) + 1;
  if (k >= 64 || trace.size() < (std::uint64_t{1} << k)) return std::nullopt;
  const std::uint64_t want = std::uint64_t{1} << k;

  // Candidate position sets in lexicographic order.
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    std::vector<bool> seen(want, false);
    std::uint64_t distinct = 0;
    for (const Signature& pattern : trace.patterns) {
      std::uint64_t restricted = 0;
      for (std::size_t b = 0; b < k; ++b) {
        if (pattern[subset[b]]) restricted |= std::uint64_t{1} << b;
      }
      if (!seen[restricted]) {
        seen[restricted] = true;
        if (++distinct == want) return subset;
      }
    }

    // Advance to the next k-combination of 0..width-1.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (subset[i] != i + width - k) {
        ++subset[i];
        for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        break;
      }
      if (i == 0) return std::nullopt;
    }
  }
}

TraceSet realized_trace(const SetFamily& family) {
  std::vector<Signature> sigs;
  for (const AtomCell& cell : atoms(family).cells) sigs.push_back(cell.signature);
  return make_trace_set(family.size(), sigs);
}

}  // namespace freedim
