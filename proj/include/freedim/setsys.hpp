#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "freedim/bitset.hpp"

namespace freedim {

/// A finite ground set; points are the indices 0..size-1.
struct GroundSet {
  std::size_t size = 0;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;
};

/// An indexed list of subsets of a ground set. Members are addressed by
/// their position in the list; duplicates are allowed (indices matter for
/// witnesses) and can be located with duplicate_member_indices().
struct SetFamily {
  GroundSet ground;
  std::vector<Bitset> members;

  std::size_t size() const { return members.size(); }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

/// Validating constructor: every index must be < ground_size.
SetFamily make_set_family(std::size_t ground_size,
                          const std::vector<std::vector<std::size_t>>& sets);

/// Indices of members equal (as sets) to some earlier member.
std::vector<std::size_t> duplicate_member_indices(const SetFamily& family);

/// A 0/1 membership pattern over the members of a family: bit i tells
/// whether a point (or atom) lies inside member i.
using Signature = Bitset;

/// One atom of the subalgebra generated by a family: a maximal set of
/// points sharing a membership pattern.
struct AtomCell {
  Bitset points;
  Signature signature;

  friend bool operator==(const AtomCell&, const AtomCell&) = default;
};

/// The partition of the ground set into atoms. Cells are nonempty,
/// pairwise disjoint, union to the ground set, and carry pairwise distinct
/// signatures. Cells are ordered by their smallest point.
struct AtomPartition {
  GroundSet ground;
  std::vector<AtomCell> cells;

  std::size_t size() const { return cells.size(); }

  friend bool operator==(const AtomPartition&, const AtomPartition&) = default;
};

/// A duplicate-free set of equal-length patterns; the object the
/// Sauer-Shelah lemma bounds. Stored sorted in lex order (bit 0 first).
struct TraceSet {
  std::size_t width = 0;
  std::vector<Signature> patterns;

  std::size_t size() const { return patterns.size(); }

  friend bool operator==(const TraceSet&, const TraceSet&) = default;
};

/// Deduplicates and canonically orders the given patterns. All patterns
/// must have size `width`.
TraceSet make_trace_set(std::size_t width, const std::vector<Signature>& patterns);

struct IrredundancyResult {
  bool irredundant = true;
  /// Smallest index whose member lies in the subalgebra generated by the
  /// others; present iff !irredundant.
  std::optional<std::size_t> offender;
};

struct IndependenceNumber {
  std::size_t value = 0;
  /// Lexicographically smallest independent subset of maximum size.
  std::vector<std::size_t> witness;
};

/// Atoms of the Boolean subalgebra of the powerset generated by the
/// members, computed by iterated cell splitting. The empty family
/// generates {0, ground}: one cell for N >= 1, none for N == 0.
AtomPartition atoms(const SetFamily& family);

/// True iff no member is a union of atoms of the remaining members.
IrredundancyResult is_irredundant(const SetFamily& family);

/// True iff all 2^k Boolean cells of the selected members and their
/// complements are nonempty. A repeated index is dependent (a cell is
/// empty by construction). Throws std::out_of_range on a bad index.
bool is_independent(const SetFamily& family, const std::vector<std::size_t>& indices);

/// Largest k such that some k member indices are independent, with the
/// lexicographically smallest witness of that size. Exhaustive level-wise
/// search with monotone pruning (supersets of dependent sets are
/// dependent); practical up to |F| <= 24, N <= 4096.
IndependenceNumber independence_number(const SetFamily& family);

/// C(N,0) + C(N,1) + ... + C(N,d), exactly; equals 2^N when d >= N.
/// Throws std::overflow_error if the value exceeds 64 bits.
std::uint64_t binomial_bound(std::uint64_t n, std::uint64_t d);

/// A set S of d+1 pattern positions shattered by the trace (restrictions
/// realize all of 2^S), lexicographically smallest, or nullopt when none
/// exists. For d >= width there is none by convention. Whenever
/// |trace| > binomial_bound(width, d) a witness exists and is returned.
std::optional<std::vector<std::size_t>> sauer_shelah_find(const TraceSet& trace,
                                                          std::uint64_t d);

/// The set of signatures realized by the atoms of the family;
/// |realized_trace(F)| == |atoms(F).cells|.
TraceSet realized_trace(const SetFamily& family);

}  // namespace freedim
