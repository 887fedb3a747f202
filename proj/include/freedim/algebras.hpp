#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "freedim/setsys.hpp"

namespace freedim {

/// Generators of a finite interval algebra: the chain is 0 < 1 < ... <
/// length-1, and each cut c denotes the initial segment [0, c].
struct ChainCuts {
  std::size_t length = 0;
  std::vector<std::size_t> cuts;

  friend bool operator==(const ChainCuts&, const ChainCuts&) = default;
};

/// A finite poset in which every down-set is a chain, encoded by a parent
/// map (roots have no parent). The order is: s <= t iff s lies on the
/// parent path from t. The encoding makes the chain condition structural.
class Pseudotree {
 public:
  Pseudotree() = default;

  /// Validates ranges and acyclicity; throws std::invalid_argument on a
  /// cycle (naming the nodes on it) or a parent index out of range.
  explicit Pseudotree(std::vector<std::optional<std::size_t>> parent);

  std::size_t node_count() const { return parent_.size(); }
  const std::vector<std::optional<std::size_t>>& parents() const { return parent_; }

  std::vector<std::size_t> roots() const;

  /// s <= t in the tree order.
  bool leq(std::size_t s, std::size_t t) const;

  /// The initial chain (-inf, t] as a subset of the nodes.
  Bitset down_set(std::size_t t) const;

  friend bool operator==(const Pseudotree&, const Pseudotree&) = default;

 private:
  std::vector<std::optional<std::size_t>> parent_;
};

/// Outcome of certifying that no d+1 members of a family are independent.
struct ClassDCertificate {
  std::uint64_t d = 0;
  bool verified = false;
  /// Lexicographically smallest independent (d+1)-subset, present iff
  /// !verified.
  std::optional<std::vector<std::size_t>> counterexample;
};

/// Cylinder realization of a free product on a product ground set.
/// Points are encoded in mixed radix with factor 0 least significant;
/// member k of cylinders is the cylinder over member_origin[k] =
/// (factor, member index within that factor).
struct ProductFamily {
  std::vector<SetFamily> factors;
  SetFamily cylinders;
  std::vector<std::pair<std::size_t, std::size_t>> member_origin;
};

struct HeindorfResult {
  bool holds = true;
  /// Smallest pair (i, j), i < j, of members neither comparable nor
  /// disjoint; present iff !holds.
  std::optional<std::pair<std::size_t, std::size_t>> offender;
};

struct IcaBoundReport {
  std::size_t atom_count = 0;
  std::size_t budget = 0;  ///< 2 * |picks|
  bool holds = false;      ///< vacuously true when picks is empty
};

struct GrowthRow {
  std::vector<std::size_t> subset;
  std::size_t family_size = 0;
  std::size_t atom_count = 0;
  std::uint64_t binomial = 0;   ///< binomial_bound(|F|, d)
  std::uint64_t polynomial = 0; ///< (d+1) * |F|^d
  bool within = false;
};

/// The family of initial segments [0, c] on the chain 0..length-1.
/// Throws std::out_of_range on a cut >= length.
SetFamily chain_initial_segments(const ChainCuts& cuts);

/// True iff every pair of members is comparable (under inclusion) or
/// disjoint; the condition characterizing embeddability into an interval
/// algebra.
HeindorfResult heindorf_check(const SetFamily& family);

/// For finite pseudotrees the only well-met defect is a missing common
/// lower bound, i.e. several roots: the closure adjoins one new minimum
/// node (index node_count()) below all roots when there are two or more;
/// otherwise the input is returned unchanged.
Pseudotree wellmet_closure(const Pseudotree& t);

/// The family whose i-th member is the initial chain (-inf, picks[i]].
/// Throws std::out_of_range on an invalid node.
SetFamily initial_chains(const Pseudotree& t, const std::vector<std::size_t>& picks);

/// Atom count of initial_chains on wellmet_closure(t) against the 2|F|
/// budget. Picks refer to nodes of t. An empty pick list reports
/// vacuous-true (the single trivial atom exceeds the raw budget 0).
IcaBoundReport ica_bound_report(const Pseudotree& t, const std::vector<std::size_t>& picks);

/// Cylinder family over the product of the factor grounds. Throws
/// std::invalid_argument on a zero-size factor ground and
/// std::overflow_error if the product ground exceeds 64 bits.
ProductFamily free_product(const std::vector<SetFamily>& factors);

/// verified iff no d+1 member indices are independent.
ClassDCertificate certify_class_d(const SetFamily& family, std::uint64_t d);

/// Per-subset atom counts against the class-d growth budgets. Assumes the
/// family is certified in class d; rows of a certified family never
/// violate the bounds. For the empty subset only the binomial bound is
/// claimed ((d+1)|F|^d degenerates to 0).
std::vector<GrowthRow> growth_bound_report(const SetFamily& family, std::uint64_t d,
                                           const std::vector<std::vector<std::size_t>>& subsets);

}  // namespace freedim
