#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freedim/rational.hpp"
#include "freedim/setsys.hpp"

namespace freedim {

/// A finite cover of a ground set: nonempty cells, possibly overlapping,
/// whose union is the whole ground.
struct Cover {
  GroundSet ground;
  std::vector<Bitset> cells;

  std::size_t size() const { return cells.size(); }

  friend bool operator==(const Cover&, const Cover&) = default;
};

/// Validating constructor. Throws std::invalid_argument on an empty cell
/// or when the cells fail to cover the ground.
Cover make_cover(std::size_t ground_size, const std::vector<std::vector<std::size_t>>& cells);
Cover make_cover(GroundSet ground, std::vector<Bitset> cells);

/// A candidate growth witness: a family of covers, a weight chi per
/// cover, a constant M and an exponent d. witness_check tests the joint
/// refinement inequality |joint| <= M * (sum chi)^d on chosen tuples.
struct GrowthWitness {
  std::uint64_t d = 0;
  Rational m = Rational(1);
  std::vector<Cover> family;
  std::vector<std::uint64_t> chi;
  /// When set, all covers are interval covers of a common chain and joint
  /// refinements are computed by the endpoint construction instead of the
  /// atom partition.
  bool interval_type = false;
};

/// Validates shapes: chi matches the family, chi values and M positive,
/// covers share a ground.
GrowthWitness make_growth_witness(std::uint64_t d, Rational m, std::vector<Cover> family,
                                  std::vector<std::uint64_t> chi, bool interval_type);

struct WitnessRow {
  std::vector<std::size_t> tuple;
  std::size_t joint_size = 0;
  std::string budget;  ///< exact value of M * (sum chi)^d, rendered p/q
  bool pass = false;
};

/// A finite point set together with [0,1]-valued functions such that
/// every pair of distinct points is separated by >= 1/2 by some function.
/// The goodness threshold for covers of the point set is 1/3.
struct SeparatedInstance {
  std::size_t point_count = 0;
  std::vector<std::vector<Rational>> functions;
};

/// Oscillation threshold below which a cover counts as good.
inline const Rational kGoodOscillation = Rational(1, 3);

/// Pairwise separation gap guaranteed by a SeparatedInstance.
inline const Rational kSeparationGap = Rational(1, 2);

/// Validating constructor: checks value range and the pairwise-1/2
/// separation property; throws std::invalid_argument when either fails.
SeparatedInstance make_separated_instance(std::size_t point_count,
                                          std::vector<std::vector<Rational>> functions);

struct GoodCoverFloor {
  bool good = false;
  /// When the cover is good: every cell holds exactly one point, so the
  /// cover has at least point_count cells. Vacuously true otherwise.
  bool floor_respected = true;
};

struct CountingParams {
  std::uint64_t d = 1;
  std::uint64_t m = 1;
  std::uint64_t m1 = 1;
  std::uint64_t p = 1;
  std::uint64_t n = 1;
};

struct CountingCheck {
  std::uint64_t lhs = 0;  ///< (n*d*m + p*m1)^d
  std::uint64_t rhs = 0;  ///< (n+1)^d * (p+1)
  bool holds = false;     ///< strict inequality lhs < rhs
};

/// True iff every cell of fine is contained in some cell of coarse.
/// Throws std::invalid_argument on a ground mismatch.
bool is_refinement(const Cover& fine, const Cover& coarse);

/// The canonical joint refinement: the atom partition of the pooled cells
/// of all covers. It refines every input and is the coarsest partition
/// doing so. Requires a nonempty list on a common ground.
Cover atoms_refinement(const std::vector<Cover>& covers);

/// Joint refinement of interval covers of the chain 0..chain_length-1 by
/// the endpoint construction: cells run between consecutive endpoints
/// drawn from all inputs, falling back to a singleton where adjacent
/// disjoint input cells leave no straddling interval. Refines every input
/// and has size <= sum of 2|C_i|. Throws std::invalid_argument on a
/// non-interval cell or a ground/chain mismatch.
Cover interval_joint_refinement(std::size_t chain_length, const std::vector<Cover>& covers);

/// Cover of the product ground (factor 1 least significant) by all
/// rectangles C1 x C2; the cell list has exactly |c1| * |c2| entries.
Cover product_cover(const Cover& c1, const Cover& c2);

/// Image cover {g[C]} under a total surjection given as point_map (entry
/// per source point, value a target point). Duplicate image cells are
/// collapsed, so the result has at most |c| cells. Throws
/// std::invalid_argument unless point_map is total onto target_size.
Cover push_cover(const std::vector<std::size_t>& point_map, std::size_t target_size,
                 const Cover& c);

/// Trace cover {C intersect S} on the nonempty subset S, reindexed to the
/// compact ground 0..|S|-1 (subset points in increasing order). Empty
/// traces are dropped and duplicate traces collapsed. Throws
/// std::invalid_argument on an empty subset.
Cover restrict_cover(const Cover& c, const Bitset& subset);

/// Checks the witness inequality on each tuple of family indices. A fail
/// marks this (family, chi, M, d) as invalid on that tuple, not the
/// absence of any witness. Tuples must be nonempty and in range.
std::vector<WitnessRow> witness_check(const GrowthWitness& w,
                                      const std::vector<std::vector<std::size_t>>& tuples);

/// max - min of the function over a nonempty cell, exactly.
Rational oscillation(const std::vector<Rational>& f, const Bitset& cell);

/// True iff every function has oscillation <= 1/3 on every cell.
bool is_good(const Cover& c, const std::vector<std::vector<Rational>>& functions);

/// n indicator functions on n+1 points: every pair of distinct points is
/// separated by gap 1 by some function. Requires n >= 1.
SeparatedInstance separated_family(std::uint64_t n);

/// The grid instance of the counting argument: (n+1)^d * (p+1) points in
/// mixed radix, with d*n coordinate-composed indicator functions and p
/// last-coordinate indicators. The pairwise separation property holds and
/// is verified at construction. Requires d, n, p >= 1.
SeparatedInstance build_grid_instance(std::uint64_t d, std::uint64_t n, std::uint64_t p);

/// If the cover is good, verifies the size floor |c| >= point_count via
/// the one-point-per-cell argument.
GoodCoverFloor good_cover_floor(const SeparatedInstance& inst, const Cover& c);

/// Exact evaluation of (n*d*m + p*m1)^d < (n+1)^d * (p+1). Throws
/// std::overflow_error when a side exceeds 64 bits.
CountingCheck counting_check(const CountingParams& params);

/// Minimal n in 1..limit making the counting inequality hold, or nullopt.
/// Evaluates in arbitrary precision internally, so it never overflows.
std::optional<std::uint64_t> find_min_n(std::uint64_t d, std::uint64_t m, std::uint64_t m1,
                                        std::uint64_t p, std::uint64_t limit);

/// Least-squares slope of log(joint_size) against log(budget). Requires
/// >= 3 samples, budgets >= 2 and not all equal, sizes >= 1. The one
/// deliberately inexact quantity in the library; diagnostic only.
double exponent_fit(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& samples);

}  // namespace freedim
