#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "freedim/coverlab.hpp"
#include "freedim/rng.hpp"

using namespace freedim;

namespace {

Cover random_cover(Rng& rng, std::size_t ground_size, std::size_t max_cells) {
  std::vector<Bitset> cells;
  const std::size_t count = static_cast<std::size_t>(rng.between(1, max_cells));
  Bitset covered(ground_size);
  for (std::size_t c = 0; c < count; ++c) {
    Bitset cell(ground_size);
    while (cell.none()) {
      for (std::size_t i = 0; i < ground_size; ++i) {
        if (rng.below(3) == 0) cell.set(i);
      }
    }
    covered |= cell;
    cells.push_back(std::move(cell));
  }
  if (!covered.all()) cells.push_back(~covered);
  return make_cover(GroundSet{ground_size}, std::move(cells));
}

// Coarsening that keeps refinement by construction: partition the cell
// list into groups and replace each group by its union.
Cover coarsen(Rng& rng, const Cover& cover) {
  const std::size_t groups = 1 + static_cast<std::size_t>(rng.below(cover.size()));
  std::vector<Bitset> merged(groups, Bitset(cover.ground.size));
  for (std::size_t c = 0; c < cover.size(); ++c) {
    merged[rng.below(groups)] |= cover.cells[c];
  }
  std::vector<Bitset> cells;
  for (Bitset& cell : merged) {
    if (cell.any()) cells.push_back(std::move(cell));
  }
  return make_cover(cover.ground, std::move(cells));
}

Cover random_interval_cover(Rng& rng, std::size_t chain_length) {
  std::vector<Bitset> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = static_cast<std::size_t>(rng.between(start, chain_length - 1));
    Bitset cell(chain_length);
    for (std::size_t i = start; i <= end; ++i) cell.set(i);
    cells.push_back(std::move(cell));
    if (end == chain_length - 1) break;
    // next start <= end + 1 keeps the chain covered, > start makes progress
    start = static_cast<std::size_t>(rng.between(start + 1, end + 1));
  }
  return make_cover(GroundSet{chain_length}, std::move(cells));
}

std::vector<std::size_t> random_surjection(Rng& rng, std::size_t source, std::size_t target) {
  std::vector<std::size_t> map(source);
  for (std::size_t i = 0; i < source; ++i) map[i] = static_cast<std::size_t>(rng.below(target));
  for (std::size_t value = 0; value < target; ++value) {
    map[rng.below(source)] = value;  // force surjectivity
  }
  return map;
}

bool is_partition(const Cover& cover) {
  Bitset covered(cover.ground.size);
  for (const Bitset& cell : cover.cells) {
    if (cell.none() || covered.intersects(cell)) return false;
    covered |= cell;
  }
  return cover.ground.size == 0 || covered.all();
}

// All partitions of 0..n-1 via restricted growth strings.
void for_each_partition(std::size_t n, const std::function<void(const Cover&)>& visit) {
  std::vector<std::size_t> rgs(n, 0);
  const std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t i,
                                                                    std::size_t blocks) {
    if (i == n) {
      std::vector<Bitset> cells(blocks, Bitset(n));
      for (std::size_t point = 0; point < n; ++point) cells[rgs[point]].set(point);
      visit(Cover{GroundSet{n}, cells});
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      recurse(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    visit(Cover{GroundSet{0}, {}});
    return;
  }
  recurse(0, 0);
}

}  // namespace

TEST_CASE("cover validation") {
  CHECK_THROWS_AS((void)make_cover(3, {{0, 1}}), std::invalid_argument);  // point 2 uncovered
  CHECK_THROWS_AS((void)make_cover(3, {{0, 1, 2}, {}}), std::invalid_argument);  // empty cell
  CHECK(make_cover(3, {{0, 1}, {1, 2}}).size() == 2);
  CHECK(make_cover(0, {}).size() == 0);
}

TEST_CASE("refinement basics") {
  const Cover singletons = make_cover(3, {{0}, {1}, {2}});
  const Cover split = make_cover(3, {{0, 1}, {2}});
  const Cover crossing = make_cover(3, {{0}, {1, 2}});
  const Cover whole = make_cover(3, {{0, 1, 2}});

  CHECK(is_refinement(singletons, split));
  CHECK(is_refinement(singletons, crossing));
  CHECK(is_refinement(split, whole));
  CHECK_FALSE(is_refinement(split, crossing));  // {0,1} fits in neither cell
  CHECK(is_refinement(whole, whole));

  CHECK_THROWS_AS((void)is_refinement(singletons, make_cover(2, {{0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("refinement is reflexive and transitive on randoms") {
  Rng rng(9001);
  for (int round = 0; round < 200; ++round) {
    const Cover fine = random_cover(rng, 1 + rng.below(8), 5);
    CHECK(is_refinement(fine, fine));
    const Cover mid = coarsen(rng, fine);
    const Cover coarse = coarsen(rng, mid);
    CHECK(is_refinement(fine, mid));
    CHECK(is_refinement(mid, coarse));
    CHECK(is_refinement(fine, coarse));
  }
}

TEST_CASE("atoms refinement on fixed inputs") {
  const Cover partition = make_cover(4, {{0, 1}, {2, 3}});
  const Cover same = atoms_refinement({partition});
  CHECK(same.cells == std::vector<Bitset>{bitset_of(4, {0, 1}), bitset_of(4, {2, 3})});

  const Cover other = make_cover(4, {{0, 2}, {1, 3}});
  const Cover joint = atoms_refinement({partition, other});
  CHECK(joint.size() == 4);
  CHECK(is_partition(joint));
  CHECK(is_refinement(joint, partition));
  CHECK(is_refinement(joint, other));

  CHECK(atoms_refinement({partition, partition}).cells == same.cells);
  CHECK_THROWS_AS((void)atoms_refinement({}), std::invalid_argument);
}

TEST_CASE("atoms refinement refines arbitrary covers") {
  Rng rng(333);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 1 + rng.below(6);
    std::vector<Cover> covers;
    const std::size_t count = 1 + rng.below(3);
    for (std::size_t i = 0; i < count; ++i) covers.push_back(random_cover(rng, n, 3));
    const Cover joint = atoms_refinement(covers);
    CHECK(is_partition(joint));
    for (const Cover& cover : covers) CHECK(is_refinement(joint, cover));
  }
}

TEST_CASE("atoms refinement of partitions is the coarsest common refinement") {
  // A unique coarsest refining partition only exists for partition
  // inputs; overlapping covers admit incomparable maximal refinements.
  Rng rng(334);
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = 1 + rng.below(6);
    std::vector<Cover> covers;
    const std::size_t count = 1 + rng.below(3);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t blocks = 1 + rng.below(n);
      std::vector<Bitset> cells(blocks, Bitset(n));
      for (std::size_t point = 0; point < n; ++point) cells[rng.below(blocks)].set(point);
      std::vector<Bitset> nonempty;
      for (Bitset& cell : cells) {
        if (cell.any()) nonempty.push_back(std::move(cell));
      }
      covers.push_back(make_cover(GroundSet{n}, std::move(nonempty)));
    }
    const Cover joint = atoms_refinement(covers);
    CHECK(is_partition(joint));
    for (const Cover& cover : covers) CHECK(is_refinement(joint, cover));
    for_each_partition(n, [&](const Cover& candidate) {
      bool refines_all = true;
      for (const Cover& cover : covers) {
        if (!is_refinement(candidate, cover)) {
          refines_all = false;
          break;
        }
      }
      if (refines_all) CHECK(is_refinement(candidate, joint));
    });
  }
}

TEST_CASE("interval joint refinement endpoint construction") {
  const Cover c1 = make_cover(10, {{0, 1, 2, 3, 4}, {4, 5, 6, 7, 8, 9}});
  const Cover c2 = make_cover(10, {{0, 1, 2, 3, 4, 5, 6}, {6, 7, 8, 9}});
  const Cover joint = interval_joint_refinement(10, {c1, c2});
  REQUIRE(joint.size() == 3);
  CHECK(joint.cells[0] == bitset_of(10, {0, 1, 2, 3, 4}));
  CHECK(joint.cells[1] == bitset_of(10, {4, 5, 6}));
  CHECK(joint.cells[2] == bitset_of(10, {6, 7, 8, 9}));
  CHECK(joint.size() <= 2 * c1.size() + 2 * c2.size());

  const Cover alone = interval_joint_refinement(10, {c1});
  CHECK(alone.cells == c1.cells);

  const Cover trivial = make_cover(4, {{0, 1, 2, 3}});
  CHECK(interval_joint_refinement(4, {trivial, trivial}).cells == trivial.cells);

  CHECK_THROWS_AS((void)interval_joint_refinement(3, {make_cover(3, {{0, 2}, {1}})}),
                  std::invalid_argument);
}

TEST_CASE("interval joint refinement with adjacent disjoint cells") {
  // One cover breaks between 2 and 3; the straddling piece shrinks to a
  // singleton and coverage survives.
  const Cover broken = make_cover(6, {{0, 1, 2}, {3, 4, 5}});
  const Cover whole = make_cover(6, {{0, 1, 2, 3, 4, 5}});
  const Cover joint = interval_joint_refinement(6, {broken, whole});
  CHECK(is_refinement(joint, broken));
  CHECK(is_refinement(joint, whole));
  CHECK(joint.size() <= 2 * broken.size() + 2 * whole.size());
}

TEST_CASE("interval joint refinement budget and refinement on randoms") {
  Rng rng(606060);
  for (int round = 0; round < 200; ++round) {
    const std::size_t length = 1 + rng.below(30);
    std::vector<Cover> covers;
    std::size_t budget = 0;
    const std::size_t count = 1 + rng.below(4);
    for (std::size_t i = 0; i < count; ++i) {
      covers.push_back(random_interval_cover(rng, length));
      budget += 2 * covers.back().size();
    }
    const Cover joint = interval_joint_refinement(length, covers);
    CHECK(joint.size() <= budget);
    for (const Cover& cover : covers) CHECK(is_refinement(joint, cover));
  }
}

TEST_CASE("product cover") {
  const Cover whole2 = make_cover(2, {{0, 1}});
  const Cover whole3 = make_cover(3, {{0, 1, 2}});
  CHECK(product_cover(whole2, whole3).size() == 1);

  const Cover two = make_cover(2, {{0}, {1}});
  const Cover three = make_cover(3, {{0}, {1}, {2}});
  const Cover rectangles = product_cover(two, three);
  CHECK(rectangles.size() == 6);
  CHECK(rectangles.ground.size == 6);

  // products of finer interval covers refine products of coarser ones
  Rng rng(17);
  for (int round = 0; round < 50; ++round) {
    const Cover a_fine = random_interval_cover(rng, 4);
    const Cover a_coarse = coarsen(rng, a_fine);
    const Cover b_fine = random_interval_cover(rng, 4);
    const Cover b_coarse = coarsen(rng, b_fine);
    CHECK(is_refinement(product_cover(a_fine, b_fine), product_cover(a_coarse, b_coarse)));
  }
}

TEST_CASE("push cover") {
  const Cover cover = make_cover(3, {{0, 1}, {2}});
  const Cover identity = push_cover({0, 1, 2}, 3, cover);
  CHECK(identity.cells == cover.cells);

  const Cover collapsed = push_cover({0, 0, 1}, 2, cover);
  CHECK(collapsed.cells == std::vector<Bitset>{bitset_of(2, {0}), bitset_of(2, {1})});

  const Cover constant = push_cover({0, 0, 0}, 1, make_cover(3, {{0}, {1}, {2}}));
  CHECK(constant.cells == std::vector<Bitset>{bitset_of(1, {0})});

  CHECK_THROWS_AS((void)push_cover({0, 0, 0}, 2, cover), std::invalid_argument);
  CHECK_THROWS_AS((void)push_cover({0, 5, 0}, 2, cover), std::invalid_argument);
  CHECK_THROWS_AS((void)push_cover({0, 1}, 2, cover), std::invalid_argument);
}

TEST_CASE("restrict cover") {
  const Cover cover = make_cover(4, {{0, 1}, {2, 3}});
  const Cover traced = restrict_cover(cover, bitset_of(4, {1, 2}));
  // ambient points 1 and 2 become 0 and 1 of the compact ground
  CHECK(traced.ground.size == 2);
  CHECK(traced.cells == std::vector<Bitset>{bitset_of(2, {0}), bitset_of(2, {1})});

  Bitset all(4);
  all.set();
  CHECK(restrict_cover(cover, all).cells == cover.cells);

  const Cover point = restrict_cover(cover, bitset_of(4, {3}));
  CHECK(point.size() == 1);

  CHECK_THROWS_AS((void)restrict_cover(cover, Bitset(4)), std::invalid_argument);
}

TEST_CASE("push and restrict are monotone and size-bounded") {
  Rng rng(31007);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + rng.below(8);
    const Cover fine = random_cover(rng, n, 5);
    const Cover coarse = coarsen(rng, fine);

    const std::size_t target = 1 + rng.below(n);
    const auto map = random_surjection(rng, n, target);
    const Cover pushed_fine = push_cover(map, target, fine);
    const Cover pushed_coarse = push_cover(map, target, coarse);
    CHECK(pushed_fine.size() <= fine.size());
    CHECK(is_refinement(pushed_fine, pushed_coarse));

    Bitset subset(n);
    while (subset.none()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (rng.coin()) subset.set(i);
      }
    }
    const Cover traced_fine = restrict_cover(fine, subset);
    const Cover traced_coarse = restrict_cover(coarse, subset);
    CHECK(traced_fine.size() <= fine.size());
    CHECK(is_refinement(traced_fine, traced_coarse));
  }
}

TEST_CASE("witness check: interval covers with chi twice the size") {
  Rng rng(2024);
  const std::size_t length = 20;
  std::vector<Cover> family;
  std::vector<std::uint64_t> chi;
  for (int i = 0; i < 5; ++i) {
    family.push_back(random_interval_cover(rng, length));
    chi.push_back(2 * family.back().size());
  }
  const GrowthWitness witness = make_growth_witness(1, Rational(1), family, chi, true);
  std::vector<std::vector<std::size_t>> tuples = {{0}, {1, 2}, {0, 1, 2, 3, 4}, {4, 4, 4}};
  for (const WitnessRow& row : witness_check(witness, tuples)) CHECK(row.pass);
}

TEST_CASE("witness check: products of two chains with chi = max, d = 2") {
  Rng rng(321);
  const std::size_t l1 = 9;
  const std::size_t l2 = 7;
  std::vector<Cover> family;
  std::vector<std::uint64_t> chi;
  for (int i = 0; i < 4; ++i) {
    const Cover a = random_interval_cover(rng, l1);
    const Cover b = random_interval_cover(rng, l2);
    family.push_back(product_cover(a, b));
    chi.push_back(std::max<std::uint64_t>(2 * a.size(), 2 * b.size()));
  }
  const GrowthWitness witness = make_growth_witness(2, Rational(1), family, chi, false);
  std::vector<std::vector<std::size_t>> tuples = {{0}, {1, 3}, {0, 1, 2, 3}};
  for (const WitnessRow& row : witness_check(witness, tuples)) CHECK(row.pass);
}

TEST_CASE("witness check: three independent two-cell covers fail") {
  std::vector<std::vector<std::size_t>> axis(6);
  for (std::size_t point = 0; point < 8; ++point) {
    for (std::size_t bit = 0; bit < 3; ++bit) {
      axis[2 * bit + (((point >> bit) & 1u) ^ 1u)].push_back(point);
    }
  }
  std::vector<Cover> family = {make_cover(8, {axis[0], axis[1]}),
                               make_cover(8, {axis[2], axis[3]}),
                               make_cover(8, {axis[4], axis[5]})};
  const GrowthWitness witness = make_growth_witness(1, Rational(1), family, {1, 1, 1}, false);
  const auto rows = witness_check(witness, {{0, 1, 2}});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].joint_size == 8);
  CHECK(rows[0].budget == "3");
  CHECK_FALSE(rows[0].pass);
}

TEST_CASE("degree zero witnesses echo finiteness") {
  // With d = 0 the budget is the constant M, so a witness passes on all
  // tuples iff every joint refinement stays within M.
  Rng rng(110);
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = 2 + rng.below(5);
    std::vector<Cover> family;
    for (int i = 0; i < 3; ++i) family.push_back(random_cover(rng, n, 3));
    const GrowthWitness witness =
        make_growth_witness(0, Rational(static_cast<std::int64_t>(1 + rng.below(6))), family,
                            {1, 1, 1}, false);
    std::vector<std::vector<std::size_t>> tuples = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2},
                                                    {0, 1, 2}};
    for (const WitnessRow& row : witness_check(witness, tuples)) {
      std::vector<Cover> chosen;
      for (std::size_t i : row.tuple) chosen.push_back(family[i]);
      const auto joint_size = static_cast<std::int64_t>(atoms_refinement(chosen).size());
      CHECK(row.pass == (Rational(joint_size) <= witness.m));
    }
  }
}

TEST_CASE("oscillation") {
  const std::vector<Rational> constant = {Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  CHECK(oscillation(constant, bitset_of(3, {0, 1, 2})) == Rational(0));

  const std::vector<Rational> halves = {Rational(0), Rational(1, 2)};
  CHECK(oscillation(halves, bitset_of(2, {0, 1})) == Rational(1, 2));

  const std::vector<Rational> thirds = {Rational(1, 4), Rational(1, 3), Rational(1, 2)};
  CHECK(oscillation(thirds, bitset_of(3, {0, 1, 2})) == Rational(1, 4));

  CHECK_THROWS_AS((void)oscillation(halves, Bitset(2)), std::invalid_argument);
}

TEST_CASE("good covers") {
  const Cover singletons = make_cover(2, {{0}, {1}});
  const std::vector<std::vector<Rational>> zero_one = {{Rational(0), Rational(1)}};
  CHECK(is_good(singletons, zero_one));
  CHECK_FALSE(is_good(make_cover(2, {{0, 1}}), zero_one));

  const Cover split = make_cover(3, {{0, 1}, {2}});
  const std::vector<std::vector<Rational>> f = {{Rational(0), Rational(1, 4), Rational(1)}};
  CHECK(is_good(split, f));
}

TEST_CASE("separated families") {
  const SeparatedInstance one = separated_family(1);
  CHECK(one.point_count == 2);
  REQUIRE(one.functions.size() == 1);
  CHECK(one.functions[0][0] == Rational(1));
  CHECK(one.functions[0][1] == Rational(0));

  const SeparatedInstance three = separated_family(3);
  CHECK(three.point_count == 4);
  CHECK(three.functions.size() == 3);
  CHECK(rat_abs(three.functions[2][2] - three.functions[2][3]) == Rational(1));

  CHECK_THROWS_AS((void)separated_family(0), std::invalid_argument);

  // the constructor rejects families missing the separation property
  CHECK_THROWS_AS((void)make_separated_instance(
                      2, {{Rational(0), Rational(1, 4)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)make_separated_instance(1, {{Rational(2)}}), std::invalid_argument);
}

TEST_CASE("grid instances") {
  const SeparatedInstance small = build_grid_instance(1, 1, 1);
  CHECK(small.point_count == 4);
  CHECK(small.functions.size() == 2);

  const SeparatedInstance paper_sized = build_grid_instance(2, 8, 4);
  CHECK(paper_sized.point_count == 405);  // (8+1)^2 * (4+1)
  CHECK(paper_sized.functions.size() == 2 * 8 + 4);

  CHECK_THROWS_AS((void)build_grid_instance(0, 1, 1), std::invalid_argument);
}

TEST_CASE("good cover floor") {
  const SeparatedInstance inst = build_grid_instance(1, 2, 2);
  std::vector<std::vector<std::size_t>> singleton_cells;
  for (std::size_t i = 0; i < inst.point_count; ++i) singleton_cells.push_back({i});
  const GoodCoverFloor equality =
      good_cover_floor(inst, make_cover(inst.point_count, singleton_cells));
  CHECK(equality.good);
  CHECK(equality.floor_respected);

  std::vector<std::size_t> everything;
  for (std::size_t i = 0; i < inst.point_count; ++i) everything.push_back(i);
  const GoodCoverFloor lump = good_cover_floor(inst, make_cover(inst.point_count, {everything}));
  CHECK_FALSE(lump.good);
  CHECK(lump.floor_respected);  // vacuous
}

TEST_CASE("counting checks reproduce the fixed instances") {
  const CountingCheck holds = counting_check({2, 1, 1, 4, 8});
  CHECK(holds.lhs == 400);
  CHECK(holds.rhs == 405);
  CHECK(holds.holds);

  const CountingCheck fails = counting_check({2, 1, 1, 4, 7});
  CHECK(fails.lhs == 324);
  CHECK(fails.rhs == 320);
  CHECK_FALSE(fails.holds);

  // p+1 <= (m*d)^d: dominated for every n
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    CHECK_FALSE(counting_check({2, 2, 1, 4, n}).holds);
  }

  CHECK_THROWS_AS((void)counting_check({2, 0, 1, 4, 7}), std::invalid_argument);
  CHECK_THROWS_AS((void)counting_check({9, 3, 3, 30, 1000000}), std::overflow_error);
}

TEST_CASE("minimal n search") {
  CHECK(find_min_n(2, 1, 1, 4, 1000) == 8);
  CHECK(find_min_n(1, 1, 1, 1, 1000) == 1);
  CHECK_FALSE(find_min_n(2, 2, 1, 4, 1000000).has_value());
}

TEST_CASE("counting soundness over a small parameter grid") {
  // Whenever p+1 > (m*d)^d the inequality eventually holds; 10^4 covers
  // this grid comfortably.
  for (std::uint64_t d = 1; d <= 3; ++d) {
    for (std::uint64_t m = 1; m <= 3; ++m) {
      for (std::uint64_t m1 = 1; m1 <= 3; ++m1) {
        for (std::uint64_t p = 1; p <= 30; ++p) {
          std::uint64_t md_pow = 1;
          for (std::uint64_t i = 0; i < d; ++i) md_pow *= m * d;
          if (p + 1 > md_pow) {
            CHECK(find_min_n(d, m, m1, p, 10000).has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("exponent fit") {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> linear;
  for (std::uint64_t b = 2; b <= 12; ++b) linear.emplace_back(b, b);
  CHECK(std::abs(exponent_fit(linear) - 1.0) < 1e-9);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> quadratic;
  for (std::uint64_t b = 2; b <= 12; ++b) quadratic.emplace_back(b, b * b);
  CHECK(std::abs(exponent_fit(quadratic) - 2.0) < 1e-9);

  CHECK_THROWS_AS((void)exponent_fit({{2, 2}, {3, 3}}), std::invalid_argument);
  CHECK_THROWS_AS((void)exponent_fit({{2, 2}, {2, 3}, {2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS((void)exponent_fit({{1, 2}, {3, 3}, {4, 4}}), std::invalid_argument);
}
