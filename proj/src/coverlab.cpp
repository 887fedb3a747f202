#include "freedim/coverlab.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
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

cpp_int cpp_pow(const cpp_int& base, std::uint64_t exp) {
  cpp_int out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out *= base;
  return out;
}

void require_common_ground(const std::vector<Cover>& covers) {
  for (std::size_t i = 1; i < covers.size(); ++i) {
    if (covers[i].ground != covers[0].ground) {
      throw std::invalid_argument("covers live on different ground sets");
    }
  }
}

// A cell as a closed interval [a, b]; throws unless contiguous.
std::pair<std::size_t, std::size_t> as_interval(const Bitset& cell) {
  const std::size_t a = cell.find_first();
  std::size_t b = a;
  for (std::size_t i = cell.find_next(a); i != Bitset::npos; i = cell.find_next(b)) {
    if (i != b + 1) throw std::invalid_argument("cell " + index_string(cell) + " is not an interval");
    b = i;
  }
  return {a, b};
}

Bitset interval_bits(std::size_t width, std::size_t a, std::size_t b) {
  Bitset bits(width);
  for (std::size_t i = a; i <= b; ++i) bits.set(i);
  return bits;
}

void append_unique(std::vector<Bitset>& cells, Bitset cell) {
  if (std::find(cells.begin(), cells.end(), cell) == cells.end()) {
    cells.push_back(std::move(cell));
  }
}

}  // namespace

Cover make_cover(GroundSet ground, std::vector<Bitset> cells) {
  Bitset covered(ground.size);
  for (const Bitset& cell : cells) {
    if (cell.size() != ground.size) {
      throw std::invalid_argument("cell width does not match the ground set");
    }
    if (cell.none()) throw std::invalid_argument("covers may not contain empty cells");
    covered |= cell;
  }
  if (!covered.all() && ground.size > 0) {
    Bitset missing = ~covered;
    throw std::invalid_argument("cells do not cover the ground set; missing " +
                                index_string(missing));
  }
  return Cover{ground, std::move(cells)};
}

Cover make_cover(std::size_t ground_size, const std::vector<std::vector<std::size_t>>& cells) {
  std::vector<Bitset> bits;
  bits.reserve(cells.size());
  for (const auto& cell : cells) bits.push_back(bitset_of(ground_size, cell));
  return make_cover(GroundSet{ground_size}, std::move(bits));
}

GrowthWitness make_growth_witness(std::uint64_t d, Rational m, std::vector<Cover> family,
                                  std::vector<std::uint64_t> chi, bool interval_type) {
  if (chi.size() != family.size()) {
    throw std::invalid_argument("chi must assign a value to every cover in the family");
  }
  for (std::uint64_t value : chi) {
    if (value == 0) throw std::invalid_argument("chi values must be positive");
  }
  if (m <= Rational(0)) throw std::invalid_argument("the witness constant M must be positive");
  require_common_ground(family);
  return GrowthWitness{d, m, std::move(family), std::move(chi), interval_type};
}

bool is_refinement(const Cover& fine, const Cover& coarse) {
  if (fine.ground != coarse.ground) {
    throw std::invalid_argument("refinement compares covers of one ground set");
  }
  for (const Bitset& cell : fine.cells) {
    bool inside = false;
    for (const Bitset& host : coarse.cells) {
      if (cell.is_subset_of(host)) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

Cover atoms_refinement(const std::vector<Cover>& covers) {
  if (covers.empty()) throw std::invalid_argument("joint refinement of an empty list");
  require_common_ground(covers);

  SetFamily pooled;
  pooled.ground = covers[0].ground;
  for (const Cover& cover : covers) {
    for (const Bitset& cell : cover.cells) pooled.members.push_back(cell);
  }

  std::vector<Bitset> cells;
  for (AtomCell& cell : atoms(pooled).cells) cells.push_back(std::move(cell.points));
  return Cover{pooled.ground, std::move(cells)};
}

Cover interval_joint_refinement(std::size_t chain_length, const std::vector<Cover>& covers) {
  if (covers.empty()) throw std::invalid_argument("joint refinement of an empty list");
  require_common_ground(covers);
  if (covers[0].ground.size != chain_length) {
    throw std::invalid_argument("covers do not live on the stated chain");
  }
  if (chain_length == 0) return Cover{GroundSet{0}, {}};

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> as_intervals;
  std::vector<std::size_t> endpoints;
  for (const Cover& cover : covers) {
    auto& list = as_intervals.emplace_back();
    for (const Bitset& cell : cover.cells) {
      auto iv = as_interval(cell);
      endpoints.push_back(iv.first);
      endpoints.push_back(iv.second);
      list.push_back(iv);
    }
  }
  std::sort(endpoints.begin(), endpoints.end());
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());

  const auto fits_everywhere = [&](std::size_t a, std::size_t b) {
    for (const auto& list : as_intervals) {
      bool inside = false;
      for (const auto& iv : list) {
        if (iv.first <= a && b <= iv.second) {
          inside = true;
          break;
        }
      }
      if (!inside) return false;
    }
    return true;
  };

  // Cells between consecutive endpoints, sharing endpoints. A piece can
  // fail to refine only where some input cover breaks between adjacent
  // points; the piece then shrinks to a singleton and the next piece (or
  // a final singleton) keeps the chain covered.
  std::vector<Bitset> cells;
  if (endpoints.size() == 1) {
    cells.push_back(interval_bits(chain_length, endpoints[0], endpoints[0]));
  }
  for (std::size_t i = 0; i + 1 < endpoints.size(); ++i) {
    const std::size_t a = endpoints[i];
    const std::size_t b = endpoints[i + 1];
    if (fits_everywhere(a, b)) {
      cells.push_back(interval_bits(chain_length, a, b));
    } else {
      cells.push_back(interval_bits(chain_length, a, a));
      if (i + 2 == endpoints.size()) cells.push_back(interval_bits(chain_length, b, b));
    }
  }
  return make_cover(GroundSet{chain_length}, std::move(cells));
}

Cover product_cover(const Cover& c1, const Cover& c2) {
  const std::size_t n1 = c1.ground.size;
  const std::size_t n2 = c2.ground.size;
  GroundSet ground{n1 * n2};
  std::vector<Bitset> cells;
  cells.reserve(c1.size() * c2.size());
  for (const Bitset& a : c1.cells) {
    for (const Bitset& b : c2.cells) {
      Bitset rect(ground.size);
      for (std::size_t y = b.find_first(); y != Bitset::npos; y = b.find_next(y)) {
        for (std::size_t x = a.find_first(); x != Bitset::npos; x = a.find_next(x)) {
          rect.set(x + n1 * y);
        }
      }
      cells.push_back(std::move(rect));
    }
  }
  return Cover{ground, std::move(cells)};
}

Cover push_cover(const std::vector<std::size_t>& point_map, std::size_t target_size,
                 const Cover& c) {
  if (point_map.size() != c.ground.size) {
    throw std::invalid_argument("point map must assign a target to every source point");
  }
  Bitset hit(target_size);
  for (std::size_t value : point_map) {
    if (value >= target_size) {
      throw std::invalid_argument("point map value " + std::to_string(value) + " out of range");
    }
    hit.set(value);
  }
  if (!hit.all() && target_size > 0) {
    throw std::invalid_argument("point map is not surjective; " + index_string(~hit) +
                                " is never hit");
  }

  std::vector<Bitset> cells;
  for (const Bitset& cell : c.cells) {
    Bitset image(target_size);
    for (std::size_t i = cell.find_first(); i != Bitset::npos; i = cell.find_next(i)) {
      image.set(point_map[i]);
    }
    append_unique(cells, std::move(image));
  }
  return Cover{GroundSet{target_size}, std::move(cells)};
}

Cover restrict_cover(const Cover& c, const Bitset& subset) {
  if (subset.size() != c.ground.size) {
    throw std::invalid_argument("subset width does not match the ground set");
  }
  if (subset.none()) throw std::invalid_argument("restriction to the empty subset");

  // Compact reindexing: the k-th smallest subset point becomes point k.
  std::vector<std::size_t> position(c.ground.size, 0);
  std::size_t next = 0;
  for (std::size_t i = subset.find_first(); i != Bitset::npos; i = subset.find_next(i)) {
    position[i] = next++;
  }

  std::vector<Bitset> cells;
  for (const Bitset& cell : c.cells) {
    Bitset trace = cell & subset;
    if (trace.none()) continue;
    Bitset compact(next);
    for (std::size_t i = trace.find_first(); i != Bitset::npos; i = trace.find_next(i)) {
      compact.set(position[i]);
    }
    append_unique(cells, std::move(compact));
  }
  return Cover{GroundSet{next}, std::move(cells)};
}

std::vector<WitnessRow> witness_check(const GrowthWitness& w,
                                      const std::vector<std::vector<std::size_t>>& tuples) {
  std::vector<WitnessRow> rows;
  rows.reserve(tuples.size());
  for (const auto& tuple : tuples) {
    if (tuple.empty()) throw std::invalid_argument("witness tuples must be nonempty");
    std::vector<Cover> chosen;
    cpp_int chi_sum = 0;
    for (std::size_t index : tuple) {
      if (index >= w.family.size()) {
        throw std::out_of_range("tuple index " + std::to_string(index) + " out of range");
      }
      chosen.push_back(w.family[index]);
      chi_sum += w.chi[index];
    }

    const Cover joint = w.interval_type
                            ? interval_joint_refinement(w.family[0].ground.size, chosen)
                            : atoms_refinement(chosen);

    // budget = M * (sum chi)^d, compared exactly by cross-multiplication.
    const cpp_int budget_num = cpp_int(w.m.numerator()) * cpp_pow(chi_sum, w.d);
    const cpp_int budget_den = w.m.denominator();

    WitnessRow row;
    row.tuple = tuple;
    row.joint_size = joint.size();
    const cpp_int reduced_gcd = boost::multiprecision::gcd(budget_num, budget_den);
    const cpp_int num = budget_num / reduced_gcd;
    const cpp_int den = budget_den / reduced_gcd;
    row.budget = den == 1 ? num.str() : num.str() + "/" + den.str();
    row.pass = cpp_int(row.joint_size) * budget_den <= budget_num;
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational oscillation(const std::vector<Rational>& f, const Bitset& cell) {
  if (cell.none()) throw std::invalid_argument("oscillation over an empty cell");
  std::size_t i = cell.find_first();
  if (i >= f.size()) throw std::out_of_range("cell point beyond the function domain");
  Rational lo = f[i];
  Rational hi = f[i];
  for (i = cell.find_next(i); i != Bitset::npos; i = cell.find_next(i)) {
    if (i >= f.size()) throw std::out_of_range("cell point beyond the function domain");
    lo = std::min(lo, f[i]);
    hi = std::max(hi, f[i]);
  }
  return hi - lo;
}

bool is_good(const Cover& c, const std::vector<std::vector<Rational>>& functions) {
  for (const auto& f : functions) {
    if (f.size() != c.ground.size) {
      throw std::invalid_argument("function is not defined on the whole ground set");
    }
    for (const Bitset& cell : c.cells) {
      if (oscillation(f, cell) > kGoodOscillation) return false;
    }
  }
  return true;
}

SeparatedInstance make_separated_instance(std::size_t point_count,
                                          std::vector<std::vector<Rational>> functions) {
  for (const auto& f : functions) {
    if (f.size() != point_count) {
      throw std::invalid_argument("function is not defined on the whole point set");
    }
    for (const Rational& value : f) {
      if (value < Rational(0) || value > Rational(1)) {
        throw std::invalid_argument("function values must lie in [0,1]");
      }
    }
  }
  for (std::size_t j = 0; j < point_count; ++j) {
    for (std::size_t k = j + 1; k < point_count; ++k) {
      bool separated = false;
      for (const auto& f : functions) {
        if (rat_abs(f[j] - f[k]) >= kSeparationGap) {
          separated = true;
          break;
        }
      }
      if (!separated) {
        throw std::invalid_argument("points " + std::to_string(j) + " and " + std::to_string(k) +
                                    " are not 1/2-separated by any function");
      }
    }
  }
  return SeparatedInstance{point_count, std::move(functions)};
}

SeparatedInstance separated_family(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("separated_family requires n >= 1");
  const std::size_t points = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<Rational>> functions;
  functions.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> f(points, Rational(0));
    f[k] = Rational(1);
    functions.push_back(std::move(f));
  }
  return make_separated_instance(points, std::move(functions));
}

SeparatedInstance build_grid_instance(std::uint64_t d, std::uint64_t n, std::uint64_t p) {
  if (d == 0 || n == 0 || p == 0) {
    throw std::invalid_argument("build_grid_instance requires d, n, p >= 1");
  }
  cpp_int total = cpp_pow(cpp_int(n + 1), d) * (p + 1);
  const std::size_t point_count = static_cast<std::size_t>(narrow_u64(total, "grid size"));

  // Points in mixed radix: d coordinates of radix n+1, then the last
  // coordinate of radix p+1 as the most significant digit.
  const auto digit = [&](std::size_t point, std::uint64_t axis) {
    std::size_t value = point;
    for (std::uint64_t i = 0; i < axis; ++i) value /= (n + 1);
    return axis < d ? value % (n + 1) : value;
  };

  std::vector<std::vector<Rational>> functions;
  functions.reserve(static_cast<std::size_t>(d * n + p));
  for (std::uint64_t axis = 0; axis < d; ++axis) {
    for (std::uint64_t k = 0; k < n; ++k) {
      std::vector<Rational> f(point_count, Rational(0));
      for (std::size_t point = 0; point < point_count; ++point) {
        if (digit(point, axis) == k) f[point] = Rational(1);
      }
      functions.push_back(std::move(f));
    }
  }
  for (std::uint64_t i = 0; i < p; ++i) {
    std::vector<Rational> h(point_count, Rational(0));
    for (std::size_t point = 0; point < point_count; ++point) {
      if (digit(point, d) == i) h[point] = Rational(1);
    }
    functions.push_back(std::move(h));
  }
  return make_separated_instance(point_count, std::move(functions));
}

GoodCoverFloor good_cover_floor(const SeparatedInstance& inst, const Cover& c) {
  if (c.ground.size != inst.point_count) {
    throw std::invalid_argument("cover does not live on the instance's point set");
  }
  GoodCoverFloor result;
  result.good = is_good(c, inst.functions);
  if (result.good) {
    // Separation forces oscillation >= 1/2 on any two-point cell, so a
    // good cover has singleton cells and at least point_count of them.
    bool singletons = true;
    for (const Bitset& cell : c.cells) {
      if (cell.count() != 1) {
        singletons = false;
        break;
      }
    }
    result.floor_respected = singletons && c.size() >= inst.point_count;
  }
  return result;
}

CountingCheck counting_check(const CountingParams& params) {
  if (params.d == 0 || params.m == 0 || params.m1 == 0 || params.p == 0) {
    throw std::invalid_argument("counting parameters d, m, m1, p must be >= 1");
  }
  const cpp_int lhs =
      cpp_pow(cpp_int(params.n) * params.d * params.m + cpp_int(params.p) * params.m1, params.d);
  const cpp_int rhs = cpp_pow(cpp_int(params.n) + 1, params.d) * (params.p + 1);
  CountingCheck check;
  check.holds = lhs < rhs;
  check.lhs = narrow_u64(lhs, "counting lhs");
  check.rhs = narrow_u64(rhs, "counting rhs");
  return check;
}

std::optional<std::uint64_t> find_min_n(std::uint64_t d, std::uint64_t m, std::uint64_t m1,
                                        std::uint64_t p, std::uint64_t limit) {
  if (d == 0 || m == 0 || m1 == 0 || p == 0) {
    throw std::invalid_argument("counting parameters d, m, m1, p must be >= 1");
  }
  if (limit == 0) throw std::invalid_argument("find_min_n requires limit >= 1");
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const cpp_int lhs = cpp_pow(cpp_int(n) * d * m + cpp_int(p) * m1, d);
    const cpp_int rhs = cpp_pow(cpp_int(n) + 1, d) * (p + 1);
    if (lhs < rhs) return n;
  }
  return std::nullopt;
}

double exponent_fit(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& samples) {
  if (samples.size() < 3) throw std::invalid_argument("exponent_fit requires >= 3 samples");
  for (const auto& [budget, size] : samples) {
    if (budget < 2) throw std::invalid_argument("exponent_fit requires budgets >= 2");
    if (size < 1) throw std::invalid_argument("exponent_fit requires joint sizes >= 1");
  }
  const bool degenerate = std::all_of(samples.begin(), samples.end(), [&](const auto& s) {
    return s.first == samples.front().first;
  });
  if (degenerate) throw std::invalid_argument("exponent_fit needs at least two distinct budgets");

  double mean_x = 0;
  double mean_y = 0;
  for (const auto& [budget, size] : samples) {
    mean_x += std::log(static_cast<double>(budget));
    mean_y += std::log(static_cast<double>(size));
  }
  mean_x /= static_cast<double>(samples.size());
  mean_y /= static_cast<double>(samples.size());

  double cov = 0;
  double var = 0;
  for (const auto& [budget, size] : samples) {
    const double dx = std::log(static_cast<double>(budget)) - mean_x;
    const double dy = std::log(static_cast<double>(size)) - mean_y;
    cov += dx * dy;
    var += dx * dx;
  }
  return cov / var;
}

}  // namespace freedim
