#include "freedim/algebras.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace freedim {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  unsigned __int128 wide = static_cast<unsigned __int128>(a) * b;
  if (wide > UINT64_MAX) throw std::overflow_error(std::string(what) + " exceeds 64 bits");
  return static_cast<std::uint64_t>(wide);
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, const char* what) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base, what);
  return out;
}

}  // namespace

Pseudotree::Pseudotree(std::vector<std::optional<std::size_t>> parent)
    : parent_(std::move(parent)) {
  const std::size_t n = parent_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (parent_[i] && *parent_[i] >= n) {
      throw std::invalid_argument("parent of node " + std::to_string(i) + " out of range");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t steps = 0;
    std::size_t cursor = i;
    while (parent_[cursor]) {
      cursor = *parent_[cursor];
      if (++steps > n) {
        // After n+1 hops the cursor is guaranteed to sit on the cycle.
        std::string cycle = std::to_string(cursor);
        std::size_t walker = *parent_[cursor];
        while (walker != cursor) {
          cycle += " -> " + std::to_string(walker);
          walker = *parent_[walker];
        }
        throw std::invalid_argument("parent map has a cycle: " + cycle);
      }
    }
  }
}

std::vector<std::size_t> Pseudotree::roots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    if (!parent_[i]) out.push_back(i);
  }
  return out;
}

bool Pseudotree::leq(std::size_t s, std::size_t t) const {
  std::size_t cursor = t;
  while (true) {
    if (cursor == s) return true;
    if (!parent_[cursor]) return false;
    cursor = *parent_[cursor];
  }
}

Bitset Pseudotree::down_set(std::size_t t) const {
  if (t >= node_count()) {
    throw std::out_of_range("node " + std::to_string(t) + " out of range");
  }
  Bitset bits(node_count());
  std::size_t cursor = t;
  while (true) {
    bits.set(cursor);
    if (!parent_[cursor]) break;
    cursor = *parent_[cursor];
  }
  return bits;
}

SetFamily chain_initial_segments(const ChainCuts& cuts) {
  SetFamily family;
  family.ground.size = cuts.length;
  family.members.reserve(cuts.cuts.size());
  for (std::size_t c : cuts.cuts) {
    if (c >= cuts.length) {
      throw std::out_of_range("cut " + std::to_string(c) + " out of range for chain of length " +
                              std::to_string(cuts.length));
    }
    Bitset segment(cuts.length);
    for (std::size_t i = 0; i <= c; ++i) segment.set(i);
    family.members.push_back(std::move(segment));
  }
  return family;
}

HeindorfResult heindorf_check(const SetFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Bitset& a = family.members[i];
      const Bitset& b = family.members[j];
      const bool comparable = a.is_subset_of(b) || b.is_subset_of(a);
      if (!comparable && a.intersects(b)) {
        return HeindorfResult{false, std::make_pair(i, j)};
      }
    }
  }
  return HeindorfResult{true, std::nullopt};
}

Pseudotree wellmet_closure(const Pseudotree& t) {
  const std::vector<std::size_t> roots = t.roots();
  if (roots.size() < 2) return t;
  // Finitely many nodes mean every chain of common lower bounds has a
  // maximum, so the only defect is a missing common lower bound: adjoin
  // one minimum under all roots.
  std::vector<std::optional<std::size_t>> parent = t.parents();
  const std::size_t fresh = parent.size();
  for (std::size_t r : roots) parent[r] = fresh;
  parent.push_back(std::nullopt);
  return Pseudotree(std::move(parent));
}

SetFamily initial_chains(const Pseudotree& t, const std::vector<std::size_t>& picks) {
  SetFamily family;
  family.ground.size = t.node_count();
  family.members.reserve(picks.size());
  for (std::size_t pick : picks) family.members.push_back(t.down_set(pick));
  return family;
}

IcaBoundReport ica_bound_report(const Pseudotree& t, const std::vector<std::size_t>& picks) {
  for (std::size_t pick : picks) {
    if (pick >= t.node_count()) {
      throw std::out_of_range("pick " + std::to_string(pick) + " out of range");
    }
  }
  const Pseudotree closed = wellmet_closure(t);
  const AtomPartition partition = atoms(initial_chains(closed, picks));
  IcaBoundReport report;
  report.atom_count = partition.size();
  report.budget = 2 * picks.size();
  report.holds = picks.empty() || report.atom_count <= report.budget;
  return report;
}

ProductFamily free_product(const std::vector<SetFamily>& factors) {
  ProductFamily product;
  product.factors = factors;

  std::uint64_t ground = 1;
  for (const SetFamily& factor : factors) {
    if (factor.ground.size == 0) {
      throw std::invalid_argument("free product requires nonempty factor grounds");
    }
    ground = checked_mul(ground, factor.ground.size, "product ground");
  }

  product.cylinders.ground.size = static_cast<std::size_t>(ground);
  std::uint64_t stride = 1;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const std::size_t radix = factors[f].ground.size;
    for (std::size_t m = 0; m < factors[f].size(); ++m) {
      Bitset cylinder(product.cylinders.ground.size);
      for (std::size_t point = 0; point < product.cylinders.ground.size; ++point) {
        const std::size_t digit = (point / stride) % radix;
        if (factors[f].members[m][digit]) cylinder.set(point);
      }
      product.cylinders.members.push_back(std::move(cylinder));
      product.member_origin.emplace_back(f, m);
    }
    stride *= radix;
  }
  return product;
}

ClassDCertificate certify_class_d(const SetFamily& family, std::uint64_t d) {
  ClassDCertificate cert;
  cert.d = d;
  if (d >= family.size()) {  // no (d+1)-subset exists
    cert.verified = true;
    return cert;
  }

  // Depth-first search in index order; independence is downward closed,
  // so the first (d+1)-set found is the lexicographically smallest one.
  const std::size_t want = static_cast<std::size_t>(d) + 1;
  std::vector<std::size_t> stack;
  auto dfs = [&](auto&& self, std::size_t start) -> bool {
    if (stack.size() == want) return true;
    for (std::size_t j = start; j < family.size(); ++j) {
      stack.push_back(j);
      if (is_independent(family, stack) && self(self, j + 1)) return true;
      stack.pop_back();
    }
    return false;
  };
  if (dfs(dfs, 0)) {
    cert.verified = false;
    cert.counterexample = stack;
  } else {
    cert.verified = true;
  }
  return cert;
}

std::vector<GrowthRow> growth_bound_report(const SetFamily& family, std::uint64_t d,
                                           const std::vector<std::vector<std::size_t>>& subsets) {
  std::vector<GrowthRow> rows;
  rows.reserve(subsets.size());
  for (const auto& subset : subsets) {
    SetFamily sub;
    sub.ground = family.ground;
    for (std::size_t index : subset) {
      if (index >= family.size()) {
        throw std::out_of_range("subset index " + std::to_string(index) + " out of range");
      }
      sub.members.push_back(family.members[index]);
    }
    GrowthRow row;
    row.subset = subset;
    row.family_size = subset.size();
    row.atom_count = atoms(sub).size();
    row.binomial = binomial_bound(subset.size(), d);
    row.polynomial =
        checked_mul(d + 1, checked_pow(subset.size(), d, "growth bound"), "growth bound");
    row.within = row.atom_count <= row.binomial &&
                 (subset.empty() || row.binomial <= row.polynomial);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace freedim
