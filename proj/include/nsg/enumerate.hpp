#pragma once

// Exhaustive enumeration of numerical semigroups by genus.
//
// The tree is rooted at N0; the children of a semigroup are obtained by
// removing, one at a time, its generators that are >= the conductor. Every
// semigroup of genus g appears exactly once at depth g. Nodes carry a
// fixed-width membership bitmap: a node of genus g needs conductor +
// multiplicity <= 4(g+1) bits, so the compiled-in width of 4(kGenusLimit+1)
// bits covers every walk up to kGenusLimit.
//
// Parallel runs split the tree at a cutoff depth into independent subtree
// tasks; per-task counts are summed associatively, so results do not
// depend on worker count or scheduling.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

inline constexpr int kGenusLimit = 60;

struct WalkOptions {
  int workers = 0;        // 0: hardware concurrency
  int cutoff_depth = 14;  // subtree-task depth for parallel runs
  bool serialize_visitor = false;
  bool progress = false;  // task progress on stderr
};

struct ClassCounts {
  uint64_t ordinary = 0;
  uint64_t symmetric = 0;
  uint64_t pseudo_symmetric = 0;
  uint64_t irreducible = 0;
  uint64_t arf = 0;
  uint64_t acute = 0;
  uint64_t near_acute = 0;
  uint64_t sparse = 0;
  uint64_t hyperelliptic = 0;
  uint64_t interval_generated = 0;
};

struct GenusCensus {
  std::vector<uint64_t> counts;                    // n_0 .. n_G
  std::optional<std::vector<ClassCounts>> classes;  // per genus, when requested
};

// Exact n_g for g = 0..genus. Deterministic for any worker count.
GenusCensus count_by_genus(int genus, const WalkOptions& options = {});

// Census with per-classification sub-counts (slower; classifies each node).
GenusCensus count_by_genus_with_classes(int genus, const WalkOptions& options = {});

// Delivers every semigroup of genus <= genus exactly once, in unspecified
// order. With several workers the visitor runs concurrently unless
// serialize_visitor is set.
void walk(int genus,
          const std::function<void(const NumericalSemigroup&)>& visitor,
          const WalkOptions& options = {});

// Checks e >= c / (c - g) on every semigroup of genus <= genus and returns
// the offenders (expected: none).
std::vector<NumericalSemigroup> verify_wilf(int genus,
                                            const WalkOptions& options = {});

struct RatioRow {
  int genus = 0;
  uint64_t count = 0;
  std::optional<uint64_t> fibonacci_sum;  // n_{g-1} + n_{g-2}
  std::optional<double> fibonacci_ratio;  // (n_{g-1} + n_{g-2}) / n_g
  std::optional<double> growth_ratio;     // n_g / n_{g-1}
  // n_g >= n_{g-1} + n_{g-2}: reported per row, never asserted.
  std::optional<bool> fibonacci_holds;
};

std::vector<RatioRow> ratio_report(const GenusCensus& census);

}  // namespace nsg
