#pragma once

// Boolean classification predicates and the class-inclusion relations
// between them (ordinary, symmetric, pseudo-symmetric, Arf, acute, ...).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

struct ClassificationReport {
  bool trivial = false;
  bool ordinary = false;
  bool symmetric = false;         // c = 2g
  bool pseudo_symmetric = false;  // c = 2g - 1
  bool irreducible = false;       // symmetric or pseudo-symmetric
  bool arf = false;               // l_i + l_j - l_k in S for i >= j >= k
  bool acute = false;             // ordinary, or c - d <= c' - d'
  bool near_acute = false;        // c - d <= d - d' or 2d - c + 1 not in S
  bool sparse = false;            // no two consecutive members below c
  bool hyperelliptic = false;     // 2 in S, i.e. generated by 2 and an odd
  bool interval_generated = false;
  // Minimal witness (i = multiplicity) when interval_generated holds.
  std::optional<std::pair<int64_t, int64_t>> interval;
};

ClassificationReport classify(const NumericalSemigroup& s);

// Re-derives every inclusion of the class diagram on `s` and returns the
// violated ones (empty for every actual numerical semigroup). Used as a
// property-test harness over full enumerations.
std::vector<std::string> check_inclusions(const NumericalSemigroup& s);

}  // namespace nsg
