#pragma once

// Order bounds on the minimum distance of one-point codes, the
// stabilization index m, and the three parity-check index families, all
// computed purely from the Weierstrass semigroup:
//
//   R~(t)  = {i : nu_i < 2t+1}   checks that correct any t errors
//   R~*(t) = {i : tau_i < t}     checks that correct t generic errors
//   R*(t)  = {0..max R~*(t)}     classical checks for t generic errors
//
// Minima over infinite index ranges resolve through the nu/tau tail
// formulas, so no truncation is involved.

#include <cstdint>
#include <optional>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

struct CheckSet {
  int64_t t = 0;
  std::vector<int64_t> indices;  // finite, ascending
};

struct BoundReport {
  // Smallest m with d_ord(C_i) = nu_{i+1} for all i >= m; equivalently the
  // last index where nu descends, and 0 when nu never descends (ordinary).
  int64_t m_actual = 0;
  // min{lambda_inv(c + c' - 2), lambda_inv(2d)}; meaningful for
  // non-ordinary semigroups only.
  std::optional<int64_t> m_formula;
  // min{c + c' - 2 - g, 2d - g}; m_actual reaches it exactly on
  // near-acute semigroups.
  std::optional<int64_t> m_upper;
  // d_ord(C_i) for i = 0 .. 2c - g - 2 (the span of the printed tables).
  std::vector<int64_t> d_ord;
  // Observational only: lambda(m) >= c + d - multiplicity. Reported, never
  // asserted.
  bool oneto_tamone_holds = true;
};

// d_ord(C_m) = min{nu_i : i > m}.
int64_t order_bound(const NumericalSemigroup& s, int64_t m);

BoundReport stabilization(const NumericalSemigroup& s);

CheckSet feng_rao_check_set(const NumericalSemigroup& s, int64_t t);        // R~
CheckSet generic_check_set(const NumericalSemigroup& s, int64_t t);         // R~*
CheckSet classical_generic_check_set(const NumericalSemigroup& s, int64_t t);  // R*

struct CheckSetComparisonRow {
  int64_t t = 0;
  int64_t feng_rao_size = 0;   // |R~(t)|
  int64_t generic_size = 0;    // |R~*(t)|
  int64_t classical_size = 0;  // |R*(t)|
  bool generic_equals_feng_rao = false;
  bool generic_equals_classical = false;
};

struct CheckSetComparison {
  std::vector<CheckSetComparisonRow> rows;  // t = 0..t_max
  // Equality for every t; decided on t <= c - g since both coincide beyond.
  bool feng_rao_equal_all_t = false;   // holds iff the semigroup is Arf
  bool classical_equal_all_t = false;  // holds iff the semigroup is ordinary
  int64_t equal_from = 0;              // c - g
};

CheckSetComparison compare_check_sets(const NumericalSemigroup& s, int64_t t_max);

}  // namespace nsg
