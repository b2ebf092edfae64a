#include "nsg/coding.hpp"

#include <algorithm>

#include "nsg/sequences.hpp"

namespace nsg {

int64_t order_bound(const NumericalSemigroup& s, int64_t m) {
  if (m < 0) throw InvalidParam("order_bound: m must be non-negative");
  // nu is increasing from 2c - g - 1 on, so the minimum over (m, inf)
  // is attained by max(m + 1, 2c - g - 1).
  const int64_t hi = std::max(m + 1, 2 * s.conductor() - s.genus() - 1);
  int64_t best = nu_at(s, hi);
  for (int64_t i = m + 1; i < hi; ++i) best = std::min(best, nu_at(s, i));
  return best;
}

BoundReport stabilization(const NumericalSemigroup& s) {
  BoundReport r;
  const int64_t c = s.conductor();
  const int64_t g = s.genus();

  // Descents of nu stop before the repeated value at 2c - g - 2.
  const int64_t scan_end = std::max<int64_t>(0, 2 * c - g - 1);
  const auto nu = nu_prefix(s, scan_end);
  r.m_actual = 0;
  for (int64_t i = 0; i + 1 <= scan_end; ++i) {
    if (nu[static_cast<size_t>(i)] > nu[static_cast<size_t>(i + 1)]) r.m_actual = i;
  }

  const bool ordinary = s.is_trivial() || g == c - 1;
  if (!ordinary) {
    const auto p = profile(s);
    const int64_t d = *p.dominant;
    const int64_t cp = *p.subconductor;
    r.m_formula = std::min(s.lambda_inv(c + cp - 2), s.lambda_inv(2 * d));
    r.m_upper = std::min(c + cp - 2 - g, 2 * d - g);
    r.oneto_tamone_holds = s.lambda(r.m_actual) >= c + d - s.multiplicity();
  }

  const int64_t span = std::max<int64_t>(0, 2 * c - g - 2);
  r.d_ord.reserve(static_cast<size_t>(span + 1));
  for (int64_t i = 0; i <= span; ++i) r.d_ord.push_back(order_bound(s, i));
  return r;
}

namespace {

// Materializes {i : value(i) < bound}. Both nu and tau eventually exceed
// any bound at indices beyond max(2c - g - 1, 2t + g), so the scan is
// finite and exact.
template <typename ValueAt>
CheckSet materialize(const NumericalSemigroup& s, int64_t t, int64_t scan_to,
                     ValueAt&& value, int64_t bound) {
  CheckSet cs;
  cs.t = t;
  for (int64_t i = 0; i <= scan_to; ++i) {
    if (value(s, i) < bound) cs.indices.push_back(i);
  }
  return cs;
}

int64_t scan_limit(const NumericalSemigroup& s, int64_t t) {
  return std::max(2 * s.conductor() - s.genus() - 1, 2 * t + s.genus());
}

}  // namespace

CheckSet feng_rao_check_set(const NumericalSemigroup& s, int64_t t) {
  if (t < 0) throw InvalidParam("check set: t must be non-negative");
  return materialize(s, t, scan_limit(s, t), nu_at, 2 * t + 1);
}

CheckSet generic_check_set(const NumericalSemigroup& s, int64_t t) {
  if (t < 0) throw InvalidParam("check set: t must be non-negative");
  return materialize(s, t, scan_limit(s, t), tau_at, t);
}

CheckSet classical_generic_check_set(const NumericalSemigroup& s, int64_t t) {
  CheckSet generic = generic_check_set(s, t);
  CheckSet cs;
  cs.t = t;
  if (!generic.indices.empty()) {
    const int64_t m_t = generic.indices.back();
    cs.indices.reserve(static_cast<size_t>(m_t + 1));
    for (int64_t i = 0; i <= m_t; ++i) cs.indices.push_back(i);
  }
  return cs;
}

CheckSetComparison compare_check_sets(const NumericalSemigroup& s, int64_t t_max) {
  if (t_max < 1) throw InvalidParam("compare_check_sets: t_max must be >= 1");
  CheckSetComparison cmp;
  cmp.equal_from = s.conductor() - s.genus();

  auto row_of = [&](int64_t t) {
    CheckSetComparisonRow row;
    row.t = t;
    const auto fr = feng_rao_check_set(s, t);
    const auto gen = generic_check_set(s, t);
    const auto cls = classical_generic_check_set(s, t);
    row.feng_rao_size = static_cast<int64_t>(fr.indices.size());
    row.generic_size = static_cast<int64_t>(gen.indices.size());
    row.classical_size = static_cast<int64_t>(cls.indices.size());
    row.generic_equals_feng_rao = gen.indices == fr.indices;
    row.generic_equals_classical = gen.indices == cls.indices;
    return row;
  };

  for (int64_t t = 0; t <= t_max; ++t) cmp.rows.push_back(row_of(t));

  // Both families agree with R~* from t = c - g on, so "for all t" is
  // decided by the finite range below it.
  cmp.feng_rao_equal_all_t = true;
  cmp.classical_equal_all_t = true;
  for (int64_t t = 0; t <= cmp.equal_from; ++t) {
    const auto row = t <= t_max ? cmp.rows[static_cast<size_t>(t)] : row_of(t);
    cmp.feng_rao_equal_all_t &= row.generic_equals_feng_rao;
    cmp.classical_equal_all_t &= row.generic_equals_classical;
  }
  return cmp;
}

}  // namespace nsg
