#include "nsg/coding.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "nsg/classify.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/sequences.hpp"

using nsg::NumericalSemigroup;

namespace {

// Brute recomputation with a window twice as large; the public routines
// must not depend on their scan horizon.
int64_t order_bound_wide(const NumericalSemigroup& s, int64_t m) {
  const int64_t hi = 2 * (2 * s.conductor() - s.genus() + 2) + 2 * m + 4;
  int64_t best = nsg::nu_at(s, m + 1);
  for (int64_t i = m + 1; i <= hi; ++i) best = std::min(best, nsg::nu_at(s, i));
  return best;
}

std::vector<int64_t> check_set_wide(const NumericalSemigroup& s, int64_t t,
                                    bool use_tau) {
  const int64_t hi = 2 * (2 * s.conductor() - s.genus() + 2) + 4 * t + 8;
  std::vector<int64_t> out;
  for (int64_t i = 0; i <= hi; ++i) {
    const int64_t v = use_tau ? nsg::tau_at(s, i) : nsg::nu_at(s, i);
    if (v < (use_tau ? t : 2 * t + 1)) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("order bound examples") {
  auto klein = NumericalSemigroup::klein(3);
  const std::vector<int64_t> expect = {2, 2, 2, 2, 4, 4};
  for (int64_t i = 0; i < 6; ++i) CHECK(nsg::order_bound(klein, i) == expect[i]);

  auto hermitian = NumericalSemigroup::hermitian(4);
  CHECK(nsg::order_bound(hermitian, 9) == 5);
  CHECK(nsg::order_bound(hermitian, 10) == 8);

  auto gs = NumericalSemigroup::garcia_stichtenoth(2, 5);
  CHECK(nsg::order_bound(gs, 18) == 4);
}

TEST_CASE("order bound equals the doubled-window recomputation") {
  for (auto s : {NumericalSemigroup::klein(3), NumericalSemigroup::hermitian(4),
                 NumericalSemigroup::from_generators({6, 7, 8, 17}),
                 NumericalSemigroup::ordinary(5), NumericalSemigroup::trivial()}) {
    for (int64_t m = 0; m < 2 * s.conductor() + 6; ++m) {
      CHECK(nsg::order_bound(s, m) == order_bound_wide(s, m));
    }
  }
}

TEST_CASE("order bound hits nu_{i+1} from 2c-g-2 on") {
  for (auto s : {NumericalSemigroup::hermitian(4),
                 NumericalSemigroup::from_generators({6, 7, 8, 17}),
                 NumericalSemigroup::klein(3)}) {
    const int64_t start = 2 * s.conductor() - s.genus() - 2;
    for (int64_t i = start; i < start + 8; ++i) {
      CHECK(nsg::order_bound(s, i) == nsg::nu_at(s, i + 1));
    }
  }
}

TEST_CASE("stabilization: klein(3)") {
  auto s = NumericalSemigroup::klein(3);
  const auto r = nsg::stabilization(s);
  CHECK(r.m_actual == 3);
  REQUIRE(r.m_formula.has_value());
  CHECK(*r.m_formula == 3);
  CHECK(s.lambda_inv(s.conductor() + 3 - 2) == 3);  // lambda_inv(c + c' - 2)
  CHECK(s.lambda_inv(2 * 3) == 3);                  // lambda_inv(2d)
}

TEST_CASE("stabilization: hermitian(4)") {
  auto s = NumericalSemigroup::hermitian(4);
  const auto r = nsg::stabilization(s);
  CHECK(r.m_actual == 12);
  CHECK(r.m_formula == 12);
  // symmetric: min{c+c'-2, 2d} = c+c'-2 = 2c-2-lambda_1
  const auto p = nsg::profile(s);
  CHECK(s.conductor() + *p.subconductor - 2 == 18);
  CHECK(2 * s.conductor() - 2 - s.multiplicity() == 18);
}

TEST_CASE("stabilization: garcia_stichtenoth(2,5)") {
  auto s = NumericalSemigroup::garcia_stichtenoth(2, 5);
  const auto r = nsg::stabilization(s);
  CHECK(r.m_actual == 19);
  CHECK(r.m_formula == 19);
  // arf: the minimum is 2d
  const auto p = nsg::profile(s);
  CHECK(s.lambda_inv(2 * *p.dominant) == 19);
}

TEST_CASE("stabilization: ordinary and trivial give m = 0") {
  for (auto s : {NumericalSemigroup::ordinary(5), NumericalSemigroup::trivial()}) {
    const auto r = nsg::stabilization(s);
    CHECK(r.m_actual == 0);
    CHECK(!r.m_formula.has_value());
    CHECK(!r.m_upper.has_value());
  }
}

TEST_CASE("per-class minimum of {c+c'-2, 2d}") {
  // symmetric or interval-generated: minimum at c+c'-2;
  // pseudo-symmetric: c+c'-2; arf: 2d
  auto check_min = [](const NumericalSemigroup& s, bool expect_cc) {
    const auto p = nsg::profile(s);
    const int64_t cc = s.conductor() + *p.subconductor - 2;
    const int64_t dd = 2 * *p.dominant;
    if (expect_cc) {
      CHECK(std::min(cc, dd) == cc);
    } else {
      CHECK(std::min(cc, dd) == dd);
    }
  };
  check_min(NumericalSemigroup::hermitian(4), true);
  check_min(NumericalSemigroup::norm_trace(2, 3), true);
  check_min(NumericalSemigroup::klein(3), true);
  check_min(NumericalSemigroup::garcia_stichtenoth(2, 5), false);
  check_min(NumericalSemigroup::hyperelliptic(4), false);
}

TEST_CASE("nu of ordinary semigroups") {
  for (int64_t c : {2, 4, 7}) {
    auto s = NumericalSemigroup::ordinary(c);
    const int64_t m = s.multiplicity();
    for (int64_t i = 0; i < 3 * c + 6; ++i) {
      int64_t expect;
      if (i == 0) {
        expect = 1;
      } else if (i <= m) {
        expect = 2;
      } else {
        expect = i - m + 2;
      }
      CHECK(nsg::nu_at(s, i) == expect);
    }
  }
}

TEST_CASE("feng-rao check sets for <4,5>") {
  auto s = NumericalSemigroup::from_generators({4, 5});
  CHECK(nsg::feng_rao_check_set(s, 1).indices == std::vector<int64_t>{0, 1, 2});
  CHECK(nsg::feng_rao_check_set(s, 2).indices ==
        std::vector<int64_t>{0, 1, 2, 3, 4, 5, 6, 9});
  CHECK(nsg::feng_rao_check_set(s, 0).indices.empty());
}

TEST_CASE("generic check sets for <4,5>") {
  auto s = NumericalSemigroup::from_generators({4, 5});
  CHECK(nsg::generic_check_set(s, 2).indices ==
        std::vector<int64_t>{0, 1, 2, 3, 4, 6});
  CHECK(nsg::classical_generic_check_set(s, 2).indices ==
        std::vector<int64_t>{0, 1, 2, 3, 4, 5, 6});
  CHECK(nsg::generic_check_set(s, 1).indices == std::vector<int64_t>{0, 1, 2});
  CHECK(nsg::classical_generic_check_set(s, 1).indices ==
        std::vector<int64_t>{0, 1, 2});
  CHECK(nsg::generic_check_set(s, 0).indices.empty());
  CHECK(nsg::classical_generic_check_set(s, 0).indices.empty());
}

TEST_CASE("check sets equal the doubled-window recomputation") {
  for (auto s : {NumericalSemigroup::from_generators({4, 5}),
                 NumericalSemigroup::klein(3),
                 NumericalSemigroup::garcia_stichtenoth(2, 4),
                 NumericalSemigroup::trivial()}) {
    for (int64_t t = 0; t <= 8; ++t) {
      CHECK(nsg::feng_rao_check_set(s, t).indices == check_set_wide(s, t, false));
      CHECK(nsg::generic_check_set(s, t).indices == check_set_wide(s, t, true));
    }
  }
}

TEST_CASE("comparison table") {
  auto s45 = NumericalSemigroup::from_generators({4, 5});
  const auto cmp = nsg::compare_check_sets(s45, 3);
  REQUIRE(cmp.rows.size() == 4);
  CHECK(cmp.rows[2].generic_size == 6);
  CHECK(cmp.rows[2].feng_rao_size == 8);
  CHECK(!cmp.rows[2].generic_equals_feng_rao);
  CHECK(!cmp.feng_rao_equal_all_t);  // <4,5> is not arf
  CHECK(!cmp.classical_equal_all_t);
  CHECK(cmp.equal_from == 6);

  // klein is arf: R~* = R~ for every t
  const auto klein_cmp = nsg::compare_check_sets(NumericalSemigroup::klein(3), 4);
  CHECK(klein_cmp.feng_rao_equal_all_t);
  for (const auto& row : klein_cmp.rows) CHECK(row.generic_equals_feng_rao);

  // ordinary: R~* = R* for every t
  const auto ord_cmp = nsg::compare_check_sets(NumericalSemigroup::ordinary(3), 5);
  CHECK(ord_cmp.classical_equal_all_t);
  for (const auto& row : ord_cmp.rows) CHECK(row.generic_equals_classical);

  CHECK_THROWS_AS(nsg::compare_check_sets(s45, 0), nsg::InvalidParam);
}

TEST_CASE("containments and tail equalities") {
  for (auto s : {NumericalSemigroup::from_generators({4, 5}),
                 NumericalSemigroup::from_generators({6, 7, 8, 17}),
                 NumericalSemigroup::klein(3),
                 NumericalSemigroup::garcia_stichtenoth(2, 4)}) {
    const int64_t cg = s.conductor() - s.genus();
    for (int64_t t = 0; t <= cg + 3; ++t) {
      const auto fr = nsg::feng_rao_check_set(s, t).indices;
      const auto gen = nsg::generic_check_set(s, t).indices;
      const auto cls = nsg::classical_generic_check_set(s, t).indices;
      CHECK(std::includes(fr.begin(), fr.end(), gen.begin(), gen.end()));
      CHECK(std::includes(cls.begin(), cls.end(), gen.begin(), gen.end()));
      if (t >= cg) {
        CHECK(gen == fr);
        CHECK(gen == cls);
      }
    }
  }
}

TEST_CASE("a strict feng-rao improvement exists exactly for non-ordinary") {
  // With m(delta) = max{i : nu_i < delta}, the check set {i : nu_i < delta}
  // is a proper subset of {0..m(delta)} for some delta iff nu descends
  // somewhere, i.e. iff the semigroup is not ordinary.
  for (auto s : {NumericalSemigroup::from_generators({4, 5}),
                 NumericalSemigroup::klein(3),
                 NumericalSemigroup::from_generators({6, 7, 8, 17}),
                 NumericalSemigroup::ordinary(4), NumericalSemigroup::ordinary(2),
                 NumericalSemigroup::trivial()}) {
    const bool ordinary = s.is_trivial() || s.genus() == s.conductor() - 1;
    const int64_t hi = 2 * s.conductor() - s.genus() + 4;
    bool improvement = false;
    for (int64_t delta = 1; delta <= nsg::nu_at(s, hi); ++delta) {
      std::vector<int64_t> below;
      int64_t m_delta = -1;
      for (int64_t i = 0; i <= hi; ++i) {
        if (nsg::nu_at(s, i) < delta) {
          below.push_back(i);
          m_delta = i;
        }
      }
      if (m_delta >= 0 && static_cast<int64_t>(below.size()) != m_delta + 1) {
        improvement = true;
      }
    }
    CHECK(improvement == !ordinary);
  }
}

TEST_CASE("oneto-tamone observation is reported") {
  for (auto s : {NumericalSemigroup::hermitian(4), NumericalSemigroup::klein(3),
                 NumericalSemigroup::garcia_stichtenoth(2, 5)}) {
    CHECK(nsg::stabilization(s).oneto_tamone_holds);
  }
}
