#include "nsg/io.hpp"

#include <string>

#include "doctest.h"
#include "nsg/enumerate.hpp"

using nsg::NumericalSemigroup;

TEST_CASE("parse_semigroup") {
  CHECK(nsg::parse_semigroup("4,5") == NumericalSemigroup::from_generators({4, 5}));
  CHECK(nsg::parse_semigroup("gaps:1,2,4") == NumericalSemigroup::klein(3));
  CHECK_THROWS_AS(nsg::parse_semigroup("4,x"), nsg::InvalidParam);
  CHECK_THROWS_AS(nsg::parse_semigroup("4,6"), nsg::NotCoprime);
}

TEST_CASE("parse_family") {
  CHECK(nsg::parse_family("hermitian:4") == NumericalSemigroup::hermitian(4));
  CHECK(nsg::parse_family("gs:2,5") == NumericalSemigroup::garcia_stichtenoth(2, 5));
  CHECK(nsg::parse_family("klein:3") == NumericalSemigroup::klein(3));
  CHECK(nsg::parse_family("ordinary:7") == NumericalSemigroup::ordinary(7));
  CHECK(nsg::parse_family("interval:4,5") == NumericalSemigroup::interval(4, 5));
  CHECK(nsg::parse_family("norm_trace:2,3") == NumericalSemigroup::norm_trace(2, 3));
  CHECK(nsg::parse_family("inductive:9,2,2;1,2,7") ==
        NumericalSemigroup::inductive({9, 2, 2}, {1, 2, 7}));
  CHECK_THROWS_AS(nsg::parse_family("hermitian"), nsg::InvalidParam);
  CHECK_THROWS_AS(nsg::parse_family("unknown:1"), nsg::InvalidParam);
  CHECK_THROWS_AS(nsg::parse_family("hermitian:4,5"), nsg::InvalidParam);
}

TEST_CASE("format round trips") {
  for (auto s : {NumericalSemigroup::from_generators({6, 7, 8, 17}),
                 NumericalSemigroup::klein(3), NumericalSemigroup::trivial(),
                 NumericalSemigroup::garcia_stichtenoth(2, 4)}) {
    CHECK(nsg::parse_semigroup(nsg::format_generators(s)) == s);
    if (!s.is_trivial()) {
      CHECK(nsg::parse_semigroup(nsg::format_gaps(s)) == s);
    }
    CHECK(nsg::semigroup_from_json(nsg::semigroup_to_json(s)) == s);
  }
  CHECK(nsg::format_generators(NumericalSemigroup::from_generators({4, 5})) == "4,5");
  CHECK(nsg::format_gaps(NumericalSemigroup::from_generators({4, 5})) ==
        "gaps:1,2,3,6,7,11");
}

TEST_CASE("semigroup json shape") {
  const auto j = nsg::semigroup_to_json(NumericalSemigroup::from_generators({4, 5}));
  CHECK(j["generators"] == nlohmann::json({4, 5}));
  CHECK(j["gaps"] == nlohmann::json({1, 2, 3, 6, 7, 11}));
  CHECK(j["conductor"] == 12);
  CHECK(j["genus"] == 6);
}

TEST_CASE("sequence table csv matches the printed layout") {
  const std::string csv =
      nsg::sequence_table_csv(NumericalSemigroup::from_generators({4, 5}), 4);
  CHECK(csv == "i,lambda,nu,tau\n0,0,1,0\n1,4,2,0\n2,5,2,0\n3,8,3,1\n");
}

TEST_CASE("bound table csv matches the printed layout") {
  const std::string csv = nsg::bound_table_csv(NumericalSemigroup::klein(3), 6);
  CHECK(csv ==
        "i,lambda,nu,d_ord\n"
        "0,0,1,2\n"
        "1,3,2,2\n"
        "2,5,2,2\n"
        "3,6,3,2\n"
        "4,7,2,4\n"
        "5,8,4,4\n");
}

TEST_CASE("census csv") {
  const auto census = nsg::count_by_genus(4, {.workers = 1});
  const std::string csv = nsg::census_csv(census);
  CHECK(csv ==
        "g,n,fib,fib_ratio,growth_ratio\n"
        "0,1,,,\n"
        "1,1,,,1\n"
        "2,2,2,1,2\n"
        "3,4,3,0.75,2\n"
        "4,7,6,0.857143,1.75\n");
}

TEST_CASE("ratio formatting uses six significant digits") {
  CHECK(nsg::format_ratio(1.0) == "1");
  CHECK(nsg::format_ratio(0.75) == "0.75");
  CHECK(nsg::format_ratio(185.0 / 204.0) == "0.906863");
  CHECK(nsg::format_ratio(12.0 / 7.0) == "1.71429");
}

TEST_CASE("classification json") {
  const auto j = nsg::classification_to_json(
      nsg::classify(NumericalSemigroup::from_generators({4, 5})));
  CHECK(j["symmetric"] == true);
  CHECK(j["arf"] == false);
  CHECK(j["interval"] == nlohmann::json({4, 5}));
  const auto k = nsg::classification_to_json(nsg::classify(NumericalSemigroup::klein(3)));
  CHECK(k["interval"].is_null());
}
