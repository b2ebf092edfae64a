#pragma once

// Text, CSV and JSON surfaces. The CSV table layouts mirror the printed
// reference tables column for column so golden-file diffs stay trivial:
// sequence tables are (i, lambda, nu, tau), bound tables are
// (i, lambda, nu, d_ord), the census is (g, n, fib, fib_ratio,
// growth_ratio) with ratios at six significant digits.

#include <string>

#include "json.hpp"
#include "nsg/classify.hpp"
#include "nsg/coding.hpp"
#include "nsg/enumerate.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

// "4,5" (generators) or "gaps:1,2,3,6,7,11".
NumericalSemigroup parse_semigroup(const std::string& text);

// "name:params" with comma-separated integer params; inductive takes two
// lists split by a semicolon, e.g. "inductive:1,2,2;1,2,9".
NumericalSemigroup parse_family(const std::string& text);

std::string format_generators(const NumericalSemigroup& s);  // "4,5"
std::string format_gaps(const NumericalSemigroup& s);        // "gaps:1,2,..."

nlohmann::json semigroup_to_json(const NumericalSemigroup& s);
NumericalSemigroup semigroup_from_json(const nlohmann::json& j);

nlohmann::json classification_to_json(const ClassificationReport& r);
nlohmann::json bound_report_to_json(const BoundReport& r);
nlohmann::json check_set_to_json(const CheckSet& cs);
nlohmann::json comparison_to_json(const CheckSetComparison& cmp);
nlohmann::json census_to_json(const GenusCensus& census);

// rows rows starting at i = 0.
std::string sequence_table_csv(const NumericalSemigroup& s, int64_t rows);
std::string bound_table_csv(const NumericalSemigroup& s, int64_t rows);
std::string census_csv(const GenusCensus& census);
std::string comparison_csv(const CheckSetComparison& cmp);

// Six significant digits, matching the census table's ratio columns.
std::string format_ratio(double v);

}  // namespace nsg
