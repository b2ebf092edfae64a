#include "nsg/io.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <string_view>

#include "nsg/sequences.hpp"

namespace nsg {

namespace {

std::vector<int64_t> parse_int_list(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int64_t v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw InvalidParam("cannot parse integer '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw InvalidParam("cannot parse integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidParam("empty integer list");
  return out;
}

std::string join(const std::vector<int64_t>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

NumericalSemigroup parse_semigroup(const std::string& text) {
  constexpr std::string_view kGapsPrefix = "gaps:";
  if (text.rfind(kGapsPrefix, 0) == 0) {
    return NumericalSemigroup::from_gaps(
        parse_int_list(text.substr(kGapsPrefix.size())));
  }
  return NumericalSemigroup::from_generators(parse_int_list(text));
}

NumericalSemigroup parse_family(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw InvalidParam("family spec must look like name:params");
  }
  const std::string name = text.substr(0, colon);
  const std::string params = text.substr(colon + 1);

  if (name == "inductive") {
    const size_t semi = params.find(';');
    if (semi == std::string::npos) {
      throw InvalidParam("inductive takes two lists: a1,..,an;b1,..,bn");
    }
    return NumericalSemigroup::inductive(parse_int_list(params.substr(0, semi)),
                                         parse_int_list(params.substr(semi + 1)));
  }

  const auto p = parse_int_list(params);
  auto arity = [&](size_t n) {
    if (p.size() != n) {
      throw InvalidParam("family '" + name + "' takes " + std::to_string(n) +
                         " parameter(s)");
    }
  };
  if (name == "ordinary") {
    arity(1);
    return NumericalSemigroup::ordinary(p[0]);
  }
  if (name == "hyperelliptic") {
    arity(1);
    return NumericalSemigroup::hyperelliptic(p[0]);
  }
  if (name == "hermitian") {
    arity(1);
    return NumericalSemigroup::hermitian(p[0]);
  }
  if (name == "klein") {
    arity(1);
    return NumericalSemigroup::klein(p[0]);
  }
  if (name == "norm_trace" || name == "nt") {
    arity(2);
    return NumericalSemigroup::norm_trace(p[0], p[1]);
  }
  if (name == "garcia_stichtenoth" || name == "gs") {
    arity(2);
    return NumericalSemigroup::garcia_stichtenoth(p[0], p[1]);
  }
  if (name == "interval") {
    arity(2);
    return NumericalSemigroup::interval(p[0], p[1]);
  }
  throw InvalidParam("unknown family '" + name + "'");
}

std::string format_generators(const NumericalSemigroup& s) {
  return join(minimal_generators(s));
}

std::string format_gaps(const NumericalSemigroup& s) {
  if (s.is_trivial()) return "gaps:";
  return "gaps:" + join(s.gap_list());
}

nlohmann::json semigroup_to_json(const NumericalSemigroup& s) {
  return nlohmann::json{{"generators", minimal_generators(s)},
                        {"gaps", s.gap_list()},
                        {"conductor", s.conductor()},
                        {"genus", s.genus()}};
}

NumericalSemigroup semigroup_from_json(const nlohmann::json& j) {
  if (j.contains("generators")) {
    return NumericalSemigroup::from_generators(
        j.at("generators").get<std::vector<int64_t>>());
  }
  if (j.contains("gaps")) {
    return NumericalSemigroup::from_gaps(j.at("gaps").get<std::vector<int64_t>>());
  }
  throw InvalidParam("semigroup JSON needs 'generators' or 'gaps'");
}

nlohmann::json classification_to_json(const ClassificationReport& r) {
  nlohmann::json j{{"trivial", r.trivial},
                   {"ordinary", r.ordinary},
                   {"symmetric", r.symmetric},
                   {"pseudo_symmetric", r.pseudo_symmetric},
                   {"irreducible", r.irreducible},
                   {"arf", r.arf},
                   {"acute", r.acute},
                   {"near_acute", r.near_acute},
                   {"sparse", r.sparse},
                   {"hyperelliptic", r.hyperelliptic}};
  if (r.interval) {
    j["interval"] = {r.interval->first, r.interval->second};
  } else {
    j["interval"] = nullptr;
  }
  return j;
}

nlohmann::json bound_report_to_json(const BoundReport& r) {
  nlohmann::json j{{"m", r.m_actual},
                   {"d_ord", r.d_ord},
                   {"oneto_tamone_holds", r.oneto_tamone_holds}};
  j["m_formula"] = r.m_formula ? nlohmann::json(*r.m_formula) : nlohmann::json(nullptr);
  j["m_upper"] = r.m_upper ? nlohmann::json(*r.m_upper) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json check_set_to_json(const CheckSet& cs) {
  return nlohmann::json{{"t", cs.t}, {"indices", cs.indices}};
}

nlohmann::json comparison_to_json(const CheckSetComparison& cmp) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : cmp.rows) {
    rows.push_back({{"t", row.t},
                    {"feng_rao", row.feng_rao_size},
                    {"generic", row.generic_size},
                    {"classical", row.classical_size},
                    {"generic_equals_feng_rao", row.generic_equals_feng_rao},
                    {"generic_equals_classical", row.generic_equals_classical}});
  }
  return nlohmann::json{{"rows", rows},
                        {"feng_rao_equal_all_t", cmp.feng_rao_equal_all_t},
                        {"classical_equal_all_t", cmp.classical_equal_all_t},
                        {"equal_from", cmp.equal_from}};
}

nlohmann::json census_to_json(const GenusCensus& census) {
  nlohmann::json rows = nlohmann::json::array();
  const auto report = ratio_report(census);
  for (const auto& row : report) {
    nlohmann::json r{{"g", row.genus}, {"n", row.count}};
    r["fib"] = row.fibonacci_sum ? nlohmann::json(*row.fibonacci_sum)
                                 : nlohmann::json(nullptr);
    r["fib_ratio"] = row.fibonacci_ratio ? nlohmann::json(*row.fibonacci_ratio)
                                         : nlohmann::json(nullptr);
    r["growth_ratio"] = row.growth_ratio ? nlohmann::json(*row.growth_ratio)
                                         : nlohmann::json(nullptr);
    r["fibonacci_holds"] = row.fibonacci_holds ? nlohmann::json(*row.fibonacci_holds)
                                               : nlohmann::json(nullptr);
    rows.push_back(r);
  }
  nlohmann::json j{{"rows", rows}};
  if (census.classes) {
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& c : *census.classes) {
      cls.push_back({{"ordinary", c.ordinary},
                     {"symmetric", c.symmetric},
                     {"pseudo_symmetric", c.pseudo_symmetric},
                     {"irreducible", c.irreducible},
                     {"arf", c.arf},
                     {"acute", c.acute},
                     {"near_acute", c.near_acute},
                     {"sparse", c.sparse},
                     {"hyperelliptic", c.hyperelliptic},
                     {"interval", c.interval_generated}});
    }
    j["classes"] = cls;
  }
  return j;
}

std::string sequence_table_csv(const NumericalSemigroup& s, int64_t rows) {
  std::string out = "i,lambda,nu,tau\n";
  for (int64_t i = 0; i < rows; ++i) {
    out += std::to_string(i) + "," + std::to_string(s.lambda(i)) + "," +
           std::to_string(nu_at(s, i)) + "," + std::to_string(tau_at(s, i)) + "\n";
  }
  return out;
}

std::string bound_table_csv(const NumericalSemigroup& s, int64_t rows) {
  std::string out = "i,lambda,nu,d_ord\n";
  for (int64_t i = 0; i < rows; ++i) {
    out += std::to_string(i) + "," + std::to_string(s.lambda(i)) + "," +
           std::to_string(nu_at(s, i)) + "," + std::to_string(order_bound(s, i)) + "\n";
  }
  return out;
}

std::string format_ratio(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string census_csv(const GenusCensus& census) {
  const bool with_classes = census.classes.has_value();
  std::string out = "g,n,fib,fib_ratio,growth_ratio";
  if (with_classes) {
    out += ",ordinary,symmetric,pseudo_symmetric,irreducible,arf,acute,"
           "near_acute,sparse,hyperelliptic,interval";
  }
  out += "\n";
  const auto report = ratio_report(census);
  for (const auto& row : report) {
    out += std::to_string(row.genus) + "," + std::to_string(row.count) + ",";
    if (row.fibonacci_sum) out += std::to_string(*row.fibonacci_sum);
    out += ",";
    if (row.fibonacci_ratio) out += format_ratio(*row.fibonacci_ratio);
    out += ",";
    if (row.growth_ratio) out += format_ratio(*row.growth_ratio);
    if (with_classes) {
      const auto& c = (*census.classes)[static_cast<size_t>(row.genus)];
      for (uint64_t v : {c.ordinary, c.symmetric, c.pseudo_symmetric, c.irreducible,
                         c.arf, c.acute, c.near_acute, c.sparse, c.hyperelliptic,
                         c.interval_generated}) {
        out += "," + std::to_string(v);
      }
    }
    out += "\n";
  }
  return out;
}

std::string comparison_csv(const CheckSetComparison& cmp) {
  std::string out = "t,feng_rao,generic,classical,generic_eq_feng_rao,generic_eq_classical\n";
  for (const auto& row : cmp.rows) {
    out += std::to_string(row.t) + "," + std::to_string(row.feng_rao_size) + "," +
           std::to_string(row.generic_size) + "," + std::to_string(row.classical_size) +
           "," + (row.generic_equals_feng_rao ? "1" : "0") + "," +
           (row.generic_equals_classical ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace nsg
