// Command-line front end. Exit codes: 0 success, 1 domain errors
// (NotCoprime, PrefixTooShort, ...), 2 usage errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsg/classify.hpp"
#include "nsg/coding.hpp"
#include "nsg/enumerate.hpp"
#include "nsg/io.hpp"
#include "nsg/sequences.hpp"

namespace {

using nsg::NumericalSemigroup;

struct CommonArgs {
  std::string gen;
  std::string gaps;
  std::string family;
  std::string format = "text";
};

void add_semigroup_options(CLI::App* cmd, CommonArgs& args) {
  auto* g = cmd->add_option("--gen", args.gen, "comma-separated generators, e.g. 4,5");
  auto* p = cmd->add_option("--gaps", args.gaps, "comma-separated gap set, e.g. 1,2,4");
  auto* f = cmd->add_option("--family", args.family,
                            "named family, e.g. hermitian:4, gs:2,5, klein:3, "
                            "ordinary:7, interval:4,5, norm_trace:2,3, "
                            "hyperelliptic:3, inductive:1,2,2;1,2,9");
  g->excludes(p)->excludes(f);
  p->excludes(g)->excludes(f);
  f->excludes(g)->excludes(p);
}

void add_format_option(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

NumericalSemigroup resolve_semigroup(const CommonArgs& args) {
  const int given = (!args.gen.empty()) + (!args.gaps.empty()) + (!args.family.empty());
  if (given != 1) {
    throw CLI::ValidationError("exactly one of --gen, --gaps, --family is required");
  }
  if (!args.gen.empty()) return nsg::parse_semigroup(args.gen);
  if (!args.gaps.empty()) return nsg::parse_semigroup("gaps:" + args.gaps);
  return nsg::parse_family(args.family);
}

nlohmann::json with_schema(nlohmann::json j) {
  j["schema"] = "1";
  return j;
}

std::string join_list(const std::vector<int64_t>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

int run_info(const CommonArgs& args) {
  const auto s = resolve_semigroup(args);
  const auto p = nsg::profile(s);
  if (args.format == "json") {
    auto j = nsg::semigroup_to_json(s);
    j["frobenius"] = p.frobenius;
    j["multiplicity"] = s.multiplicity();
    j["dominant"] = p.dominant ? nlohmann::json(*p.dominant) : nlohmann::json(nullptr);
    j["subconductor"] =
        p.subconductor ? nlohmann::json(*p.subconductor) : nlohmann::json(nullptr);
    j["subdominant"] =
        p.subdominant ? nlohmann::json(*p.subdominant) : nlohmann::json(nullptr);
    j["apery"] = p.apery;
    std::cout << with_schema(j).dump(2) << "\n";
    return 0;
  }
  std::cout << "generators: " << join_list(p.generators) << "\n"
            << "gaps: " << join_list(s.gap_list()) << "\n"
            << "conductor: " << s.conductor() << "\n"
            << "genus: " << s.genus() << "\n"
            << "frobenius: " << p.frobenius << "\n"
            << "multiplicity: " << s.multiplicity() << "\n";
  if (p.dominant) std::cout << "dominant: " << *p.dominant << "\n";
  if (p.subconductor) std::cout << "subconductor: " << *p.subconductor << "\n";
  if (p.subdominant) std::cout << "subdominant: " << *p.subdominant << "\n";
  std::cout << "apery: " << join_list(p.apery) << "\n";
  return 0;
}

int run_classify(const CommonArgs& args) {
  const auto s = resolve_semigroup(args);
  const auto r = nsg::classify(s);
  if (args.format == "json") {
    std::cout << with_schema(nsg::classification_to_json(r)).dump(2) << "\n";
    return 0;
  }
  auto flag = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "trivial: " << flag(r.trivial) << "\n"
            << "ordinary: " << flag(r.ordinary) << "\n"
            << "symmetric: " << flag(r.symmetric) << "\n"
            << "pseudo_symmetric: " << flag(r.pseudo_symmetric) << "\n"
            << "irreducible: " << flag(r.irreducible) << "\n"
            << "arf: " << flag(r.arf) << "\n"
            << "acute: " << flag(r.acute) << "\n"
            << "near_acute: " << flag(r.near_acute) << "\n"
            << "sparse: " << flag(r.sparse) << "\n"
            << "hyperelliptic: " << flag(r.hyperelliptic) << "\n";
  std::cout << "interval: ";
  if (r.interval) {
    std::cout << r.interval->first << "," << r.interval->second << "\n";
  } else {
    std::cout << "no\n";
  }
  return 0;
}

int run_seq(const CommonArgs& args, int64_t limit) {
  const auto s = resolve_semigroup(args);
  if (limit < 0) limit = 2 * s.conductor() - s.genus() + 3;
  if (args.format == "csv") {
    std::cout << nsg::sequence_table_csv(s, limit);
    return 0;
  }
  const auto nu = nsg::nu_prefix(s, limit - 1);
  const auto tau = nsg::tau_prefix(s, limit - 1);
  if (args.format == "json") {
    nlohmann::json j{{"nu", nu}, {"tau", tau},
                     {"conductor", s.conductor()}, {"genus", s.genus()}};
    std::cout << with_schema(j).dump(2) << "\n";
    return 0;
  }
  std::cout << "nu: " << join_list(nu) << "\n" << "tau: " << join_list(tau) << "\n";
  return 0;
}

int run_bound(const CommonArgs& args, std::optional<int64_t> m) {
  const auto s = resolve_semigroup(args);
  if (m) {
    const int64_t value = nsg::order_bound(s, *m);
    if (args.format == "json") {
      std::cout << with_schema({{"m", *m}, {"d_ord", value}}).dump(2) << "\n";
    } else {
      std::cout << "d_ord(C_" << *m << "): " << value << "\n";
    }
    return 0;
  }
  const auto r = nsg::stabilization(s);
  if (args.format == "json") {
    std::cout << with_schema(nsg::bound_report_to_json(r)).dump(2) << "\n";
    return 0;
  }
  std::cout << "m: " << r.m_actual << "\n";
  if (r.m_formula) std::cout << "m_formula: " << *r.m_formula << "\n";
  if (r.m_upper) std::cout << "m_upper: " << *r.m_upper << "\n";
  std::cout << "d_ord: " << join_list(r.d_ord) << "\n";
  return 0;
}

int run_checkset(const CommonArgs& args, std::optional<int64_t> t,
                 std::optional<int64_t> t_max) {
  const auto s = resolve_semigroup(args);
  if (t_max) {
    const auto cmp = nsg::compare_check_sets(s, *t_max);
    if (args.format == "json") {
      std::cout << with_schema(nsg::comparison_to_json(cmp)).dump(2) << "\n";
    } else {
      std::cout << nsg::comparison_csv(cmp);
    }
    return 0;
  }
  if (!t) throw CLI::ValidationError("checkset needs -t or --t-max");
  const auto fr = nsg::feng_rao_check_set(s, *t);
  const auto gen = nsg::generic_check_set(s, *t);
  const auto cls = nsg::classical_generic_check_set(s, *t);
  if (args.format == "json") {
    nlohmann::json j{{"t", *t},
                     {"feng_rao", fr.indices},
                     {"generic", gen.indices},
                     {"classical", cls.indices}};
    std::cout << with_schema(j).dump(2) << "\n";
    return 0;
  }
  std::cout << "feng_rao: " << join_list(fr.indices) << "\n"
            << "generic: " << join_list(gen.indices) << "\n"
            << "classical: " << join_list(cls.indices) << "\n";
  return 0;
}

int run_table(const CommonArgs& args, int64_t limit) {
  const auto s = resolve_semigroup(args);
  if (limit < 0) limit = std::max<int64_t>(1, 2 * s.conductor() - s.genus() - 1);
  std::cout << nsg::bound_table_csv(s, limit);
  return 0;
}

nsg::WalkOptions walk_options(int workers, bool progress) {
  nsg::WalkOptions opt;
  if (workers <= 0) {
    if (const char* env = std::getenv("NSG_WORKERS")) workers = std::atoi(env);
  }
  if (workers > 0) opt.workers = workers;
  opt.progress = progress;
  return opt;
}

int run_count(const std::string& format, int genus, int workers, bool classes,
              bool progress) {
  const auto opt = walk_options(workers, progress);
  const auto census = classes ? nsg::count_by_genus_with_classes(genus, opt)
                              : nsg::count_by_genus(genus, opt);
  if (format == "json") {
    std::cout << with_schema(nsg::census_to_json(census)).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << nsg::census_csv(census);
  } else {
    for (size_t g = 0; g < census.counts.size(); ++g) {
      std::cout << "n_" << g << " = " << census.counts[g] << "\n";
    }
  }
  return 0;
}

int run_wilf(const std::string& format, int genus, int workers, bool progress) {
  const auto offenders = nsg::verify_wilf(genus, walk_options(workers, progress));
  if (format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& s : offenders) list.push_back(nsg::semigroup_to_json(s));
    std::cout << with_schema({{"genus", genus}, {"counterexamples", list}}).dump(2)
              << "\n";
  } else if (offenders.empty()) {
    std::cout << "wilf holds for every numerical semigroup of genus <= " << genus
              << "\n";
  } else {
    for (const auto& s : offenders) {
      std::cout << "counterexample: " << nsg::format_generators(s) << "\n";
    }
  }
  return offenders.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup toolkit"};
  app.require_subcommand(1);

  CommonArgs info_args, classify_args, seq_args, bound_args, check_args, table_args;
  int64_t seq_limit = -1, table_limit = -1;
  std::optional<int64_t> bound_m, check_t, check_t_max;
  int count_genus = 0, wilf_genus = 0, count_workers = 0, wilf_workers = 0;
  bool count_classes = false, count_progress = false, wilf_progress = false;
  std::string count_format = "text", wilf_format = "text", table_style = "paper";

  auto* info = app.add_subcommand("info", "conductor, genus, generators, Apery set");
  add_semigroup_options(info, info_args);
  add_format_option(info, info_args);

  auto* cls = app.add_subcommand("classify", "classification flags");
  add_semigroup_options(cls, classify_args);
  add_format_option(cls, classify_args);

  auto* seq = app.add_subcommand("seq", "nu and tau sequences");
  add_semigroup_options(seq, seq_args);
  add_format_option(seq, seq_args);
  seq->add_option("-L,--limit", seq_limit, "number of terms");

  auto* bound = app.add_subcommand("bound", "order bound and stabilization index");
  add_semigroup_options(bound, bound_args);
  add_format_option(bound, bound_args);
  bound->add_option("-m", bound_m, "single order bound d_ord(C_m)");

  auto* check = app.add_subcommand("checkset", "parity-check index sets");
  add_semigroup_options(check, check_args);
  add_format_option(check, check_args);
  check->add_option("-t", check_t, "target error weight");
  check->add_option("--t-max", check_t_max, "comparison table for t = 0..t_max");

  auto* table = app.add_subcommand("table", "order-bound table (i, lambda, nu, d_ord)");
  add_semigroup_options(table, table_args);
  table->add_option("-L,--limit", table_limit, "number of rows");
  table->add_option("--style", table_style, "table style")
      ->check(CLI::IsMember({"paper"}))
      ->capture_default_str();
  table->add_option("--format", table_args.format, "output format (always csv)")
      ->check(CLI::IsMember({"csv"}));

  auto* count = app.add_subcommand("count", "census of semigroups by genus");
  count->add_option("--genus", count_genus, "maximum genus")->required();
  count->add_option("--workers", count_workers, "worker threads (0 = auto)");
  count->add_flag("--classes", count_classes, "per-classification sub-counts");
  count->add_flag("--progress", count_progress, "task progress on stderr");
  count->add_option("--format", count_format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  auto* wilf = app.add_subcommand("wilf", "verify e >= c/(c-g) exhaustively");
  wilf->add_option("--genus", wilf_genus, "maximum genus")->required();
  wilf->add_option("--workers", wilf_workers, "worker threads (0 = auto)");
  wilf->add_flag("--progress", wilf_progress, "task progress on stderr");
  wilf->add_option("--format", wilf_format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (info->parsed()) return run_info(info_args);
    if (cls->parsed()) return run_classify(classify_args);
    if (seq->parsed()) return run_seq(seq_args, seq_limit);
    if (bound->parsed()) return run_bound(bound_args, bound_m);
    if (check->parsed()) return run_checkset(check_args, check_t, check_t_max);
    if (table->parsed()) return run_table(table_args, table_limit);
    if (count->parsed()) {
      return run_count(count_format, count_genus, count_workers, count_classes,
                       count_progress);
    }
    if (wilf->parsed()) return run_wilf(wilf_format, wilf_genus, wilf_workers,
                                        wilf_progress);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nsg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
