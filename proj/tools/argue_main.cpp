#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "argue/aggregate.hpp"
#include "argue/criteria.hpp"
#include "argue/database.hpp"
#include "argue/defeat.hpp"
#include "argue/errors.hpp"
#include "argue/json_io.hpp"
#include "argue/parser.hpp"
#include "argue/proof.hpp"
#include "argue/prover.hpp"

namespace {

using argue::Json;

struct CommonOpts {
  std::string kb;
  std::string goal;
  int depth = 8;
  int max_args = 1000;
  bool no_minimal = false;
  std::string format = "text";
};

void add_search_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--depth", opts.depth, "maximum chaining depth")
      ->default_val(8);
  cmd->add_option("--max-args", opts.max_args, "cap on returned arguments")
      ->default_val(1000);
  cmd->add_flag("--no-minimal", opts.no_minimal,
                "keep arguments with non-minimal grounds");
}

void add_format_flag(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
}

argue::SearchLimits limits_of(const CommonOpts& opts) {
  argue::SearchLimits limits;
  limits.max_depth = opts.depth;
  limits.max_arguments = opts.max_args;
  limits.minimal_only = !opts.no_minimal;
  return limits;
}

// Sorted by rendered grounds, so listings read the way they compare.
std::vector<argue::Argument> find_sorted(const argue::Database& db,
                                         const argue::Formula& goal,
                                         const argue::SearchLimits& limits) {
  std::vector<argue::Argument> args = argue::find_arguments(db, goal, limits);
  std::stable_sort(args.begin(), args.end(),
                   [](const argue::Argument& a, const argue::Argument& b) {
                     return argue::grounds_str(a.grounds) <
                            argue::grounds_str(b.grounds);
                   });
  return args;
}

int cmd_arguments(const CommonOpts& opts) {
  argue::Database db = argue::load_database(opts.kb);
  argue::Formula goal = argue::parse_formula(opts.goal);
  std::vector<argue::Argument> args = find_sorted(db, goal, limits_of(opts));

  if (opts.format == "json") {
    Json j;
    j["goal"] = goal.str();
    j["count"] = args.size();
    Json list = Json::array();
    for (const argue::Argument& a : args) list.push_back(argue::argument_to_json(a));
    j["arguments"] = std::move(list);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "goal: " << goal.str() << '\n';
  std::cout << "arguments: " << args.size() << '\n';
  for (const argue::Argument& a : args) {
    std::cout << argue::argument_str(a) << '\n';
  }
  return 0;
}

int cmd_prove(const CommonOpts& opts) {
  argue::Database db = argue::load_database(opts.kb);
  argue::Formula goal = argue::parse_formula(opts.goal);
  std::vector<argue::Argument> args = find_sorted(db, goal, limits_of(opts));

  if (opts.format == "json") {
    Json j;
    j["goal"] = goal.str();
    j["count"] = args.size();
    Json list = Json::array();
    for (const argue::Argument& a : args) {
      list.push_back(argue::argument_to_json(a, true));
    }
    j["arguments"] = std::move(list);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "goal: " << goal.str() << '\n';
  std::cout << "arguments: " << args.size() << '\n';
  for (const argue::Argument& a : args) {
    std::cout << argue::argument_str(a) << '\n';
    std::cout << a.proof.str() << '\n';
  }
  return 0;
}

int cmd_aggregate(const CommonOpts& opts, std::string flattener_name,
                  bool selective) {
  argue::Database db = argue::load_database(opts.kb);
  argue::Formula goal = argue::parse_formula(opts.goal);

  if (flattener_name.empty()) {
    switch (db.dict_id()) {
      case argue::DictId::bounded: flattener_name = "bnd"; break;
      case argue::DictId::numeric: flattener_name = "num"; break;
      default: flattener_name = "count"; break;
    }
  }
  argue::Flattener flattener = argue::flattener_by_name(flattener_name);

  argue::Confidence confidence =
      selective
          ? argue::selective_aggregate(db, goal, flattener, limits_of(opts))
          : argue::flatten(find_sorted(db, goal, limits_of(opts)), flattener);

  if (opts.format == "json") {
    Json j;
    j["goal"] = goal.str();
    j["flattener"] = flattener.name;
    j["selective"] = selective;
    j["confidence"] = argue::confidence_to_json(confidence);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << confidence.str() << '\n';
  return 0;
}

int cmd_defeat(const CommonOpts& opts) {
  argue::Database db = argue::load_database(opts.kb);
  std::vector<argue::Formula> extra;
  if (!opts.goal.empty()) extra.push_back(argue::parse_formula(opts.goal));

  argue::SignedArgumentPool pool =
      argue::signed_closure(db, limits_of(opts), extra);
  argue::Labelling lab = argue::grounded_labelling(pool);

  if (opts.format == "json") {
    std::cout << argue::labelling_to_json(pool, lab).dump(2) << '\n';
    return 0;
  }
  for (std::size_t i = 0; i < pool.pro.size(); ++i) {
    std::cout << argue::status_name(lab.pro[i]) << '\t' << "pro" << '\t'
              << argue::argument_str(pool.pro[i]) << '\n';
  }
  for (std::size_t i = 0; i < pool.con.size(); ++i) {
    std::cout << argue::status_name(lab.con[i]) << '\t' << "con" << '\t'
              << argue::con_argument_str(pool.con[i]) << '\n';
  }
  return 0;
}

void print_report_text(const argue::CriteriaReport& report) {
  for (const argue::CriterionResult& e : report.entries) {
    std::cout << e.criterion << ' ' << argue::criterion_status_name(e.status);
    if (!e.detail.empty()) std::cout << " (" << e.detail << ')';
    std::cout << '\n';
    if (!e.counterexample.empty()) {
      std::cout << "  counterexample: " << e.counterexample << '\n';
    }
  }
}

int cmd_check_proof(const CommonOpts& opts, const std::string& proof_path) {
  argue::Database db = argue::load_database(opts.kb);
  std::ifstream in(proof_path, std::ios::binary);
  if (!in) throw argue::ParseError("cannot open proof file: " + proof_path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  Json j = argue::json_parse(buf.str());

  std::vector<argue::Argument> checked;
  for (const argue::Proof& p : argue::proofs_from_json(j, db)) {
    checked.push_back(argue::check_proof(db, p));
  }

  if (opts.format == "json") {
    Json out = Json::array();
    for (const argue::Argument& a : checked) {
      out.push_back(argue::argument_to_json(a));
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (const argue::Argument& a : checked) {
    std::cout << argue::argument_str(a) << '\n';
  }
  return 0;
}

int cmd_check_criteria(const CommonOpts& opts, const std::string& criteria,
                       const std::string& flattener_name, std::size_t cases,
                       std::uint64_t seed, bool no_closure) {
  argue::CriteriaReport report;
  if (criteria == "flattening") {
    argue::Flattener f = argue::flattener_by_name(
        flattener_name.empty() ? "bnd" : flattener_name);
    report = argue::check_flattening_criteria(
        f, argue::generate_flattening_cases(f.source, cases, seed));
  } else {
    argue::Database db = argue::load_database(opts.kb);
    report = argue::check_acr_criteria(db, limits_of(opts), !no_closure);
  }

  if (opts.format == "json") {
    std::cout << argue::criteria_report_to_json(report).dump(2) << '\n';
  } else {
    print_report_text(report);
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"labelled argumentation over a minimal-logic fragment"};
  app.require_subcommand(1);

  CommonOpts arg_opts;
  CLI::App* arguments = app.add_subcommand("arguments", "enumerate arguments for a goal");
  arguments->add_option("--kb", arg_opts.kb, "knowledge base file")->required();
  arguments->add_option("--goal", arg_opts.goal, "goal formula")->required();
  add_search_flags(arguments, arg_opts);
  add_format_flag(arguments, arg_opts);

  CommonOpts prove_opts;
  CLI::App* prove = app.add_subcommand("prove", "enumerate arguments with their proofs");
  prove->add_option("--kb", prove_opts.kb, "knowledge base file")->required();
  prove->add_option("--goal", prove_opts.goal, "goal formula")->required();
  add_search_flags(prove, prove_opts);
  add_format_flag(prove, prove_opts);

  CommonOpts agg_opts;
  std::string agg_flattener;
  bool agg_selective = false;
  CLI::App* aggregate = app.add_subcommand("aggregate", "flatten the arguments for a goal");
  aggregate->add_option("--kb", agg_opts.kb, "knowledge base file")->required();
  aggregate->add_option("--goal", agg_opts.goal, "goal formula")->required();
  aggregate->add_option("--flattener", agg_flattener, "aggregation rule")
      ->check(CLI::IsMember({"bnd", "num", "count"}));
  aggregate->add_flag("--selective", agg_selective,
                      "aggregate only undefeated arguments");
  add_search_flags(aggregate, agg_opts);
  add_format_flag(aggregate, agg_opts);

  CommonOpts defeat_opts;
  CLI::App* defeat = app.add_subcommand("defeat", "label the argument pool");
  defeat->add_option("--kb", defeat_opts.kb, "knowledge base file")->required();
  defeat->add_option("--goal", defeat_opts.goal,
                     "extra goal to include in the universe");
  add_search_flags(defeat, defeat_opts);
  add_format_flag(defeat, defeat_opts);

  CommonOpts check_opts;
  std::string check_proof_path;
  std::string check_criteria;
  std::string check_flattener;
  std::size_t check_cases = 1000;
  std::uint64_t check_seed = 20260822;
  bool check_no_closure = false;
  CLI::App* check = app.add_subcommand("check", "validate a proof or a criteria suite");
  check->add_option("--kb", check_opts.kb, "knowledge base file");
  check->add_option("--proof", check_proof_path, "proof JSON file to validate");
  check->add_option("--criteria", check_criteria, "criteria suite to run")
      ->check(CLI::IsMember({"flattening", "acr"}));
  check->add_option("--flattener", check_flattener, "flattener under test")
      ->check(CLI::IsMember({"bnd", "num", "count"}));
  check->add_option("--cases", check_cases, "number of generated cases")
      ->default_val(1000);
  check->add_option("--seed", check_seed, "case generator seed")
      ->default_val(20260822);
  check->add_flag("--no-closure", check_no_closure,
                  "evaluate the bare search engine instead of the closure");
  add_search_flags(check, check_opts);
  add_format_flag(check, check_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (arguments->parsed()) return cmd_arguments(arg_opts);
    if (prove->parsed()) return cmd_prove(prove_opts);
    if (aggregate->parsed()) {
      return cmd_aggregate(agg_opts, agg_flattener, agg_selective);
    }
    if (defeat->parsed()) return cmd_defeat(defeat_opts);
    if (check->parsed()) {
      const bool have_proof = !check_proof_path.empty();
      const bool have_criteria = !check_criteria.empty();
      if (have_proof == have_criteria) {
        std::cerr << "check needs exactly one of --proof or --criteria\n";
        return 2;
      }
      if (have_proof && check_opts.kb.empty()) {
        std::cerr << "check --proof needs --kb\n";
        return 2;
      }
      if (check_criteria == "acr" && check_opts.kb.empty()) {
        std::cerr << "check --criteria acr needs --kb\n";
        return 2;
      }
      if (have_proof) return cmd_check_proof(check_opts, check_proof_path);
      return cmd_check_criteria(check_opts, check_criteria, check_flattener,
                                check_cases, check_seed, check_no_closure);
    }
  } catch (const argue::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const argue::DictionaryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const argue::SearchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const argue::ProofError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const argue::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
