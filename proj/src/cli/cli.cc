#include "afdt/cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "afdt/analysis.h"
#include "afdt/circuit.h"
#include "afdt/dot.h"
#include "afdt/dsl.h"
#include "afdt/json_io.h"
#include "afdt/quant.h"
#include "afdt/report.h"
#include "afdt/validate.h"

namespace afdt::cli {

namespace {

using nlohmann::json;

/// Ends a subcommand with the given exit status after output was written.
struct Exit {
  int code;
};

struct Options {
  std::string path;
  std::string format = "table";
  bool ascii = false;
  std::string defenses;
  std::string active;
  std::string probs;
  std::uint64_t mc = 0;
  std::uint64_t seed = 1;
};

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "afdt: cannot read '" << path << "'\n";
    throw Exit{kUsage};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_json_path(const std::string& path) { return path.size() >= 5 && path.substr(path.size() - 5) == ".json"; }

Model parse_file(const std::string& path, std::ostream& err) {
  const std::string text = read_file(path, err);
  if (is_json_path(path)) {
    try {
      return json_io::from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      err << path << ": invalid JSON: " << e.what() << "\n";
    } catch (const Error& e) {
      err << path << ": " << error_code_name(e.code()) << " " << e.what() << "\n";
    }
    throw Exit{kUsage};
  }
  auto result = dsl::parse(text);
  if (!result.ok()) {
    for (const auto& e : result.errors) err << path << ":" << dsl::to_string(e) << "\n";
    throw Exit{kUsage};
  }
  return std::move(*result.model);
}

/// Parses and validates; an invalid model ends the command with kFindings.
Model load_valid(const std::string& path, std::ostream& err) {
  Model m = parse_file(path, err);
  auto violations = validate(m);
  if (!violations.empty()) {
    for (const auto& v : violations) err << violation_code_name(v.code) << " " << v.node << " " << v.message << "\n";
    throw Exit{kFindings};
  }
  return m;
}

ProbAssignment read_probs(const std::string& path, std::ostream& err) {
  ProbAssignment out;
  try {
    json doc = json::parse(read_file(path, err));
    if (!doc.is_object()) throw std::runtime_error("expected an object of leaf probabilities");
    for (auto& [k, v] : doc.items()) {
      if (!v.is_number()) throw std::runtime_error("probability of '" + k + "' is not a number");
      out[k] = v.get<double>();
    }
  } catch (const Exit&) {
    throw;
  } catch (const std::exception& e) {
    err << path << ": " << e.what() << "\n";
    throw Exit{kUsage};
  }
  return out;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  Model m = parse_file(o.path, err);
  auto violations = validate(m);
  if (o.format == "json") {
    print_json(out, {{"violations", report::to_json(violations)}});
  } else {
    for (const auto& v : violations) out << violation_code_name(v.code) << " " << v.node << " " << v.message << "\n";
  }
  return violations.empty() ? kOk : kFindings;
}

int cmd_mcs(const Options& o, std::ostream& out, std::ostream& err) {
  Model m = load_valid(o.path, err);
  auto family = minimal_cut_sets(m, split_ids(o.defenses), Limits::from_env());
  if (o.format == "json")
    print_json(out, report::to_json(family));
  else if (o.format == "csv")
    out << report::mcs_csv(m, family);
  else
    out << report::mcs_rows(m, family);
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  Model m = load_valid(o.path, err);
  auto families = mcs_table(m, std::nullopt, Limits::from_env());
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& f : families) arr.push_back(report::to_json(f));
    print_json(out, arr);
  } else {
    out << report::mcs_comparison(m, families, {o.ascii});
  }
  return kOk;
}

int cmd_impact(const Options& o, std::ostream& out, std::ostream& err) {
  Model m = load_valid(o.path, err);
  auto entries = defense_impact(m, Limits::from_env());
  if (o.format == "json")
    print_json(out, report::to_json(entries));
  else
    out << report::impact_table(m, entries, {o.ascii});
  return kOk;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  Model m = load_valid(o.path, err);
  bool active = false;
  try {
    active = evaluate(m, split_ids(o.active));
  } catch (const Error& e) {
    err << "afdt: " << error_code_name(e.code()) << " " << e.what() << "\n";
    return kUsage;
  }
  if (o.format == "json")
    print_json(out, {{"tle", active}});
  else
    out << "TLE: " << (active ? "active" : "inactive") << "\n";
  return active ? kFindings : kOk;
}

int cmd_prob(const Options& o, std::ostream& out, std::ostream& err) {
  Model m = load_valid(o.path, err);
  auto probs = read_probs(o.probs, err);
  auto defense = split_ids(o.defenses);
  ProbResult r = o.mc > 0 ? tle_probability_mc(m, probs, defense, o.mc, o.seed)
                          : tle_probability_exact(m, probs, defense, Limits::from_env());
  if (o.format == "json")
    print_json(out, report::to_json(r));
  else
    out << report::prob_line(r) << "\n";
  return kOk;
}

int cmd_dot(const Options& o, std::ostream& out, std::ostream& err) {
  Model m = load_valid(o.path, err);
  if (o.format == "json")
    print_json(out, {{"dot", dot::to_dot(m)}});
  else
    out << dot::to_dot(m);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Attack-fault-defense tree analysis", "afdt"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& help, std::vector<std::string> formats) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("path", o.path, "model file (.afdt or .afdt.json)")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    return sub;
  };

  auto* validate_cmd = add("validate", "check model structure", {"table", "text", "json"});
  auto* mcs_cmd = add("mcs", "minimal cut sets under a defense set", {"table", "json", "csv"});
  mcs_cmd->add_option("--defenses", o.defenses, "deployed defenses, comma separated");
  auto* table_cmd = add("table", "cut sets for every defense subset", {"table", "json"});
  table_cmd->add_flag("--ascii", o.ascii, "plain ASCII markers");
  auto* impact_cmd = add("impact", "effective defenses per cut set", {"table", "json"});
  impact_cmd->add_flag("--ascii", o.ascii, "plain ASCII markers");
  auto* eval_cmd = add("eval", "evaluate the top-level event", {"table", "text", "json"});
  eval_cmd->add_option("--active", o.active, "active leaves, comma separated");
  auto* prob_cmd = add("prob", "top-level event probability", {"table", "text", "json"});
  prob_cmd->add_option("--probs", o.probs, "JSON map of leaf probabilities")->required();
  prob_cmd->add_option("--defenses", o.defenses, "deployed defenses, comma separated");
  prob_cmd->add_option("--mc", o.mc, "Monte-Carlo samples (exact when omitted)");
  prob_cmd->add_option("--seed", o.seed, "Monte-Carlo seed");
  auto* dot_cmd = add("dot", "Graphviz export", {"table", "text", "json"});

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out, err);
    if (mcs_cmd->parsed()) return cmd_mcs(o, out, err);
    if (table_cmd->parsed()) return cmd_table(o, out, err);
    if (impact_cmd->parsed()) return cmd_impact(o, out, err);
    if (eval_cmd->parsed()) return cmd_eval(o, out, err);
    if (prob_cmd->parsed()) return cmd_prob(o, out, err);
    if (dot_cmd->parsed()) return cmd_dot(o, out, err);
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    err << "afdt: " << error_code_name(e.code()) << " " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "afdt: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace afdt::cli
