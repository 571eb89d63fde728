// idca: command-line front end for pattern cellular automata.
//
//   idca table --domain -1,0,1
//   idca classify --domain -2,-1,0,1,2 --pattern 00010
//   idca order --p 00@0,1 --q 000@-1,0,1
//   idca shift entropy --domain 0,1 --pattern 11
//
// Exit codes: 0 success, 2 invalid input, 3 size cap refused, 1 otherwise.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "idca/idempotency.hpp"
#include "idca/io.hpp"
#include "idca/oracle.hpp"
#include "idca/order.hpp"
#include "idca/shiftspace.hpp"
#include "inputs.hpp"

#ifndef IDCA_VERSION
#define IDCA_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;
using namespace idca;
using namespace idca::cli;

// What a command produced: structured data for --report, and optionally the
// plain text printed without it.
struct Output {
  json data;
  std::optional<std::string> text;
};

struct Globals {
  unsigned threads = 1;
  bool report = false;
  bool timings = false;
  std::string job;
};

void add_pattern_options(CLI::App* cmd, PatternArgs& args) {
  cmd->add_option("--group", args.group, "zd:<d> or cayley:<path>")->capture_default_str();
  cmd->add_option("--domain", args.domain, "domain in display order, e.g. -1,0,1");
  cmd->add_option("--pattern", args.pattern, "pattern values, e.g. 010");
  cmd->add_option("--alphabet", args.alphabet, "alphabet size k")->capture_default_str();
  cmd->add_option("--write", args.write, "write symbol a (default p(e)+1 mod k)");
  cmd->add_option("--record", args.record, "JSON pattern record, inline or as a file path");
}

void add_rule_options(CLI::App* cmd, RuleArgs& args) {
  add_pattern_options(cmd, args.pattern);
  cmd->add_option("--wolfram", args.wolfram, "elementary rule number");
  cmd->add_option("--table", args.table, "rule table listed from the highest input down");
}

json witness_json(const Witness& w) {
  return {{"domain", w.fragment.domain.str()}, {"values", w.fragment.str()}};
}

json verdict_json(const PatternCA& ca, const IdempotenceVerdict& v) {
  json out{{"domain", ca.domain().str()},
           {"pattern", ca.pattern().str()},
           {"write", ca.write()},
           {"idempotent", v.idempotent},
           {"reason", std::string(to_string(v.reason))}};
  if (v.witness) out["witness"] = witness_json(*v.witness);
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

bool is_integer_line(const Group& g) { return !g.is_finite() && g.rank() == 1; }

// Arguments of a job file become ordinary command-line tokens:
// {"command": "shift words", "args": {"domain": "0,1", "n": 5, "json": true}}.
std::vector<std::string> job_tokens(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::exception& ex) {
    throw ParseError(std::string("job file: ") + ex.what());
  }
  if (!doc.contains("command") || !doc["command"].is_string()) {
    throw ParseError("job file needs a string 'command'");
  }
  std::vector<std::string> tokens;
  std::istringstream words(doc["command"].get<std::string>());
  for (std::string w; words >> w;) tokens.push_back(w);
  if (doc.contains("args")) {
    for (const auto& [key, value] : doc["args"].items()) {
      if (value.is_boolean()) {
        if (value.get<bool>()) tokens.push_back("--" + key);
        continue;
      }
      tokens.push_back("--" + key);
      tokens.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
  }
  return tokens;
}

json echo_inputs(const CLI::App* cmd) {
  json inputs = json::object();
  for (const CLI::Option* opt : cmd->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string name = opt->get_name();
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    const auto& results = opt->results();
    if (results.empty()) inputs[name] = true;
    else if (results.size() == 1) inputs[name] = results.front();
    else inputs[name] = results;
  }
  return inputs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern cellular automata: idempotency, natural order and SFT analytics", "idca"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(IDCA_VERSION));

  Globals globals;
  app.add_option("--threads", globals.threads, "worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  app.add_flag("--report", globals.report, "print a JSON run report instead of plain output");
  app.add_flag("--timings", globals.timings, "include wall-clock timings in the report");
  app.add_option("--job", globals.job, "JSON job file {command, args}");

  const SizeLimits limits = SizeLimits::from_env();
  std::function<Output()> run;
  CLI::App* chosen = nullptr;

  // classify
  PatternArgs classify_args;
  bool no_witness = false;
  bool crosscheck = kDebugBuild;
  auto* classify_cmd = app.add_subcommand("classify", "decide idempotency of a pattern CA");
  add_pattern_options(classify_cmd, classify_args);
  classify_cmd->add_flag("--no-witness", no_witness, "skip the witness search for negative verdicts");
  classify_cmd->add_flag("--crosscheck,!--no-crosscheck", crosscheck, "re-check theorem verdicts by composition");
  classify_cmd->callback([&] {
    chosen = classify_cmd;
    run = [&] {
      const PatternCA ca = resolve_ca(resolve_pattern(classify_args));
      ClassifyOptions options;
      options.crosscheck = crosscheck;
      options.attach_witness = !no_witness;
      options.limits = limits;
      return Output{verdict_json(ca, classify(ca, options)), std::nullopt};
    };
  });

  // table
  std::string table_group = "zd:1";
  std::string table_domain;
  int table_alphabet = 2;
  std::string table_out;
  auto* table_cmd = app.add_subcommand("table", "partition all patterns on a domain by idempotency");
  table_cmd->add_option("--group", table_group)->capture_default_str();
  table_cmd->add_option("--domain", table_domain, "domain in display order")->required();
  table_cmd->add_option("--alphabet", table_alphabet)->capture_default_str();
  table_cmd->add_option("--out", table_out, "write the TSV here instead of stdout");
  table_cmd->add_flag("--crosscheck,!--no-crosscheck", crosscheck, "re-check theorem verdicts by composition");
  table_cmd->callback([&] {
    chosen = table_cmd;
    run = [&] {
      const GroupSubset domain = parse_subset(parse_group(table_group), table_domain);
      ClassifyOptions options;
      options.crosscheck = crosscheck;
      options.limits = limits;
      const DomainTable table = classify_domain(domain, Alphabet(table_alphabet), options, globals.threads);
      const std::string tsv = to_tsv(table);
      json data{{"domain", domain.str()},
                {"alphabet", table_alphabet},
                {"idempotent", table.idempotent},
                {"non_idempotent", table.non_idempotent}};
      if (!table_out.empty()) {
        write_file(table_out, tsv);
        return Output{data, "wrote " + table_out + "\n"};
      }
      return Output{data, tsv};
    };
  });

  // order
  std::string order_p, order_q, order_group = "zd:1";
  int order_alphabet = 2;
  auto* order_cmd = app.add_subcommand("order", "compare two idempotent pattern CA in the natural order");
  order_cmd->add_option("--p", order_p, "first operand: JSON record, file, or VALUES@DOMAIN")->required();
  order_cmd->add_option("--q", order_q, "second operand")->required();
  order_cmd->add_option("--group", order_group, "group for VALUES@DOMAIN operands")->capture_default_str();
  order_cmd->add_option("--alphabet", order_alphabet)->capture_default_str();
  order_cmd->callback([&] {
    chosen = order_cmd;
    run = [&] {
      const PatternCA tau = resolve_ca(resolve_operand(order_p, order_group, order_alphabet));
      const PatternCA sigma = resolve_ca(resolve_operand(order_q, order_group, order_alphabet));
      const bool z = is_integer_line(tau.group()) && is_integer_line(sigma.group());
      const OrderVerdict forward = z ? order_char_crosscheck(tau, sigma, limits) : natural_leq(tau, sigma, limits);
      const bool backward = natural_leq(sigma, tau, limits).leq;
      std::string relation = "incomparable";
      if (forward.leq && backward) relation = "equal";
      else if (forward.leq) relation = "less";
      else if (backward) relation = "greater";
      json data{{"p", tau.label()},
                {"q", sigma.label()},
                {"p_leq_q", forward.leq},
                {"q_leq_p", backward},
                {"relation", relation}};
      if (forward.crosscheck) {
        data["image_inclusion"] = forward.crosscheck->image_inclusion;
        data["kernel_inclusion"] = forward.crosscheck->kernel_inclusion;
      }
      return Output{data, std::nullopt};
    };
  });

  // hasse
  std::string hasse_group = "zd:1", hasse_domain, hasse_family = "table", hasse_out, hasse_s = "1";
  std::vector<std::string> hasse_elements;
  std::size_t hasse_n = 4;
  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of the natural order as DOT");
  hasse_cmd->add_option("--group", hasse_group)->capture_default_str();
  hasse_cmd->add_option("--domain", hasse_domain, "domain for --family table");
  hasse_cmd->add_option("--family", hasse_family, "table, chain or antichain")
      ->check(CLI::IsMember({"table", "chain", "antichain"}))
      ->capture_default_str();
  hasse_cmd->add_option("--n", hasse_n, "family size for chain/antichain")->capture_default_str();
  hasse_cmd->add_option("--s", hasse_s, "chain generator")->capture_default_str();
  hasse_cmd->add_option("--elements", hasse_elements, "antichain elements g_1 ... g_n");
  hasse_cmd->add_option("--out", hasse_out, "write DOT here instead of stdout");
  hasse_cmd->callback([&] {
    chosen = hasse_cmd;
    run = [&] {
      const Group group = parse_group(hasse_group);
      std::vector<PosetNode> nodes;
      if (hasse_family == "table") {
        if (hasse_domain.empty()) throw DomainError("--family table needs --domain");
        const GroupSubset domain = parse_subset(group, hasse_domain);
        for (const Pattern& p : enumerate_patterns(domain, Alphabet(2), limits)) {
          const PatternCA ca = PatternCA::with_default_write(p);
          if (is_idempotent_by_composition(ca.rule(), limits)) nodes.push_back({ca.label(), ca.rule()});
        }
        nodes.push_back({"id", LocalRule::identity(group, Alphabet(2))});
      } else if (hasse_family == "chain") {
        for (const auto& ca : chain_family(group, parse_element(group, hasse_s), hasse_n, limits)) {
          nodes.push_back({ca.domain().str() + ":" + ca.label(), ca.rule()});
        }
      } else {
        std::vector<Element> gs;
        if (hasse_elements.empty()) {
          if (group.is_finite() || group.rank() != 1) throw DomainError("--family antichain needs --elements");
          for (std::size_t i = 1; i <= hasse_n; ++i) gs.push_back(Element::scalar(static_cast<std::int64_t>(i)));
        } else {
          for (const auto& text : hasse_elements) gs.push_back(parse_element(group, text));
        }
        for (const auto& ca : antichain_family(group, gs, std::min(hasse_n, gs.size()), limits)) {
          nodes.push_back({ca.domain().str() + ":" + ca.label(), ca.rule()});
        }
      }
      const Poset poset = hasse(std::move(nodes), limits, globals.threads);
      const std::string dot = poset.to_dot();
      json labels = json::array();
      for (const auto& node : poset.nodes) labels.push_back(node.label);
      json data{{"nodes", labels}, {"covers", poset.covers}, {"equivalent", poset.equivalent},
                {"failures", poset.failures}};
      if (!hasse_out.empty()) {
        write_file(hasse_out, dot);
        return Output{data, "wrote " + hasse_out + "\n"};
      }
      return Output{data, dot};
    };
  });

  // shift
  auto* shift_cmd = app.add_subcommand("shift", "one-dimensional SFT analytics for X_p");
  shift_cmd->require_subcommand(1);
  bool shift_json = false;

  PatternArgs words_args;
  std::size_t words_n = 1;
  auto* words_cmd = shift_cmd->add_subcommand("words", "number of length-n words of X_p");
  add_pattern_options(words_cmd, words_args);
  words_cmd->add_option("--n", words_n, "word length")->required()->check(CLI::PositiveNumber);
  words_cmd->add_flag("--json", shift_json);
  words_cmd->callback([&] {
    chosen = words_cmd;
    run = [&] {
      const std::uint64_t count = count_words(resolve_pattern(words_args).pattern, words_n, limits);
      json data{{"n", words_n}, {"words", count}};
      return Output{data, shift_json ? data.dump() + "\n" : std::to_string(count) + "\n"};
    };
  });

  PatternArgs entropy_args;
  double entropy_tol = 1e-12;
  auto* entropy_cmd = shift_cmd->add_subcommand("entropy", "topological entropy of X_p");
  add_pattern_options(entropy_cmd, entropy_args);
  entropy_cmd->add_option("--tol", entropy_tol, "power iteration tolerance")->capture_default_str();
  entropy_cmd->add_flag("--json", shift_json);
  entropy_cmd->callback([&] {
    chosen = entropy_cmd;
    run = [&] {
      const EntropyResult h = entropy(resolve_pattern(entropy_args).pattern, entropy_tol, limits);
      json data{{"bits", h.bits}, {"nats", h.nats}, {"spectral_radius", h.spectral_radius},
                {"iterations", h.iterations}};
      return Output{data, shift_json ? data.dump() + "\n" : format_double(h.bits) + "\n"};
    };
  });

  std::string subset_p, subset_q, subset_group = "zd:1";
  int subset_alphabet = 2;
  auto* subset_cmd = shift_cmd->add_subcommand("subset", "decide X_p ⊆ X_q");
  subset_cmd->add_option("--p", subset_p)->required();
  subset_cmd->add_option("--q", subset_q)->required();
  subset_cmd->add_option("--group", subset_group)->capture_default_str();
  subset_cmd->add_option("--alphabet", subset_alphabet)->capture_default_str();
  subset_cmd->add_flag("--json", shift_json);
  subset_cmd->callback([&] {
    chosen = subset_cmd;
    run = [&] {
      const Pattern p = resolve_operand(subset_p, subset_group, subset_alphabet).pattern;
      const Pattern q = resolve_operand(subset_q, subset_group, subset_alphabet).pattern;
      const bool inside = sft_subset(p, q, limits);
      json data{{"subset", inside}};
      return Output{data, shift_json ? data.dump() + "\n" : std::string(inside ? "true\n" : "false\n")};
    };
  });

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute force over a finite carrier");
  oracle_cmd->require_subcommand(1);
  PatternArgs oracle_args;
  auto* oracle_idem = oracle_cmd->add_subcommand("idem", "global idempotency vs the local criterion");
  add_pattern_options(oracle_idem, oracle_args);
  oracle_idem->callback([&] {
    chosen = oracle_idem;
    run = [&] {
      const PatternCA ca = resolve_ca(resolve_pattern(oracle_args));
      if (!ca.group().is_finite()) throw DomainError("oracle needs a finite carrier (cayley:<path>)");
      const bool global = global_idempotent(ca.rule(), ca.group(), limits);
      const bool local = is_idempotent_by_composition(ca.rule(), limits);
      return Output{json{{"label", ca.label()}, {"global_idempotent", global}, {"composition", local},
                         {"agree", global == local}},
                    std::nullopt};
    };
  });
  auto* oracle_fix = oracle_cmd->add_subcommand("fix", "fixed points vs p-avoiding configurations");
  add_pattern_options(oracle_fix, oracle_args);
  oracle_fix->callback([&] {
    chosen = oracle_fix;
    run = [&] {
      const PatternCA ca = resolve_ca(resolve_pattern(oracle_args));
      if (!ca.group().is_finite()) throw DomainError("oracle needs a finite carrier (cayley:<path>)");
      const auto fixed = fix_set(ca.rule(), ca.group(), limits);
      const auto avoiding = avoiding_set(ca.pattern(), ca.group(), limits);
      return Output{json{{"label", ca.label()}, {"fixed", fixed.size()}, {"avoiding", avoiding.size()},
                         {"equal", fixed == avoiding}},
                    std::nullopt};
    };
  });

  // rule
  auto* rule_cmd = app.add_subcommand("rule", "local rule utilities");
  rule_cmd->require_subcommand(1);
  RuleArgs rule_args;
  auto* rule_wolfram = rule_cmd->add_subcommand("wolfram", "Wolfram number of an elementary rule");
  add_rule_options(rule_wolfram, rule_args);
  rule_wolfram->callback([&] {
    chosen = rule_wolfram;
    run = [&] {
      const int number = wolfram_number(resolve_rule(rule_args));
      return Output{json{{"wolfram", number}}, std::to_string(number) + "\n"};
    };
  });
  auto* rule_mms = rule_cmd->add_subcommand("mms", "minimal memory set");
  add_rule_options(rule_mms, rule_args);
  rule_mms->callback([&] {
    chosen = rule_mms;
    run = [&] {
      const ReducedRule reduced = minimal_memory_set(resolve_rule(rule_args));
      return Output{json{{"memory", reduced.memory.str()}, {"table", reduced.rule.table_string()}}, std::nullopt};
    };
  });
  auto* rule_detect = rule_cmd->add_subcommand("detect-pattern", "recover (p, a) with tau = tau_p^a");
  add_rule_options(rule_detect, rule_args);
  rule_detect->callback([&] {
    chosen = rule_detect;
    run = [&] {
      const auto found = as_pattern_rule(resolve_rule(rule_args));
      json data{{"pattern", nullptr}, {"write", nullptr}};
      if (found) {
        data["domain"] = found->first.domain().str();
        data["pattern"] = found->first.str();
        data["write"] = found->second;
      }
      return Output{data, std::nullopt};
    };
  });

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      if (args[i] == "--job") {
        const std::string path = args[i + 1];
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        const auto tokens = job_tokens(path);
        args.insert(args.end(), tokens.begin(), tokens.end());
        break;
      }
    }
  } catch (const DomainError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Output out = run();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (globals.report) {
      std::string command;
      for (const CLI::App* c = chosen; c != nullptr && c->get_parent() != nullptr; c = c->get_parent()) {
        command = c->get_name() + (command.empty() ? "" : " " + command);
      }
      json report{{"tool", "idca"}, {"version", IDCA_VERSION}, {"command", command},
                  {"inputs", echo_inputs(chosen)}, {"threads", globals.threads}, {"result", out.data}};
      if (globals.timings) report["timings"] = {{"wall_ms", ms}};
      std::cout << report.dump(2) << "\n";
    } else if (out.text) {
      std::cout << *out.text;
    } else {
      std::cout << out.data.dump(2) << "\n";
    }
    return 0;
  } catch (const SizeCapError& ex) {
    std::cerr << "size cap: " << ex.what() << "\n";
    return 3;
  } catch (const DomainError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 1;
  }
}
