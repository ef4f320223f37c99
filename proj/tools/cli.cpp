#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "limiter/cluster.hpp"
#include "limiter/corpus.hpp"
#include "limiter/errors.hpp"
#include "limiter/limiter_space.hpp"
#include "limiter/literal.hpp"
#include "limiter/oracle.hpp"
#include "limiter/sequence_parser.hpp"
#include "limiter/verify.hpp"

namespace limiter::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json_output = false;
  std::optional<std::uint64_t> oracle_n;
  std::optional<double> oracle_delta;
  std::optional<double> oracle_m;
  std::optional<std::uint64_t> scan_bound;
  std::optional<std::uint64_t> horizon;
};

// What a command hands back to the printer.
struct Outcome {
  json inputs = json::object();
  json result;
  std::vector<std::string> diagnostics;
  std::string text;  // human-readable rendering
  int code = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read expression file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "@path" expands to every expression in the file; anything else is one
/// expression.
std::vector<SequenceExpr> expand(const std::vector<std::string>& args) {
  std::vector<SequenceExpr> out;
  for (const auto& a : args) {
    if (!a.empty() && a.front() == '@') {
      auto list = parse_expr_list(read_file(a.substr(1)));
      out.insert(out.end(), list.begin(), list.end());
    } else {
      out.push_back(parse_expr(a));
    }
  }
  return out;
}

json printed(const std::vector<SequenceExpr>& exprs) {
  auto arr = json::array();
  for (const auto& e : exprs) arr.push_back(print_expr(e));
  return arr;
}

std::string class_name(const ConvergenceClass& c) {
  if (auto* conv = std::get_if<ConvergentTo>(&c)) return "convergent to " + to_string(conv->limit);
  return "oscillating";
}

CertifyConfig certify_config(const Options& o) {
  CertifyConfig cfg;
  if (o.scan_bound) cfg.scan_bound = *o.scan_bound;
  if (o.horizon) cfg.horizon = *o.horizon;
  return cfg;
}

OracleConfig oracle_config(const Options& o) {
  auto cfg = OracleConfig::from_environment();
  if (o.oracle_n) cfg.prefix_length = *o.oracle_n;
  if (o.oracle_delta) cfg.gap_threshold = *o.oracle_delta;
  if (o.oracle_m) cfg.infinity_threshold = *o.oracle_m;
  cfg.validate();
  return cfg;
}

Outcome cmd_parse(const std::vector<std::string>& args) {
  const auto exprs = expand(args);
  Outcome r;
  r.inputs["exprs"] = printed(exprs);
  r.result = json::array();
  for (const auto& e : exprs) {
    r.result.push_back({{"expr", print_expr(e)}, {"constructor", constructor_name(e)}, {"depth", depth(e)}});
    r.text += print_expr(e) + "\n";
  }
  return r;
}

Outcome cmd_limit(const std::vector<std::string>& args) {
  const auto exprs = expand(args);
  Outcome r;
  r.inputs["exprs"] = printed(exprs);
  r.result = json::array();
  for (const auto& e : exprs) {
    const auto p = limit_of(e);
    const auto x = classical_value(p);
    r.result.push_back(to_json(p));
    if (exprs.size() > 1) r.text += print_expr(e) + "\n  ";
    r.text += "lambda: " + to_string(p.lambda()) + "\n";
    if (exprs.size() > 1) r.text += "  ";
    r.text += "classical: " + (x ? to_string(*x) : std::string("none")) + "\n";
  }
  return r;
}

Outcome cmd_cluster(const std::vector<std::string>& args) {
  const auto exprs = expand(args);
  Outcome r;
  r.inputs["exprs"] = printed(exprs);
  r.result = json::array();
  for (const auto& e : exprs) {
    const auto lambda = cluster_set(e);
    const auto cls = convergence_class(e);
    r.result.push_back({{"expr", print_expr(e)},
                        {"lambda", to_string(lambda)},
                        {"set", to_json(lambda)},
                        {"class", class_name(cls)}});
    r.text += print_expr(e) + "\n  " + to_string(lambda) + "  (" + class_name(cls) + ")\n";
  }
  return r;
}

Outcome cmd_similar(const std::vector<std::string>& args) {
  const auto exprs = expand(args);
  if (exprs.size() != 2) throw ArityError("similar takes exactly two expressions, got " + std::to_string(exprs.size()));
  Outcome r;
  r.inputs["exprs"] = printed(exprs);
  const auto l1 = cluster_set(exprs[0]);
  const auto l2 = cluster_set(exprs[1]);
  const bool same = similar(exprs[0], exprs[1]);
  r.result = {{"similar", same}, {"lambda1", to_string(l1)}, {"lambda2", to_string(l2)}};
  r.text = std::string(same ? "true" : "false") + "\n  " + to_string(l1) + "\n  " + to_string(l2) + "\n";
  return r;
}

Outcome cmd_member(const std::string& expr_arg, const std::vector<std::string>& open_args, bool witness) {
  const auto exprs = expand({expr_arg});
  LimiterOpen open;
  for (const auto& o : open_args) open.basics.push_back({parse_open_set(o)});
  Outcome r;
  r.inputs["exprs"] = printed(exprs);
  r.inputs["open"] = to_json(open);
  r.result = json::array();
  for (const auto& e : exprs) {
    const auto p = limit_of(e);
    const bool in = member_open(p, open);
    json item{{"expr", print_expr(e)}, {"lambda", to_string(p.lambda())}, {"member", in}};
    if (exprs.size() > 1) r.text += print_expr(e) + ": ";
    r.text += in ? "true" : "false";
    if (witness) {
      const auto w = axiom5_witness(p, open);
      item["witness"] = to_string(w.generator);
      r.text += "  via " + to_string(w.generator) + "*";
    }
    r.text += "\n";
    r.result.push_back(std::move(item));
  }
  return r;
}

Outcome cmd_certify(const std::string& expr_arg, const std::string& open_arg, const CertifyConfig& cfg) {
  const auto exprs = expand({expr_arg});
  const auto open = parse_open_set(open_arg);
  Outcome r;
  r.inputs["exprs"] = printed(exprs);
  r.inputs["open"] = to_string(open);
  r.inputs["scanBound"] = cfg.scan_bound;
  r.inputs["horizon"] = cfg.horizon;
  r.result = json::array();
  for (const auto& e : exprs) {
    const auto cert = certify_tail(e, open, cfg);
    r.result.push_back(to_json(cert));
    if (exprs.size() > 1) r.text += print_expr(e) + "\n  ";
    r.text += "N = " + std::to_string(cert.start_index) + " (terms N.." + std::to_string(cert.start_index + cert.horizon) +
              " checked, " + cert.justification + ")\n";
  }
  return r;
}

Outcome cmd_oracle(const std::vector<std::string>& args, const OracleConfig& cfg) {
  const auto exprs = expand(args);
  Outcome r;
  r.inputs["exprs"] = printed(exprs);
  r.inputs["N"] = cfg.prefix_length;
  r.inputs["delta"] = cfg.gap_threshold;
  r.inputs["M"] = cfg.infinity_threshold;
  r.result = json::array();
  for (const auto& e : exprs) {
    const auto est = estimate_cluster(e, cfg);
    const auto lambda = cluster_set(e);
    const double d = hausdorff_compactified(est, lambda);
    r.result.push_back({{"expr", print_expr(e)}, {"estimate", to_json(est)}, {"symbolic", to_string(lambda)}, {"distance", d}});
    std::ostringstream line;
    if (exprs.size() > 1) line << print_expr(e) << "\n  ";
    line << "estimate: " << est.mapped_back << "\n";
    line << (exprs.size() > 1 ? "  " : "") << "symbolic: " << to_string(lambda) << "\n";
    line << (exprs.size() > 1 ? "  " : "") << "distance: " << d << "\n";
    r.text += line.str();
  }
  return r;
}

Outcome cmd_verify(const std::string& suite, const VerifyConfig& cfg) {
  Outcome r;
  r.inputs["suite"] = suite;
  r.inputs["seed"] = cfg.seed;
  const auto corpus = builtin_corpus();
  r.inputs["corpusSize"] = corpus.size();
  const auto checks = run_suite(suite, corpus, cfg);
  r.result = json::array();
  for (const auto& c : checks) {
    r.result.push_back(to_json(c));
    r.text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + " (" + std::to_string(c.cases) + " cases)";
    if (!c.passed) {
      r.text += ": " + c.detail;
      r.diagnostics.push_back(c.name + ": " + c.detail);
      r.code = kDomain;
    }
    r.text += "\n";
  }
  return r;
}

std::string syntax_message(const SyntaxError& e) {
  std::string msg = "syntax error at line " + std::to_string(e.line()) + ", column " + std::to_string(e.column()) + ": " +
                    e.what();
  if (!e.expected().empty()) {
    msg += " (expected";
    const char* sep = " ";
    for (const auto& x : e.expected()) {
      msg += sep + x;
      sep = ", ";
    }
    msg += ")";
  }
  return msg;
}

json error_json(const char* cls, const std::string& message) { return {{"class", cls}, {"message", message}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster sets and canonical limits of real sequences"};
  app.name("limiter");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json_output, "Emit the structured output document");
  app.add_option("--oracle-n", opt.oracle_n, "Oracle prefix length N (env ORACLE_N)");
  app.add_option("--oracle-delta", opt.oracle_delta, "Oracle gap threshold (env ORACLE_DELTA)");
  app.add_option("--oracle-m", opt.oracle_m, "Oracle infinity threshold M (env ORACLE_M)");
  app.add_option("--scan-bound", opt.scan_bound, "Largest start index certify will scan to");
  app.add_option("--horizon", opt.horizon, "Number of terms each certificate covers");

  std::vector<std::string> exprs;
  std::string expr;
  std::string open;
  std::vector<std::string> opens;
  bool want_witness = false;
  std::string suite;
  bool manifest = false;
  VerifyConfig vcfg;

  auto* parse = app.add_subcommand("parse", "Syntax check and canonical print");
  parse->add_option("exprs", exprs, "Expressions or @file")->required();
  auto* limit = app.add_subcommand("limit", "Cluster set and classical limit");
  limit->add_option("exprs", exprs, "Expressions or @file")->required();
  auto* cluster = app.add_subcommand("cluster", "Cluster set and convergence class");
  cluster->add_option("exprs", exprs, "Expressions or @file")->required();
  auto* sim = app.add_subcommand("similar", "Do two sequences have the same cluster set");
  sim->add_option("exprs", exprs, "Two expressions (or @file holding two)")->required();
  auto* member = app.add_subcommand("member", "Membership of Lim(x) in a union of basic opens O*");
  member->add_option("expr", expr, "Expression or @file")->required();
  member->add_option("open", opens, "Open set literals; several form a union of basics")->required();
  member->add_flag("--witness", want_witness, "Report the basic open containing the point");
  auto* certify = app.add_subcommand("certify", "Find N with x_N..x_{N+K} inside an open set");
  certify->add_option("expr", expr, "Expression or @file")->required();
  certify->add_option("open", open, "Open set literal")->required();
  auto* oracle = app.add_subcommand("oracle", "Floating-point cluster estimate from a finite prefix");
  oracle->add_option("exprs", exprs, "Expressions or @file")->required();
  auto* verify = app.add_subcommand("verify", "Run an invariant suite over the built-in corpus");
  verify->add_option("suite", suite, "properties | theorem1 | axioms | universality | all")
      ->check(CLI::IsMember({"properties", "theorem1", "axioms", "universality", "all"}));
  verify->add_flag("--manifest", manifest, "Print the corpus manifest and exit");
  verify->add_option("--seed", vcfg.seed, "Seed for the randomized families");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (verify->parsed() && suite.empty() && !manifest) throw CLI::RequiredError("suite");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "limiter: " << e.what() << "\n";
    return kSyntax;
  }

  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  if (verify->parsed() && manifest) {
    out << corpus_manifest();
    return kOk;
  }

  Outcome outcome;
  json error;
  // Anything thrown before evaluation starts is an input problem (exit 2).
  bool parsing = true;
  try {
    if (parse->parsed()) {
      outcome = cmd_parse(exprs);
    } else if (limit->parsed()) {
      outcome = cmd_limit(exprs);
    } else if (cluster->parsed()) {
      outcome = cmd_cluster(exprs);
    } else if (sim->parsed()) {
      outcome = cmd_similar(exprs);
    } else if (member->parsed()) {
      outcome = cmd_member(expr, opens, want_witness);
    } else if (certify->parsed()) {
      const auto cfg = certify_config(opt);
      outcome = cmd_certify(expr, open, cfg);
    } else if (oracle->parsed()) {
      const auto cfg = oracle_config(opt);
      outcome = cmd_oracle(exprs, cfg);
    } else if (verify->parsed()) {
      vcfg.certify = certify_config(opt);
      parsing = false;
      outcome = cmd_verify(suite, vcfg);
    }
  } catch (const SyntaxError& e) {
    outcome.code = kSyntax;
    outcome.diagnostics.push_back(syntax_message(e));
    error = error_json("SyntaxError", e.what());
    error["line"] = e.line();
    error["column"] = e.column();
    error["expected"] = e.expected();
  } catch (const ArityError& e) {
    outcome.code = kSyntax;
    outcome.diagnostics.push_back(std::string("arity error: ") + e.what());
    error = error_json("ArityError", e.what());
  } catch (const NotANeighborhood& e) {
    outcome.code = kDomain;
    outcome.diagnostics.push_back(std::string("not a neighborhood: ") + e.what());
    error = error_json("NotANeighborhood", e.what());
  } catch (const HorizonExceeded& e) {
    outcome.code = kDomain;
    outcome.diagnostics.push_back(std::string("horizon exceeded: ") + e.what());
    error = error_json("HorizonExceeded", e.what());
  } catch (const NotMember& e) {
    outcome.code = kDomain;
    outcome.diagnostics.push_back(std::string("not a member: ") + e.what());
    error = error_json("NotMember", e.what());
  } catch (const EmptySetError& e) {
    outcome.code = parsing ? kSyntax : kDomain;
    outcome.diagnostics.push_back(std::string("empty set: ") + e.what());
    error = error_json("EmptySetError", e.what());
  } catch (const DomainError& e) {
    outcome.code = parsing ? kSyntax : kDomain;
    outcome.diagnostics.push_back(std::string("domain error: ") + e.what());
    error = error_json("DomainError", e.what());
  } catch (const LimiterError& e) {
    outcome.code = kDomain;
    outcome.diagnostics.push_back(e.what());
    error = error_json("LimiterError", e.what());
  }

  if (opt.json_output) {
    json doc{{"command", command},
             {"inputs", outcome.inputs},
             {"result", error.is_null() ? outcome.result : json(nullptr)},
             {"diagnostics", outcome.diagnostics}};
    if (!error.is_null()) doc["error"] = error;
    out << doc.dump(2) << "\n";
  } else {
    if (error.is_null()) out << outcome.text;
    for (const auto& d : outcome.diagnostics) err << "limiter: " << d << "\n";
  }
  return outcome.code;
}

}  // namespace limiter::cli
