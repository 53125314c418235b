#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ord/codes.hpp"
#include "ord/enumerate.hpp"
#include "ord/errors.hpp"
#include "ord/fundamental.hpp"
#include "ord/interrupt.hpp"
#include "ord/parse.hpp"
#include "ord/ramsey.hpp"
#include "ord/serialize.hpp"

using json = nlohmann::ordered_json;
using namespace ord;

namespace {

struct Output {
  json data;
  std::string text;  // text-mode rendering of exactly the same fields
};

std::string bool_name(bool v) { return v ? "true" : "false"; }

Nat parse_nat(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw PreconditionError("not a natural number: " + s);
  }
  return Nat(s);
}

Coloring load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open coloring file: " + path);
  return Coloring::read_fixture(in);
}

std::vector<Ordinal> parse_gammas(const std::string& text) {
  std::vector<Ordinal> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::string piece = text.substr(
        start, semi == std::string::npos ? std::string::npos : semi - start);
    if (piece.find_first_not_of(" \t") != std::string::npos) {
      out.push_back(parse_ordinal(piece));
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

void signal_handler(int) { request_interrupt(); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, signal_handler);
  std::signal(SIGTERM, signal_handler);

  CLI::App app{"ordinal combinatorics workbench"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::string expr, expr2, set_text, nat_text, x_text, iter_text, coloring_path;
  std::string gamma_flavor, alpha_text = "w", gammas_text, cap_text = "1000000";
  std::string budget_text = "1000000", iter_cap_text = "1000000", l_text = "0";
  unsigned level = 1, arity = 2, colors = 2, workers = 1;
  std::string min_text = "3";

  auto* c_eval = app.add_subcommand("eval", "parse and canonicalize an ordinal");
  c_eval->add_option("expr", expr)->required();

  auto* c_cmp = app.add_subcommand("cmp", "compare two ordinals");
  c_cmp->add_option("expr1", expr)->required();
  c_cmp->add_option("expr2", expr2)->required();

  auto* c_fund = app.add_subcommand("fund", "fundamental sequence step or trace");
  c_fund->add_option("expr", expr)->required();
  c_fund->add_option("x", x_text);
  c_fund->add_option("--iter", iter_text, "iterate over a set, e.g. 3,4,5 or 3..9");

  auto* c_large = app.add_subcommand("large", "largeness of a finite set");
  c_large->add_option("expr", expr)->required();
  c_large->add_option("set", set_text)->required();

  auto* c_minlarge = app.add_subcommand("minlarge", "least large interval endpoint");
  c_minlarge->add_option("expr", expr)->required();
  c_minlarge->add_option("x0", x_text)->required();
  c_minlarge->add_option("--cap", cap_text, "search cap")->capture_default_str();

  auto* c_code = app.add_subcommand("code", "arithmetic code of an ordinal");
  c_code->add_option("expr", expr)->required();

  auto* c_decode = app.add_subcommand("decode", "ordinal of an arithmetic code");
  c_decode->add_option("nat", nat_text)->required();

  auto* c_cfund = app.add_subcommand("cfund", "fundamental sequence on codes");
  c_cfund->add_option("nat", nat_text)->required();
  c_cfund->add_option("x", x_text)->required();

  auto* c_tree = app.add_subcommand("tree", "grow the insertion tree of a coloring");
  c_tree->add_option("--coloring", coloring_path)->required();
  c_tree->add_option("--level", level, "homogeneity level, must be arity-1")
      ->required();
  c_tree->add_option("--gamma", gamma_flavor, "attach a descent certificate")
      ->check(CLI::IsMember({"pairs", "general"}));
  c_tree->add_option("--alpha", alpha_text, "seed exponent for --gamma general");

  auto* c_php = app.add_subcommand("php", "pigeonhole step on an arity-1 coloring");
  c_php->add_option("--coloring", coloring_path)->required();

  auto* c_pipe = app.add_subcommand("pipeline", "dimension-reduction pipeline");
  c_pipe->add_option("--coloring", coloring_path)->required();
  c_pipe->add_option("--budget", budget_text, "insertion budget")
      ->capture_default_str();

  auto* c_thresh =
      app.add_subcommand("threshold", "least N forcing large homogeneous sets");
  c_thresh->add_option("--arity", arity)->capture_default_str();
  c_thresh->add_option("--colors", colors)->capture_default_str();
  c_thresh->add_option("--min", min_text)->capture_default_str();
  c_thresh->add_option("--cap", cap_text)->required();
  c_thresh->add_option("--workers", workers)->capture_default_str();

  auto* c_verify = app.add_subcommand("verify411", "check a descent-bound instance");
  c_verify->add_option("--set", set_text)->required();
  c_verify->add_option("--l", l_text)->capture_default_str();
  c_verify->add_option("--gammas", gammas_text, "semicolon-separated ordinals")
      ->required();
  c_verify->add_option("--iter-cap", iter_cap_text)->capture_default_str();

  // let the global --format appear after a subcommand as well
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    Output out;

    if (*c_eval) {
      const Ordinal a = parse_ordinal(expr);
      out.data["canonical"] = render(a);
      out.text = render(a);
    } else if (*c_cmp) {
      const auto c = compare(parse_ordinal(expr), parse_ordinal(expr2));
      const std::string name = c == std::strong_ordering::less      ? "LT"
                               : c == std::strong_ordering::greater ? "GT"
                                                                    : "EQ";
      out.data["order"] = name;
      out.text = name;
    } else if (*c_fund) {
      const Ordinal a = parse_ordinal(expr);
      if (!iter_text.empty()) {
        if (!x_text.empty()) {
          throw PreconditionError("give either x or --iter, not both");
        }
        const DescentTrace trace = fund_iter(a, FiniteSet::parse(iter_text));
        out.data = trace_to_json(trace);
        out.text = trace_to_text(trace);
      } else {
        if (x_text.empty()) throw PreconditionError("fund needs x or --iter");
        const Ordinal r = fund(a, parse_nat(x_text));
        out.data["result"] = render(r);
        out.text = render(r);
      }
    } else if (*c_large) {
      const bool l = is_large(parse_ordinal(expr), FiniteSet::parse(set_text));
      out.data["large"] = l;
      out.text = bool_name(l);
    } else if (*c_minlarge) {
      const auto r = minimal_large_endpoint(parse_ordinal(expr), parse_nat(x_text),
                                            parse_nat(cap_text));
      out.data["endpoint"] = r ? json(r->str()) : json(nullptr);
      out.text = r ? r->str() : "none";
    } else if (*c_code) {
      const Nat c = encode(parse_ordinal(expr));
      out.data["code"] = c.str();
      out.text = c.str();
    } else if (*c_decode) {
      const Ordinal a = decode(parse_nat(nat_text));
      out.data["ordinal"] = render(a);
      out.text = render(a);
    } else if (*c_cfund) {
      const Nat r = code_fund(parse_nat(nat_text), parse_nat(x_text));
      out.data["code"] = r.str();
      out.text = r.str();
    } else if (*c_tree) {
      const Coloring coloring = load_coloring(coloring_path);
      const FiniteSet& X = coloring.ground();
      const ErdosRadoTree tree = build_er_tree(X, coloring, level);
      out.data["tree"] = tree_to_json(tree);
      out.text = tree.to_text();
      if (!gamma_flavor.empty()) {
        GammaTrace trace;
        if (gamma_flavor == "pairs") {
          trace = gamma_sequence_pairs(X, coloring, tree);
        } else {
          trace = gamma_sequence_general(X, coloring, tree, parse_ordinal(alpha_text));
        }
        const CertificateReport rep = check_descent_certificate(tree, trace, coloring);
        if (!rep.holds) {
          throw FalsificationError("descent certificate violated: " +
                                   rep.issues.front().what);
        }
        out.data["gamma"] = gamma_to_json(trace);
        out.text += gamma_to_text(trace);
      }
    } else if (*c_php) {
      const Coloring coloring = load_coloring(coloring_path);
      const FiniteSet H = php_homogeneous(coloring.ground(), coloring);
      out.data["class"] = H.to_string();
      out.text = H.to_string();
    } else if (*c_pipe) {
      const Coloring coloring = load_coloring(coloring_path);
      const auto H = run_pipeline(coloring.ground(), coloring, parse_nat(budget_text));
      out.data["homogeneous"] = H ? json(H->to_string()) : json(nullptr);
      out.text = H ? H->to_string() : "none";
    } else if (*c_thresh) {
      if (arity < 2) throw PreconditionError("threshold requires arity >= 2");
      try {
        const auto r = ph_threshold(arity - 2, colors, parse_nat(min_text),
                                    parse_nat(cap_text), workers);
        out.data["threshold"] = r ? json(r->str()) : json(nullptr);
        out.text = r ? r->str() : "none";
      } catch (const ResourceLimitError&) {
        std::cerr << "partial progress: interrupted below cap " << cap_text << "\n";
        throw;
      }
    } else if (*c_verify) {
      const Verify411Report report =
          verify411(FiniteSet::parse(set_text), parse_nat(l_text),
                    parse_gammas(gammas_text), parse_nat(iter_cap_text));
      out.data = report_to_json(report);
      out.text = report_to_text(report);
    }

    if (format == "structured") {
      std::cout << out.data.dump(2) << "\n";
    } else {
      std::cout << out.text;
      if (!out.text.empty() && out.text.back() != '\n') std::cout << "\n";
    }
    return 0;
  } catch (const FalsificationError& e) {
    std::cerr << "falsification: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
