// polymath: evaluate, convert, self-test and benchmark shared arithmetic and
// set-theoretic interpretations of the natural numbers.
//
// Exit codes: 0 success, 1 self-test failure, 2 syntax or usage error,
// 3 domain error, 4 resource limit.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bench.hpp"
#include "polymath/expr.hpp"
#include "polymath/polymath.hpp"
#include "selftest.hpp"

namespace {

using namespace polymath;

enum ExitCode : int {
  kOk = 0,
  kSelftestFailed = 1,
  kSyntax = 2,
  kDomain = 3,
  kResource = 4,
};

template <class F>
decltype(auto) with_repr(ReprTag repr, F&& f) {
  switch (repr) {
    case ReprTag::peano: return f(Peano{});
    case ReprTag::bitstack: return f(BitStack{});
    case ReprTag::hfs: return f(Hfs{});
    case ReprTag::bignat: break;
  }
  return f(BigNat{});
}

struct Options {
  std::string repr = "bignat";
  std::string show = "decimal";
  std::uint64_t max_exp = Limits{}.max_exponent;
  std::uint64_t max_powset = Limits{}.max_powerset_elements;

  Limits limits() const {
    Limits l;
    l.max_exponent = max_exp;
    l.max_powerset_elements = max_powset;
    return l;
  }
};

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--repr", opts.repr, "Interpretation used for evaluation")
      ->check(CLI::IsMember({"peano", "bitstack", "hfs", "bignat"}));
  cmd->add_option("--max-exp", opts.max_exp, "Largest exponent accepted by exp2/pow/powset");
  cmd->add_option("--max-powset", opts.max_powset, "Largest base set accepted by powset");
}

int cmd_eval(const Options& opts, const std::string& text) {
  const auto repr = *parse_repr_tag(opts.repr);
  const auto format = *parse_text_format(opts.show);
  const Limits limits = opts.limits();
  const Expr expr = parse_expr(text);
  std::cout << with_repr(repr, [&]<class N>(const N&) {
    return render<N>(evaluate<N>(expr, limits), format, limits);
  }) << '\n';
  return kOk;
}

int cmd_convert(const Options& opts, const std::string& value, const std::string& from,
                const std::string& to) {
  const auto repr = *parse_repr_tag(opts.repr);
  const auto in_format = from.empty() ? sniff_text_format(value) : parse_text_format(from);
  if (!in_format) throw SyntaxError("cannot tell the input format", 0);
  const auto out_format = *parse_text_format(to);
  const Limits limits = opts.limits();
  std::cout << with_repr(repr, [&]<class N>(const N&) {
    return print_value(parse_value<N>(value, *in_format, limits), out_format, limits);
  }) << '\n';
  return kOk;
}

int cmd_selftest(std::uint64_t bound) {
  const auto report = selftest::run(bound);
  report.print(std::cout);
  std::cout << (report.ok() ? "selftest: all properties hold\n"
                            : "selftest: FAILURES\n");
  return report.ok() ? kOk : kSelftestFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic and set theory over interchangeable representations of N"};
  app.require_subcommand(1);

  Options opts;

  std::string expr_text;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  add_common(eval, opts);
  eval->add_option("--show", opts.show, "Output format")
      ->check(CLI::IsMember({"decimal", "bij2", "hfs"}));
  eval->add_option("expr", expr_text, "Expression, e.g. \"powset(26)\"")->required();

  std::string value_text;
  std::string from_format;
  std::string to_format = "decimal";
  auto* convert = app.add_subcommand("convert", "Re-render a value in another format");
  add_common(convert, opts);
  convert->add_option("--from", from_format, "Input format (guessed when omitted)")
      ->check(CLI::IsMember({"decimal", "bij2", "hfs"}));
  convert->add_option("--to", to_format, "Output format")
      ->check(CLI::IsMember({"decimal", "bij2", "hfs"}));
  convert->add_option("value", value_text, "Value text")->required();

  std::uint64_t bound = 256;
  auto* selftest = app.add_subcommand("selftest", "Check every interpretation against the oracle");
  selftest->add_option("--bound", bound, "Largest operand exercised")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 20));

  std::string scenario;
  auto* bench = app.add_subcommand("bench", "Time the interpretations against each other");
  bench->add_option("scenario", scenario, "succ-chain | add-mul-grid | tower-succ")
      ->required()
      ->check(CLI::IsMember({"succ-chain", "add-mul-grid", "tower-succ"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kSyntax;
  }

  try {
    if (*eval) return cmd_eval(opts, expr_text);
    if (*convert) return cmd_convert(opts, value_text, from_format, to_format);
    if (*selftest) return cmd_selftest(bound);
    if (*bench) {
      bench::run(scenario, std::cout);
      return kOk;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kSyntax;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  }
  return kSyntax;
}
