#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "polylog/error.hpp"
#include "polylog/expr.hpp"
#include "polylog/identities.hpp"
#include "polylog/selftest.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUserError = 1;
constexpr int kInternalError = 2;

int default_digits() {
  const char* env = std::getenv("POLYLOG_DIGITS");
  if (env == nullptr || *env == '\0') return 30;
  try {
    std::size_t used = 0;
    const int d = std::stoi(env, &used);
    if (used == std::string(env).size()) return d;
  } catch (const std::exception&) {
  }
  std::cerr << "error: POLYLOG_DIGITS must be an integer, got '" << env << "'\n";
  std::exit(kUserError);
}

bool valid_digits(int digits) {
  if (digits >= polylog::Precision::kMinDigits && digits <= polylog::Precision::kMaxDigits) return true;
  std::cerr << "error: digits must lie in [10, 1000], got " << digits << "\n";
  return false;
}

// Evaluates one line; returns an exit status.
int evaluate_line(const std::string& source, int digits, bool ezface) {
  try {
    const polylog::ExprPtr e = polylog::parse_expression(source);
    std::cout << polylog::format_value(polylog::eval_expression(*e, digits), digits, ezface) << "\n";
    return kOk;
  } catch (const polylog::ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    if (e.position() <= source.size()) std::cerr << "  " << source << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kUserError;
  } catch (const polylog::PrecisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const polylog::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

int run_repl(int digits, bool ezface) {
  const bool interactive = isatty(STDIN_FILENO) != 0;
  std::string line;
  while (true) {
    if (interactive) std::cerr << "polylog[" << digits << "]> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line == ":quit" || line == ":q") break;
    if (line.rfind(":digits", 0) == 0) {
      try {
        const int d = std::stoi(line.substr(7));
        if (valid_digits(d)) digits = d;
      } catch (const std::exception&) {
        std::cerr << "error: usage :digits N\n";
      }
      continue;
    }
    if (line.front() == ':') {
      std::cerr << "error: unknown command " << line << " (use :digits N or :quit)\n";
      continue;
    }
    evaluate_line(line, digits, ezface);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple polylogarithm calculator"};
  app.require_subcommand(1);

  int digits = 0;
  bool ezface = false;
  std::string expression;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one expression");
  eval_cmd->add_option("expression", expression, "Expression, e.g. \"Pi^6/z(6)\"")->required();
  eval_cmd->add_option("--digits,-d", digits, "Significant digits (10..1000)");
  eval_cmd->add_flag("--ezface-format", ezface, "Print relations as \"12., -1., ...\"");

  auto* repl_cmd = app.add_subcommand("repl", "Read expressions from standard input");
  repl_cmd->add_option("--digits,-d", digits, "Significant digits (10..1000)");
  repl_cmd->add_flag("--ezface-format", ezface, "Print relations as \"12., -1., ...\"");

  int weight = 6;
  std::string out_path;
  auto* ids_cmd = app.add_subcommand("identities", "Identity corpus tools");
  ids_cmd->require_subcommand(1);
  auto* export_cmd = ids_cmd->add_subcommand("export", "Write the identity corpus as JSON lines");
  export_cmd->add_option("--weight,-w", weight, "Maximum weight (2..10)")->check(CLI::Range(2, 10));
  export_cmd->add_option("--out,-o", out_path, "Output file")->required();

  std::string level = "fast";
  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  self_cmd->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUserError;
  }

  try {
    if (*eval_cmd || *repl_cmd) {
      if (digits == 0) digits = default_digits();
      if (!valid_digits(digits)) return kUserError;
      return *eval_cmd ? evaluate_line(expression, digits, ezface) : run_repl(digits, ezface);
    }
    if (*export_cmd) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kUserError;
      }
      const auto corpus = polylog::identity_corpus(weight);
      out << polylog::export_json_lines(corpus);
      std::cerr << "wrote " << corpus.size() << " identities to " << out_path << "\n";
      return kOk;
    }
    if (*self_cmd) {
      const auto results = polylog::run_acceptance(
          level == "full" ? polylog::SelftestLevel::Full : polylog::SelftestLevel::Fast,
          [](const polylog::CriterionResult& r) { std::cout << polylog::format_criterion(r) << std::endl; });
      int failed = 0;
      for (const auto& r : results) failed += r.passed ? 0 : 1;
      std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
      return failed == 0 ? kOk : kInternalError;
    }
  } catch (const polylog::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kOk;
}
