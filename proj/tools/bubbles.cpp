// bubbles: classify cyclotomic Brauer and Kauffman quotients and check
// bubble identities. Reads one JSON document (stdin by default) and writes
// a report to stdout.

#include "bubbles/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

struct Flags {
  std::optional<int> order;
  std::string format = "json";
  bool oracle = false;
  bool corrupt = false;
  unsigned threads = 0;
  std::string input = "-";
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--order", f.order, "Truncation order N (default 64, minimum 8)");
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--input", f.input, "Input JSON file, '-' for stdin");
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bubble generating functions and cyclotomic quotients"};
  app.require_subcommand(1);
  Flags f;

  auto* brauer = app.add_subcommand("brauer", "Brauer category computations");
  brauer->require_subcommand(1);
  auto* b_classify = brauer->add_subcommand("classify", "Minimal polynomial of the dot for (p, O)");
  auto* b_omega = brauer->add_subcommand("omega", "Bubble values from roots or from even values");
  auto* b_check = brauer->add_subcommand("check", "Admissibility of a bubble sequence");
  auto* kauffman = app.add_subcommand("kauffman", "Kauffman category computations");
  kauffman->require_subcommand(1);
  auto* k_classify = kauffman->add_subcommand("classify", "Minimal polynomial of the dot for (p, roo)");
  auto* k_series = kauffman->add_subcommand("series", "Bubble series of f or of a bubble sequence");
  auto* suite = app.add_subcommand("suite", "Run the identity suite");

  for (auto* cmd : {b_classify, b_omega, b_check, k_classify, k_series, suite}) add_common(cmd, f);
  for (auto* cmd : {b_classify, k_classify}) cmd->add_flag("--oracle", f.oracle, "Cross-check with brute force");
  suite->add_flag("--corrupt", f.corrupt, "Inject a fault (harness check)");
  suite->add_option("--threads", f.threads, "Worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bubbles::cli::kExitUsage;
  }

  std::string command;
  if (b_classify->parsed()) command = "brauer classify";
  else if (b_omega->parsed()) command = "brauer omega";
  else if (b_check->parsed()) command = "brauer check";
  else if (k_classify->parsed()) command = "kauffman classify";
  else if (k_series->parsed()) command = "kauffman series";
  else command = "suite";

  bubbles::cli::Options opts;
  opts.order = f.order;
  opts.oracle = f.oracle;
  opts.corrupt = f.corrupt;
  opts.threads = f.threads;

  std::string text;
  if (command != "suite" || f.input != "-") {
    try {
      text = read_input(f.input);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return bubbles::cli::kExitUsage;
    }
  }

  const auto outcome = bubbles::cli::run_text(command, text, opts);
  std::cout << (f.format == "text" ? bubbles::cli::render_text(outcome) : bubbles::cli::render_json(outcome));
  if (outcome.report.contains("error")) std::cerr << "error: " << outcome.report["error"].get<std::string>() << "\n";
  return outcome.exit_code;
}
