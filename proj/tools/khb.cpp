// Batch front end: khb --session FILE [--out REPORT.json] [--svg DIR] ...
#include "khb/report.hpp"
#include "khb/session.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Khovanskii bases and Newton-Okounkov bodies: batch sessions"};
  std::string session_path, out_path, svg_dir;
  std::optional<int> degree_bound;
  std::uint64_t seed = 1;
  bool timing = false, print_only = false;
  app.add_option("--session", session_path, "session file")->required()->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "write the JSON report here (default: stdout)");
  app.add_option("--svg", svg_dir, "write SVG plots of planar bodies into this directory");
  app.add_option("--degree-bound", degree_bound, "degree bound for leaf checks (default: 2 * max basis degree)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "seed for the randomized extension check");
  app.add_flag("--timing", timing, "add elapsed_ms to each command (output is then not byte-stable)");
  app.add_flag("--print-session", print_only, "print the session in canonical form and exit");
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(session_path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();

  khb::Session session;
  try {
    session = khb::parse_session(buf.str());
  } catch (const khb::ParseError& e) {
    std::cerr << session_path << ":" << e.what() << "\n";
    return 2;
  }
  if (print_only) {
    std::cout << khb::print_session(session);
    return 0;
  }

  khb::RunOptions options;
  options.degree_bound = degree_bound;
  options.seed = seed;
  options.timing = timing;
  if (!svg_dir.empty()) options.svg_dir = svg_dir;

  khb::RunResult result;
  try {
    result = khb::run_session(session, options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string text = result.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  for (const auto& entry : result.report["commands"])
    if (entry["status"] == "error") std::cerr << "command " << entry["index"] << " failed: " << entry["error"].get<std::string>() << "\n";
  return result.all_ok ? 0 : 1;
}
