// Command-line driver: `voa <command> --l N [...]`.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "voa/commands.hpp"

namespace {

constexpr int kRankCap = 12;
constexpr int kMaxMCap = 50;

struct Options {
  int l = 2;
  int max_m = 50;
  std::string subset;
  std::string format = "json";
  std::string out;
  bool timing = false;
  bool unsafe_large = false;
};

void check_limits(const Options& o, bool uses_max_m) {
  if (o.unsafe_large) return;
  if (o.l > kRankCap)
    throw std::invalid_argument("--l above " + std::to_string(kRankCap) + " needs --unsafe-large");
  if (uses_max_m && o.max_m > kMaxMCap)
    throw std::invalid_argument("--max-m above " + std::to_string(kMaxMCap) + " needs --unsafe-large");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the vacuum-module data of sl(l+1) at level -(l+1)/2, l even"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--out", o.out, "Write the report to FILE instead of stdout");
  app.add_flag("--timing", o.timing, "Record wall-clock time in timing_ms (breaks byte-identical reruns)");
  app.add_flag("--unsafe-large", o.unsafe_large, "Allow l > 12 and max_m > 50");

  auto add_rank = [&](CLI::App* sub) { sub->add_option("--l", o.l, "Rank, even and >= 2")->required(); };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "md"}));
    sub->add_option("--out", o.out, "Write the report to FILE");
    sub->add_flag("--timing", o.timing, "Record wall-clock time in timing_ms");
    sub->add_flag("--unsafe-large", o.unsafe_large, "Allow l > 12 and max_m > 50");
  };

  auto* singular = app.add_subcommand("verify-singular", "Check that v is annihilated by e_j(0) and f_theta(1)");
  auto* zhu = app.add_subcommand("zhu", "Compare F([v]) with the displayed generator v'");
  auto* polys = app.add_subcommand("polynomials", "Extract p_1..p_l by the adjoint chain and build R");
  auto* classify = app.add_subcommand("classify", "Solve the polynomial system and compare with mu_S");
  auto* admissible = app.add_subcommand("admissible", "Admissibility of every lambda_S and the set Pi_lambda");
  auto* all = app.add_subcommand("all", "Run every check in dependency order");
  for (auto* sub : {singular, zhu, polys, classify, admissible, all}) {
    add_rank(sub);
    add_common(sub);
  }
  for (auto* sub : {admissible, all}) sub->add_option("--max-m", o.max_m, "Largest delta coefficient checked");
  admissible->add_option("--subset", o.subset, "Comma-separated support, e.g. \"1,3\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  voa::Report report;
  try {
    const bool uses_max_m = admissible->parsed() || all->parsed();
    check_limits(o, uses_max_m);
    const auto start = std::chrono::steady_clock::now();
    if (singular->parsed()) report = voa::cmd_verify_singular(o.l);
    if (zhu->parsed()) report = voa::cmd_zhu(o.l);
    if (polys->parsed()) report = voa::cmd_polynomials(o.l);
    if (classify->parsed()) report = voa::cmd_classify(o.l);
    if (admissible->parsed())
      report = voa::cmd_admissible(o.l, o.max_m, admissible->count("--subset") ? std::optional(o.subset) : std::nullopt);
    if (all->parsed()) report = voa::cmd_all(o.l, o.max_m);
    if (o.timing)
      report.timing_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  } catch (const std::invalid_argument& e) {
    std::cerr << "voa: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "voa: " << e.what() << "\n";
    return 1;
  }

  const std::string text = o.format == "md" ? report.render_markdown() : report.render_json();
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      std::cerr << "voa: cannot write " << o.out << "\n";
      return 2;
    }
    file << text;
  }
  return report.outcome == voa::Verdict::pass ? 0 : 1;
}
