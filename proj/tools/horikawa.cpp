// horikawa: classification, constructions and the reproduction suite.
//
//   horikawa classify --k2 8 --chi 7
//   horikawa construct stable --chi 3 --format json
//   horikawa enumerate --chi-min 4 --chi-max 10
//   horikawa verify-paper --chi-max 30 --k-max 6
//   horikawa --scenario run.json

#include <horikawa/horikawa.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

std::optional<int> small_int(const std::string& text, const std::string& flag) {
  if (text.empty()) return std::nullopt;
  const horikawa::Integer v = horikawa::parse_integer(text, flag);
  if (v < -horikawa::kMaxParameter || v > horikawa::kMaxParameter)
    throw horikawa::UsageError(flag + " out of range: " + text);
  return static_cast<int>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of Horikawa surfaces and their Z3-covers"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string format = "text";
  std::string scenario_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--scenario", scenario_path, "Run the command described by a JSON scenario file");

  horikawa::Scenario s;
  std::string k2, chi, k, epsilon, chi_min, chi_max, k_max, fault;
  bool general_position = true;
  bool smoothness_assumed = true;

  auto* classify = app.add_subcommand("classify", "Admissibility and connected components for (K^2, chi)");
  classify->add_option("--k2", k2, "K^2")->required();
  classify->add_option("--chi", chi, "chi(O)")->required();

  auto* construct = app.add_subcommand("construct", "Run one construction pipeline");
  construct->add_option("variant", s.variant, "component-I | component-II | stable")
      ->required()
      ->check(CLI::IsMember({"component-I", "component-II", "stable"}));
  construct->add_option("--chi", chi, "chi(O) of the target surface");
  construct->add_option("--k", k, "K^2 = 8k for component-II");
  construct->add_option("--epsilon", epsilon, "stable only: contract 3*epsilon (-3)-curves of component I");
  construct->add_flag("!--non-general", general_position, "Drop the general-position assumption");
  construct->add_flag("!--no-smoothness", smoothness_assumed, "Drop the smooth-branch assumption");

  auto* enumerate = app.add_subcommand("enumerate", "Table of both lines over a chi range");
  enumerate->add_option("--chi-min", chi_min, "first chi (default 1)");
  enumerate->add_option("--chi-max", chi_max, "last chi")->required();

  auto* verify = app.add_subcommand("verify-paper", "Check every identity over a parameter range");
  verify->add_option("--chi-max", chi_max, "largest chi (>= 6)")->default_str("30");
  verify->add_option("--k-max", k_max, "largest k (>= 2)")->default_str("6");
  verify->add_option("--inject-fault", fault, "pipeline:parameter:slot:coefficient:+1|-1|neg")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? horikawa::kExitOk : horikawa::kExitUsage;
  }

  horikawa::Report report;
  std::optional<horikawa::Fault> parsed_fault;
  try {
    if (!scenario_path.empty()) {
      if (app.get_subcommands().size() > 0) throw horikawa::UsageError("--scenario cannot be combined with a subcommand");
      s = horikawa::load_scenario(scenario_path);
      if (app.count("--format") == 0) format = s.format;
    } else if (classify->parsed()) {
      s.command = "classify";
      s.k2 = horikawa::parse_integer(k2, "--k2");
      s.chi = horikawa::parse_integer(chi, "--chi");
    } else if (construct->parsed()) {
      s.command = "construct";
      if (!chi.empty()) s.chi = horikawa::parse_integer(chi, "--chi");
      s.k = small_int(k, "--k");
      s.epsilon = small_int(epsilon, "--epsilon");
      s.assumptions = {general_position, smoothness_assumed};
    } else if (enumerate->parsed()) {
      s.command = "enumerate";
      s.chi_min = small_int(chi_min, "--chi-min");
      s.chi_max = small_int(chi_max, "--chi-max");
    } else if (verify->parsed()) {
      s.command = "verify-paper";
      s.chi_max = small_int(chi_max, "--chi-max");
      s.k_max = small_int(k_max, "--k-max");
      if (!fault.empty()) parsed_fault = horikawa::Fault::parse(fault);
    } else {
      std::cerr << app.help();
      return horikawa::kExitUsage;
    }
    report = horikawa::run_scenario(s, parsed_fault);
  } catch (const horikawa::Error& e) {
    report = horikawa::detail::usage_report(s.command.empty() ? "horikawa" : s.command, e.what());
  }

  std::cout << horikawa::render(report, format);
  if (!report.error.empty() && format == "json") std::cerr << "error: " << report.error << "\n";
  return report.exit_code;
}
