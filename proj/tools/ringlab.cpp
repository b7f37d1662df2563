#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ringlab/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ringlab::Error(ringlab::ErrorClass::input,
                                "cannot read spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringlab: finite rng/ring algebra over Dorroh extensions"};
  app.require_subcommand(1);

  ringlab::CommandOptions opt;
  std::string specfile;
  std::string format = "text";

  long long env_cap = 0;
  if (const char* cap = std::getenv("RINGLAB_ORDER_CAP")) {
    env_cap = std::atoll(cap);
    if (env_cap > 0) opt.cfg.order_cap = static_cast<int>(env_cap);
  }

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("specfile", specfile, "ring spec file")->required();
    cmd->add_option("--object", opt.object, "restrict to one named object");
    cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--order-cap", opt.cfg.order_cap,
                    "construction order cap");
    cmd->add_option("--search-budget", opt.cfg.search_budget,
                    "homomorphism search node budget");
    cmd->add_flag("--timings", opt.timings,
                  "include wall-clock time in the report");
  };

  add_common(app.add_subcommand("check", "validate every binding"));
  add_common(app.add_subcommand("radical", "Jacobson radicals"));
  add_common(app.add_subcommand("nilradical", "upper nil radicals"));
  auto* ideals = app.add_subcommand("ideals", "enumerate ideals");
  add_common(ideals);
  ideals->add_flag("--left", opt.left, "left ideals");
  ideals->add_flag("--prime", opt.prime, "only prime ideals");
  ideals->add_flag("--maximal", opt.maximal, "only maximal ideals");
  add_common(app.add_subcommand("decompose",
                                "decompose every two-sided ideal"));
  auto* classify =
      app.add_subcommand("classify", "classify prime and maximal ideals");
  add_common(classify);
  classify->add_option("--phi", opt.phi, "retraction binding name or 'auto'");
  auto* verify =
      app.add_subcommand("verify-theorems", "run theorem verification suites");
  add_common(verify);
  verify->add_option("--suite", opt.suite, "run one named suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  opt.command = app.get_subcommands().front()->get_name();
  opt.format = format == "json" ? ringlab::ReportFormat::json
                                : ringlab::ReportFormat::text;

  try {
    ringlab::Report report =
        ringlab::run_command(read_file(specfile), opt);
    std::cout << ringlab::emit_report(report, opt.format);
    return ringlab::report_exit_code(report);
  } catch (const ringlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.error_class());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
