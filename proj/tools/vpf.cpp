// Command-line front end: reads one JSON problem (file or stdin) and runs a
// single command on it. Exit codes: 0 ok/holds, 1 violated or not pointed,
// 2 usage or input error.

#include "vpf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector partition functions, truncated generating series and identity checks"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string which;
  bool json = false;
  app.add_flag("--json", json, "Emit structured JSON instead of text");

  const auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", json, "Emit structured JSON instead of text");
    return sub;
  };
  auto* pointed = add("pointed", "Certify that the step cone is pointed and print ell");
  auto* count = add("count", "Print P_A(target) or, with a weight, P_A(target; weight)");
  auto* series = add("series", "Print the truncated generating series up to the bound");
  auto* paths = add("paths", "Print generalized lattice path counts up to the bound");
  auto* verify = add("verify", "Check an identity: thm1, rec, prop1, prop2, prop3, cb, cb1d");
  verify->add_option("identity", which, "Identity to verify")
      ->required()
      ->check(CLI::IsMember({"thm1", "rec", "prop1", "prop2", "prop3", "cb", "cb1d"}));
  for (auto* sub : {pointed, count, series, paths, verify}) {
    sub->add_option("problem", input, "JSON problem file, or - for stdin");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return vpf::cli::kUsage;
  }

  std::string text;
  if (!read_input(input, text)) {
    std::cerr << "cannot read " << input << "\n";
    return vpf::cli::kUsage;
  }
  const auto result = vpf::cli::run_command(app.get_subcommands().front()->get_name(), which, text, json);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
