// Command-line front end: analyze a document, evaluate a named family, or run
// the randomized property sweep.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "divclass/cli.hpp"

namespace {

using namespace divclass::cli;

int finish(const CommandResult& result) {
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisor class groups, canonical classes and torsion numbers of "
               "normal affine semigroup rings"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string output = "json";
  app.add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Analyze a poset or cone document (JSON)");
  std::string input_path;
  analyze->add_option("--input", input_path, "Input file; stdin when absent");

  auto* family = app.add_subcommand("family", "Analyze a built-in family");
  FamilyRequest request;
  family->add_option("name", request.name, "two-chains | veronese | segre | determinantal")
      ->required();
  family->add_option("--a", request.a, "two-chains: length of the first chain");
  family->add_option("--b", request.b, "two-chains: length of the second chain");
  family->add_option("--n", request.n, "veronese/segre/determinantal: n");
  family->add_option("--r", request.r, "veronese: degree r");
  family->add_option("--m", request.m, "segre/determinantal: m");
  family->add_option("--p", request.p, "segre: degree p");
  family->add_option("--q", request.q, "segre: degree q");

  auto* sweep = app.add_subcommand("sweep", "Check join-meet properties on random posets");
  divclass::SweepConfig config;
  sweep->add_option("--count", config.count, "Number of posets")->capture_default_str();
  sweep->add_option("--max-n", config.max_n, "Largest poset size")->capture_default_str();
  sweep->add_option("--seed", config.seed, "Generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const OutputFormat format = output == "text" ? OutputFormat::text : OutputFormat::json;

  if (*analyze) {
    std::string text;
    if (input_path.empty()) {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "error: cannot open '" << input_path << "'\n";
        return kInputError;
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      text = buffer.str();
    }
    return finish(cmd_analyze(text, format));
  }
  if (*family) return finish(cmd_family(request, format));
  return finish(cmd_sweep(config, format));
}
