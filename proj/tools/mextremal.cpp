// Command-line front end: mextremal <verb> --input in.json [--output report.json]

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mextremal/cli.hpp"
#include "mextremal/error.hpp"

namespace mx = mextremal;

int main(int argc, char** argv) {
  CLI::App app{"Extremal and geodesic map toolkit for the disc, polydisc, ball and complex ellipsoids"};
  app.set_version_flag("--version", std::string(MEXTREMAL_VERSION));

  std::string verb, input_path, output_path, csv_path;
  mx::cli::Command cmd;
  long samples = -1;
  double tol = -1.0;
  app.add_option("verb", verb, "pick | schur | certify | edigarian | ball3 | sn | falsify | profile | family")
      ->required()
      ->check(CLI::IsMember({"pick", "schur", "certify", "edigarian", "ball3", "sn", "falsify", "profile", "family"}));
  app.add_option("--input,-i", input_path, "input JSON file ('-' for stdin)")->required();
  app.add_option("--output,-o", output_path, "report path (default: stdout)");
  app.add_option("--csv", csv_path, "CSV destination for `profile`");
  app.add_option("--seed", cmd.seed, "random seed");
  app.add_option("--samples", samples, "boundary sample count");
  app.add_option("--tol", tol, "classification tolerance (unimodular, singular, boundary)");
  CLI11_PARSE(app, argc, argv);

  cmd.verb = verb;
  if (samples >= 0) cmd.samples = samples;
  if (tol > 0.0) cmd.tol = tol;

  try {
    std::stringstream buf;
    if (input_path == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "error: cannot open " << input_path << "\n";
        return static_cast<int>(mx::cli::ExitCode::Error);
      }
      buf << in.rdbuf();
    }
    try {
      cmd.input = mx::json::parse(buf.str());
    } catch (const mx::json::exception& e) {
      throw mx::Error(mx::ErrorKind::Schema, std::string("input is not valid JSON: ") + e.what());
    }

    const mx::cli::Outcome out = mx::cli::run(cmd);
    const std::string text = out.report.dump(2) + "\n";
    if (output_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream(output_path) << text;
    }
    if (!csv_path.empty() && !out.csv.empty()) std::ofstream(csv_path) << out.csv;
    return static_cast<int>(out.code);
  } catch (const mx::Error& e) {
    std::cerr << "error (" << mx::to_string(e.kind()) << "): " << e.what() << "\n";
  } catch (const mx::json::exception& e) {
    std::cerr << "error (Schema): " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return static_cast<int>(mx::cli::ExitCode::Error);
}
