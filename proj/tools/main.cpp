#include "dispatch.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"qcircle: exact computation on the rational circle and its automorphisms.\n"
               "Reads one JSON request per line from the input and writes one JSON\n"
               "response per line; see docs/wire-format.md for the schemas."};

  qcircle::cli::Options opts;
  std::string input_path;
  app.add_option("--seed", opts.seed, "Default seed for randomized commands")
      ->capture_default_str();
  app.add_option("--precision", opts.precision,
                 "Default comparison precision (widths 2^-precision)")
      ->capture_default_str();
  app.add_option("--samples", opts.samples, "Default sample count for randomized commands")
      ->capture_default_str();
  app.add_option("input", input_path, "Request file (defaults to standard input)");

  CLI11_PARSE(app, argc, argv);

  if (input_path.empty()) return qcircle::cli::run(std::cin, std::cout, opts);

  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "cannot open " << input_path << "\n";
    return 2;
  }
  return qcircle::cli::run(in, std::cout, opts);
}
