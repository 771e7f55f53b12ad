#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "wnrep/wnrep.h"

int main(int argc, char** argv) {
  CLI::App app{"Exact weight-module computations over W_n", "wnrep"};
  std::string command, P, V, S, format = "json", elem = "x", exp = "0", start = "random";
  long window = 4, margin = 0;
  int gen_degree = 2, samples = 20, at = 1, n = 0, p = 0, m = 0;
  unsigned long long seed = 1;
  std::vector<int> k_blocks;

  app.add_option("command", command,
                 "support | mult | criterion | derham | closure | localize | twist | dualize | "
                 "classify | levi-check")
      ->required()
      ->check(CLI::IsMember({"support", "mult", "criterion", "derham", "closure", "localize", "twist",
                             "dualize", "classify", "levi-check"}));
  app.add_option("--P", P, "D-module descriptor, e.g. O*OF*XL(1/2)");
  app.add_option("--V", V, "gl-module descriptor, e.g. wedge(1)#char(1/2)");
  app.add_option("--S", S, "module over the k part of the Levi algebra");
  app.add_option("--window", window, "box radius per coordinate")->capture_default_str();
  app.add_option("--margin", margin, "interior margin of the window")->capture_default_str();
  app.add_option("--gen-degree", gen_degree, "closure generator degree")->capture_default_str();
  app.add_option("--samples", samples, "random samples per check")->capture_default_str();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--seed", seed, "sampling seed")->capture_default_str();
  app.add_option("--at", at, "1-based coordinate for localize/twist")->capture_default_str();
  app.add_option("--elem", elem, "localized element")->check(CLI::IsMember({"x", "d"}))->capture_default_str();
  app.add_option("--exp", exp, "twist exponent (rational)")->capture_default_str();
  app.add_option("--n", n, "rank of gl(n) for levi-check");
  app.add_option("--p", p, "size of the first block for levi-check");
  app.add_option("--m", m, "number of W_m variables for levi-check");
  app.add_option("--k-blocks", k_blocks, "block sizes of k")->delimiter(',');
  app.add_option("--start", start, "closure seed")->check(CLI::IsMember({"random", "constant", "derham"}))
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  wnrep_options opt;
  wnrep_options_init(&opt);
  opt.P = P.c_str();
  opt.V = V.c_str();
  opt.S = S.c_str();
  opt.window = window;
  opt.margin = margin;
  opt.gen_degree = gen_degree;
  opt.samples = samples;
  opt.format = format.c_str();
  opt.seed = seed;
  opt.at = at;
  opt.elem = elem.c_str();
  opt.exp = exp.c_str();
  opt.n = n;
  opt.p = p;
  opt.m = m;
  opt.k_blocks = k_blocks.data();
  opt.k_block_count = k_blocks.size();
  opt.start = start.c_str();

  char* report = nullptr;
  int pass = 0;
  wnrep_status st = wnrep_run(command.c_str(), &opt, &report, &pass);
  if (st != WNREP_OK) {
    std::fprintf(stderr, "error (%d): %s\n", static_cast<int>(st), wnrep_last_error());
    return 2;
  }
  std::fputs(report, stdout);
  wnrep_string_free(report);
  return pass ? 0 : 1;
}
