// vmrt: command-line front end. Argument handling only; all work happens in
// vmrt::cli::run.
#include <iostream>

#include <CLI11.hpp>

#include "vmrt/cli.hpp"

using vmrt::cli::Command;
using vmrt::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"VMRT equations, ECO lines and maximal variation for double covers of P^n"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", cfg.seed, "64-bit seed (echoed in the output)"); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json, "machine-readable output"); };

  auto* eco = app.add_subcommand("eco-cert", "certify 1 + a1 L + ... + a2m L^2m as a square");
  eco->add_option("--coeffs", cfg.coeffs, "a1,...,a2m")->required();
  add_seed(eco);
  add_json(eco);

  auto* eqs = app.add_subcommand("eqs", "VMRT equations B_{m+1}..B_{2m} at a point");
  eqs->add_option("--f", cfg.f_path, "file with the branch equation f(t0..tn)")->required();
  eqs->add_option("--point", cfg.point, "y1,...,yn")->required();
  add_seed(eqs);
  add_json(eqs);

  auto* line = app.add_subcommand("eco-line", "is the line through y in direction z an ECO line?");
  line->add_option("--f", cfg.f_path, "file with f")->required();
  line->add_option("--point", cfg.point, "y1,...,yn")->required();
  line->add_option("--dir", cfg.dir, "z1,...,zn")->required();
  add_seed(line);
  add_json(line);

  auto* conv = app.add_subcommand("converse", "hypersurface whose VMRT at the origin is given by b_{m+1}..b_{2m}");
  conv->add_option("--b", cfg.b_paths, "files with b_{m+1},...,b_{2m} in z1..zn")->required()->delimiter(',');
  add_seed(conv);
  add_json(conv);

  auto* count = app.add_subcommand("count", "number of VMRT points of a quartic double solid (n=3, m=2)");
  count->add_option("--f", cfg.f_path, "file with f")->required();
  count->add_option("--point", cfg.point, "y1,y2,y3 (sampled from the seed if omitted)");
  count->add_option("--seed", cfg.seed, "64-bit seed for the coordinate change")->required();
  add_json(count);

  auto* var = app.add_subcommand("variation", "rank conditions for maximal variation at [1:0:...:0]");
  auto* fam = var->add_option("--family", cfg.family, "m2 or mge3");
  var->add_option("--n", cfg.n, "dimension of P^n")->needs(fam);
  var->add_option("--m", cfg.m, "half the degree of f")->needs(fam);
  var->add_option("--b", cfg.b, "family parameter b")->needs(fam);
  var->add_option("--c", cfg.c, "family parameter c")->needs(fam);
  auto* vf = var->add_option("--f", cfg.f_path, "file with a general f, f(1,0,...,0) = 1")->excludes(fam);
  var->add_option("--point", cfg.point, "move this point to the origin first")->needs(vf);
  add_seed(var);
  add_json(var);

  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_option("--seed", cfg.seed, "64-bit seed")->required();
  add_json(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (eco->parsed()) cfg.command = Command::EcoCert;
  else if (eqs->parsed()) cfg.command = Command::Eqs;
  else if (line->parsed()) cfg.command = Command::EcoLine;
  else if (conv->parsed()) cfg.command = Command::Converse;
  else if (count->parsed()) cfg.command = Command::Count;
  else if (var->parsed()) cfg.command = Command::Variation;
  else cfg.command = Command::Selftest;

  if (var->parsed() && !cfg.family && cfg.f_path.empty()) {
    std::cerr << "variation: give --family or --f\n";
    return 1;
  }

  const auto result = vmrt::cli::run(cfg);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
