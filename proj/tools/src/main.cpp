#include <iostream>

#include "CLI11.hpp"
#include "atomfact_cli/commands.hpp"

int main(int argc, char** argv) {
  using atomfact::cli::JobSpec;
  CLI::App app{"atomfact: complete factorization of polynomial matrices over Q[x]"};
  app.require_subcommand(1);

  JobSpec spec;
  auto add_io = [&](CLI::App* sub, bool inputs) {
    if (inputs) sub->add_option("-i,--input", spec.inputs, "Input JSON document (repeatable; '-' for stdin)");
    sub->add_option("-o,--output", spec.output, "Output file (default stdout)");
  };

  add_io(app.add_subcommand("factor", "Factor a matrix into atoms"), true);
  app.get_subcommand("factor")->add_option("-j,--jobs", spec.jobs, "Worker threads for several inputs")
      ->check(CLI::PositiveNumber);
  add_io(app.add_subcommand("verify", "Check a factorization against its input"), true);
  add_io(app.add_subcommand("linearize", "Higman linearization P, L, Q"), true);
  auto* triv = app.add_subcommand("trivialize", "Trivialize C*U == 0 (inputs: C then U)");
  add_io(triv, true);
  triv->add_option("--route", spec.route, "auto, linear or general")
      ->check(CLI::IsMember({"auto", "linear", "general"}));
  add_io(app.add_subcommand("factor-pencil", "Factor a linear pencil {A0, A1}"), true);
  auto* gen = app.add_subcommand("gen", "Generate a random instance with known atoms");
  add_io(gen, false);
  gen->add_option("--seed", spec.seed, "Random seed");
  gen->add_option("--max-dim", spec.limits.max_dim, "Largest dimension")->check(CLI::PositiveNumber);
  gen->add_option("--max-deg", spec.limits.max_deg, "Largest entry degree")->check(CLI::PositiveNumber);
  gen->add_option("--max-coeff-bits", spec.limits.max_coeff_bits, "Largest coefficient bit size")
      ->check(CLI::Range(3, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return atomfact::cli::kInputError;
  }
  spec.command = app.get_subcommands().front()->get_name();
  return atomfact::cli::run(spec, std::cout, std::cerr);
}
