#include <iostream>

#include <CLI11.hpp>

#include "edd/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact Smith and Smith-McMillan forms over Z, Q[z] and proper rational functions"};
  app.require_subcommand(1);
  edd::cli::Options opt;

  for (const auto& info : edd::cli::command_table()) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    sub->add_option("inputs", opt.inputs, "matrix documents (- for standard input)")
        ->expected(static_cast<int>(info.inputs))
        ->required();
    auto* n = sub->add_option("--n", opt.n, "size of the A block");
    if (info.needs_n) n->required();
    if (info.name == "coprime") sub->add_option("--side", opt.side, "left or right")->check(CLI::IsMember({"left", "right"}));
    if (info.name == "reduce") {
      sub->add_option("--order", opt.order, "ef or fe")->check(CLI::IsMember({"ef", "fe"}));
      sub->add_option("--split", opt.split, "ring element taken out in the first pass");
    }
    if (info.name == "local") sub->add_option("--prime", opt.prime, "prime element")->required();
    sub->add_flag("--no-transforms", opt.no_transforms, "omit unimodular transformation matrices");
    sub->callback([&opt, name = info.name] { opt.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return edd::cli::run(opt, std::cout, std::cerr);
}
