// bihom-gen: deterministic search for a genuinely BiHom (alpha != beta, neither the
// identity) multiplicative BiHom-Lie algebra from the random instance generator.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bihom/generator.hpp"
#include "bihom/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Write a randomly generated BiHom-Lie algebra with distinct non-identity twists"};
  std::uint64_t seed = 2024;
  std::string out;
  std::string rep_out;
  app.add_option("--seed", seed, "Generator seed");
  app.add_option("-o,--output", out, "Algebra document to write")->required();
  app.add_option("--rep-out", rep_out, "Also write the representation generated with it");
  CLI11_PARSE(app, argc, argv);

  bihom::InstanceGenerator gen(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    bihom::RandomInstance inst = gen.instance(3, 3);
    const auto& l = inst.algebra;
    const auto id = bihom::Matrix::identity(l.dim());
    if (l.is_abelian() || l.alpha == l.beta || l.alpha == id || l.beta == id) continue;
    if (!bihom::check_bihom_lie(l).passed) continue;
    inst.algebra.name = "generated-" + inst.origin;
    bihom::save_json(out, bihom::algebra_to_json(inst.algebra));
    if (!rep_out.empty()) bihom::save_json(rep_out, bihom::representation_to_json(inst.module, inst.act));
    std::cout << "seed " << seed << ", attempt " << attempt << ": " << inst.origin << '\n';
    return 0;
  }
  std::cerr << "no instance found\n";
  return 1;
}
