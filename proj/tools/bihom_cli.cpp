// bihom: command-line front end for the BiHom-Lie toolkit.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bihom/commands.hpp"

namespace {

std::optional<bihom::path> optional_path(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return bihom::path(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with BiHom-Lie algebras, representations, cohomology and extensions"};
  app.require_subcommand(1);

  std::string out_format = "text";
  std::string config_file;
  app.add_option("--out", out_format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--config", config_file, "JSON config with \"second_axiom_reading\"");

  std::string algebra, rep, cocycle, extension, section, out, algebra_out, mode;
  std::vector<std::string> cocycles, extensions;

  auto* check = app.add_subcommand("check", "Check the BiHom-Lie axioms of an algebra");
  check->add_option("algebra", algebra, "Algebra file")->required();

  auto* rep_check = app.add_subcommand("rep-check", "Check the representation axioms");
  rep_check->add_option("--algebra", algebra)->required();
  rep_check->add_option("--rep", rep)->required();

  auto* cocycle_check = app.add_subcommand("cocycle-check", "Check that a bilinear map is a 2-cocycle");
  cocycle_check->add_option("--algebra", algebra)->required();
  cocycle_check->add_option("--rep", rep)->required();
  cocycle_check->add_option("--cocycle", cocycle)->required();

  auto* cohomology = app.add_subcommand("cohomology", "Compute Z2, B2 and H2");
  cohomology->add_option("--algebra", algebra)->required();
  cohomology->add_option("--rep", rep)->required();

  auto* semidirect = app.add_subcommand("semidirect", "Build the semidirect sum L + V");
  semidirect->add_option("--algebra", algebra)->required();
  semidirect->add_option("--rep", rep)->required();
  semidirect->add_option("--cocycle", cocycle)->required();
  semidirect->add_option("-o,--output", out, "Extension document to write");
  semidirect->add_option("--algebra-out", algebra_out, "Algebra document of L + V to write");

  auto* decompose = app.add_subcommand("decompose", "Split an extension into semidirect-sum data");
  decompose->add_option("--extension", extension)->required();
  decompose->add_option("--section", section, "Section document {\"section\": matrix}");

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of cocycles or extensions");
  equiv->add_option("--mode", mode)->required()->check(CLI::IsMember({"cocycles", "extensions"}));
  equiv->add_option("--algebra", algebra);
  equiv->add_option("--rep", rep);
  equiv->add_option("--cocycle", cocycles);
  equiv->add_option("--extension", extensions);

  auto* classify = app.add_subcommand("classify", "Report trivial / split / central / abelian flags");
  classify->add_option("--extension", extension)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bihom::Report report;
  bihom::Config config;
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    config = bihom::load_config(optional_path(config_file));
  } catch (const std::exception& e) {
    report = bihom::error_report(command, e.what());
  }

  if (report.status != bihom::Status::kError) {
    if (*check) {
      report = bihom::cmd_check(algebra);
    } else if (*rep_check) {
      report = bihom::cmd_rep_check(algebra, rep, config);
    } else if (*cocycle_check) {
      report = bihom::cmd_cocycle_check(algebra, rep, cocycle, config);
    } else if (*cohomology) {
      report = bihom::cmd_cohomology(algebra, rep, config);
    } else if (*semidirect) {
      report = bihom::cmd_semidirect(algebra, rep, cocycle, optional_path(out), optional_path(algebra_out), config);
    } else if (*decompose) {
      report = bihom::cmd_decompose(extension, optional_path(section));
    } else if (*equiv) {
      if (mode == "cocycles") {
        if (algebra.empty() || rep.empty() || cocycles.size() != 2)
          report = bihom::error_report("equiv", "--mode cocycles needs --algebra, --rep and two --cocycle files");
        else
          report = bihom::cmd_equiv_cocycles(algebra, rep, cocycles[0], cocycles[1], config);
      } else if (extensions.size() != 2) {
        report = bihom::error_report("equiv", "--mode extensions needs two --extension files");
      } else {
        report = bihom::cmd_equiv_extensions(extensions[0], extensions[1]);
      }
    } else if (*classify) {
      report = bihom::cmd_classify(extension);
    }
  }

  std::cout << (out_format == "json" ? bihom::render_json(report) : bihom::render_text(report));
  return bihom::exit_code(report.status);
}
