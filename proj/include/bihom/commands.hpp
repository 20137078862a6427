#pragma once

#include <filesystem>
#include <optional>

#include "bihom/report.hpp"

namespace bihom {

using std::filesystem::path;

// One function per CLI subcommand. Input files are read before any computation;
// input errors produce an error report and violated preconditions a fail report.

Report cmd_check(const path& algebra);
Report cmd_rep_check(const path& algebra, const path& rep, const Config& config);
Report cmd_cocycle_check(const path& algebra, const path& rep, const path& cocycle, const Config& config);
Report cmd_cohomology(const path& algebra, const path& rep, const Config& config);

/// Writes the extension document (with its canonical section) to `out` and the
/// algebra document of L + V to `algebra_out` when given.
Report cmd_semidirect(const path& algebra, const path& rep, const path& cocycle, const std::optional<path>& out,
                      const std::optional<path>& algebra_out, const Config& config);

/// `section` is a document {"section": matrix}; otherwise the extension's own
/// section is used, or one is searched for.
Report cmd_decompose(const path& extension, const std::optional<path>& section);

Report cmd_equiv_cocycles(const path& algebra, const path& rep, const path& first, const path& second,
                          const Config& config);
Report cmd_equiv_extensions(const path& first, const path& second);
Report cmd_classify(const path& extension);

Config load_config(const std::optional<path>& config);

}  // namespace bihom
