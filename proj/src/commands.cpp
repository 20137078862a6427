#include "bihom/commands.hpp"

#include <algorithm>
#include <functional>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

Report guarded(const std::string& command, const std::function<Report()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    return error_report(command, e.what());
  } catch (const PreconditionError& e) {
    return {command, Status::kFail, Json{{"message", e.what()}}};
  } catch (const ContainmentError& e) {
    return {command, Status::kFail, Json{{"message", e.what()}}};
  } catch (const NotSplitError& e) {
    return {command, Status::kFail, Json{{"message", e.what()}}};
  }
}

BiHomLieAlgebra read_algebra(const path& file) { return algebra_from_json(load_json(file), file.string()); }

Representation read_rep(const path& file, const BiHomLieAlgebra& l) {
  return representation_from_json(load_json(file), l.dim(), file.string());
}

Bilinear read_cochain(const path& file, const BiHomLieAlgebra& l, const BiHomModule& v) {
  return cochain_from_json(load_json(file), l.dim(), v.dim(), file.string());
}

ExtensionDocument read_extension(const path& file) {
  return extension_from_json(load_json(file), file.parent_path(), file.string());
}

/// One {"axiom", "passed"} row per name, in order.
Json axiom_rows(const AxiomReport& r, const std::vector<std::string>& names) {
  Json rows = Json::array();
  for (const auto& name : names) {
    bool passed = true;
    for (const auto& v : r.violations) passed = passed && v.axiom != name;
    rows.push_back(Json{{"axiom", name}, {"passed", passed}});
  }
  return rows;
}

/// Distinct axiom names of the violations, in order of first appearance.
std::vector<std::string> violated_axioms(const AxiomReport& r) {
  std::vector<std::string> names;
  for (const auto& v : r.violations)
    if (std::find(names.begin(), names.end(), v.axiom) == names.end()) names.push_back(v.axiom);
  return names;
}

const std::vector<std::string> kAlgebraAxioms{"commuting", "skew", "bihom-jacobi", "multiplicative-alpha",
                                              "multiplicative-beta"};
const std::vector<std::string> kRepAxioms{"rep-interchange", "rep-compatibility"};

AxiomReport skew_report(const BiHomLieAlgebra& l, const Bilinear& theta) {
  AxiomReport r;
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vector lhs = theta.eval(l.beta.column(i), l.alpha.column(j));
      const Vector rhs = -theta.eval(l.beta.column(j), l.alpha.column(i));
      if (lhs != rhs) r.add({"cochain-skew", {i, j}, lhs, rhs});
    }
  return r;
}

AxiomReport cocycle_report(const BiHomLieAlgebra& l, const BiHomModule& v, const ActionPair& act,
                           const Bilinear& theta) {
  AxiomReport r;
  const Trilinear d = d2(l, v, act, theta);
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector value = d.value(i, j, k);
        if (!is_zero(value)) r.add({"cocycle", {i, j, k}, value, zero_vector(v.dim())});
      }
  return r;
}

/// Fail report when the representation is invalid under the configured reading.
std::optional<Report> representation_gate(const std::string& command, const BiHomLieAlgebra& l, const Representation& rep,
                                          const Config& config) {
  const AxiomReport r = check_representation(l, rep.module, rep.act, config.reading);
  if (r.passed) return std::nullopt;
  return Report{command, Status::kFail,
                Json{{"message", "the representation is invalid"},
                     {"reading", to_string(config.reading)},
                     {"axioms", axiom_rows(r, kRepAxioms)},
                     {"report", axiom_report_to_json(r)}}};
}

Report not_exact(const std::string& command, const AxiomReport& r) {
  return {command, Status::kFail,
          Json{{"message", "the sequence is not exact"},
               {"axioms", axiom_rows(r, violated_axioms(r))},
               {"report", axiom_report_to_json(r)}}};
}

}  // namespace

Config load_config(const std::optional<path>& config) {
  if (!config) return {};
  return config_from_json(load_json(*config), config->string());
}

Report cmd_check(const path& algebra) {
  return guarded("check", [&] {
    const BiHomLieAlgebra l = read_algebra(algebra);
    const AxiomReport r = check_bihom_lie(l);
    return Report{"check", r.passed ? Status::kPass : Status::kFail,
                  Json{{"algebra", l.name},
                       {"dim", l.dim()},
                       {"axioms", axiom_rows(r, kAlgebraAxioms)},
                       {"bihom_lie", is_bihom_lie(l)},
                       {"multiplicative", r.passed},
                       {"report", axiom_report_to_json(r)}}};
  });
}

Report cmd_rep_check(const path& algebra, const path& rep, const Config& config) {
  return guarded("rep-check", [&] {
    const BiHomLieAlgebra l = read_algebra(algebra);
    const Representation v = read_rep(rep, l);
    const AxiomReport r = check_representation(l, v.module, v.act, config.reading);
    const auto other = config.reading == SecondAxiomReading::kLeftAction ? SecondAxiomReading::kRightAction
                                                                          : SecondAxiomReading::kLeftAction;
    const bool other_passed = check_representation(l, v.module, v.act, other).passed;
    const bool algebra_ok = is_bihom_lie(l);
    Json payload{{"algebra", l.name},
                 {"reading", to_string(config.reading)},
                 {"algebra_is_bihom_lie", algebra_ok},
                 {"axioms", axiom_rows(r, kRepAxioms)},
                 {"report", axiom_report_to_json(r)}};
    if (other_passed != r.passed)
      payload["other_reading"] = Json{{"reading", to_string(other)}, {"passed", other_passed}};
    return Report{"rep-check", r.passed && algebra_ok ? Status::kPass : Status::kFail, payload};
  });
}

Report cmd_cocycle_check(const path& algebra, const path& rep, const path& cocycle, const Config& config) {
  return guarded("cocycle-check", [&] {
    const BiHomLieAlgebra l = read_algebra(algebra);
    const Representation v = read_rep(rep, l);
    const Bilinear theta = read_cochain(cocycle, l, v.module);
    if (auto gate = representation_gate("cocycle-check", l, v, config)) return *gate;
    AxiomReport r = skew_report(l, theta);
    r.merge(cocycle_report(l, v.module, v.act, theta));
    return Report{"cocycle-check", r.passed ? Status::kPass : Status::kFail,
                  Json{{"axioms", axiom_rows(r, {"cochain-skew", "cocycle"})}, {"report", axiom_report_to_json(r)}}};
  });
}

Report cmd_cohomology(const path& algebra, const path& rep, const Config& config) {
  return guarded("cohomology", [&] {
    const BiHomLieAlgebra l = read_algebra(algebra);
    const Representation v = read_rep(rep, l);
    if (auto gate = representation_gate("cohomology", l, v, config)) return *gate;
    const CohomologyResult h = compute_h2(l, v.module, v.act);
    return Report{"cohomology", Status::kPass, cohomology_to_json(h, l.dim(), v.module.dim())};
  });
}

Report cmd_semidirect(const path& algebra, const path& rep, const path& cocycle, const std::optional<path>& out,
                      const std::optional<path>& algebra_out, const Config& config) {
  return guarded("semidirect", [&] {
    const BiHomLieAlgebra l = read_algebra(algebra);
    const Representation v = read_rep(rep, l);
    const Bilinear theta = read_cochain(cocycle, l, v.module);
    const AxiomReport skew = skew_report(l, theta);
    if (!skew.passed)
      return Report{"semidirect", Status::kFail,
                    Json{{"message", "theta is not a 2-cochain"},
                         {"axioms", axiom_rows(skew, {"cochain-skew"})},
                         {"report", axiom_report_to_json(skew)}}};
    const std::size_t n = l.dim(), m = v.module.dim();
    const SplitExtensionData data{l, v.module, v.act, theta, Bilinear(m, m, m)};
    const SemidirectSum sum = semidirect_sum(data);
    const AxiomReport r = check_bihom_lie(sum.algebra);
    const bool result_ok = is_bihom_lie(sum.algebra);
    const bool rep_ok = check_representation(l, v.module, v.act, config.reading).passed;
    const bool cocycle_ok = cocycle_report(l, v.module, v.act, theta).passed;
    const bool predicted = is_bihom_lie(l) && rep_ok && cocycle_ok;
    Matrix graph(n + m, n);
    for (std::size_t k = 0; k < n; ++k) graph(k, k) = 1;
    if (out) save_json(*out, extension_to_json(sum.sequence, Section{graph}));
    if (algebra_out) save_json(*algebra_out, algebra_to_json(sum.algebra));
    return Report{"semidirect", result_ok ? Status::kPass : Status::kFail,
                  Json{{"algebra", sum.algebra.name},
                       {"dim", sum.algebra.dim()},
                       {"representation_valid", rep_ok},
                       {"cocycle", cocycle_ok},
                       {"bihom_lie", result_ok},
                       {"multiplicative", r.passed},
                       {"criterion_agrees", predicted == result_ok},
                       {"axioms", axiom_rows(r, kAlgebraAxioms)},
                       {"report", axiom_report_to_json(r)}}};
  });
}

Report cmd_decompose(const path& extension, const std::optional<path>& section) {
  return guarded("decompose", [&] {
    ExtensionDocument doc = read_extension(extension);
    const auto& e = doc.sequence;
    if (section) {
      const Json j = load_json(*section);
      if (!j.is_object() || !j.contains("section") || j.size() != 1)
        throw InputError(section->string() + ": expected {\"section\": matrix}");
      doc.section = Section{matrix_from_json(j["section"], e.m.dim(), e.l.dim(), section->string() + ".section")};
    }
    const AxiomReport exact = check_exact(e);
    if (!exact.passed) return not_exact("decompose", exact);
    std::string origin = "given";
    if (!doc.section) {
      const SectionSearch search = find_section(e, Complement::kSubalgebra);
      if (search.status != Decision::kYes)
        return Report{"decompose", search.status == Decision::kNo ? Status::kFail : Status::kUndecided,
                      Json{{"section_search", to_string(search.status)}}};
      doc.section = search.section;
      origin = "found";
    }
    const SplitExtensionData data = decompose_split_extension(e, *doc.section);
    return Report{"decompose", Status::kPass,
                  Json{{"section_origin", origin},
                       {"section", matrix_to_json(doc.section->matrix)},
                       {"data", split_data_to_json(data)}}};
  });
}

Report cmd_equiv_cocycles(const path& algebra, const path& rep, const path& first, const path& second,
                          const Config& config) {
  return guarded("equiv", [&] {
    const BiHomLieAlgebra l = read_algebra(algebra);
    const Representation v = read_rep(rep, l);
    const Bilinear a = read_cochain(first, l, v.module);
    const Bilinear b = read_cochain(second, l, v.module);
    if (auto gate = representation_gate("equiv", l, v, config)) return *gate;
    const auto h = cocycles_cohomologous(l, v.module, v.act, a, b);
    Json payload{{"mode", "cocycles"}, {"equivalent", h.has_value()}};
    if (h) payload["h"] = matrix_to_json(*h);
    return Report{"equiv", h ? Status::kPass : Status::kFail, payload};
  });
}

Report cmd_equiv_extensions(const path& first, const path& second) {
  return guarded("equiv", [&] {
    const ExtensionDocument a = read_extension(first);
    const ExtensionDocument b = read_extension(second);
    for (const auto* doc : {&a, &b}) {
      const AxiomReport exact = check_exact(doc->sequence);
      if (!exact.passed) return not_exact("equiv", exact);
    }
    const ExtensionComparison c = compare_extensions(a.sequence, b.sequence);
    Json payload{{"mode", "extensions"}, {"equivalent", c.equivalent}, {"reason", c.reason}};
    if (c.h) payload["h"] = matrix_to_json(*c.h);
    if (c.phi) payload["phi"] = matrix_to_json(*c.phi);
    return Report{"equiv", c.equivalent ? Status::kPass : Status::kFail, payload};
  });
}

Report cmd_classify(const path& extension) {
  return guarded("classify", [&] {
    const ExtensionDocument doc = read_extension(extension);
    const AxiomReport exact = check_exact(doc.sequence);
    if (!exact.passed) return not_exact("classify", exact);
    const ExtensionFlags f = classify(doc.sequence);
    const bool undecided = f.split == Decision::kUndecided || f.trivial == Decision::kUndecided;
    return Report{"classify", undecided ? Status::kUndecided : Status::kPass,
                  Json{{"split", to_string(f.split)},
                       {"trivial", to_string(f.trivial)},
                       {"central", f.central},
                       {"abelian", f.abelian}}};
  });
}

}  // namespace bihom
