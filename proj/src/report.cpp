#include "bihom/report.hpp"

#include <algorithm>
#include <sstream>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

std::string witness_text(const Json& violation) {
  const std::string axiom = violation["axiom"].get<std::string>();
  const Json& w = violation["witness"];
  std::string out = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    // Representation witnesses end with a module basis index.
    const bool module_index = axiom.rfind("rep-", 0) == 0 && k + 1 == w.size();
    if (k) out += ", ";
    out += (module_index ? "v" : "e") + std::to_string(w[k].get<std::size_t>() + 1);
  }
  return out + ")";
}

std::string vector_text(const Json& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].get<std::string>();
  return out + "]";
}

bool is_matrix(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_array()) return false;
    for (const auto& x : row)
      if (!x.is_string()) return false;
  }
  return true;
}

void render_matrix(std::ostringstream& out, const std::string& indent, const Json& m) {
  for (const auto& row : m) out << indent << vector_text(row) << '\n';
}

void render_axioms(std::ostringstream& out, const Json& axioms, const Json& report) {
  std::size_t width = 0;
  for (const auto& a : axioms) width = std::max(width, a["axiom"].get<std::string>().size());
  for (const auto& a : axioms) {
    const std::string name = a["axiom"].get<std::string>();
    out << "  " << name << std::string(width - name.size() + 2, ' ') << (a["passed"].get<bool>() ? "pass" : "fail");
    if (!a["passed"].get<bool>())
      for (const auto& v : report["violations"])
        if (v["axiom"] == name) {
          if (!v["witness"].empty()) out << "  witness " << witness_text(v);
          out << ": lhs " << vector_text(v["lhs"]) << " rhs "
              << vector_text(v["rhs"]);
          break;
        }
    out << '\n';
  }
}

// Sparse bilinear entries [[i, j, [values]]].
bool is_sparse_bilinear(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[2].is_array()) return false;
  return true;
}

void render_bilinear(std::ostringstream& out, const std::string& indent, const Json& b) {
  if (b.empty()) out << indent << "0\n";
  for (const auto& e : b)
    out << indent << "(e" << e[0].get<std::size_t>() + 1 << ", e" << e[1].get<std::size_t>() + 1 << ") -> "
        << vector_text(e[2]) << '\n';
}

void render_value(std::ostringstream& out, const std::string& indent, const std::string& key, const Json& v) {
  if (v.is_object()) {
    out << indent << key << ":\n";
    for (const auto& [k, x] : v.items()) render_value(out, indent + "  ", k, x);
  } else if (key == "representatives") {
    out << indent << key << ":\n";
    for (std::size_t r = 0; r < v.size(); ++r) {
      out << indent << "  #" << r + 1 << '\n';
      render_bilinear(out, indent + "    ", v[r]);
    }
  } else if (key == "z2_basis" || key == "b2_basis") {
    out << indent << key << ":\n";
    for (const auto& b : v) out << indent << "  " << vector_text(b) << '\n';
  } else if (is_matrix(v)) {
    out << indent << key << ":\n";
    render_matrix(out, indent + "  ", v);
  } else if (v.is_array() && !v.empty() && is_sparse_bilinear(v)) {
    out << indent << key << ":\n";
    render_bilinear(out, indent + "  ", v);
  } else if (v.is_string()) {
    out << indent << key << ": " << v.get<std::string>() << '\n';
  } else if (v.is_boolean()) {
    out << indent << key << ": " << (v.get<bool>() ? "yes" : "no") << '\n';
  } else {
    out << indent << key << ": " << v.dump() << '\n';
  }
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kUndecided:
      return "undecided";
    case Status::kError:
      return "error";
  }
  return "error";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::kPass;
  if (s == "fail") return Status::kFail;
  if (s == "undecided") return Status::kUndecided;
  if (s == "error") return Status::kError;
  throw InputError("report.status: unknown status \"" + s + "\"");
}

int exit_code(Status s) {
  switch (s) {
    case Status::kPass:
      return 0;
    case Status::kFail:
      return 1;
    case Status::kError:
      return 2;
    case Status::kUndecided:
      return 3;
  }
  return 2;
}

Json report_to_json(const Report& r) {
  return Json{{"command", r.command}, {"status", to_string(r.status)}, {"payload", r.payload}};
}

Report report_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("command") || !j.contains("status") || !j.contains("payload") || j.size() != 3)
    throw InputError("report: expected {\"command\", \"status\", \"payload\"}");
  return {j["command"].get<std::string>(), status_from_string(j["status"].get<std::string>()), j["payload"]};
}

std::string render_json(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

std::string render_text(const Report& r) {
  std::ostringstream out;
  const Json& p = r.payload;
  out << r.command << ": " << to_string(r.status) << '\n';
  if (p.contains("dim_Z2"))
    out << "Z2=" << p["dim_Z2"].dump() << " B2=" << p["dim_B2"].dump() << " H2=" << p["dim_H2"].dump() << '\n';
  for (const auto& [key, value] : p.items()) {
    if (key == "report" || key == "dim_Z2" || key == "dim_B2" || key == "dim_H2") continue;
    if (key == "axioms") {
      out << "axioms:\n";
      render_axioms(out, value, p.contains("report") ? p["report"] : Json{{"violations", Json::array()}});
      continue;
    }
    render_value(out, "", key, value);
  }
  return out.str();
}

Report error_report(const std::string& command, const std::string& message) {
  return {command, Status::kError, Json{{"message", message}}};
}

}  // namespace bihom
