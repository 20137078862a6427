#pragma once

#include <string>

#include "bihom/io.hpp"

namespace bihom {

enum class Status { kPass, kFail, kUndecided, kError };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// 0 pass, 1 fail, 2 error, 3 undecided.
int exit_code(Status s);

/// Outcome of one command. The payload is the structured result; both renderings
/// are derived from it, so text and JSON always agree.
struct Report {
  std::string command;
  Status status = Status::kPass;
  Json payload = Json::object();

  friend bool operator==(const Report&, const Report&) = default;
};

Json report_to_json(const Report& r);
Report report_from_json(const Json& j);

std::string render_json(const Report& r);
std::string render_text(const Report& r);

/// Report for an input error or a violated precondition.
Report error_report(const std::string& command, const std::string& message);

}  // namespace bihom
