#include "cpsva/errors.hpp"

#include <sstream>

namespace cpsva {

std::string format_issues(const std::vector<ParseIssue>& issues) {
    std::ostringstream out;
    for (std::size_t i = 0; i < issues.size(); ++i) {
        if (i) out << "\n";
        if (issues[i].line > 0) out << "line " << issues[i].line << ": ";
        out << issues[i].message;
    }
    return out.str();
}

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
    std::string out = "validation failed:";
    for (const auto& v : violations) {
        out += "\n  - " + v;
    }
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)),
      violations_(std::move(violations)) {}

ModelParseError::ModelParseError(std::vector<ParseIssue> issues)
    : std::runtime_error("model parse failed:\n" + format_issues(issues)),
      issues_(std::move(issues)) {}

GraphmlError::GraphmlError(int line, int col, const std::string& message)
    : std::runtime_error("graphml: " + message + " (line " +
                         std::to_string(line) + ", col " +
                         std::to_string(col) + ")"),
      line_(line),
      col_(col) {}

RemoteStatusError::RemoteStatusError(int status, const std::string& message)
    : std::runtime_error(message + " (status " + std::to_string(status) + ")"),
      status_(status) {}

}  // namespace cpsva
