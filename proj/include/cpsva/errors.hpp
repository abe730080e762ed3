#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cpsva {

/// A single problem found while parsing or validating input text.
struct ParseIssue {
    int line = 0;
    std::string message;

    bool operator==(const ParseIssue&) const = default;
};

std::string format_issues(const std::vector<ParseIssue>& issues);

/// Thrown when an operation requires a valid object but validation failed.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations);

    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Unknown vertex, port, or record id.
class LookupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Model document could not be parsed; carries every issue found.
class ModelParseError : public std::runtime_error {
public:
    explicit ModelParseError(std::vector<ParseIssue> issues);

    const std::vector<ParseIssue>& issues() const { return issues_; }

private:
    std::vector<ParseIssue> issues_;
};

/// Malformed XML or a GraphML document violating the declared key schema.
class GraphmlError : public std::runtime_error {
public:
    GraphmlError(int line, int col, const std::string& message);

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// File-level failure while reading a vulnerability feed.
class IngestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Transport-level failure talking to a remote vulnerability service.
class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Remote service answered with a non-success status.
class RemoteStatusError : public std::runtime_error {
public:
    RemoteStatusError(int status, const std::string& message);

    int status() const { return status_; }

private:
    int status_;
};

}  // namespace cpsva
