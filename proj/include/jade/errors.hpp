#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace jade {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structured document failed to parse or violated its schema.
/// `location` is a human-readable position (byte offset or field path).
class ParseError : public Error {
public:
    ParseError(std::string location, const std::string& message)
        : Error(location.empty() ? message : location + ": " + message),
          location_(std::move(location)) {}

    const std::string& location() const { return location_; }

private:
    std::string location_;
};

class UnknownLabel : public Error {
public:
    UnknownLabel(std::string label, const std::string& where)
        : Error("unknown label '" + label + "' at " + where), label_(std::move(label)) {}

    const std::string& label() const { return label_; }

private:
    std::string label_;
};

class MissingSkillForLabel : public Error {
public:
    explicit MissingSkillForLabel(std::string label)
        : Error("skill library has no skill for label '" + label + "'"),
          label_(std::move(label)) {}

    const std::string& label() const { return label_; }

private:
    std::string label_;
};

class DuplicateSkill : public Error {
public:
    explicit DuplicateSkill(std::string name)
        : Error("duplicate skill '" + name + "'"), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// A model response could not be coerced into the required wire format,
/// even after the repair re-prompt. Keeps the raw text for the audit trail.
class SchemaError : public Error {
public:
    SchemaError(std::string violation, std::string raw_response)
        : Error("schema violation: " + violation),
          violation_(std::move(violation)),
          raw_response_(std::move(raw_response)) {}

    const std::string& violation() const { return violation_; }
    const std::string& raw_response() const { return raw_response_; }

private:
    std::string violation_;
    std::string raw_response_;
};

class BackendError : public Error {
public:
    enum class Kind { transport, auth, timeout, exhausted, script };

    BackendError(Kind kind, const std::string& message)
        : Error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class ToolError : public Error {
public:
    ToolError(std::string kind, const std::string& message)
        : Error(message), kind_(std::move(kind)) {}

    /// Short machine-readable cause, e.g. "not_found".
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class ToolBudgetExceeded : public Error {
public:
    explicit ToolBudgetExceeded(int budget)
        : Error("tool budget of " + std::to_string(budget) + " calls exceeded"),
          budget_(budget) {}

    int budget() const { return budget_; }

private:
    int budget_;
};

class InvalidUrl : public Error {
public:
    explicit InvalidUrl(const std::string& url) : Error("invalid url: '" + url + "'") {}
};

class DanglingDependency : public Error {
public:
    DanglingDependency(int item_id, int claim_id)
        : Error("item " + std::to_string(item_id) + " depends on unknown claim " +
                std::to_string(claim_id)),
          item_id_(item_id),
          claim_id_(claim_id) {}

    int item_id() const { return item_id_; }
    int claim_id() const { return claim_id_; }

private:
    int item_id_;
    int claim_id_;
};

class EmptyChecklist : public Error {
public:
    EmptyChecklist() : Error("checklist has zero total weight; nothing to score") {}
};

class EmptyReport : public Error {
public:
    EmptyReport() : Error("report is empty") {}
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Wraps a component error with the pipeline stage it surfaced in.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& message)
        : Error("[stage " + stage + "] " + message), stage_(std::move(stage)) {}

    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

} // namespace jade
