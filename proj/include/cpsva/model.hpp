#pragma once

#include <set>
#include <string>
#include <vector>

#include "cpsva/errors.hpp"
#include "cpsva/schema.hpp"

namespace cpsva {

enum class ConnectionKind { Digital, Analog, Physical };

const char* connection_kind_name(ConnectionKind kind);

/// A directed link between two components.
struct Connection {
    std::string source;
    std::string target;
    ConnectionKind kind = ConnectionKind::Digital;
    std::set<std::string> protocols;
    /// Self-loops are rejected unless explicitly flagged.
    bool loopback = false;

    bool operator==(const Connection&) const = default;
};

struct SystemModel {
    std::string name;
    std::vector<CyberComponent> components;
    std::vector<Connection> connections;

    const CyberComponent* find_component(const std::string& id) const;
    bool operator==(const SystemModel&) const = default;
};

/// Model-level invariants plus per-component validation. Empty when valid.
std::vector<ParseIssue> validate_model(const SystemModel& model);

/// Parses the sectioned .model text format. All syntax errors, dangling
/// references, and invariant violations are collected and thrown together
/// as a ModelParseError.
SystemModel parse_model(const std::string& document);

/// Canonical serialization: components sorted by id, categories in schema
/// order, connections sorted by endpoints. parse_model(serialize_model(m))
/// structurally equals canonicalize(m).
std::string serialize_model(const SystemModel& model);

/// Sorts components and connections into canonical order.
SystemModel canonicalize(SystemModel model);

/// The bundled flight control system example, also shipped as
/// fixtures/fcs.model.
const std::string& example_fcs_text();
SystemModel load_example_fcs();

}  // namespace cpsva
