#pragma once

#include <set>
#include <string>
#include <vector>

#include "cpsva/graph.hpp"
#include "cpsva/matcher.hpp"
#include "cpsva/model.hpp"
#include "cpsva/vulndb.hpp"

namespace cpsva {

/// An ordered multi-step attack built from evidence items.
struct AttackChain {
    std::vector<Evidence> steps;  // length >= 2
    std::string entry_component;  // component of the first step
    std::string narrative;        // generated step-by-step description

    bool operator==(const AttackChain&) const = default;
};

enum class Degradation { None, Partial, Full };

const char* degradation_name(Degradation d);

struct ImpactResult {
    std::string compromised;
    std::set<std::string> violated;  // always contains `compromised`
    /// Ports whose data exchange is cut when the compromised vertex dies
    /// (denial of service only).
    std::vector<std::string> severed_ports;
    Degradation degradation = Degradation::None;

    bool operator==(const ImpactResult&) const = default;
};

/// True when step `b` may follow step `a`: the privilege gained by `a`
/// covers what `b` requires, `b` strictly improves the attacker position
/// (higher gained privilege, drops the user-interaction requirement, or
/// reaches code execution), and the two targets are the same component or
/// adjacent in the graph.
bool chainable(const AttackVector& a, const AttackVector& b,
               const Evidence& ea, const Evidence& eb, const IbdGraph& graph);

/// Enumerates all chains (simple paths of length 2..4 in the chainable
/// relation) over one evidence set, deduplicated and deterministically
/// ordered. The store supplies privilege and effect data for each step.
std::vector<AttackChain> find_chains(const std::vector<Evidence>& evidence,
                                     const IbdGraph& graph,
                                     const VulnStore& store);

/// Vertices that only receive: non-cyber sinks (no attributes, no outgoing
/// ports, at least one incoming port). Coverage of this set defines full
/// service degradation.
std::set<std::string> actuation_endpoints(const IbdGraph& graph);

/// Propagates one evidence item through the graph. Code execution or a
/// system-level privilege gain violates the forward-reachable set; denial
/// of service kills the vertex and severs its ports. Full degradation iff
/// every actuation endpoint is violated. Throws LookupError when the
/// evidence names an unknown component and LookupError when the vector id
/// is not in the store.
ImpactResult impact(const IbdGraph& graph, const Evidence& evidence,
                    const VulnStore& store);

/// Component ids with a non-empty entry-point set, in stable model order.
std::vector<std::string> attack_surface(const SystemModel& model);

}  // namespace cpsva
