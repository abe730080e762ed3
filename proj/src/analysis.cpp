#include "cpsva/analysis.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "strutil.hpp"

namespace cpsva {

const char* degradation_name(Degradation d) {
    switch (d) {
        case Degradation::None: return "none";
        case Degradation::Partial: return "partial";
        case Degradation::Full: return "full";
    }
    return "?";
}

namespace {

bool adjacent_or_same(const IbdGraph& graph, const std::string& a,
                      const std::string& b) {
    if (a == b) return true;
    for (const auto& p : graph.ports()) {
        if ((p.source == a && p.target == b) ||
            (p.source == b && p.target == a)) {
            return true;
        }
    }
    return false;
}

const AttackVector& vector_for(const Evidence& e, const VulnStore& store) {
    const AttackVector* v = store.lookup(e.vector_id);
    if (!v) {
        throw LookupError("evidence references unknown vector \"" +
                          e.vector_id + "\"");
    }
    return *v;
}

std::string chain_narrative(const std::vector<Evidence>& steps,
                            const VulnStore& store) {
    std::ostringstream out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const AttackVector& v = vector_for(steps[i], store);
        if (i) out << " ";
        out << "Step " << (i + 1) << ": exploit " << v.id << " against "
            << steps[i].component;
        if (v.requires_user_interaction) out << " (needs user interaction)";
        switch (v.effect) {
            case Effect::CodeExecution:
                out << " to execute arbitrary code";
                break;
            case Effect::PrivilegeGain:
                out << " to gain " << privilege_name(v.gained_privilege)
                    << "-level privileges";
                break;
            case Effect::DenialOfService:
                out << " to deny service";
                break;
            case Effect::InformationDisclosure:
                out << " to disclose information";
                break;
        }
        out << ".";
    }
    return out.str();
}

}  // namespace

bool chainable(const AttackVector& a, const AttackVector& b,
               const Evidence& ea, const Evidence& eb, const IbdGraph& graph) {
    if (ea.vector_id == eb.vector_id && ea.component == eb.component) {
        return false;
    }
    if (a.gained_privilege < b.required_privilege) return false;

    bool improves =
        b.gained_privilege > a.gained_privilege ||
        (a.requires_user_interaction && !b.requires_user_interaction) ||
        (b.effect == Effect::CodeExecution && a.effect != Effect::CodeExecution);
    if (!improves) return false;

    return adjacent_or_same(graph, ea.component, eb.component);
}

std::vector<AttackChain> find_chains(const std::vector<Evidence>& evidence,
                                     const IbdGraph& graph,
                                     const VulnStore& store) {
    // Keep the step exploration order deterministic.
    std::vector<Evidence> items = evidence;
    std::sort(items.begin(), items.end(),
              [](const Evidence& a, const Evidence& b) {
                  return std::tie(a.component, a.vector_id) <
                         std::tie(b.component, b.vector_id);
              });
    items.erase(std::unique(items.begin(), items.end(),
                            [](const Evidence& a, const Evidence& b) {
                                return a.component == b.component &&
                                       a.vector_id == b.vector_id;
                            }),
                items.end());

    const std::size_t n = items.size();
    std::vector<std::vector<bool>> step(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            step[i][j] = chainable(vector_for(items[i], store),
                                   vector_for(items[j], store), items[i],
                                   items[j], graph);
        }
    }

    // All simple paths of length 2..kMaxChainLength in the step relation.
    constexpr std::size_t kMaxChainLength = 4;
    std::vector<AttackChain> out;
    std::vector<std::size_t> path;
    auto extend = [&](auto&& self, std::size_t last) -> void {
        if (path.size() >= 2) {
            AttackChain chain;
            for (std::size_t idx : path) chain.steps.push_back(items[idx]);
            chain.entry_component = chain.steps.front().component;
            chain.narrative = chain_narrative(chain.steps, store);
            out.push_back(std::move(chain));
        }
        if (path.size() >= kMaxChainLength) return;
        for (std::size_t next = 0; next < n; ++next) {
            if (!step[last][next]) continue;
            if (std::find(path.begin(), path.end(), next) != path.end()) {
                continue;
            }
            path.push_back(next);
            self(self, next);
            path.pop_back();
        }
    };
    for (std::size_t start = 0; start < n; ++start) {
        path = {start};
        extend(extend, start);
    }
    return out;
}

std::set<std::string> actuation_endpoints(const IbdGraph& graph) {
    std::set<std::string> has_out, has_in;
    for (const auto& p : graph.ports()) {
        has_out.insert(p.source);
        has_in.insert(p.target);
    }
    // Purely physical parts (no taxonomic attributes) that only receive.
    std::set<std::string> out;
    for (const auto& v : graph.vertices()) {
        if (has_in.count(v) && !has_out.count(v) && graph.attr_v(v).empty()) {
            out.insert(v);
        }
    }
    return out;
}

ImpactResult impact(const IbdGraph& graph, const Evidence& evidence,
                    const VulnStore& store) {
    if (!graph.has_vertex(evidence.component)) {
        throw LookupError("unknown component \"" + evidence.component + "\"");
    }
    const AttackVector& vector = vector_for(evidence, store);

    ImpactResult result;
    result.compromised = evidence.component;
    result.violated.insert(evidence.component);

    bool takes_over =
        vector.effect == Effect::CodeExecution ||
        (vector.effect == Effect::PrivilegeGain &&
         vector.gained_privilege == Privilege::System);

    if (takes_over) {
        // Arbitrary code at system level violates every forward path.
        std::queue<std::string> frontier;
        frontier.push(evidence.component);
        while (!frontier.empty()) {
            std::string v = frontier.front();
            frontier.pop();
            for (const auto& p : graph.ports()) {
                if (p.source == v && result.violated.insert(p.target).second) {
                    frontier.push(p.target);
                }
            }
        }
    } else if (vector.effect == Effect::DenialOfService) {
        // The vertex goes dark; every data exchange through it is cut.
        for (const auto& p : graph.ports()) {
            if (p.source == evidence.component ||
                p.target == evidence.component) {
                result.severed_ports.push_back(p.id);
            }
        }
    }

    std::set<std::string> actuation = actuation_endpoints(graph);
    bool covers_actuation =
        !actuation.empty() &&
        std::includes(result.violated.begin(), result.violated.end(),
                      actuation.begin(), actuation.end());
    if (covers_actuation) {
        result.degradation = Degradation::Full;
    } else if (result.violated.size() > 1 || !result.severed_ports.empty()) {
        result.degradation = Degradation::Partial;
    } else {
        result.degradation = Degradation::None;
    }
    return result;
}

std::vector<std::string> attack_surface(const SystemModel& model) {
    std::vector<std::string> out;
    for (const auto& c : model.components) {
        if (is_attack_surface(c)) out.push_back(c.id);
    }
    return out;
}

}  // namespace cpsva
