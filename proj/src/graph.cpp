#include "cpsva/graph.hpp"

#include <algorithm>
#include <tuple>

#include "cpsva/errors.hpp"

namespace cpsva {

void IbdGraph::add_vertex(const std::string& id, AttributeSet attributes) {
    if (vertex_attrs_.emplace(id, std::move(attributes)).second) {
        vertices_.push_back(id);
    }
}

void IbdGraph::add_port(Port port) { ports_.push_back(std::move(port)); }

void IbdGraph::normalize() {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(ports_.begin(), ports_.end(), [](const Port& a, const Port& b) {
        return std::tie(a.source, a.target, a.kind, a.protocols, a.id) <
               std::tie(b.source, b.target, b.kind, b.protocols, b.id);
    });
}

bool IbdGraph::has_vertex(const std::string& id) const {
    return vertex_attrs_.count(id) != 0;
}

bool IbdGraph::has_port(const std::string& id) const {
    return std::any_of(ports_.begin(), ports_.end(),
                       [&](const Port& p) { return p.id == id; });
}

const AttributeSet& IbdGraph::attr_v(const std::string& vertex) const {
    auto it = vertex_attrs_.find(vertex);
    if (it == vertex_attrs_.end()) {
        throw LookupError("unknown vertex \"" + vertex + "\"");
    }
    return it->second;
}

const Port& IbdGraph::port(const std::string& id) const {
    for (const auto& p : ports_) {
        if (p.id == id) return p;
    }
    throw LookupError("unknown port \"" + id + "\"");
}

std::vector<std::string> IbdGraph::attr_p(const std::string& id) const {
    const Port& p = port(id);
    std::vector<std::string> out;
    out.push_back(p.kind);
    out.insert(out.end(), p.protocols.begin(), p.protocols.end());
    return out;
}

bool IbdGraph::operator==(const IbdGraph& other) const {
    return name == other.name && vertices_ == other.vertices_ &&
           vertex_attrs_ == other.vertex_attrs_ && ports_ == other.ports_;
}

IbdGraph to_graph(const SystemModel& model) {
    auto issues = validate_model(model);
    if (!issues.empty()) {
        std::vector<std::string> violations;
        for (const auto& i : issues) violations.push_back(i.message);
        throw ValidationError(std::move(violations));
    }

    IbdGraph g;
    g.name = model.name;
    for (const auto& c : model.components) {
        g.add_vertex(c.id, flatten_attributes(c));
    }

    // Port ids are assigned after ordering so the transform is
    // deterministic for structurally equal models.
    std::vector<Connection> conns = model.connections;
    std::sort(conns.begin(), conns.end(),
              [](const Connection& a, const Connection& b) {
                  return std::tie(a.source, a.target, a.kind, a.protocols) <
                         std::tie(b.source, b.target, b.kind, b.protocols);
              });
    for (std::size_t i = 0; i < conns.size(); ++i) {
        Port p;
        p.id = "p" + std::to_string(i);
        p.source = conns[i].source;
        p.target = conns[i].target;
        p.kind = connection_kind_name(conns[i].kind);
        p.protocols.assign(conns[i].protocols.begin(),
                           conns[i].protocols.end());
        g.add_port(std::move(p));
    }
    g.normalize();
    return g;
}

}  // namespace cpsva
