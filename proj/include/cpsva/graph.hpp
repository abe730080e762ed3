#pragma once

#include <map>
#include <string>
#include <vector>

#include "cpsva/model.hpp"
#include "cpsva/schema.hpp"

namespace cpsva {

/// A directed connection endpoint pair with its interaction attributes.
struct Port {
    std::string id;
    std::string source;
    std::string target;
    std::string kind;  // "digital" | "analog" | "physical"
    std::vector<std::string> protocols;

    bool operator==(const Port&) const = default;
};

/// The formal IBD graph G = (V, P, src, tgt, A). Vertices carry flattened
/// taxonomic attributes, ports carry kind and protocol labels. Immutable
/// once built; ordering is normalized so equal graphs compare equal.
class IbdGraph {
public:
    std::string name;

    void add_vertex(const std::string& id, AttributeSet attributes);
    void add_port(Port port);
    /// Sorts vertices by id and ports by (source, target, kind, protocols).
    void normalize();

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Port>& ports() const { return ports_; }

    bool has_vertex(const std::string& id) const;
    bool has_port(const std::string& id) const;

    /// attr_v: V -> A_v. Throws LookupError for unknown vertices.
    const AttributeSet& attr_v(const std::string& vertex) const;

    /// attr_p: P -> A_p; the kind label followed by the protocol labels.
    /// Throws LookupError for unknown ports.
    std::vector<std::string> attr_p(const std::string& port) const;

    const Port& port(const std::string& id) const;

    bool operator==(const IbdGraph& other) const;

private:
    std::vector<std::string> vertices_;
    std::map<std::string, AttributeSet> vertex_attrs_;
    std::vector<Port> ports_;
};

/// Builds the IBD graph from a valid model: one vertex per component with
/// its flattened attributes, one port per connection. Throws
/// ValidationError when the model is invalid.
IbdGraph to_graph(const SystemModel& model);

/// Deterministic GraphML rendering; identical graphs yield byte-identical
/// documents. Multi-valued categories are ';'-joined with '\;' escape.
std::string emit_graphml(const IbdGraph& graph);

/// Inverse of emit_graphml on its image. Malformed XML, unknown keys, and
/// dangling endpoints raise GraphmlError with the offending location.
IbdGraph parse_graphml(const std::string& document);

}  // namespace cpsva
