#include <map>
#include <set>
#include <sstream>

#include "cpsva/errors.hpp"
#include "cpsva/graph.hpp"
#include "strutil.hpp"
#include "xml.hpp"

namespace cpsva {

namespace {

struct KeyDef {
    const char* id;
    Category category;
};

// Fixed node key schema, one per taxonomic category.
constexpr KeyDef kNodeKeys[] = {
    {"d_os", Category::OperatingSystem}, {"d_device", Category::DeviceName},
    {"d_hardware", Category::Hardware},  {"d_firmware", Category::Firmware},
    {"d_software", Category::Software},  {"d_comm", Category::Communication},
    {"d_entry", Category::EntryPoints},
};

const char* node_key_for(Category c) {
    for (const auto& k : kNodeKeys) {
        if (k.category == c) return k.id;
    }
    return "?";
}

// GraphML has no list type; values are ';'-joined with '\;' and '\\'
// escapes.
std::string join_multi(const std::vector<std::string>& values) {
    std::vector<std::string> escaped;
    escaped.reserve(values.size());
    for (const auto& v : values) {
        std::string e;
        for (char c : v) {
            if (c == ';' || c == '\\') e.push_back('\\');
            e.push_back(c);
        }
        escaped.push_back(e);
    }
    return detail::join(escaped, ";");
}

std::vector<std::string> split_multi(const std::string& text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\\' && i + 1 < text.size()) {
            cur.push_back(text[++i]);
        } else if (c == ';') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string emit_graphml(const IbdGraph& graph) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    for (const auto& k : kNodeKeys) {
        out << "  <key id=\"" << k.id << "\" for=\"node\" attr.name=\""
            << category_name(k.category) << "\" attr.type=\"string\"/>\n";
    }
    out << "  <key id=\"d_kind\" for=\"edge\" attr.name=\"kind\""
           " attr.type=\"string\"/>\n";
    out << "  <key id=\"d_protocols\" for=\"edge\" attr.name=\"protocols\""
           " attr.type=\"string\"/>\n";
    out << "  <graph id=\"" << detail::xml_escape(graph.name)
        << "\" edgedefault=\"directed\">\n";

    for (const auto& v : graph.vertices()) {
        const AttributeSet& attrs = graph.attr_v(v);
        out << "    <node id=\"" << detail::xml_escape(v) << "\"";
        if (attrs.empty()) {
            out << "/>\n";
            continue;
        }
        out << ">\n";
        for (Category c : kAllCategories) {
            std::vector<std::string> values;
            for (const auto& [cat, value] : attrs) {
                if (cat == c) values.push_back(value);
            }
            if (values.empty()) continue;
            out << "      <data key=\"" << node_key_for(c) << "\">"
                << detail::xml_escape(join_multi(values)) << "</data>\n";
        }
        out << "    </node>\n";
    }

    for (const auto& p : graph.ports()) {
        out << "    <edge id=\"" << detail::xml_escape(p.id) << "\" source=\""
            << detail::xml_escape(p.source) << "\" target=\""
            << detail::xml_escape(p.target) << "\">\n";
        out << "      <data key=\"d_kind\">" << detail::xml_escape(p.kind)
            << "</data>\n";
        if (!p.protocols.empty()) {
            out << "      <data key=\"d_protocols\">"
                << detail::xml_escape(join_multi(p.protocols)) << "</data>\n";
        }
        out << "    </edge>\n";
    }

    out << "  </graph>\n";
    out << "</graphml>\n";
    return out.str();
}

IbdGraph parse_graphml(const std::string& document) {
    using detail::XmlNode;
    XmlNode root = detail::xml_parse(document);
    if (root.name != "graphml") {
        throw GraphmlError(root.line, root.col,
                           "root element must be <graphml>, got <" + root.name +
                               ">");
    }

    std::map<std::string, Category> node_keys;
    std::set<std::string> edge_keys;
    const XmlNode* graph_el = nullptr;

    for (const auto& child : root.children) {
        if (child.name == "key") {
            const std::string* id = child.attribute("id");
            const std::string* target = child.attribute("for");
            if (!id || !target) {
                throw GraphmlError(child.line, child.col,
                                   "<key> requires id and for attributes");
            }
            bool known = false;
            for (const auto& k : kNodeKeys) {
                if (*id == k.id && *target == "node") {
                    node_keys.emplace(*id, k.category);
                    known = true;
                }
            }
            if ((*id == "d_kind" || *id == "d_protocols") &&
                *target == "edge") {
                edge_keys.insert(*id);
                known = true;
            }
            if (!known) {
                throw GraphmlError(child.line, child.col,
                                   "unknown key declaration \"" + *id + "\"");
            }
        } else if (child.name == "graph") {
            graph_el = &child;
        } else {
            throw GraphmlError(child.line, child.col,
                               "unexpected element <" + child.name + ">");
        }
    }
    if (!graph_el) {
        throw GraphmlError(root.line, root.col, "missing <graph> element");
    }

    IbdGraph g;
    if (const std::string* id = graph_el->attribute("id")) g.name = *id;

    std::size_t synth_edge = 0;
    for (const auto& el : graph_el->children) {
        if (el.name == "node") {
            const std::string* id = el.attribute("id");
            if (!id) {
                throw GraphmlError(el.line, el.col, "<node> requires an id");
            }
            if (g.has_vertex(*id)) {
                throw GraphmlError(el.line, el.col,
                                   "duplicate node \"" + *id + "\"");
            }
            std::map<Category, std::vector<std::string>> per_category;
            for (const auto& data : el.children) {
                if (data.name != "data") {
                    throw GraphmlError(data.line, data.col,
                                       "unexpected element <" + data.name +
                                           "> in <node>");
                }
                const std::string* key = data.attribute("key");
                if (!key || !node_keys.count(*key)) {
                    throw GraphmlError(
                        data.line, data.col,
                        "unknown node data key \"" + (key ? *key : "") + "\"");
                }
                per_category[node_keys.at(*key)] = split_multi(data.text);
            }
            AttributeSet attrs;
            for (Category c : kAllCategories) {
                auto it = per_category.find(c);
                if (it == per_category.end()) continue;
                for (const auto& v : it->second) attrs.push_back({c, v});
            }
            g.add_vertex(*id, std::move(attrs));
        } else if (el.name == "edge") {
            const std::string* source = el.attribute("source");
            const std::string* target = el.attribute("target");
            if (!source || !target) {
                throw GraphmlError(el.line, el.col,
                                   "<edge> requires source and target");
            }
            for (const std::string* endpoint : {source, target}) {
                if (!g.has_vertex(*endpoint)) {
                    throw GraphmlError(el.line, el.col,
                                       "edge references undeclared node \"" +
                                           *endpoint + "\"");
                }
            }
            Port p;
            const std::string* id = el.attribute("id");
            p.id = id ? *id : "p" + std::to_string(synth_edge);
            p.source = *source;
            p.target = *target;
            for (const auto& data : el.children) {
                if (data.name != "data") {
                    throw GraphmlError(data.line, data.col,
                                       "unexpected element <" + data.name +
                                           "> in <edge>");
                }
                const std::string* key = data.attribute("key");
                if (!key || !edge_keys.count(*key)) {
                    throw GraphmlError(
                        data.line, data.col,
                        "unknown edge data key \"" + (key ? *key : "") + "\"");
                }
                if (*key == "d_kind") {
                    p.kind = data.text;
                } else {
                    p.protocols = split_multi(data.text);
                }
            }
            g.add_port(std::move(p));
            ++synth_edge;
        } else {
            throw GraphmlError(el.line, el.col,
                               "unexpected element <" + el.name + ">");
        }
    }
    g.normalize();
    return g;
}

}  // namespace cpsva
