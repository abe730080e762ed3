#include "cpsva/model.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "strutil.hpp"

namespace cpsva {

const char* connection_kind_name(ConnectionKind kind) {
    switch (kind) {
        case ConnectionKind::Digital: return "digital";
        case ConnectionKind::Analog: return "analog";
        case ConnectionKind::Physical: return "physical";
    }
    return "?";
}

const CyberComponent* SystemModel::find_component(const std::string& id) const {
    for (const auto& c : components) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

std::vector<ParseIssue> validate_model(const SystemModel& model) {
    std::vector<ParseIssue> issues;
    std::map<std::string, const CyberComponent*> by_id;

    for (const auto& c : model.components) {
        if (!by_id.emplace(c.id, &c).second) {
            issues.push_back({0, "duplicate component id \"" + c.id + "\""});
        }
        for (const auto& v : validate_component(c)) {
            issues.push_back({0, "component \"" + c.id + "\": " + v});
        }
    }

    for (const auto& conn : model.connections) {
        const std::string where =
            "connection " + conn.source + " -> " + conn.target;
        auto src = by_id.find(conn.source);
        auto tgt = by_id.find(conn.target);
        if (src == by_id.end()) {
            issues.push_back(
                {0, where + ": unknown component reference \"" + conn.source + "\""});
        }
        if (tgt == by_id.end()) {
            issues.push_back(
                {0, where + ": unknown component reference \"" + conn.target + "\""});
        }
        if (conn.source == conn.target && !conn.loopback) {
            issues.push_back({0, where + ": self-loop without loopback flag"});
        }
        if (conn.kind == ConnectionKind::Digital && conn.protocols.empty()) {
            issues.push_back(
                {0, where + ": digital connection requires protocols"});
        }
        if (conn.kind == ConnectionKind::Digital && src != by_id.end() &&
            tgt != by_id.end() && src->second->is_cyber &&
            tgt->second->is_cyber) {
            for (const auto& p : conn.protocols) {
                if (!src->second->record.communication.count(p) ||
                    !tgt->second->record.communication.count(p)) {
                    issues.push_back(
                        {0, where + ": protocol \"" + p +
                                "\" missing from an endpoint's communication set"});
                }
            }
        }
    }
    return issues;
}

namespace {

// ---- value list lexing -------------------------------------------------

// Splits "a, b, \"c, d\"" into values; quotes protect commas, backslash
// escapes '"' and '\' inside quotes.
std::vector<std::string> split_values(const std::string& text, int line,
                                      std::vector<ParseIssue>& issues) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    bool cur_was_quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '\\' && i + 1 < text.size()) {
                cur.push_back(text[++i]);
            } else if (c == '"') {
                quoted = false;
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
            cur_was_quoted = true;
            // Whitespace between the separator and the opening quote is
            // not part of the value.
            if (detail::trim(cur).empty()) cur.clear();
        } else if (c == ',') {
            std::string v = cur_was_quoted ? cur : detail::trim(cur);
            if (!v.empty()) out.push_back(v);
            cur.clear();
            cur_was_quoted = false;
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) {
        issues.push_back({line, "unterminated quote in value list"});
    }
    std::string v = cur_was_quoted ? cur : detail::trim(cur);
    if (!v.empty()) out.push_back(v);
    return out;
}

std::string quote_value(const std::string& v) {
    if (v.find(',') == std::string::npos && v.find('"') == std::string::npos &&
        v.find('\\') == std::string::npos) {
        return v;
    }
    std::string out = "\"";
    for (char c : v) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

struct KeyLine {
    std::string key;
    std::string value;
    int line = 0;
};

// One `[component] id` or `[connection] src -> tgt` block.
struct Block {
    std::string kind;    // "component" | "connection"
    std::string header;  // remainder after the tag
    int line = 0;
    std::vector<KeyLine> keys;
};

const std::vector<std::string> kComponentKeys = {
    "display_name", "cyber", "function_note", "os",           "device",
    "hardware",     "firmware", "software",   "communication", "entry_points"};
const std::vector<std::string> kConnectionKeys = {"kind", "protocols",
                                                  "loopback"};

std::optional<std::string> find_key(const Block& b, const std::string& key) {
    for (const auto& k : b.keys) {
        if (k.key == key) return k.value;
    }
    return std::nullopt;
}

int key_line(const Block& b, const std::string& key) {
    for (const auto& k : b.keys) {
        if (k.key == key) return k.line;
    }
    return b.line;
}

CyberComponent parse_component_block(const Block& b,
                                     std::vector<ParseIssue>& issues) {
    CyberComponent c;
    c.id = b.header;
    if (c.id.empty() || detail::split_ws(c.id).size() != 1) {
        issues.push_back({b.line, "component id must be a single machine name"});
    }

    if (auto v = find_key(b, "display_name")) c.display_name = *v;
    if (auto v = find_key(b, "function_note")) c.function_note = *v;
    if (auto v = find_key(b, "cyber")) {
        if (*v == "true") {
            c.is_cyber = true;
        } else if (*v == "false") {
            c.is_cyber = false;
        } else {
            issues.push_back({key_line(b, "cyber"),
                              "cyber must be true or false, got \"" + *v + "\""});
        }
    } else {
        issues.push_back({b.line, "component \"" + c.id + "\": missing key 'cyber'"});
    }

    auto list_for = [&](Category cat) {
        std::vector<std::string> values;
        const char* key = category_key(cat);
        if (auto v = find_key(b, key)) {
            values = split_values(*v, key_line(b, key), issues);
        } else if (c.is_cyber) {
            // All seven categories must be present on a cyber component,
            // even when empty.
            issues.push_back({b.line, "component \"" + c.id +
                                          "\": missing category '" +
                                          category_name(cat) + "'"});
        }
        return values;
    };

    c.record.operating_system = list_for(Category::OperatingSystem);
    c.record.device_name = list_for(Category::DeviceName);
    c.record.hardware = list_for(Category::Hardware);
    c.record.firmware = list_for(Category::Firmware);
    c.record.software = list_for(Category::Software);
    auto comm = list_for(Category::Communication);
    c.record.communication.insert(comm.begin(), comm.end());
    auto entry = list_for(Category::EntryPoints);
    c.record.entry_points.insert(entry.begin(), entry.end());
    return c;
}

Connection parse_connection_block(const Block& b,
                                  std::vector<ParseIssue>& issues) {
    Connection conn;
    auto arrow = b.header.find("->");
    if (arrow == std::string::npos) {
        issues.push_back(
            {b.line, "connection header must be '<source> -> <target>'"});
    } else {
        conn.source = detail::trim(b.header.substr(0, arrow));
        conn.target = detail::trim(b.header.substr(arrow + 2));
        if (conn.source.empty() || conn.target.empty()) {
            issues.push_back({b.line, "connection endpoints must be non-empty"});
        }
    }

    if (auto v = find_key(b, "kind")) {
        if (*v == "digital") {
            conn.kind = ConnectionKind::Digital;
        } else if (*v == "analog") {
            conn.kind = ConnectionKind::Analog;
        } else if (*v == "physical") {
            conn.kind = ConnectionKind::Physical;
        } else {
            issues.push_back({key_line(b, "kind"),
                              "kind must be digital, analog, or physical, got \"" +
                                  *v + "\""});
        }
    } else {
        issues.push_back({b.line, "connection missing key 'kind'"});
    }

    if (auto v = find_key(b, "protocols")) {
        auto values = split_values(*v, key_line(b, "protocols"), issues);
        conn.protocols.insert(values.begin(), values.end());
    }
    if (auto v = find_key(b, "loopback")) {
        if (*v == "true") {
            conn.loopback = true;
        } else if (*v != "false") {
            issues.push_back({key_line(b, "loopback"),
                              "loopback must be true or false"});
        }
    }
    return conn;
}

}  // namespace

SystemModel parse_model(const std::string& document) {
    std::vector<ParseIssue> issues;
    SystemModel model;
    bool saw_name = false;

    std::vector<Block> blocks;
    Block* current = nullptr;

    std::istringstream in(document);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#') continue;

        if (line[0] == '[') {
            auto close = line.find(']');
            if (close == std::string::npos) {
                issues.push_back({lineno, "unterminated section tag"});
                current = nullptr;
                continue;
            }
            std::string tag = line.substr(1, close - 1);
            std::string rest = detail::trim(line.substr(close + 1));
            if (tag != "component" && tag != "connection") {
                issues.push_back({lineno, "unknown section [" + tag + "]"});
                current = nullptr;
                continue;
            }
            blocks.push_back({tag, rest, lineno, {}});
            current = &blocks.back();
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string::npos) {
            issues.push_back({lineno, "expected 'key = value', got \"" + line + "\""});
            continue;
        }
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));

        if (!current) {
            if (key == "name") {
                if (saw_name) {
                    issues.push_back({lineno, "duplicate model name header"});
                }
                model.name = value;
                saw_name = true;
            } else {
                issues.push_back(
                    {lineno, "key '" + key + "' outside of any section"});
            }
            continue;
        }

        const auto& allowed = current->kind == "component" ? kComponentKeys
                                                           : kConnectionKeys;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            issues.push_back({lineno, "unknown key '" + key + "' in [" +
                                          current->kind + "] section"});
            continue;
        }
        if (find_key(*current, key)) {
            issues.push_back({lineno, "duplicate key '" + key + "'"});
            continue;
        }
        current->keys.push_back({key, value, lineno});
    }

    if (!saw_name) {
        issues.push_back({0, "missing 'name = ...' header"});
    }

    for (const auto& b : blocks) {
        if (b.kind == "component") {
            model.components.push_back(parse_component_block(b, issues));
        } else {
            model.connections.push_back(parse_connection_block(b, issues));
        }
    }

    for (auto issue : validate_model(model)) {
        issues.push_back(issue);
    }
    if (!issues.empty()) throw ModelParseError(std::move(issues));
    return model;
}

namespace {

void write_values(std::ostream& out, const char* key,
                  const std::vector<std::string>& values) {
    out << key << " = ";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ", ";
        out << quote_value(values[i]);
    }
    out << "\n";
}

}  // namespace

std::string serialize_model(const SystemModel& model) {
    SystemModel m = canonicalize(model);
    std::ostringstream out;
    out << "name = " << m.name << "\n";

    for (const auto& c : m.components) {
        out << "\n[component] " << c.id << "\n";
        out << "display_name = " << c.display_name << "\n";
        out << "cyber = " << (c.is_cyber ? "true" : "false") << "\n";
        if (!c.function_note.empty()) {
            out << "function_note = " << c.function_note << "\n";
        }
        if (c.is_cyber) {
            const TaxonomicRecord& r = c.record;
            write_values(out, "os", r.operating_system);
            write_values(out, "device", r.device_name);
            write_values(out, "hardware", r.hardware);
            write_values(out, "firmware", r.firmware);
            write_values(out, "software", r.software);
            write_values(out, "communication",
                         {r.communication.begin(), r.communication.end()});
            write_values(out, "entry_points",
                         {r.entry_points.begin(), r.entry_points.end()});
        }
    }

    for (const auto& conn : m.connections) {
        out << "\n[connection] " << conn.source << " -> " << conn.target
            << "\n";
        out << "kind = " << connection_kind_name(conn.kind) << "\n";
        if (!conn.protocols.empty()) {
            write_values(out, "protocols",
                         {conn.protocols.begin(), conn.protocols.end()});
        }
        if (conn.loopback) out << "loopback = true\n";
    }
    return out.str();
}

SystemModel canonicalize(SystemModel model) {
    std::sort(model.components.begin(), model.components.end(),
              [](const CyberComponent& a, const CyberComponent& b) {
                  return a.id < b.id;
              });
    std::sort(model.connections.begin(), model.connections.end(),
              [](const Connection& a, const Connection& b) {
                  return std::tie(a.source, a.target, a.kind, a.protocols) <
                         std::tie(b.source, b.target, b.kind, b.protocols);
              });
    return model;
}

SystemModel load_example_fcs() { return parse_model(example_fcs_text()); }

}  // namespace cpsva
