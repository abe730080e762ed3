#include "cpsva/schema.hpp"

#include <algorithm>
#include <set>

#include "cpsva/errors.hpp"
#include "strutil.hpp"

namespace cpsva {

const char* category_name(Category c) {
    switch (c) {
        case Category::OperatingSystem: return "operating_system";
        case Category::DeviceName: return "device_name";
        case Category::Hardware: return "hardware";
        case Category::Firmware: return "firmware";
        case Category::Software: return "software";
        case Category::Communication: return "communication";
        case Category::EntryPoints: return "entry_points";
    }
    return "?";
}

const char* category_key(Category c) {
    switch (c) {
        case Category::OperatingSystem: return "os";
        case Category::DeviceName: return "device";
        case Category::Hardware: return "hardware";
        case Category::Firmware: return "firmware";
        case Category::Software: return "software";
        case Category::Communication: return "communication";
        case Category::EntryPoints: return "entry_points";
    }
    return "?";
}

bool category_matchable(Category c) {
    return c != Category::Communication && c != Category::EntryPoints;
}

bool TaxonomicRecord::all_empty() const {
    return operating_system.empty() && device_name.empty() && hardware.empty() &&
           firmware.empty() && software.empty() && communication.empty() &&
           entry_points.empty();
}

namespace {

void check_values(const std::vector<std::string>& values, Category c,
                  std::vector<std::string>& out) {
    std::set<std::string> seen;
    for (const auto& v : values) {
        if (v.empty() || detail::trim(v) != v) {
            out.push_back(std::string(category_name(c)) +
                          ": value must be non-empty trimmed text, got \"" + v +
                          "\"");
        }
        if (!seen.insert(v).second) {
            out.push_back(std::string(category_name(c)) +
                          ": duplicate value \"" + v + "\"");
        }
    }
}

void check_values(const std::set<std::string>& values, Category c,
                  std::vector<std::string>& out) {
    for (const auto& v : values) {
        if (v.empty() || detail::trim(v) != v) {
            out.push_back(std::string(category_name(c)) +
                          ": value must be non-empty trimmed text, got \"" + v +
                          "\"");
        }
    }
}

}  // namespace

std::vector<std::string> validate_component(const CyberComponent& component) {
    std::vector<std::string> out;
    const TaxonomicRecord& r = component.record;

    check_values(r.operating_system, Category::OperatingSystem, out);
    check_values(r.device_name, Category::DeviceName, out);
    check_values(r.hardware, Category::Hardware, out);
    check_values(r.firmware, Category::Firmware, out);
    check_values(r.software, Category::Software, out);
    check_values(r.communication, Category::Communication, out);
    check_values(r.entry_points, Category::EntryPoints, out);

    for (const auto& e : r.entry_points) {
        if (!r.communication.count(e)) {
            out.push_back("entry_points not subset of communication: \"" + e +
                          "\"");
        }
    }

    if (component.is_cyber && r.device_name.empty()) {
        out.push_back(
            "device_name: cyber component requires a non-empty device name");
    }
    if (!component.is_cyber && !r.all_empty()) {
        out.push_back(
            "record: non-cyber component must carry an all-empty record");
    }
    if (component.id.empty()) {
        out.push_back("id: component id must be non-empty");
    }
    return out;
}

AttributeSet flatten_attributes(const CyberComponent& component) {
    auto violations = validate_component(component);
    if (!violations.empty()) throw ValidationError(std::move(violations));

    AttributeSet out;
    const TaxonomicRecord& r = component.record;
    auto push_list = [&](const std::vector<std::string>& vs, Category c) {
        for (const auto& v : vs) out.push_back({c, v});
    };
    push_list(r.operating_system, Category::OperatingSystem);
    push_list(r.device_name, Category::DeviceName);
    push_list(r.hardware, Category::Hardware);
    push_list(r.firmware, Category::Firmware);
    push_list(r.software, Category::Software);
    for (const auto& v : r.communication)
        out.push_back({Category::Communication, v});
    for (const auto& v : r.entry_points)
        out.push_back({Category::EntryPoints, v});
    return out;
}

TaxonomicRecord rebuild_record(const AttributeSet& attributes) {
    TaxonomicRecord r;
    for (const auto& [category, value] : attributes) {
        switch (category) {
            case Category::OperatingSystem: r.operating_system.push_back(value); break;
            case Category::DeviceName: r.device_name.push_back(value); break;
            case Category::Hardware: r.hardware.push_back(value); break;
            case Category::Firmware: r.firmware.push_back(value); break;
            case Category::Software: r.software.push_back(value); break;
            case Category::Communication: r.communication.insert(value); break;
            case Category::EntryPoints: r.entry_points.insert(value); break;
        }
    }
    return r;
}

bool is_attack_surface(const CyberComponent& component) {
    return !component.record.entry_points.empty();
}

}  // namespace cpsva
