#pragma once

#include <array>
#include <compare>
#include <set>
#include <string>
#include <vector>

namespace cpsva {

/// The seven fixed categories describing a cyber component.
enum class Category {
    OperatingSystem,
    DeviceName,
    Hardware,
    Firmware,
    Software,
    Communication,
    EntryPoints,
};

inline constexpr std::array<Category, 7> kAllCategories = {
    Category::OperatingSystem, Category::DeviceName, Category::Hardware,
    Category::Firmware,        Category::Software,   Category::Communication,
    Category::EntryPoints,
};

/// Long name, e.g. "operating_system".
const char* category_name(Category c);

/// Key used in the .model format, e.g. "os", "device".
const char* category_key(Category c);

/// True for the five product-describing categories that feed query terms.
/// Communication and entry points describe interactions, not products.
bool category_matchable(Category c);

struct AttributePair {
    Category category;
    std::string value;

    auto operator<=>(const AttributePair&) const = default;
};

/// Flattened (category, value) pairs of one component, in schema order.
using AttributeSet = std::vector<AttributePair>;

/// One row per category of the taxonomic scheme. A category may be empty
/// but is always present.
struct TaxonomicRecord {
    std::vector<std::string> operating_system;
    std::vector<std::string> device_name;
    std::vector<std::string> hardware;
    std::vector<std::string> firmware;
    std::vector<std::string> software;
    std::set<std::string> communication;
    std::set<std::string> entry_points;

    bool all_empty() const;
    bool operator==(const TaxonomicRecord&) const = default;
};

struct CyberComponent {
    std::string id;
    std::string display_name;
    bool is_cyber = false;
    TaxonomicRecord record;
    /// Criticality annotation ("why is it there?"); never matched against
    /// vulnerability data.
    std::string function_note;

    bool operator==(const CyberComponent&) const = default;
};

/// Checks every record-level invariant. Returns an empty list when the
/// component is well formed; otherwise one human-readable entry per broken
/// rule, naming the category involved.
std::vector<std::string> validate_component(const CyberComponent& component);

/// Flattens the record into (category, value) pairs in schema order.
/// Throws ValidationError when the component is invalid.
AttributeSet flatten_attributes(const CyberComponent& component);

/// Inverse of flatten_attributes over the record part.
TaxonomicRecord rebuild_record(const AttributeSet& attributes);

/// A component is part of the attack surface iff it exposes at least one
/// entry point.
bool is_attack_surface(const CyberComponent& component);

}  // namespace cpsva
