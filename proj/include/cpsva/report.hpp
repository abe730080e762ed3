#pragma once

#include <string>
#include <vector>

#include "cpsva/analysis.hpp"
#include "cpsva/matcher.hpp"
#include "cpsva/model.hpp"
#include "cpsva/vulndb.hpp"

namespace cpsva {

inline constexpr const char* kReportSchemaVersion = "1";

struct ComponentFinding {
    std::string component_id;
    std::string display_name;
    bool on_attack_surface = false;
    std::vector<Evidence> evidence;
    std::vector<ImpactResult> impacts;  // parallel to `evidence`

    bool operator==(const ComponentFinding&) const = default;
};

struct AssessmentReport {
    std::string schema_version = kReportSchemaVersion;
    std::string model_name;
    std::string store_hash;
    std::vector<ComponentFinding> findings;  // every component, evidence or not
    std::vector<AttackChain> chains;
    std::vector<std::string> attack_surface;
    std::vector<std::string> no_evidence;  // components with zero evidence

    bool operator==(const AssessmentReport&) const = default;
};

/// Runs the full pipeline: graph transform, matching, chains, impact, and
/// surface filtering. Deterministic for identical inputs.
AssessmentReport build_report(const SystemModel& model, const VulnStore& store);

enum class ReportFormat { Json, Markdown };

/// JSON output is schema-versioned and round-trips through
/// parse_report_json; markdown groups evidence by component and shows the
/// CVE -> CWE -> CAPEC lift, chains, and impact summaries.
std::string render_report(const AssessmentReport& report, ReportFormat format);

AssessmentReport parse_report_json(const std::string& document);

}  // namespace cpsva
