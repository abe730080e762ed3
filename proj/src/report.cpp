#include "cpsva/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "strutil.hpp"

namespace cpsva {

using nlohmann::json;

AssessmentReport build_report(const SystemModel& model,
                              const VulnStore& store) {
    AssessmentReport report;
    report.model_name = model.name;
    report.store_hash = store.content_hash();
    report.attack_surface = attack_surface(model);

    IbdGraph graph = to_graph(model);
    auto matches = match_model(model, store);

    std::vector<Evidence> all_evidence;
    SystemModel ordered = canonicalize(model);
    for (const auto& component : ordered.components) {
        ComponentFinding finding;
        finding.component_id = component.id;
        finding.display_name = component.display_name;
        finding.on_attack_surface = is_attack_surface(component);
        finding.evidence = matches.at(component.id);
        for (const auto& e : finding.evidence) {
            finding.impacts.push_back(impact(graph, e, store));
            all_evidence.push_back(e);
        }
        if (finding.evidence.empty()) {
            report.no_evidence.push_back(component.id);
        }
        report.findings.push_back(std::move(finding));
    }

    report.chains = find_chains(all_evidence, graph, store);
    return report;
}

// ---- JSON --------------------------------------------------------------

namespace {

Category category_from_name(const std::string& name) {
    for (Category c : kAllCategories) {
        if (name == category_name(c)) return c;
    }
    throw IngestError("unknown category \"" + name + "\" in report");
}

json evidence_to_json(const Evidence& e) {
    return json{
        {"component", e.component},
        {"vector", e.vector_id},
        {"term",
         {{"text", e.matched_term.text},
          {"category", category_name(e.matched_term.category)},
          {"original_value", e.matched_term.original_value}}},
        {"field", matched_field_name(e.matched_field)},
        {"cwe", e.lifted_weaknesses},
        {"capec", e.lifted_patterns},
    };
}

Evidence evidence_from_json(const json& j) {
    Evidence e;
    e.component = j.at("component").get<std::string>();
    e.vector_id = j.at("vector").get<std::string>();
    e.matched_term.text = j.at("term").at("text").get<std::string>();
    e.matched_term.category =
        category_from_name(j.at("term").at("category").get<std::string>());
    e.matched_term.original_value =
        j.at("term").at("original_value").get<std::string>();
    e.matched_term.component_id = e.component;
    e.matched_field = j.at("field").get<std::string>() == "summary"
                          ? MatchedField::Summary
                          : MatchedField::AffectedProducts;
    for (const auto& c : j.at("cwe")) {
        e.lifted_weaknesses.insert(c.get<std::string>());
    }
    for (const auto& c : j.at("capec")) {
        e.lifted_patterns.insert(c.get<std::string>());
    }
    return e;
}

Degradation degradation_from_name(const std::string& name) {
    if (name == "full") return Degradation::Full;
    if (name == "partial") return Degradation::Partial;
    return Degradation::None;
}

json impact_to_json(const ImpactResult& impact) {
    return json{
        {"compromised", impact.compromised},
        {"violated", impact.violated},
        {"severed_ports", impact.severed_ports},
        {"degradation", degradation_name(impact.degradation)},
    };
}

ImpactResult impact_from_json(const json& j) {
    ImpactResult impact;
    impact.compromised = j.at("compromised").get<std::string>();
    for (const auto& v : j.at("violated")) {
        impact.violated.insert(v.get<std::string>());
    }
    for (const auto& p : j.at("severed_ports")) {
        impact.severed_ports.push_back(p.get<std::string>());
    }
    impact.degradation =
        degradation_from_name(j.at("degradation").get<std::string>());
    return impact;
}

std::string render_json(const AssessmentReport& report) {
    json j;
    j["schema_version"] = report.schema_version;
    j["model"] = report.model_name;
    j["store_hash"] = report.store_hash;

    j["components"] = json::array();
    for (const auto& finding : report.findings) {
        json fj{{"id", finding.component_id},
                {"display_name", finding.display_name},
                {"attack_surface", finding.on_attack_surface},
                {"evidence", json::array()}};
        for (std::size_t i = 0; i < finding.evidence.size(); ++i) {
            json ej = evidence_to_json(finding.evidence[i]);
            if (i < finding.impacts.size()) {
                ej["impact"] = impact_to_json(finding.impacts[i]);
            }
            fj["evidence"].push_back(std::move(ej));
        }
        j["components"].push_back(std::move(fj));
    }

    j["chains"] = json::array();
    for (const auto& chain : report.chains) {
        json cj{{"entry_component", chain.entry_component},
                {"narrative", chain.narrative},
                {"steps", json::array()}};
        for (const auto& step : chain.steps) {
            cj["steps"].push_back(evidence_to_json(step));
        }
        j["chains"].push_back(std::move(cj));
    }

    j["attack_surface"] = report.attack_surface;
    j["no_evidence"] = report.no_evidence;
    return j.dump(2) + "\n";
}

std::string render_markdown(const AssessmentReport& report) {
    std::ostringstream out;
    out << "# Vulnerability Assessment: " << report.model_name << "\n\n";
    out << "Store hash: `" << report.store_hash << "`  \n";
    out << "Report schema: " << report.schema_version << "\n\n";

    out << "## Attack Surface\n\n";
    if (report.attack_surface.empty()) {
        out << "No components expose an entry point.\n\n";
    } else {
        for (const auto& id : report.attack_surface) {
            out << "- " << id << "\n";
        }
        out << "\n";
    }

    out << "## Evidence by Component\n\n";
    bool any = false;
    for (const auto& finding : report.findings) {
        if (finding.evidence.empty()) continue;
        any = true;
        out << "### " << finding.display_name << " (`"
            << finding.component_id << "`)";
        if (finding.on_attack_surface) out << " — on the attack surface";
        out << "\n\n";
        for (std::size_t i = 0; i < finding.evidence.size(); ++i) {
            const Evidence& e = finding.evidence[i];
            out << "- **" << e.vector_id << "** matched via `"
                << e.matched_term.text << "` ("
                << category_name(e.matched_term.category) << " \""
                << e.matched_term.original_value << "\", "
                << matched_field_name(e.matched_field) << ")\n";
            out << "  - lift: " << e.vector_id << " -> "
                << (e.lifted_weaknesses.empty()
                        ? "no CWE"
                        : detail::join({e.lifted_weaknesses.begin(),
                                        e.lifted_weaknesses.end()},
                                       ", "))
                << " -> "
                << (e.lifted_patterns.empty()
                        ? "no CAPEC"
                        : detail::join({e.lifted_patterns.begin(),
                                        e.lifted_patterns.end()},
                                       ", "))
                << "\n";
            if (i < finding.impacts.size()) {
                const ImpactResult& impact = finding.impacts[i];
                out << "  - impact: degradation="
                    << degradation_name(impact.degradation) << ", violated={"
                    << detail::join({impact.violated.begin(),
                                     impact.violated.end()},
                                    ", ")
                    << "}";
                if (!impact.severed_ports.empty()) {
                    out << ", severed ports={"
                        << detail::join(impact.severed_ports, ", ") << "}";
                }
                out << "\n";
            }
        }
        out << "\n";
    }
    if (!any) {
        if (report.findings.empty()) {
            out << "Zero components assessed.\n\n";
        } else {
            out << "No evidence found for any component.\n\n";
        }
    }

    out << "## Attack Chains\n\n";
    if (report.chains.empty()) {
        out << "No chains found.\n\n";
    } else {
        for (const auto& chain : report.chains) {
            std::vector<std::string> ids;
            for (const auto& step : chain.steps) ids.push_back(step.vector_id);
            out << "- [" << detail::join(ids, " -> ") << "] entering at `"
                << chain.entry_component << "`\n";
            out << "  - " << chain.narrative << "\n";
        }
        out << "\n";
    }

    out << "## Components Without Evidence\n\n";
    if (report.no_evidence.empty()) {
        out << "None.\n";
    } else {
        for (const auto& id : report.no_evidence) {
            out << "- " << id << "\n";
        }
    }
    return out.str();
}

}  // namespace

std::string render_report(const AssessmentReport& report,
                          ReportFormat format) {
    return format == ReportFormat::Json ? render_json(report)
                                        : render_markdown(report);
}

AssessmentReport parse_report_json(const std::string& document) {
    json j;
    try {
        j = json::parse(document);
    } catch (const json::parse_error& e) {
        throw IngestError(std::string("malformed report JSON: ") + e.what());
    }

    AssessmentReport report;
    report.schema_version = j.at("schema_version").get<std::string>();
    report.model_name = j.at("model").get<std::string>();
    report.store_hash = j.at("store_hash").get<std::string>();

    for (const auto& fj : j.at("components")) {
        ComponentFinding finding;
        finding.component_id = fj.at("id").get<std::string>();
        finding.display_name = fj.at("display_name").get<std::string>();
        finding.on_attack_surface = fj.at("attack_surface").get<bool>();
        for (const auto& ej : fj.at("evidence")) {
            finding.evidence.push_back(evidence_from_json(ej));
            if (ej.contains("impact")) {
                finding.impacts.push_back(impact_from_json(ej["impact"]));
            }
        }
        report.findings.push_back(std::move(finding));
    }
    for (const auto& cj : j.at("chains")) {
        AttackChain chain;
        chain.entry_component = cj.at("entry_component").get<std::string>();
        chain.narrative = cj.at("narrative").get<std::string>();
        for (const auto& sj : cj.at("steps")) {
            chain.steps.push_back(evidence_from_json(sj));
        }
        report.chains.push_back(std::move(chain));
    }
    for (const auto& v : j.at("attack_surface")) {
        report.attack_surface.push_back(v.get<std::string>());
    }
    for (const auto& v : j.at("no_evidence")) {
        report.no_evidence.push_back(v.get<std::string>());
    }
    return report;
}

}  // namespace cpsva
