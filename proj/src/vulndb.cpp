#include "cpsva/vulndb.hpp"

#include <algorithm>
#include <sstream>

#include <optional>

#include "json.hpp"
#include "nvd_detail.hpp"
#include "strutil.hpp"

namespace cpsva {

using nlohmann::json;

const char* privilege_name(Privilege p) {
    switch (p) {
        case Privilege::None: return "none";
        case Privilege::User: return "user";
        case Privilege::System: return "system";
    }
    return "?";
}

const char* effect_name(Effect e) {
    switch (e) {
        case Effect::CodeExecution: return "code_execution";
        case Effect::PrivilegeGain: return "privilege_gain";
        case Effect::DenialOfService: return "denial_of_service";
        case Effect::InformationDisclosure: return "information_disclosure";
    }
    return "?";
}

std::string ProductDescriptor::text() const {
    std::string out = vendor;
    if (!product.empty()) out += out.empty() ? product : " " + product;
    if (!version.empty()) out += " " + version;
    return out;
}

// ---- store -------------------------------------------------------------

bool VulnStore::add(AttackVector record) {
    std::string key = detail::to_upper(record.id);
    if (by_id_.count(key)) return false;

    std::string text = detail::to_lower(record.summary);
    for (const auto& p : record.affected_products) {
        text += " " + detail::to_lower(p.text());
    }

    std::size_t index = records_.size();
    by_id_.emplace(std::move(key), index);
    for (const auto& token : detail::split_ws(text)) {
        auto& postings = index_[token];
        if (postings.empty() || postings.back() != index) {
            postings.push_back(index);
        }
    }
    records_.push_back(std::move(record));
    texts_.push_back(std::move(text));
    return true;
}

const AttackVector* VulnStore::lookup(std::string_view id) const {
    auto it = by_id_.find(detail::to_upper(id));
    if (it == by_id_.end()) return nullptr;
    return &records_[it->second];
}

std::pair<std::set<std::string>, std::set<std::string>>
VulnStore::lift(std::string_view id) const {
    const AttackVector* record = lookup(id);
    if (!record) {
        throw LookupError("unknown vulnerability id \"" + std::string(id) +
                          "\"");
    }
    return {{record->weakness_ids.begin(), record->weakness_ids.end()},
            {record->pattern_ids.begin(), record->pattern_ids.end()}};
}

const std::string& VulnStore::searchable_text(std::size_t index) const {
    return texts_.at(index);
}

std::vector<const AttackVector*> VulnStore::candidates(
    std::string_view term) const {
    auto words = detail::split_ws(term);
    if (words.empty()) return {};

    // Any field substring equal to `term` keeps the term's first word
    // inside a single whitespace token, so scanning the vocabulary for
    // tokens containing that word yields a superset of the true matches.
    const std::string& probe = words.front();
    std::set<std::size_t> hits;
    for (const auto& [token, postings] : index_) {
        if (token.find(probe) == std::string::npos) continue;
        hits.insert(postings.begin(), postings.end());
    }
    std::vector<const AttackVector*> out;
    out.reserve(hits.size());
    for (std::size_t i : hits) out.push_back(&records_[i]);
    return out;
}

std::string VulnStore::content_hash() const {
    std::vector<std::string> lines;
    lines.reserve(records_.size());
    for (const auto& r : records_) {
        std::ostringstream line;
        line << r.id << '\x1f' << r.summary << '\x1f';
        for (const auto& p : r.affected_products) line << p.text() << ';';
        line << '\x1f' << detail::join(r.weakness_ids, ",") << '\x1f'
             << detail::join(r.pattern_ids, ",") << '\x1f'
             << privilege_name(r.required_privilege) << '\x1f'
             << privilege_name(r.gained_privilege) << '\x1f'
             << r.requires_user_interaction << '\x1f' << effect_name(r.effect);
        lines.push_back(line.str());
    }
    std::sort(lines.begin(), lines.end());
    std::uint64_t h = detail::fnv1a("cpsva-store-v1");
    for (const auto& l : lines) h = detail::fnv1a(l, h ^ 0x9e3779b97f4a7c15ull);
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

// ---- NVD feed mapping (see docs/nvd-mapping.md) ------------------------

namespace detail_nvd {

Privilege privilege_from_cvss(const std::string& value) {
    if (value == "LOW") return Privilege::User;
    if (value == "HIGH") return Privilege::System;
    return Privilege::None;
}

Effect effect_from_text(const std::string& lower) {
    using detail::contains;
    if (contains(lower, "execute arbitrary code") ||
        contains(lower, "execute arbitrary commands") ||
        contains(lower, "code execution")) {
        return Effect::CodeExecution;
    }
    if (contains(lower, "gain privileges") || contains(lower, "gain root") ||
        contains(lower, "elevate privileges") ||
        contains(lower, "elevate their privileges") ||
        contains(lower, "elevation of privilege")) {
        return Effect::PrivilegeGain;
    }
    if (contains(lower, "denial of service")) {
        return Effect::DenialOfService;
    }
    return Effect::InformationDisclosure;
}

Privilege gained_privilege(Effect effect, Privilege required,
                           const std::string& lower,
                           const std::string& severity) {
    if (effect != Effect::CodeExecution && effect != Effect::PrivilegeGain) {
        return required;
    }
    using detail::contains;
    Privilege gained = Privilege::User;
    if (contains(lower, "kernel") || contains(lower, "system privilege") ||
        contains(lower, "root") || severity == "HIGH" ||
        severity == "CRITICAL") {
        gained = Privilege::System;
    }
    return std::max(gained, required);
}

std::optional<ProductDescriptor> product_from_cpe23(const std::string& uri) {
    // cpe:2.3:part:vendor:product:version:...
    std::vector<std::string> parts;
    std::string cur;
    for (std::size_t i = 0; i < uri.size(); ++i) {
        if (uri[i] == '\\' && i + 1 < uri.size()) {
            cur.push_back(uri[++i]);
        } else if (uri[i] == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(uri[i]);
        }
    }
    parts.push_back(cur);
    if (parts.size() < 5 || parts[0] != "cpe") return std::nullopt;

    auto field = [&](std::size_t i) -> std::string {
        if (i >= parts.size()) return {};
        std::string v = parts[i];
        if (v == "*" || v == "-") return {};
        std::replace(v.begin(), v.end(), '_', ' ');
        return v;
    };
    ProductDescriptor p{field(3), field(4), field(5)};
    if (p.vendor.empty() && p.product.empty()) return std::nullopt;
    return p;
}

void collect_products(const json& node, std::vector<ProductDescriptor>& out) {
    for (const auto& match : node.value("cpe_match", json::array())) {
        std::string uri = match.value("cpe23Uri", "");
        auto p = product_from_cpe23(uri);
        if (!p) continue;
        if (match.contains("versionEndExcluding")) {
            p->version = "< " + match["versionEndExcluding"].get<std::string>();
        } else if (match.contains("versionEndIncluding")) {
            p->version =
                "<= " + match["versionEndIncluding"].get<std::string>();
        }
        if (std::find(out.begin(), out.end(), *p) == out.end()) {
            out.push_back(*p);
        }
    }
    for (const auto& child : node.value("children", json::array())) {
        collect_products(child, out);
    }
}

AttackVector vector_from_feed_entry(const json& item) {
    AttackVector v;
    const json& cve = item.at("cve");
    v.id = detail::to_upper(
        cve.at("CVE_data_meta").at("ID").get<std::string>());
    if (v.id.empty()) throw std::runtime_error("empty CVE id");

    for (const auto& d :
         cve.at("description").value("description_data", json::array())) {
        if (d.value("lang", "en") == "en") {
            v.summary = d.value("value", "");
            break;
        }
    }
    if (v.summary.empty()) throw std::runtime_error("missing description");

    for (const auto& pt :
         cve.value("problemtype", json::object())
             .value("problemtype_data", json::array())) {
        for (const auto& d : pt.value("description", json::array())) {
            std::string value = d.value("value", "");
            if (value.rfind("CWE-", 0) == 0) v.weakness_ids.push_back(value);
        }
    }
    for (const auto& c : item.value("capec", json::array())) {
        v.pattern_ids.push_back(c.get<std::string>());
    }

    for (const auto& node : item.value("configurations", json::object())
                                .value("nodes", json::array())) {
        collect_products(node, v.affected_products);
    }

    std::string privileges = "NONE";
    std::string interaction = "NONE";
    std::string severity;
    const json& impact = item.value("impact", json::object());
    if (impact.contains("baseMetricV3")) {
        const json& cvss = impact["baseMetricV3"].value("cvssV3", json::object());
        privileges = cvss.value("privilegesRequired", "NONE");
        interaction = cvss.value("userInteraction", "NONE");
        severity = cvss.value("baseSeverity", "");
    }

    std::string lower = detail::to_lower(v.summary);
    v.required_privilege = privilege_from_cvss(privileges);
    v.requires_user_interaction = interaction == "REQUIRED";
    v.effect = effect_from_text(lower);
    v.gained_privilege =
        gained_privilege(v.effect, v.required_privilege, lower, severity);
    return v;
}

}  // namespace detail_nvd

IngestReport ingest_nvd(const std::string& feed_json, VulnStore& store) {
    json feed;
    try {
        feed = json::parse(feed_json);
    } catch (const json::parse_error& e) {
        throw IngestError(std::string("malformed feed JSON: ") + e.what());
    }
    if (!feed.is_object() || !feed.contains("CVE_Items") ||
        !feed["CVE_Items"].is_array()) {
        throw IngestError("feed is missing the CVE_Items array");
    }

    IngestReport report;
    for (const auto& item : feed["CVE_Items"]) {
        try {
            AttackVector v = detail_nvd::vector_from_feed_entry(item);
            if (store.add(std::move(v))) {
                ++report.added;
            } else {
                ++report.skipped;
            }
        } catch (const std::exception& e) {
            ++report.skipped;
            report.warnings.push_back(std::string("skipped entry: ") +
                                      e.what());
        }
    }
    return report;
}

VulnStore ingest_nvd(const std::string& feed_json) {
    VulnStore store;
    ingest_nvd(feed_json, store);
    return store;
}

}  // namespace cpsva
