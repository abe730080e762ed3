#include "cpsva/vulndb.hpp"

#include <algorithm>

#include "httplib.h"
#include "json.hpp"
#include "nvd_detail.hpp"
#include "strutil.hpp"

namespace cpsva {

using nlohmann::json;

namespace {

// Maps one entry of the query API response (documented in
// docs/nvd-mapping.md) to an attack vector.
AttackVector vector_from_remote_entry(const json& item) {
    AttackVector v;
    v.id = detail::to_upper(item.at("id").get<std::string>());
    v.summary = item.at("summary").get<std::string>();
    if (v.id.empty() || v.summary.empty()) {
        throw std::runtime_error("entry missing id or summary");
    }

    if (item.contains("cwe")) {
        if (item["cwe"].is_array()) {
            for (const auto& c : item["cwe"]) {
                v.weakness_ids.push_back(c.get<std::string>());
            }
        } else {
            std::string cwe = item["cwe"].get<std::string>();
            if (cwe.rfind("CWE-", 0) == 0) v.weakness_ids.push_back(cwe);
        }
    }
    for (const auto& c : item.value("capec", json::array())) {
        v.pattern_ids.push_back(c.get<std::string>());
    }
    for (const auto& uri : item.value("vulnerable_product", json::array())) {
        auto p = detail_nvd::product_from_cpe23(uri.get<std::string>());
        if (p && std::find(v.affected_products.begin(),
                           v.affected_products.end(),
                           *p) == v.affected_products.end()) {
            v.affected_products.push_back(*p);
        }
    }

    const json& cvss = item.value("cvss3", json::object());
    std::string lower = detail::to_lower(v.summary);
    v.required_privilege =
        detail_nvd::privilege_from_cvss(cvss.value("privilegesRequired", "NONE"));
    v.requires_user_interaction =
        cvss.value("userInteraction", "NONE") == "REQUIRED";
    v.effect = detail_nvd::effect_from_text(lower);
    v.gained_privilege = detail_nvd::gained_privilege(
        v.effect, v.required_privilege, lower, cvss.value("baseSeverity", ""));
    return v;
}

// Splits "http://host:port/prefix" into client base and path prefix.
std::pair<std::string, std::string> split_endpoint(const std::string& url) {
    auto scheme = url.find("://");
    std::size_t host_start = scheme == std::string::npos ? 0 : scheme + 3;
    auto path_start = url.find('/', host_start);
    if (path_start == std::string::npos) return {url, ""};
    std::string prefix = url.substr(path_start);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    return {url.substr(0, path_start), prefix};
}

std::string url_encode(const std::string& text) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : text) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xf]);
        }
    }
    return out;
}

}  // namespace

std::vector<AttackVector> fetch_remote(const std::string& endpoint,
                                       const std::string& query) {
    auto [base, prefix] = split_endpoint(endpoint);
    httplib::Client client(base);
    client.set_connection_timeout(5, 0);
    client.set_read_timeout(10, 0);

    std::string path = prefix + "/api/search/" + url_encode(query);
    auto res = client.Get(path);
    if (!res) {
        throw NetworkError("could not reach " + endpoint + ": " +
                           httplib::to_string(res.error()));
    }
    if (res->status < 200 || res->status >= 300) {
        throw RemoteStatusError(res->status,
                                "query against " + endpoint + " failed");
    }

    json body;
    try {
        body = json::parse(res->body);
    } catch (const json::parse_error& e) {
        throw IngestError(std::string("malformed response JSON: ") + e.what());
    }
    if (!body.is_array()) {
        throw IngestError("response must be a JSON array of entries");
    }

    std::vector<AttackVector> out;
    for (const auto& item : body) {
        try {
            out.push_back(vector_from_remote_entry(item));
        } catch (const std::exception& e) {
            throw IngestError(std::string("malformed response entry: ") +
                              e.what());
        }
    }
    return out;
}

}  // namespace cpsva
