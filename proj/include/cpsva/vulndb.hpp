#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpsva/errors.hpp"

namespace cpsva {

/// Ordered privilege levels: None < User < System.
enum class Privilege { None = 0, User = 1, System = 2 };

const char* privilege_name(Privilege p);

enum class Effect {
    CodeExecution,
    PrivilegeGain,
    DenialOfService,
    InformationDisclosure,
};

const char* effect_name(Effect e);

struct ProductDescriptor {
    std::string vendor;
    std::string product;
    std::string version;  // free-form version or range text, may be empty

    std::string text() const;
    bool operator==(const ProductDescriptor&) const = default;
};

/// One historic vulnerability record in the shape the pipeline consumes.
struct AttackVector {
    std::string id;  // e.g. "CVE-2016-3801", stored uppercase
    std::string summary;
    std::vector<ProductDescriptor> affected_products;
    std::vector<std::string> weakness_ids;  // CWE ids
    std::vector<std::string> pattern_ids;   // CAPEC ids, often empty
    Privilege required_privilege = Privilege::None;
    Privilege gained_privilege = Privilege::None;
    bool requires_user_interaction = false;
    Effect effect = Effect::InformationDisclosure;

    bool operator==(const AttackVector&) const = default;
};

/// Write-once store over attack vectors with a whitespace-token index used
/// to prefilter substring matching. Read-only and shareable after loading.
class VulnStore {
public:
    /// Adds a record; a duplicate id (case-insensitive) is ignored, which
    /// makes repeated ingestion of the same feed idempotent.
    /// Returns false when the record was already present.
    bool add(AttackVector record);

    /// Case-insensitive id lookup; nullptr signals absence.
    const AttackVector* lookup(std::string_view id) const;

    /// CVE -> (CWE ids, CAPEC ids). Throws LookupError for unknown ids.
    std::pair<std::set<std::string>, std::set<std::string>>
    lift(std::string_view id) const;

    const std::vector<AttackVector>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }

    /// Records that may contain `term` as a substring of their normalized
    /// summary + affected-products text. Guaranteed superset of the true
    /// match set; callers verify by containment.
    std::vector<const AttackVector*> candidates(std::string_view term) const;

    /// Lowercased summary + product text of record i, used for matching.
    const std::string& searchable_text(std::size_t index) const;

    /// token -> indices of records whose searchable text contains the token.
    const std::map<std::string, std::vector<std::size_t>>& token_index() const {
        return index_;
    }

    /// Stable content hash over all stored records, for report headers.
    std::string content_hash() const;

private:
    std::vector<AttackVector> records_;
    std::vector<std::string> texts_;
    std::map<std::string, std::size_t> by_id_;  // uppercase id -> index
    std::map<std::string, std::vector<std::size_t>> index_;
};

struct IngestReport {
    std::size_t added = 0;
    std::size_t skipped = 0;
    std::vector<std::string> warnings;  // one entry per skipped record
};

/// Ingests an NVD-style JSON feed into `store`. Per-entry schema violations
/// skip the entry and add a warning; file-level malformation throws
/// IngestError. The field mapping is documented in docs/nvd-mapping.md.
IngestReport ingest_nvd(const std::string& feed_json, VulnStore& store);

/// Convenience: fresh store from one feed document.
VulnStore ingest_nvd(const std::string& feed_json);

/// Queries a cve-search style HTTP endpoint (GET <base>/api/search/<query>)
/// and maps the JSON response to attack vectors. Results are returned, not
/// merged; the offline pipeline never calls this. Throws NetworkError or
/// RemoteStatusError on transport problems and IngestError on malformed
/// response bodies.
std::vector<AttackVector> fetch_remote(const std::string& endpoint,
                                       const std::string& query);

}  // namespace cpsva
