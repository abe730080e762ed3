#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cpsva/model.hpp"
#include "cpsva/schema.hpp"
#include "cpsva/vulndb.hpp"

namespace cpsva {

/// Generic engineering nouns excluded as single-token query terms. Full
/// phrases are always kept, so specificity is never lost. Shipped as
/// data/stopwords.txt as well.
const std::set<std::string>& default_stopwords();

struct QueryTerm {
    std::string text;  // lowercase, trimmed, length >= 3
    std::string component_id;
    Category category;           // one of the matchable categories
    std::string original_value;  // the attribute value the term came from

    bool operator==(const QueryTerm&) const = default;
};

enum class MatchedField { Summary, AffectedProducts };

const char* matched_field_name(MatchedField f);

struct Evidence {
    std::string component;
    std::string vector_id;
    QueryTerm matched_term;
    MatchedField matched_field = MatchedField::Summary;
    std::set<std::string> lifted_weaknesses;
    std::set<std::string> lifted_patterns;

    bool operator==(const Evidence&) const = default;
};

/// Derives query terms from the five matchable categories of a component:
/// the full normalized phrase of each value, every contiguous word n-gram
/// containing at least one non-stopword token, and every non-stopword
/// token of length >= 3. Deterministic order, no duplicates. Non-cyber
/// components yield no terms.
std::vector<QueryTerm> query_terms(const CyberComponent& component);
std::vector<QueryTerm> query_terms(const CyberComponent& component,
                                   const std::set<std::string>& stopwords);

/// One Evidence per store record containing any query term as a
/// case-insensitive substring of its summary or affected products; a single
/// matching attribute suffices. Multiple matching terms collapse to the
/// longest one. Results are sorted by vector id and carry lift() data.
std::vector<Evidence> match_component(const CyberComponent& component,
                                      const VulnStore& store);

/// Per-component matches over the whole model. Components without evidence
/// map to empty lists so reports can state the absence explicitly.
std::map<std::string, std::vector<Evidence>> match_model(
    const SystemModel& model, const VulnStore& store);

}  // namespace cpsva
