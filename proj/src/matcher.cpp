#include "cpsva/matcher.hpp"

#include <algorithm>

#include "strutil.hpp"

namespace cpsva {

const std::set<std::string>& default_stopwords() {
    // Generic engineering nouns that would match far beyond the component
    // they describe; shipped as data/stopwords.txt as well.
    static const std::set<std::string> words = {
        "chipset", "drivers", "driver",  "protocol", "communication",
        "module",  "bare",    "metal",   "sensor",   "board",
    };
    return words;
}

const char* matched_field_name(MatchedField f) {
    return f == MatchedField::Summary ? "summary" : "affected_products";
}

std::vector<QueryTerm> query_terms(const CyberComponent& component) {
    return query_terms(component, default_stopwords());
}

std::vector<QueryTerm> query_terms(const CyberComponent& component,
                                   const std::set<std::string>& stopwords) {
    if (!component.is_cyber) return {};
    AttributeSet attrs = flatten_attributes(component);

    std::vector<QueryTerm> out;
    std::set<std::string> seen;
    auto emit = [&](const std::string& text, Category category,
                    const std::string& original) {
        if (text.size() < 3) return;
        if (!seen.insert(text).second) return;
        out.push_back({text, component.id, category, original});
    };

    for (const auto& [category, value] : attrs) {
        if (!category_matchable(category)) continue;
        std::string phrase = detail::normalize_ws(detail::to_lower(value));
        auto words = detail::split_ws(phrase);
        if (words.empty()) continue;

        // The full phrase is always kept, so specificity is never lost.
        emit(phrase, category, value);

        // Sub-phrases: contiguous n-grams carrying at least one
        // non-stopword token, then the individual non-stopword tokens.
        for (std::size_t len = words.size() - 1; len >= 1 && len < words.size();
             --len) {
            for (std::size_t start = 0; start + len <= words.size(); ++start) {
                bool informative = false;
                for (std::size_t i = start; i < start + len; ++i) {
                    if (!stopwords.count(words[i])) informative = true;
                }
                if (!informative) continue;
                std::vector<std::string> slice(words.begin() + start,
                                               words.begin() + start + len);
                emit(detail::join(slice, " "), category, value);
            }
        }
    }
    return out;
}

namespace {

struct Candidate {
    const QueryTerm* term;
    MatchedField field;
};

bool better_term(const QueryTerm& a, const QueryTerm& b) {
    if (a.text.size() != b.text.size()) return a.text.size() > b.text.size();
    return a.text < b.text;
}

}  // namespace

std::vector<Evidence> match_component(const CyberComponent& component,
                                      const VulnStore& store) {
    std::vector<QueryTerm> terms = query_terms(component, default_stopwords());

    // Per vector, keep the longest matching term.
    std::map<std::string, Candidate> best;
    for (const auto& term : terms) {
        for (const AttackVector* record : store.candidates(term.text)) {
            std::string summary = detail::to_lower(record->summary);
            MatchedField field;
            if (detail::contains(summary, term.text)) {
                field = MatchedField::Summary;
            } else {
                std::string products;
                for (const auto& p : record->affected_products) {
                    products += detail::to_lower(p.text()) + " ";
                }
                if (!detail::contains(products, term.text)) continue;
                field = MatchedField::AffectedProducts;
            }
            auto [it, inserted] = best.try_emplace(record->id,
                                                   Candidate{&term, field});
            if (!inserted && better_term(term, *it->second.term)) {
                it->second = {&term, field};
            }
        }
    }

    std::vector<Evidence> out;
    out.reserve(best.size());
    for (const auto& [vector_id, candidate] : best) {
        Evidence e;
        e.component = component.id;
        e.vector_id = vector_id;
        e.matched_term = *candidate.term;
        e.matched_field = candidate.field;
        std::tie(e.lifted_weaknesses, e.lifted_patterns) =
            store.lift(vector_id);
        out.push_back(std::move(e));
    }
    // std::map iteration already yields vector-id order.
    return out;
}

std::map<std::string, std::vector<Evidence>> match_model(
    const SystemModel& model, const VulnStore& store) {
    std::map<std::string, std::vector<Evidence>> out;
    for (const auto& component : model.components) {
        out[component.id] = component.is_cyber
                                ? match_component(component, store)
                                : std::vector<Evidence>{};
    }
    return out;
}

}  // namespace cpsva
