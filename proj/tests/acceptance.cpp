// End-to-end acceptance gate for the assessment pipeline. Each criterion
// prints exactly one [PASS]/[FAIL] line; the process exits non-zero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cpsva/analysis.hpp"
#include "cpsva/graph.hpp"
#include "cpsva/matcher.hpp"
#include "cpsva/model.hpp"
#include "cpsva/report.hpp"
#include "cpsva/vulndb.hpp"
#include "helpers.hpp"
#include "strutil.hpp"

using namespace cpsva;
using namespace cpsva::testing;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

std::set<std::string> ids(const std::vector<Evidence>& evidence) {
    std::set<std::string> out;
    for (const auto& e : evidence) out.insert(e.vector_id);
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

}  // namespace

int main() {
    VulnStore store = ingest_nvd(read_fixture("vulndb/fcs_fixture_feed.json"));
    SystemModel fcs = load_example_fcs();

    criterion(1, "GPS scan yields exactly the two known advisories in < 1 s",
              [&](std::string& detail) {
                  auto start = std::chrono::steady_clock::now();
                  auto matches = match_model(fcs, store);
                  double elapsed = seconds_since(start);
                  std::set<std::string> expected = {"CVE-2016-3801",
                                                    "CVE-2016-6788"};
                  if (ids(matches.at("gps")) != expected) {
                      detail = "unexpected GPS evidence set";
                      return false;
                  }
                  if (elapsed >= 1.0) {
                      detail = "took " + std::to_string(elapsed) + " s";
                      return false;
                  }
                  return true;
              });

    criterion(2, "both GPS evidence items lift to one identical CWE id",
              [&](std::string& detail) {
                  auto [w1, p1] = store.lift("CVE-2016-3801");
                  auto [w2, p2] = store.lift("CVE-2016-6788");
                  (void)p1;
                  (void)p2;
                  if (w1.size() != 1 || w1 != w2) {
                      detail = "weakness sets differ or are not singletons";
                      return false;
                  }
                  detail = "shared id " + *w1.begin();
                  return true;
              });

    criterion(3, "radio evidence is the two ZigBee advisories, both DoS",
              [&](std::string& detail) {
                  auto matches = match_model(fcs, store);
                  std::set<std::string> expected = {"CVE-2015-8732",
                                                    "CVE-2015-6244"};
                  if (ids(matches.at("radio")) != expected) {
                      detail = "unexpected radio evidence set";
                      return false;
                  }
                  for (const auto& id : expected) {
                      if (store.lookup(id)->effect !=
                          Effect::DenialOfService) {
                          detail = id + " is not denial_of_service";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(4, "exactly one 2-step GPS chain with the interaction flags",
              [&](std::string& detail) {
                  IbdGraph graph = to_graph(fcs);
                  auto matches = match_model(fcs, store);
                  std::vector<Evidence> all;
                  for (const auto& [id, list] : matches) {
                      all.insert(all.end(), list.begin(), list.end());
                  }
                  auto chains = find_chains(all, graph, store);
                  if (chains.size() != 1 || chains[0].steps.size() != 2) {
                      detail = "expected exactly one 2-step chain, got " +
                               std::to_string(chains.size());
                      return false;
                  }
                  const AttackChain& chain = chains[0];
                  if (chain.steps[0].vector_id != "CVE-2016-3801" ||
                      chain.steps[1].vector_id != "CVE-2016-6788") {
                      detail = "wrong step order";
                      return false;
                  }
                  bool ui1 = store.lookup(chain.steps[0].vector_id)
                                 ->requires_user_interaction;
                  bool ui2 = store.lookup(chain.steps[1].vector_id)
                                 ->requires_user_interaction;
                  if (!ui1 || ui2) {
                      detail = "interaction flags wrong";
                      return false;
                  }
                  return true;
              });

    criterion(
        5, "impact: processor code execution is full, radio DoS is partial",
        [&](std::string& detail) {
            IbdGraph graph = to_graph(fcs);
            Evidence ce;
            ce.component = "primary_processor";
            ce.vector_id = "CVE-2016-6788";
            ImpactResult full = impact(graph, ce, store);
            if (full.degradation != Degradation::Full) {
                detail = "processor compromise is not full degradation";
                return false;
            }
            for (const auto& endpoint : actuation_endpoints(graph)) {
                if (!full.violated.count(endpoint)) {
                    detail = "actuation endpoint " + endpoint +
                             " not violated";
                    return false;
                }
            }

            Evidence dos;
            dos.component = "radio";
            dos.vector_id = "CVE-2015-8732";
            ImpactResult partial = impact(graph, dos, store);
            if (partial.degradation != Degradation::Partial) {
                detail = "radio DoS is not partial degradation";
                return false;
            }
            bool gcs_severed = false;
            for (const auto& id : partial.severed_ports) {
                const Port& p = graph.port(id);
                if (p.source == "gcs_link" || p.target == "gcs_link") {
                    gcs_severed = true;
                }
            }
            if (!gcs_severed) {
                detail = "ground-control link not severed";
                return false;
            }
            return true;
        });

    criterion(6, "1000 random models survive the GraphML round trip in < 30 s",
              [&](std::string& detail) {
                  Rng rng(60606);
                  auto start = std::chrono::steady_clock::now();
                  for (int i = 0; i < 1000; ++i) {
                      SystemModel m = random_model(rng);
                      IbdGraph g = to_graph(m);
                      IbdGraph back = parse_graphml(emit_graphml(g));
                      if (!(back == g)) {
                          detail = "round trip lost information at iteration " +
                                   std::to_string(i);
                          return false;
                      }
                      for (const auto& v : g.vertices()) {
                          if (back.attr_v(v) != g.attr_v(v)) {
                              detail = "attribute mismatch on " + v;
                              return false;
                          }
                      }
                      for (const auto& p : g.ports()) {
                          if (back.attr_p(p.id) != g.attr_p(p.id)) {
                              detail = "port attribute mismatch on " + p.id;
                              return false;
                          }
                      }
                  }
                  double elapsed = seconds_since(start);
                  if (elapsed >= 30.0) {
                      detail = "took " + std::to_string(elapsed) + " s";
                      return false;
                  }
                  return true;
              });

    criterion(
        7, "indexed matching equals brute force on 200 random pairs",
        [&](std::string& detail) {
            Rng rng(70707);
            for (int round = 0; round < 200; ++round) {
                VulnStore random = random_store(rng, 1000);
                SystemModel m = random_model(rng, /*allow_nasty=*/false);
                for (const auto& component : m.components) {
                    if (!component.is_cyber) continue;
                    std::set<std::string> brute;
                    for (const auto& term : query_terms(component)) {
                        for (std::size_t i = 0; i < random.size(); ++i) {
                            const AttackVector& r = random.records()[i];
                            std::string summary =
                                cpsva::detail::to_lower(r.summary);
                            std::string products;
                            for (const auto& p : r.affected_products) {
                                products +=
                                    cpsva::detail::to_lower(p.text()) + " ";
                            }
                            if (summary.find(term.text) != std::string::npos ||
                                products.find(term.text) !=
                                    std::string::npos) {
                                brute.insert(r.id);
                            }
                        }
                    }
                    if (ids(match_component(component, random)) != brute) {
                        detail = "discrepancy in round " +
                                 std::to_string(round) + " on " + component.id;
                        return false;
                    }
                }
            }
            return true;
        });

    criterion(
        8, "schema gate: clean GPS record passes, mutations are named",
        [&](std::string& detail) {
            if (!validate_component(gps_component()).empty()) {
                detail = "reference GPS record failed validation";
                return false;
            }

            // Mutation 1: drop a category key from the model text.
            std::string doc = example_fcs_text();
            auto pos = doc.find("firmware = Communication protocol drivers\n");
            if (pos == std::string::npos) {
                detail = "fixture text unexpectedly changed";
                return false;
            }
            std::string mutated = doc;
            mutated.erase(
                pos,
                std::string("firmware = Communication protocol drivers\n")
                    .size());
            bool missing_named = false;
            try {
                parse_model(mutated);
            } catch (const ModelParseError& e) {
                for (const auto& issue : e.issues()) {
                    if (issue.message.find("missing category 'firmware'") !=
                        std::string::npos) {
                        missing_named = true;
                    }
                }
            }
            if (!missing_named) {
                detail = "missing-category mutation not rejected by name";
                return false;
            }

            // Mutation 2: entry point outside the communication set.
            CyberComponent bad = gps_component();
            bad.record.communication = {"I2C"};
            bad.record.entry_points = {"RF"};
            bool subset_named = false;
            for (const auto& violation : validate_component(bad)) {
                if (violation.find("entry_points not subset of communication") !=
                    std::string::npos) {
                    subset_named = true;
                }
            }
            if (!subset_named) {
                detail = "entry-point mutation not rejected by name";
                return false;
            }
            return true;
        });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
