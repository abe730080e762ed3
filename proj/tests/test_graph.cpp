#include <algorithm>

#include "cpsva/graph.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cpsva;
using namespace cpsva::testing;

namespace {

const Port* find_port(const IbdGraph& g, const std::string& src,
                      const std::string& tgt) {
    for (const auto& p : g.ports()) {
        if (p.source == src && p.target == tgt) return &p;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("FCS graph has one vertex per component and one port per link") {
    SystemModel m = load_example_fcs();
    IbdGraph g = to_graph(m);
    CHECK(g.vertices().size() == m.components.size());
    CHECK(g.ports().size() == m.connections.size());
    CHECK(std::is_sorted(g.vertices().begin(), g.vertices().end()));
    for (const auto& c : m.components) CHECK(g.has_vertex(c.id));
}

TEST_CASE("vertex attributes are the flattened taxonomic record") {
    IbdGraph g = to_graph(load_example_fcs());
    CHECK(g.attr_v("gps") == flatten_attributes(gps_component()));
    CHECK(g.attr_v("servos").empty());
    CHECK_THROWS_AS((void)g.attr_v("nonexistent"), LookupError);
}

TEST_CASE("port attributes carry kind and protocol labels") {
    IbdGraph g = to_graph(load_example_fcs());
    const Port* gp = find_port(g, "gps", "primary_processor");
    REQUIRE(gp);
    CHECK(g.attr_p(gp->id) == std::vector<std::string>{"digital", "I2C"});

    const Port* ep = find_port(g, "engine_sensor", "primary_processor");
    REQUIRE(ep);
    CHECK(g.attr_p(ep->id) == std::vector<std::string>{"analog"});
    CHECK_THROWS_AS((void)g.attr_p("p999"), LookupError);
}

TEST_CASE("port ids are assigned in normalized connection order") {
    IbdGraph g = to_graph(load_example_fcs());
    for (std::size_t i = 0; i < g.ports().size(); ++i) {
        CHECK(g.ports()[i].id == "p" + std::to_string(i));
    }
}

TEST_CASE("to_graph rejects invalid models") {
    SystemModel m = load_example_fcs();
    m.components[0].record.entry_points.insert("not-a-protocol");
    CHECK_THROWS_AS((void)to_graph(m), ValidationError);
}

TEST_CASE("emit_graphml is deterministic") {
    SystemModel m = load_example_fcs();
    CHECK(emit_graphml(to_graph(m)) == emit_graphml(to_graph(m)));
}

TEST_CASE("emitted GraphML matches the golden fixture") {
    // Regenerate with: build/cpsva export-graphml fixtures/fcs.model
    CHECK(emit_graphml(to_graph(load_example_fcs())) ==
          read_fixture("fcs.graphml"));
}

TEST_CASE("FCS GraphML round-trips losslessly") {
    IbdGraph g = to_graph(load_example_fcs());
    CHECK(parse_graphml(emit_graphml(g)) == g);
}

TEST_CASE("multi-values with ';' and '\\' survive the join/split escape") {
    SystemModel m;
    m.name = "esc";
    CyberComponent c;
    c.id = "dev";
    c.is_cyber = true;
    c.record.device_name = {"a;b", "c\\d", "plain"};
    c.record.communication = {"x;y"};
    m.components.push_back(c);
    IbdGraph g = to_graph(m);
    CHECK(parse_graphml(emit_graphml(g)) == g);
}

TEST_CASE("XML special characters survive the round trip") {
    SystemModel m;
    m.name = "<&\">'";
    CyberComponent c;
    c.id = "dev";
    c.is_cyber = true;
    c.record.device_name = {"g<h> & i\"j 'k'"};
    m.components.push_back(c);
    IbdGraph g = to_graph(m);
    CHECK(parse_graphml(emit_graphml(g)) == g);
}

TEST_CASE("parse_graphml reports malformed XML with a location") {
    try {
        parse_graphml("<graphml><graph>");
        FAIL("expected GraphmlError");
    } catch (const GraphmlError& e) {
        CHECK(e.line() >= 1);
    }
}

TEST_CASE("parse_graphml rejects undeclared edge endpoints") {
    std::string doc = emit_graphml(to_graph(load_example_fcs()));
    auto pos = doc.find("source=\"gps\"");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, std::string("source=\"gps\"").size(),
                "source=\"ghost\"");
    try {
        parse_graphml(doc);
        FAIL("expected GraphmlError");
    } catch (const GraphmlError& e) {
        CHECK(std::string(e.what()).find("undeclared node") !=
              std::string::npos);
    }
}

TEST_CASE("parse_graphml rejects unknown attribute keys") {
    std::string doc = emit_graphml(to_graph(load_example_fcs()));
    auto pos = doc.find("d_os");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, 4, "d_xx");
    CHECK_THROWS_AS((void)parse_graphml(doc), GraphmlError);
}

TEST_CASE("randomized models round-trip model -> graph -> GraphML -> graph") {
    Rng rng(31337);
    for (int i = 0; i < 300; ++i) {
        IbdGraph g = to_graph(random_model(rng));
        std::string doc = emit_graphml(g);
        CAPTURE(doc);
        CHECK(parse_graphml(doc) == g);
    }
}

TEST_CASE("graphs reached from shuffled connection lists are identical") {
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        SystemModel m = random_model(rng);
        SystemModel shuffled = m;
        std::shuffle(shuffled.connections.begin(), shuffled.connections.end(),
                     rng);
        std::shuffle(shuffled.components.begin(), shuffled.components.end(),
                     rng);
        CHECK(to_graph(m) == to_graph(shuffled));
        CHECK(emit_graphml(to_graph(m)) == emit_graphml(to_graph(shuffled)));
    }
}
