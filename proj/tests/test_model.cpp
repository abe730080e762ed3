#include <algorithm>

#include "cpsva/model.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cpsva;
using namespace cpsva::testing;

namespace {

bool has_connection(const SystemModel& m, const std::string& src,
                    const std::string& tgt, ConnectionKind kind,
                    const std::set<std::string>& protocols) {
    return std::any_of(m.connections.begin(), m.connections.end(),
                       [&](const Connection& c) {
                           return c.source == src && c.target == tgt &&
                                  c.kind == kind && c.protocols == protocols;
                       });
}

}  // namespace

TEST_CASE("the bundled FCS model parses with the expected roster") {
    SystemModel m = load_example_fcs();
    CHECK(m.name == "Flight Control System");
    for (const char* id : {"primary_processor", "gps", "radio",
                           "safety_switch", "servos"}) {
        CHECK(m.find_component(id) != nullptr);
    }

    const CyberComponent* gps = m.find_component("gps");
    REQUIRE(gps);
    CHECK(gps->record == gps_component().record);

    const CyberComponent* radio = m.find_component("radio");
    REQUIRE(radio);
    CHECK(radio->record.device_name ==
          std::vector<std::string>{"XBee"});
    CHECK(radio->record.firmware ==
          std::vector<std::string>{"ZigBee IEEE 802.15.4 protocol drivers"});
    CHECK(radio->record.entry_points == std::set<std::string>{"RF"});

    CHECK(has_connection(m, "gps", "primary_processor",
                         ConnectionKind::Digital, {"I2C"}));
    CHECK(has_connection(m, "safety_switch", "servos",
                         ConnectionKind::Digital, {"PWM"}));
}

TEST_CASE("fixture file on disk matches the embedded example") {
    CHECK(read_fixture("fcs.model") == example_fcs_text());
}

TEST_CASE("name-only document parses to an empty model") {
    SystemModel m = parse_model("name = Empty\n");
    CHECK(m.name == "Empty");
    CHECK(m.components.empty());
    CHECK(m.connections.empty());
}

TEST_CASE("dangling connection endpoint is reported by name") {
    std::string doc =
        "name = t\n"
        "[component] gps\n"
        "cyber = false\n"
        "[connection] gps -> missing_id\n"
        "kind = analog\n";
    try {
        parse_model(doc);
        FAIL("expected ModelParseError");
    } catch (const ModelParseError& e) {
        REQUIRE(e.issues().size() == 1);
        CHECK(e.issues()[0].message.find("missing_id") != std::string::npos);
        CHECK(e.issues()[0].message.find("unknown component reference") !=
              std::string::npos);
    }
}

TEST_CASE("missing category on a cyber component is a named violation") {
    std::string doc = example_fcs_text();
    auto pos = doc.find("software =\ncommunication = I2C, RS232");
    REQUIRE(pos != std::string::npos);
    doc.erase(pos, std::string("software =\n").size());
    try {
        parse_model(doc);
        FAIL("expected ModelParseError");
    } catch (const ModelParseError& e) {
        REQUIRE(e.issues().size() == 1);
        CHECK(e.issues()[0].message.find("missing category 'software'") !=
              std::string::npos);
    }
}

TEST_CASE("self-loops require the loopback flag") {
    std::string base =
        "name = t\n"
        "[component] a\n"
        "cyber = false\n"
        "[connection] a -> a\n"
        "kind = physical\n";
    CHECK_THROWS_AS((void)parse_model(base), ModelParseError);
    CHECK_NOTHROW((void)parse_model(base + "loopback = true\n"));
}

TEST_CASE("digital connections demand protocols known to both endpoints") {
    std::string doc =
        "name = t\n"
        "[component] a\n"
        "cyber = true\n"
        "device = Widget\n"
        "os =\nhardware =\nfirmware =\nsoftware =\n"
        "communication = SPI\nentry_points =\n"
        "[component] b\n"
        "cyber = true\n"
        "device = Gadget\n"
        "os =\nhardware =\nfirmware =\nsoftware =\n"
        "communication = I2C\nentry_points =\n"
        "[connection] a -> b\n"
        "kind = digital\n"
        "protocols = I2C\n";
    try {
        parse_model(doc);
        FAIL("expected ModelParseError");
    } catch (const ModelParseError& e) {
        REQUIRE(e.issues().size() == 1);
        CHECK(e.issues()[0].message.find("I2C") != std::string::npos);
    }
}

TEST_CASE("issues are collected and reported together") {
    std::string doc =
        "name = t\n"
        "[component] a\n"
        "cyber = maybe\n"
        "bogus_key = 1\n"
        "[connection] a -> ghost\n"
        "kind = digital\n";
    try {
        parse_model(doc);
        FAIL("expected ModelParseError");
    } catch (const ModelParseError& e) {
        CHECK(e.issues().size() >= 3);  // bad bool, unknown key, dangling ref
    }
}

TEST_CASE("protocol consistency holds on the fixture") {
    SystemModel m = load_example_fcs();
    for (const auto& conn : m.connections) {
        if (conn.kind != ConnectionKind::Digital) continue;
        const CyberComponent* src = m.find_component(conn.source);
        const CyberComponent* tgt = m.find_component(conn.target);
        REQUIRE(src);
        REQUIRE(tgt);
        for (const auto& p : conn.protocols) {
            if (src->is_cyber) CHECK(src->record.communication.count(p));
            if (tgt->is_cyber) CHECK(tgt->record.communication.count(p));
        }
    }
}

TEST_CASE("fixture round-trips through serialize/parse") {
    SystemModel m = load_example_fcs();
    CHECK(parse_model(serialize_model(m)) == canonicalize(m));
}

TEST_CASE("empty model serializes to a header-only document") {
    SystemModel m;
    m.name = "Empty";
    CHECK(serialize_model(m) == "name = Empty\n");
}

TEST_CASE("randomized models round-trip through serialize/parse") {
    Rng rng(2024);
    for (int i = 0; i < 300; ++i) {
        SystemModel m = random_model(rng);
        CAPTURE(serialize_model(m));
        CHECK(parse_model(serialize_model(m)) == canonicalize(m));
    }
}
