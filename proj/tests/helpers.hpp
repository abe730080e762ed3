#pragma once

// Shared fixtures and randomized generators for the test suites.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cpsva/model.hpp"
#include "cpsva/schema.hpp"
#include "cpsva/vulndb.hpp"

namespace cpsva::testing {

inline std::string read_fixture(const std::string& name) {
    std::string path = std::string(CPSVA_FIXTURE_DIR) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

/// The reference GPS component used throughout the suites.
inline CyberComponent gps_component() {
    CyberComponent c;
    c.id = "gps";
    c.display_name = "NMEA GPS";
    c.is_cyber = true;
    c.function_note = "Provides location data for navigation";
    c.record.operating_system = {"Bare Metal"};
    c.record.device_name = {"Adafruit Ultimate GPS"};
    c.record.hardware = {"Mediatek MTK 3339 chipset"};
    c.record.firmware = {"Communication protocol drivers"};
    c.record.communication = {"I2C", "RS232", "UART", "RF"};
    c.record.entry_points = {"RF"};
    return c;
}

inline CyberComponent xbee_component() {
    CyberComponent c;
    c.id = "radio";
    c.display_name = "Radio Module";
    c.is_cyber = true;
    c.record.operating_system = {"Bare Metal"};
    c.record.device_name = {"XBee"};
    c.record.hardware = {"EM357 transceiver"};
    c.record.firmware = {"ZigBee IEEE 802.15.4 protocol drivers"};
    c.record.communication = {"UART", "RF", "ZigBee IEEE 802.15.4"};
    c.record.entry_points = {"RF"};
    return c;
}

// ---- randomized generators ---------------------------------------------

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline const std::vector<std::string>& word_pool() {
    static const std::vector<std::string> pool = {
        "alpha",  "bravo",  "delta",   "echo",   "foxtrot", "golf",
        "hotel",  "india",  "juliet",  "kilo",   "lima",    "oscar",
        "quebec", "romeo",  "sierra",  "tango",  "victor",  "whiskey",
        "x200",   "z9000",  "driver",  "chipset", "metal",  "rev2",
    };
    return pool;
}

/// Tokens containing model/GraphML special characters, for escaping tests.
inline const std::vector<std::string>& nasty_pool() {
    static const std::vector<std::string> pool = {
        "a;b", "c\\d", "e&f", "g<h>", "i\"j", "k,l", "m'n", "p=q",
    };
    return pool;
}

inline std::string random_value(Rng& rng, bool allow_nasty = true) {
    int words = rand_int(rng, 1, 3);
    std::string out;
    for (int i = 0; i < words; ++i) {
        if (i) out += " ";
        if (allow_nasty && chance(rng, 0.15)) {
            out += nasty_pool()[rand_int(rng, 0, int(nasty_pool().size()) - 1)];
        } else {
            out += word_pool()[rand_int(rng, 0, int(word_pool().size()) - 1)];
        }
    }
    return out;
}

inline std::vector<std::string> random_values(Rng& rng, int max_count,
                                              bool allow_nasty = true) {
    std::vector<std::string> out;
    int n = rand_int(rng, 0, max_count);
    for (int i = 0; i < n; ++i) {
        std::string v = random_value(rng, allow_nasty);
        if (std::find(out.begin(), out.end(), v) == out.end()) {
            out.push_back(v);
        }
    }
    return out;
}

inline const std::vector<std::string>& protocol_pool() {
    static const std::vector<std::string> pool = {
        "I2C", "UART", "SPI", "CAN", "RF", "PWM", "RS232",
    };
    return pool;
}

inline CyberComponent random_component(Rng& rng, const std::string& id,
                                       bool allow_nasty = true) {
    CyberComponent c;
    c.id = id;
    c.display_name = "Component " + id;
    c.is_cyber = chance(rng, 0.8);
    if (chance(rng, 0.4)) c.function_note = random_value(rng, false);
    if (!c.is_cyber) return c;

    c.record.operating_system = random_values(rng, 2, allow_nasty);
    c.record.device_name = random_values(rng, 2, allow_nasty);
    if (c.record.device_name.empty()) {
        c.record.device_name = {random_value(rng, allow_nasty)};
    }
    c.record.hardware = random_values(rng, 2, allow_nasty);
    c.record.firmware = random_values(rng, 2, allow_nasty);
    c.record.software = random_values(rng, 2, allow_nasty);
    int protocols = rand_int(rng, 1, 3);
    for (int i = 0; i < protocols; ++i) {
        c.record.communication.insert(
            protocol_pool()[rand_int(rng, 0, int(protocol_pool().size()) - 1)]);
    }
    for (const auto& p : c.record.communication) {
        if (chance(rng, 0.3)) c.record.entry_points.insert(p);
    }
    return c;
}

inline SystemModel random_model(Rng& rng, bool allow_nasty = true) {
    SystemModel m;
    m.name = "model-" + std::to_string(rand_int(rng, 0, 100000));
    int n = rand_int(rng, 0, 8);
    for (int i = 0; i < n; ++i) {
        m.components.push_back(
            random_component(rng, "c" + std::to_string(i), allow_nasty));
    }
    if (n >= 2) {
        int conns = rand_int(rng, 0, 2 * n);
        for (int i = 0; i < conns; ++i) {
            int a = rand_int(rng, 0, n - 1);
            int b = rand_int(rng, 0, n - 1);
            if (a == b) continue;
            Connection conn;
            conn.source = m.components[a].id;
            conn.target = m.components[b].id;
            int kind = rand_int(rng, 0, 2);
            conn.kind = kind == 0   ? ConnectionKind::Digital
                        : kind == 1 ? ConnectionKind::Analog
                                    : ConnectionKind::Physical;
            if (conn.kind == ConnectionKind::Digital) {
                const std::string& label = protocol_pool()[rand_int(
                    rng, 0, int(protocol_pool().size()) - 1)];
                conn.protocols.insert(label);
                // Keep the protocol-consistency invariant satisfied.
                for (int idx : {a, b}) {
                    if (m.components[idx].is_cyber) {
                        m.components[idx].record.communication.insert(label);
                    }
                }
            }
            // Avoid duplicate (source, target, kind, protocols) rows, which
            // would collide after canonicalization.
            if (std::find(m.connections.begin(), m.connections.end(), conn) ==
                m.connections.end()) {
                m.connections.push_back(conn);
            }
        }
    }
    return m;
}

inline AttackVector random_vector(Rng& rng, int serial) {
    AttackVector v;
    char id[32];
    std::snprintf(id, sizeof(id), "CVE-2020-%04d", serial);
    v.id = id;
    int words = rand_int(rng, 4, 12);
    for (int i = 0; i < words; ++i) {
        if (i) v.summary += " ";
        v.summary += word_pool()[rand_int(rng, 0, int(word_pool().size()) - 1)];
    }
    if (chance(rng, 0.5)) {
        v.affected_products.push_back(
            {random_value(rng, false), random_value(rng, false), ""});
    }
    if (chance(rng, 0.6)) {
        v.weakness_ids.push_back("CWE-" + std::to_string(rand_int(rng, 1, 500)));
    }
    v.required_privilege = Privilege(rand_int(rng, 0, 2));
    v.gained_privilege = Privilege(rand_int(rng, 0, 2));
    v.requires_user_interaction = chance(rng, 0.5);
    v.effect = Effect(rand_int(rng, 0, 3));
    if ((v.effect == Effect::CodeExecution ||
         v.effect == Effect::PrivilegeGain) &&
        v.gained_privilege < v.required_privilege) {
        v.gained_privilege = v.required_privilege;
    }
    return v;
}

inline VulnStore random_store(Rng& rng, int max_records) {
    VulnStore store;
    int n = rand_int(rng, 0, max_records);
    for (int i = 0; i < n; ++i) {
        store.add(random_vector(rng, i));
    }
    return store;
}

}  // namespace cpsva::testing
