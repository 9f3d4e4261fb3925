#include "mvroute/verify.hpp"

#include <array>
#include <exception>

namespace mvroute {

namespace {

constexpr std::array<const char*, 12> kRepeaterDevices = {"N0", "P0", "N1", "P1", "N2", "P2",
                                                          "N3", "P3", "N4", "P4", "N5", "P5"};
// 1 = ON; rows are input levels 0..3.
constexpr int kRepeaterStates[4][12] = {
    {0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0},
    {0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0},
    {1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1},
    {1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1},
};

constexpr int kDlc[4][3] = {{3, 3, 3}, {0, 3, 3}, {0, 0, 3}, {0, 0, 0}};

// DLC0 DLC1 DLC2 SELECT S0 S1
constexpr int kTranslator[4][6] = {
    {3, 3, 3, 1, 1, 1},
    {0, 3, 3, 1, 0, 1},
    {0, 0, 3, 0, 1, 0},
    {0, 0, 0, 0, 0, 0},
};

void check(SuiteResult& s, bool ok, const std::string& what) {
    ++s.total;
    if (ok) {
        ++s.passed;
    } else {
        s.failures.push_back(what);
    }
}

}  // namespace

std::vector<SuiteResult> run_truth_table_suites(const VoltageMap& vmap, const PrimitiveOptions& options) {
    SuiteResult dlc{"dlc", 0, 0, {}};
    SuiteResult states{"repeater-states", 0, 0, {}};
    SuiteResult identity{"repeater-identity", 0, 0, {}};
    SuiteResult xlat{"translator-4to2", 0, 0, {}};
    SuiteResult round{"translator-roundtrip", 0, 0, {}};

    for (int level = 0; level < 4; ++level) {
        const std::string in = "IN=" + std::to_string(level);
        for (int k = 0; k < 3; ++k) {
            const std::string what = "DLC" + std::to_string(k) + " " + in;
            try {
                check(dlc, dlc_transfer(k, level, vmap, options) == kDlc[level][k], what);
            } catch (const std::exception& e) {
                check(dlc, false, what + ": " + e.what());
            }
        }

        try {
            const auto run = run_repeater(level, vmap, options);
            for (std::size_t d = 0; d < kRepeaterDevices.size(); ++d) {
                check(states, run.state.is_on(kRepeaterDevices[d]) == (kRepeaterStates[level][d] == 1),
                      std::string(kRepeaterDevices[d]) + " " + in);
            }
            check(identity, run.output_level == level, "repeater " + in);
        } catch (const std::exception& e) {
            for (std::size_t d = 0; d < kRepeaterDevices.size(); ++d) {
                check(states, false, std::string(kRepeaterDevices[d]) + " " + in + ": " + e.what());
            }
            check(identity, false, "repeater " + in + ": " + e.what());
        }

        try {
            const auto r = run_translator_4to2(level, vmap, options);
            const int* row = kTranslator[level];
            check(xlat,
                  r.dlc0 == row[0] && r.dlc1 == row[1] && r.dlc2 == row[2] && r.select == row[3] && r.bits.s0 == row[4] &&
                      r.bits.s1 == row[5],
                  "4-2 row " + in);
            check(round, translate_2_to_4(r.bits, vmap, options) == level, "round trip " + in);
        } catch (const std::exception& e) {
            check(xlat, false, "4-2 row " + in + ": " + e.what());
            check(round, false, "round trip " + in + ": " + e.what());
        }
    }
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s0 = 0; s0 < 2; ++s0) {
            const std::string what = "bits " + std::to_string(s1) + std::to_string(s0);
            try {
                const int level = translate_2_to_4({s1, s0}, vmap, options);
                check(round, translate_4_to_2(level, vmap, options) == TranslatorBits{s1, s0}, what);
            } catch (const std::exception& e) {
                check(round, false, what + ": " + e.what());
            }
        }
    }
    return {dlc, states, identity, xlat, round};
}

}  // namespace mvroute
