#include "mvroute/config.hpp"
#include "mvroute/errors.hpp"

#include <gtest/gtest.h>

using namespace mvroute;

TEST(Quantity, SuffixesAndUnits) {
    EXPECT_DOUBLE_EQ(parse_quantity("0.9", "V", "x"), 0.9);
    EXPECT_DOUBLE_EQ(parse_quantity("900mV", "V", "x"), 0.9);
    EXPECT_DOUBLE_EQ(parse_quantity(" 40ns ", "s", "x"), 40e-9);
    EXPECT_DOUBLE_EQ(parse_quantity("0.2fF/um", "F/um", "x"), 0.2e-15);
    EXPECT_DOUBLE_EQ(parse_quantity("2k", "ohm", "x"), 2e3);
    EXPECT_THROW((void)parse_quantity("abc", "V", "x"), ConfigError);
    EXPECT_THROW((void)parse_quantity("", "V", "x"), ConfigError);
}

TEST(Quantity, ErrorNamesTheKey) {
    try {
        (void)parse_quantity("fast", "V", "technology.vdd");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("technology.vdd"), std::string::npos);
    }
}

TEST(NumberList, ParsesAndRejects) {
    EXPECT_EQ(parse_number_list("1, 2,4"), (std::vector<double>{1, 2, 4}));
    EXPECT_THROW((void)parse_number_list(""), ConfigError);
    EXPECT_THROW((void)parse_number_list("1,,2"), ConfigError);
    EXPECT_THROW((void)parse_number_list("1,-2"), ConfigError);
}

TEST(Config, DefaultsValidate) {
    RunConfig c;
    EXPECT_NO_THROW(c.validate());
    EXPECT_DOUBLE_EQ(c.tech.vdd, 0.9);
    EXPECT_EQ(c.exp.mode, RepeaterMode::STD);
    EXPECT_DOUBLE_EQ(c.exp.cycle_time(), 40e-9);
}

TEST(Config, ParsesAllSections) {
    const auto c = parse_config(
        "; comment\n"
        "[technology]\nvdd = 1.0V\nvboost = 1200mV\nceff = first_order\n"
        "[architecture]\ntracks_w = 32\nlof = 1.0\n"
        "[experiment]\nmode = FAST\ncycle_s = 20ns\nlengths = 1,10\ntrials = 100\nseed = 7\n");
    EXPECT_DOUBLE_EQ(c.tech.vdd, 1.0);
    EXPECT_DOUBLE_EQ(c.tech.vboost, 1.2);
    EXPECT_TRUE(c.tech.ceff.first_order);
    EXPECT_EQ(c.arch.tracks_w, 32);
    EXPECT_DOUBLE_EQ(c.arch.lof, 1.0);
    EXPECT_EQ(c.exp.mode, RepeaterMode::FAST);
    EXPECT_DOUBLE_EQ(c.exp.cycle_time(), 20e-9);
    EXPECT_EQ(c.exp.lengths, (std::vector<double>{1, 10}));
    EXPECT_EQ(c.exp.mc.trials, 100);
    EXPECT_EQ(c.exp.mc.seed, 7u);
}

TEST(Config, UnknownKeysAndSectionsAreErrors) {
    EXPECT_THROW((void)parse_config("[technology]\nvddd = 1\n"), ConfigError);
    EXPECT_THROW((void)parse_config("[tech]\nvdd = 1\n"), ConfigError);
    EXPECT_THROW((void)parse_config("vdd = 1\n"), ConfigError);
    try {
        (void)parse_config("[technology]\nfoo = 1\n", "my.ini");
        FAIL();
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("my.ini"), std::string::npos);
        EXPECT_NE(msg.find("technology.foo"), std::string::npos);
    }
}

TEST(Config, BadValuesAreErrors) {
    EXPECT_THROW((void)parse_config("[technology]\nvdd = -1\n"), ConfigError);
    EXPECT_THROW((void)parse_config("[technology]\neta = 3\n"), ConfigError);
    EXPECT_THROW((void)parse_config("[technology]\nceff = exact\n"), ConfigError);
    EXPECT_THROW((void)parse_config("[architecture]\ntracks_w = 2.5\n"), ConfigError);
    EXPECT_THROW((void)parse_config("[experiment]\nmode = TURBO\n"), ConfigError);
    EXPECT_THROW((void)parse_config("[experiment]\nthreads = 0\n"), ConfigError);
    EXPECT_THROW((void)parse_config("[experiment]\nseed = -1\n"), ConfigError);
}

TEST(Config, CrossFieldValidation) {
    EXPECT_THROW((void)parse_config("[technology]\nvdd = 1.2\n"), ConfigError);
    EXPECT_NO_THROW((void)parse_config("[technology]\nvdd = 1.2\nvboost = 1.4\n"));
}

TEST(Config, OverlayKeepsEarlierValues) {
    RunConfig c;
    overlay_config(c, "[technology]\nvboost = 1.5\n", "a");
    overlay_config(c, "[technology]\nvdd = 1.2\n", "b");
    EXPECT_DOUBLE_EQ(c.tech.vboost, 1.5);
    EXPECT_DOUBLE_EQ(c.tech.vdd, 1.2);
    EXPECT_NO_THROW(c.validate());
}

TEST(Config, EveryDocumentedKeyIsSettable) {
    EXPECT_GE(config_keys().size(), 30u);
    for (const auto& k : config_keys()) {
        RunConfig c;
        EXPECT_THROW(c.set(k.section, k.key, "not-a-value"), ConfigError) << k.section << '.' << k.key;
    }
}

TEST(Config, MissingFile) {
    EXPECT_THROW((void)load_config_file("/nonexistent/mvroute.ini"), ConfigError);
}
