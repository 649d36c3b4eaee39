#include <gtest/gtest.h>

#include "repseq/drivers.hpp"
#include "repseq/oracle.hpp"
#include "test_support.hpp"

namespace repseq {
namespace {

struct Mode {
  const char* name;
  RepetitionResult (*driver)(std::string_view, const DriverOptions&);
  ExponentDomain domain;
};

const Mode kModes[] = {
    {"nonint", &d2_driver, ExponentDomain::NonInteger},
    {"d3", &d3_driver, ExponentDomain::SquareToCube},
    {"d4", &d4_driver, ExponentDomain::CubeToQuartic},
    {"periodic", &longest_periodic, ExponentDomain::Periodic},
    {"square", &longest_square, ExponentDomain::Even},
    {"any", &longest_any_repetition, ExponentDomain::AnyRepetition},
};

TEST(DriverOracleTest, ExhaustiveBinaryUpToNine) {
  testing::for_each_binary(9, [](const std::string& t) {
    for (const auto& m : kModes)
      ASSERT_EQ(m.driver(t, {}).length, oracle_longest(t, m.domain).length) << m.name << " " << t;
  });
}

TEST(DriverOracleTest, RandomTernary) {
  SplitMix64 rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    const auto t = testing::random_text(rng, 5, 12, 3);
    for (const auto& m : kModes)
      ASSERT_EQ(m.driver(t, {}).length, oracle_longest(t, m.domain).length) << m.name << " " << t;
  }
}

TEST(WitnessTest, ReconstructedWitnessesAreValid) {
  SplitMix64 rng(77);
  DriverOptions opts;
  opts.reconstruct = true;
  for (int iter = 0; iter < 150; ++iter) {
    const auto t = testing::random_text(rng, 0, 18, 1 + static_cast<unsigned>(rng.below(4)));
    for (const auto& m : kModes) {
      const auto r = m.driver(t, opts);
      ASSERT_EQ(r.witness.has_value(), r.length > 0);
      if (r.witness) {
        ASSERT_EQ(check_witness(*r.witness, t, m.domain), "") << m.name << " " << t;
        ASSERT_EQ(r.witness->length, r.length);
      }
    }
  }
}

TEST(WitnessTest, CheckWitnessCatchesCorruption) {
  DriverOptions opts;
  opts.reconstruct = true;
  auto w = *d2_driver("abab", opts).witness;
  EXPECT_EQ(check_witness(w, "abab", ExponentDomain::NonInteger), "");
  EXPECT_NE(check_witness(w, "abab", ExponentDomain::Even), "");
  auto bad = w;
  bad.positions[1] = bad.positions[0];
  EXPECT_NE(check_witness(bad, "abab", ExponentDomain::NonInteger), "");
  bad = w;
  bad.min_period += 1;
  EXPECT_NE(check_witness(bad, "abab", ExponentDomain::NonInteger), "");
  EXPECT_THROW(make_witness("abab", {1, 2, 3, 4}, ExponentDomain::NonInteger, SourceMode::Oracle), std::logic_error);
  EXPECT_THROW(make_witness("abab", {2, 1}, ExponentDomain::AnyRepetition, SourceMode::Oracle), std::logic_error);
}

TEST(PaperLiteralTest, NeverIncreasesLength) {
  DriverOptions literal;
  literal.gate = D2Gate::PaperLiteral;
  testing::for_each_binary(10, [&](const std::string& t) {
    ASSERT_LE(d2_driver(t, literal).length, d2_driver(t).length) << t;
    ASSERT_LE(longest_any_repetition(t, literal).length, longest_any_repetition(t).length) << t;
  });
}

}  // namespace
}  // namespace repseq
