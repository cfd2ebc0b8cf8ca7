#include "cachesim/energy.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "cachesim/trace.hpp"

namespace cachesim {
namespace {

EnergyParams params_of(double dec, double cell, double mem, double buf) {
  EnergyParams p;
  p.e_decoder = dec;
  p.e_cell_array = cell;
  p.e_access_memory = mem;
  p.e_access_buffer = buf;
  return p;
}

SimStats stats_of(std::uint64_t hits, std::uint64_t partials, std::uint64_t misses) {
  SimStats s;
  s.hits = hits;
  s.partial_hits = partials;
  s.misses = misses;
  s.accesses = hits + partials + misses;
  return s;
}

TEST(DeriveUnitCosts, DefaultParameters) {
  const UnitCosts costs = derive_unit_costs(params_of(0.5, 0.5, 10000, 10));
  EXPECT_DOUBLE_EQ(costs.e_hit, 1.0);
  EXPECT_DOUBLE_EQ(costs.e_miss, 10001.0);
  EXPECT_DOUBLE_EQ(costs.e_partial, 11.0);
}

TEST(DeriveUnitCosts, AllZeros) {
  const UnitCosts costs = derive_unit_costs(params_of(0, 0, 0, 0));
  EXPECT_DOUBLE_EQ(costs.e_hit, 0.0);
  EXPECT_DOUBLE_EQ(costs.e_miss, 0.0);
  EXPECT_DOUBLE_EQ(costs.e_partial, 0.0);
}

TEST(DeriveUnitCosts, BufferAsCostlyAsMemoryIsPermitted) {
  const UnitCosts costs = derive_unit_costs(params_of(1, 0, 5, 5));
  EXPECT_DOUBLE_EQ(costs.e_hit, 1.0);
  EXPECT_DOUBLE_EQ(costs.e_miss, 6.0);
  EXPECT_DOUBLE_EQ(costs.e_partial, 6.0);
}

TEST(DeriveUnitCosts, NegativeParameterIsRejected) {
  EXPECT_THROW(derive_unit_costs(params_of(-0.1, 0.5, 10, 1)), std::invalid_argument);
}

TEST(EnergyParams, BufferCostAboveMemoryCostIsRejected) {
  EXPECT_THROW(params_of(0.5, 0.5, 10, 11).validate(), std::invalid_argument);
}

TEST(PaperEnergy, AllHitsCostTheHitEnergy) {
  const UnitCosts costs = derive_unit_costs(EnergyParams{});
  EXPECT_DOUBLE_EQ(paper_energy(stats_of(5, 0, 0), costs), costs.e_hit);
}

TEST(PaperEnergy, AllMissesCostTheMissEnergy) {
  const UnitCosts costs = derive_unit_costs(EnergyParams{});
  EXPECT_DOUBLE_EQ(paper_energy(stats_of(0, 0, 7), costs), costs.e_miss);
}

TEST(PaperEnergy, TwoClassArithmetic) {
  const UnitCosts costs = derive_unit_costs(EnergyParams{});
  EXPECT_DOUBLE_EQ(paper_energy(stats_of(3, 0, 1), costs), 2501.0);
}

TEST(PaperEnergy, EmptyRunIsAnError) {
  const UnitCosts costs = derive_unit_costs(EnergyParams{});
  EXPECT_THROW(paper_energy(SimStats{}, costs), std::invalid_argument);
}

// Class counts from the hand-traced run A B C A (capacity 2, buffer 1).
TEST(ExtendedEnergy, HandTraceTotal) {
  const UnitCosts costs = derive_unit_costs(EnergyParams{});
  const ExtendedEnergy e = extended_energy(stats_of(0, 1, 3), costs);
  EXPECT_DOUBLE_EQ(e.total, 30014.0);
  EXPECT_DOUBLE_EQ(e.per_access, 30014.0 / 4.0);
}

TEST(ExtendedEnergy, NoPartialHitsMatchesPaperEnergy) {
  const UnitCosts costs = derive_unit_costs(EnergyParams{});
  const SimStats stats = stats_of(13, 0, 7);
  const ExtendedEnergy e = extended_energy(stats, costs);
  EXPECT_NEAR(e.per_access, paper_energy(stats, costs), 1e-9 * e.per_access);
}

TEST(ExtendedEnergy, AllHitTraceScalesWithLength) {
  const UnitCosts costs = derive_unit_costs(EnergyParams{});
  const ExtendedEnergy e = extended_energy(stats_of(42, 0, 0), costs);
  EXPECT_DOUBLE_EQ(e.total, 42.0 * costs.e_hit);
}

TEST(TotalTime, AllHits) {
  UnitCosts time_costs;
  time_costs.e_hit = 1.0;
  time_costs.e_partial = 11.0;
  time_costs.e_miss = 10001.0;
  EXPECT_DOUBLE_EQ(total_time(stats_of(9, 0, 0), time_costs), 9.0);
}

TEST(TotalTime, SameArithmeticAsExtendedEnergy) {
  UnitCosts time_costs;
  time_costs.e_hit = 1.0;
  time_costs.e_partial = 11.0;
  time_costs.e_miss = 10001.0;
  EXPECT_DOUBLE_EQ(total_time(stats_of(0, 1, 3), time_costs), 30014.0);
}

TEST(TotalTime, EmptyRunIsZero) {
  EXPECT_DOUBLE_EQ(total_time(SimStats{}, UnitCosts{}), 0.0);
}

TEST(UnitCosts, OrderingHoldsForRandomValidParameters) {
  SplitMix64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const double dec = rng.next_double() * 10;
    const double cell = rng.next_double() * 10;
    const double mem = rng.next_double() * 10000;
    const double buf = rng.next_double() * mem;  // keeps buffer <= memory
    const UnitCosts costs = derive_unit_costs(params_of(dec, cell, mem, buf));
    ASSERT_LE(costs.e_hit, costs.e_partial);
    ASSERT_LE(costs.e_partial, costs.e_miss);
  }
}

TEST(Dominance, ExtendedNeverExceedsPaperEnergy) {
  const UnitCosts costs = derive_unit_costs(EnergyParams{});
  SplitMix64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const SimStats stats = stats_of(rng.next() % 100, rng.next() % 100, rng.next() % 100);
    if (stats.accesses == 0) continue;
    const double paper = paper_energy(stats, costs);
    const double extended = extended_energy(stats, costs).per_access;
    ASSERT_LE(extended, paper * (1.0 + 1e-12));
    if (stats.partial_hits > 0) ASSERT_LT(extended, paper);
  }
}

TEST(Linearity, ScalingParametersScalesEveryEnergy) {
  const SimStats stats = stats_of(7, 3, 5);
  const EnergyParams base;
  const EnergyParams scaled = params_of(base.e_decoder * 3, base.e_cell_array * 3,
                                        base.e_access_memory * 3, base.e_access_buffer * 3);
  const EnergyReport a = make_energy_report(stats, base);
  const EnergyReport b = make_energy_report(stats, scaled);
  EXPECT_NEAR(b.paper_energy_per_access, 3 * a.paper_energy_per_access,
              1e-12 * b.paper_energy_per_access);
  EXPECT_NEAR(b.extended_energy_per_access, 3 * a.extended_energy_per_access,
              1e-12 * b.extended_energy_per_access);
  EXPECT_NEAR(b.total_extended_energy, 3 * a.total_extended_energy,
              1e-12 * b.total_extended_energy);
  EXPECT_NEAR(b.total_time, 3 * a.total_time, 1e-12 * b.total_time);
}

TEST(EnergyReport, EmptyRunReportsZeroes) {
  const EnergyReport report = make_energy_report(SimStats{}, EnergyParams{});
  EXPECT_EQ(report.paper_energy_per_access, 0.0);
  EXPECT_EQ(report.extended_energy_per_access, 0.0);
  EXPECT_EQ(report.total_extended_energy, 0.0);
  EXPECT_EQ(report.total_time, 0.0);
}

TEST(LoadEnergyParams, ParsesKeysAndSkipsComments) {
  std::istringstream in(
      "# energy model\n"
      "e_decoder = 0.25\n"
      "\n"
      "e_cell_array=0.75\n"
      "e_access_memory = 5000\n"
      "e_access_buffer = 5\n");
  const EnergyParams params = load_energy_params(in);
  EXPECT_DOUBLE_EQ(params.e_decoder, 0.25);
  EXPECT_DOUBLE_EQ(params.e_cell_array, 0.75);
  EXPECT_DOUBLE_EQ(params.e_access_memory, 5000.0);
  EXPECT_DOUBLE_EQ(params.e_access_buffer, 5.0);
}

TEST(LoadEnergyParams, MissingKeysKeepDefaults) {
  std::istringstream in("e_access_buffer=20\n");
  const EnergyParams params = load_energy_params(in);
  EXPECT_DOUBLE_EQ(params.e_decoder, 0.5);
  EXPECT_DOUBLE_EQ(params.e_access_buffer, 20.0);
}

TEST(LoadEnergyParams, UnknownKeyIsAParseError) {
  std::istringstream in("e_typo=1\n");
  EXPECT_THROW(load_energy_params(in), ParseError);
}

TEST(LoadEnergyParams, MalformedNumberCarriesTheLine) {
  std::istringstream in("e_decoder=0.5\ne_cell_array=abc\n");
  try {
    load_energy_params(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(LoadEnergyParams, LoadedValuesAreValidated) {
  std::istringstream in("e_access_memory=1\ne_access_buffer=2\n");
  EXPECT_THROW(load_energy_params(in), std::invalid_argument);
}

}  // namespace
}  // namespace cachesim
