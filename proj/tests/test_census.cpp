#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rmc/census.hpp"

using namespace rmc;
using nlohmann::json;

namespace {

const CensusReport& census11() {
  static const CensusReport r = run_census(11, {{}, 4, false});
  return r;
}

const CheckResult* find_check(const CensusReport& r, const std::string& name) {
  for (const CheckResult& c : r.theorem_checks)
    if (c.name == name) return &c;
  return nullptr;
}

size_t count_lines(const std::string& s) { return static_cast<size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Census, ElevenPasses) {
  const CensusReport& r = census11();
  EXPECT_TRUE(r.all_pass()) << ::testing::PrintToString(r.failing_checks());
  EXPECT_EQ(r.genus, 122);
  EXPECT_EQ(r.euler_characteristic, -242);
  EXPECT_FALSE(r.certified_empty);
  EXPECT_EQ(r.families.size(), 8u);
  EXPECT_EQ(find_check(r, "maps_type_5_10_total")->actual, 10);
  EXPECT_EQ(find_check(r, "chiral_pairs_total")->actual, 4);
  EXPECT_EQ(find_check(r, "reflexive_maps_total")->actual, 2);
  EXPECT_EQ(find_check(r, "hypermaps_type_5_5_5_total")->actual, 30);
  EXPECT_EQ(find_check(r, "exists_surface_with_full_group_5p2")->actual, false);
  EXPECT_FALSE(r.elapsed_seconds.has_value());
}

TEST(Census, FamilyBlocks) {
  for (const FamilyReport& f : census11().families) {
    uint64_t sum = 0;
    for (const ClassRecord& c : f.hypermaps) sum += c.orbit_size;
    for (const ClassRecord& c : f.maps) sum += c.orbit_size;
    EXPECT_EQ(sum, f.raw_ske_count) << f.tag;
    if (f.tag == "G_s_s4") {
      EXPECT_EQ(f.hypermaps.size(), 6u);
      EXPECT_EQ(f.surface_count, 2);
      for (const ClassRecord& c : f.hypermaps) EXPECT_TRUE(c.extension_id.has_value());
    }
    if (f.tag == "HatG1") {
      EXPECT_EQ(f.maps.size(), 4u);
      for (const ClassRecord& c : f.maps) EXPECT_EQ(c.chirality, "chiral");
    }
  }
}

TEST(Census, NineteenPasses) {
  const CensusReport r = run_census(19, {{}, 4, false});
  EXPECT_TRUE(r.all_pass()) << ::testing::PrintToString(r.failing_checks());
  EXPECT_EQ(find_check(r, "maps_type_5_10_total")->actual, 2);
  EXPECT_EQ(find_check(r, "chiral_pairs_total")->actual, 0);
  EXPECT_EQ(find_check(r, "hypermaps_type_5_5_5_total")->actual, 6);
  EXPECT_EQ(find_check(r, "lemma_matrix_sweep_violations")->actual, 0);
}

TEST(Census, EmptyForOtherResidues) {
  for (int64_t p : {7, 13, 17}) {
    const CensusReport r = run_census(p);
    EXPECT_TRUE(r.certified_empty);
    EXPECT_EQ(r.verdict, "no nonabelian group of order 5p^2");
    EXPECT_TRUE(r.families.empty());
    EXPECT_TRUE(r.all_pass());
  }
}

TEST(Census, FamilySubset) {
  const CensusReport r = run_census(11, {{Family::HatG_s_s4}, 1, false});
  ASSERT_EQ(r.families.size(), 1u);
  EXPECT_EQ(r.families[0].tag, "HatG_s_s4");
  EXPECT_EQ(r.verdict, "partial census");
  EXPECT_EQ(find_check(r, "maps_type_5_10_total"), nullptr);
  EXPECT_TRUE(r.all_pass());
  EXPECT_THROW(run_census(11, {{Family::HatG0}, 1, false}), InputError);
  EXPECT_THROW(run_census(12), InputError);
  EXPECT_THROW(run_census(5), InputError);
}

TEST(Census, TimingIsOptIn) {
  const CensusReport r = run_census(13, {{}, 1, true});
  ASSERT_TRUE(r.elapsed_seconds.has_value());
  EXPECT_TRUE(to_json(r).contains("elapsed_seconds"));
  EXPECT_FALSE(to_json(run_census(13)).contains("elapsed_seconds"));
}

TEST(Report, JsonRoundTrip) {
  const CensusReport& r = census11();
  const json j = to_json(r);
  EXPECT_EQ(report_from_json(j), r);
  EXPECT_EQ(report_from_json(json::parse(j.dump())), r);
  EXPECT_EQ(j.at("map_convention"), "type {5,10} only (up to duality)");
}

TEST(Report, TextAndCsv) {
  const CensusReport& r = census11();
  const std::string text = emit_report(r, ReportFormat::Text);
  EXPECT_NE(text.find("maps_type_5_10_total: expected 10, actual 10, PASS\n"), std::string::npos);
  EXPECT_EQ(text.find("FAIL"), std::string::npos);

  const std::string csv = emit_report(r, ReportFormat::Csv);
  EXPECT_EQ(csv.rfind("family,signature,kind,class_id,representative,chirality,surface_id\n", 0), 0u);
  EXPECT_EQ(count_lines(csv), 1u + 30u + 10u);
  EXPECT_NE(csv.find("HatG1,\"(0;2,5,10)\",map,"), std::string::npos);

  EXPECT_EQ(parse_format("csv"), ReportFormat::Csv);
  EXPECT_THROW(parse_format("xml"), InputError);
}

TEST(Report, WriteToFile) {
  const CensusReport r = run_census(13);
  const auto path = std::filesystem::temp_directory_path() / "rmc_report_test.json";
  write_report(r, ReportFormat::Json, path.string());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), emit_report(r, ReportFormat::Json));
  std::filesystem::remove(path);
  EXPECT_THROW(write_report(r, ReportFormat::Json, "/nonexistent-dir/x.json"), std::runtime_error);
}

TEST(Report, Validation) {
  CensusReport r = census11();
  EXPECT_TRUE(validate_report(r).empty());
  r.families[0].hypermaps[0].representative[0] = r.families[0].hypermaps[0].representative[1];
  EXPECT_FALSE(validate_report(r).empty());
  r = census11();
  r.euler_characteristic = 0;
  EXPECT_FALSE(validate_report(r).empty());
}

TEST(Exclusions, HoldForSmallPrimes) {
  const ExclusionVerdict v7 = verify_signature_exclusions(7);
  EXPECT_TRUE(v7.holds);
  EXPECT_EQ(v7.sylow_candidates_15, (std::vector<int64_t>{1, 15}));
  EXPECT_EQ(v7.aut_order_z15, 8);
  EXPECT_FALSE(v7.notes.empty());

  const ExclusionVerdict v29 = verify_signature_exclusions(29);
  EXPECT_TRUE(v29.holds);
  EXPECT_EQ(v29.sylow_candidates_30, (std::vector<int64_t>{1, 30}));

  for (int64_t p : {11, 19, 31}) {
    const ExclusionVerdict v = verify_signature_exclusions(p);
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.sylow_candidates_15, std::vector<int64_t>{1});
    EXPECT_TRUE(v.z15_not_33_generated);
    EXPECT_TRUE(v.order30_not_2_3_10_generated);
  }
  EXPECT_THROW(verify_signature_exclusions(9), InputError);
}

TEST(Hyperelliptic, ExtendedFamiliesAreNot) {
  for (auto [p, f] : {std::pair{11, Family::HatG1}, std::pair{11, Family::HatG_s_s2},
                      std::pair{11, Family::HatG_s_s4}, std::pair{19, Family::HatG0}}) {
    const HyperellipticVerdict v = hyperellipticity_check(GroupSpec(derive_params(p), f));
    EXPECT_EQ(v.central_involutions, 0);
    EXPECT_TRUE(v.witness_holds);
    EXPECT_TRUE(v.non_hyperelliptic);
  }
}
