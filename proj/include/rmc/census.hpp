#pragma once

// Full census for one prime: enumerate, classify, restrict, extend and check
// every count at desk scale; serialize the result.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rmc/aut.hpp"
#include "rmc/extension.hpp"

namespace rmc {

struct CheckResult {
  std::string name;
  nlohmann::json expected;
  nlohmann::json actual;
  bool pass = false;
  bool operator==(const CheckResult&) const = default;
};

struct ClassRecord {
  int id = 0;
  std::array<std::vector<int64_t>, 3> representative;  // exponent tuples
  std::array<std::string, 3> rendered;
  uint64_t orbit_size = 0;
  std::optional<int> surface_id;
  std::string chirality;              // maps only
  std::optional<int> partner_id;      // maps only
  std::optional<int> extension_id;    // hypermaps only: map class of the extension
  bool operator==(const ClassRecord&) const = default;
};

struct ReferenceRecord {
  std::string label;  // e.g. "theta(1,1,3)"
  std::array<std::vector<int64_t>, 3> triple;
  std::optional<int> class_id;
  bool operator==(const ReferenceRecord&) const = default;
};

struct FamilyReport {
  std::string tag;
  int64_t order = 0;
  std::string signature;
  uint64_t aut_order = 0;
  uint64_t raw_ske_count = 0;
  int surface_count = 0;
  std::vector<ClassRecord> hypermaps;
  std::vector<ClassRecord> maps;
  std::vector<ReferenceRecord> reference_representatives;
  bool operator==(const FamilyReport&) const = default;
};

struct CensusReport {
  int64_t prime = 0;
  int residue_mod5 = 0;
  int64_t genus = 0;
  int64_t euler_characteristic = 0;
  bool certified_empty = false;
  std::string verdict;
  /// Maps are counted up to duality: only type {5,10}, signature (2,5,10).
  std::string map_convention = "type {5,10} only (up to duality)";
  std::vector<FamilyReport> families;
  std::vector<CheckResult> theorem_checks;
  std::optional<double> elapsed_seconds;

  bool all_pass() const;
  std::vector<std::string> failing_checks() const;
  bool operator==(const CensusReport&) const = default;
};

struct CensusOptions {
  std::vector<Family> families;  // empty = every admissible family
  int threads = 1;
  bool timing = false;
};

CensusReport run_census(int64_t p, const CensusOptions& options = {});

// ---------------------------------------------------------------- side checks

struct ExclusionVerdict {
  bool holds = false;
  /// n_p candidates (divisors of 15, resp. 30, that are 1 mod p).
  std::vector<int64_t> sylow_candidates_15, sylow_candidates_30;
  /// |Aut(Z15)|, computed by brute force; needed when n_p = 15 is not
  /// excluded by counting alone.
  int64_t aut_order_z15 = 0;
  bool normal_sylow_15 = false;
  bool normal_sylow_30 = false;
  bool z15_not_33_generated = false;
  bool order30_not_2_3_10_generated = false;
  std::vector<std::string> notes;
};

/// No action of genus 1+p^2 extends along Delta(3,3,5) or Delta(2,3,10).
ExclusionVerdict verify_signature_exclusions(int64_t p);

struct HyperellipticVerdict {
  int central_involutions = 0;
  bool witness_holds = false;  // [x, a] = a^-2 for every involution x
  bool non_hyperelliptic = false;
};

HyperellipticVerdict hyperellipticity_check(const GroupSpec& hat);

/// |Aut| of each family from its structure (centralisers of C^n, kernels of
/// the norm maps); compared against the enumeration.
uint64_t expected_aut_order(Family f, int64_t p);

/// Standard representative triples theta / Theta of each family.
std::vector<std::pair<std::string, Ske>> reference_skes(const GroupSpec& G);

struct NamedAutomorphism {
  std::string name;
  std::vector<Element> images;  // of G.generators()
};

/// Explicit automorphisms used in the classification arguments for G.
std::vector<NamedAutomorphism> reference_automorphisms(const GroupSpec& G);

// ---------------------------------------------------------------- report I/O

enum class ReportFormat { Json, Csv, Text };
ReportFormat parse_format(const std::string& s);

nlohmann::json to_json(const CensusReport& r);
CensusReport report_from_json(const nlohmann::json& j);
std::string emit_report(const CensusReport& r, ReportFormat format);
/// Writes to `path`; throws std::runtime_error naming the path on failure.
void write_report(const CensusReport& r, ReportFormat format, const std::string& path);

/// Re-validates every representative in the report as a ske of its family.
/// Returns the list of problems (empty when valid).
std::vector<std::string> validate_report(const CensusReport& r);

}  // namespace rmc
