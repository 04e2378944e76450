#pragma once

// Groups of order 5p^2 and 10p^2 realised as normal forms a^x b^y c^n d^e.
//
// All families share one layout: a p-part P (Z_{p^2}, or Z_p x Z_p with
// generators a, b), an order-5 generator in the "c slot" acting on P by a
// linear map C, and optionally an involution in the "d slot" that negates P
// and satisfies d c d = v c for a fixed twist vector v.  The G1/HatG1
// families are usually written with b for the order-5 generator and c for
// the involution; here they use the same slots as every other family, and
// only the rendering layer switches back to the customary letters.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rmc/modarith.hpp"

namespace rmc {

enum class Family {
  G1,
  G_1_s,
  G_s_s,
  G_s_s2,
  G_s_s4,
  G0,
  HatG1,
  HatG_s_s2,
  HatG_s_s4,
  HatG0,
};

inline constexpr std::array kAllFamilies = {
    Family::G1,    Family::G_1_s,     Family::G_s_s,     Family::G_s_s2, Family::G_s_s4,
    Family::G0,    Family::HatG1,     Family::HatG_s_s2, Family::HatG_s_s4, Family::HatG0,
};

std::string_view family_tag(Family f);
Family parse_family(std::string_view tag);
bool is_extended(Family f);
Family base_family(Family f);
std::optional<Family> extended_family(Family f);
bool family_admissible(Family f, int residue);
std::vector<Family> admissible_families(const PrimeParams& params);

/// Exponent vector on the p-part; entry 1 is unused (zero) in rank 1.
using PVec = std::array<int64_t, 2>;

/// Linear endomorphism of the p-part, row-major, entries mod `modulus`.
struct PMap {
  int rank = 1;
  int64_t modulus = 1;
  std::array<int64_t, 4> e{};

  static PMap identity(int rank, int64_t modulus);
  static PMap scalar(int rank, int64_t modulus, int64_t lambda);

  int64_t at(int r, int c) const { return e[r * 2 + c]; }
  PVec apply(const PVec& u) const;
  PMap operator*(const PMap& rhs) const;
  PMap pow(int64_t n) const;
  int64_t det() const;
  bool invertible() const;
  std::optional<PMap> inverse() const;
  bool operator==(const PMap&) const = default;
};

struct Element {
  PVec pvec{};
  int c_exp = 0;  // mod 5
  int d_exp = 0;  // mod 2

  auto operator<=>(const Element&) const = default;
};

class GroupSpec {
 public:
  /// build_group: throws InputError when the family needs a residue class the
  /// prime does not have.
  GroupSpec(const PrimeParams& params, Family family);

  const PrimeParams& params() const { return params_; }
  Family family() const { return family_; }
  int rank() const { return rank_; }
  int64_t modulus() const { return modulus_; }
  const PMap& c_action() const { return cpow_[1]; }
  bool d_present() const { return d_present_; }
  const PVec& d_twist() const { return twist_; }
  int64_t expected_order() const { return order_; }

  /// Copy with a replaced twist vector; used for negative controls.
  GroupSpec with_d_twist(const PVec& v) const;

  Element identity() const { return {}; }
  Element a() const;
  Element b() const;  // rank 2 only
  Element c() const;
  Element d() const;  // d_present only
  std::vector<Element> generators() const;
  Element from_pvec(const PVec& u) const;

  Element mul(const Element& x, const Element& y) const;
  Element inv(const Element& x) const;
  Element pow(const Element& x, int64_t n) const;
  int64_t order(const Element& x) const;
  Element conj(const Element& g, const Element& x) const;  // g x g^-1
  Element commutator(const Element& x, const Element& y) const;  // x y x^-1 y^-1

  bool valid(const Element& x) const;
  uint32_t index(const Element& x) const;
  Element element(uint32_t index) const;
  uint32_t size() const { return static_cast<uint32_t>(order_); }

  PVec padd(const PVec& u, const PVec& v) const;
  PVec pneg(const PVec& u) const;
  PVec pscale(int64_t lambda, const PVec& u) const;
  /// C^n as a linear map (n taken mod 5).
  const PMap& c_power(int n) const { return cpow_[static_cast<size_t>(mod(n, 5))]; }
  /// W_n = v + Cv + ... + C^{n-1}v, so that d c^n = W_n c^n d.
  const PVec& twist_sum(int n) const { return wsum_[static_cast<size_t>(n)]; }

 private:
  void recompute_twist_sums();

  PrimeParams params_;
  Family family_;
  int rank_ = 1;
  int64_t modulus_ = 1;
  bool d_present_ = false;
  PVec twist_{};
  int64_t order_ = 0;
  std::array<PMap, 5> cpow_{};
  std::array<PVec, 6> wsum_{};
  std::vector<int64_t> divisors_;
};

inline GroupSpec build_group(const PrimeParams& params, Family family) {
  return GroupSpec(params, family);
}

/// Sorted divisors of n.
std::vector<int64_t> divisors(int64_t n);

/// Element orders for every index of G.
std::vector<uint32_t> order_table(const GroupSpec& G);

struct Subgroup {
  std::vector<Element> elements;  // sorted
  int64_t order = 0;
};

/// Breadth-first closure of gens under right multiplication. With
/// stop_above set, gives up once more than that many elements are found and
/// returns order = stop_above + 1 with a partial element list.
Subgroup closure(const GroupSpec& G, std::span<const Element> gens,
                 std::optional<int64_t> stop_above = std::nullopt);

/// Order of <gens> computed from the layered structure G >= G' >= P without
/// listing elements: Schreier generators down each cyclic layer, then the
/// span of the p-part generators under C.
int64_t subgroup_order(const GroupSpec& G, std::span<const Element> gens);
bool generates(const GroupSpec& G, std::span<const Element> gens);

std::vector<Element> center(const GroupSpec& G);

/// Number of elements of each order.
std::map<int64_t, int64_t> order_census(const GroupSpec& G);
std::vector<Element> elements_of_order(const GroupSpec& G, int64_t n);

/// Exponents in conventional letters, e.g. "a^3 b c^2" (G1 uses b for the
/// order-5 generator and c for the involution).
std::string render(const GroupSpec& G, const Element& x);
std::vector<int64_t> exponent_tuple(const GroupSpec& G, const Element& x);
Element from_exponent_tuple(const GroupSpec& G, std::span<const int64_t> tuple);

}  // namespace rmc
