#pragma once

// Surface-kernel epimorphisms from triangle groups onto a GroupSpec.
//
// A ske of signature (0; m1, m2, m3) is recorded as the image triple
// (g1, g2, g3) of the canonical generators: g1 g2 g3 = 1, ord(gi) = mi, and
// g1, g2 generate the group.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmc/group.hpp"

namespace rmc {

struct Signature {
  int64_t orbit_genus = 0;
  std::vector<int64_t> periods;

  /// 2h - 2 + sum(1 - 1/m_i) > 0
  bool hyperbolic() const;
  std::string to_string() const;  // "(0;5,5,5)"
  bool operator==(const Signature&) const = default;
};

inline const Signature kSig555{0, {5, 5, 5}};
inline const Signature kSig2510{0, {2, 5, 10}};

struct GenusResult {
  bool integral = false;
  int64_t genus = 0;       // valid when integral
  int64_t twice_genus_num = 0;  // 2g as a reduced fraction num/den
  int64_t twice_genus_den = 1;
};

/// Riemann-Hurwitz: 2g - 2 = |G| (2h - 2 + sum(1 - 1/m_i)).
/// Throws InputError for a non-hyperbolic signature.
GenusResult rh_genus(int64_t group_order, const Signature& sig);

/// Every signature (h; m_1..m_t), t >= 1, periods >= min_period dividing
/// group_order, for which Riemann-Hurwitz gives exactly `genus`.
std::vector<Signature> admissible_signatures(int64_t group_order, int64_t genus, int64_t min_period);

struct Ske {
  std::array<Element, 3> triple{};
  Signature signature;

  bool operator==(const Ske&) const = default;
  auto operator<=>(const Ske& o) const { return triple <=> o.triple; }
};

/// Empty string when k is a valid ske of G, otherwise the first failing
/// condition.
std::string ske_violation(const GroupSpec& G, const Ske& k);
inline bool is_ske(const GroupSpec& G, const Ske& k) { return ske_violation(G, k).empty(); }

Ske make_ske(const GroupSpec& G, const Element& g1, const Element& g2, const Signature& sig);

/// All skes of a triangle signature, ordered lexicographically by (g1, g2).
/// Data-parallel over g1; the result does not depend on `threads`.
std::vector<Ske> enumerate_skes(const GroupSpec& G, const Signature& sig, int threads = 1);

/// (g1^-1, g2^-1, g2 g1): the ske of the mirror image.
Ske mirror(const GroupSpec& G, const Ske& k);

// ---------------------------------------------------------------- restriction

/// Embeddings of Delta(5,5,5) in Delta(2,5,10), as words in y1, y2, y3.
enum class Embedding { Iota1, Iota2, Iota3 };
inline constexpr std::array kEmbeddings = {Embedding::Iota1, Embedding::Iota2, Embedding::Iota3};
std::string embedding_name(Embedding e);

/// Words of the form y3^-1 y2 y3, y2, y3^2 assigned to (x1, x2, x3) in some
/// order. `valid` records whether x1 x2 x3 reduces to the identity in the
/// free product Z2 * Z5 = <y1, y2 | y1^2, y2^5> (with y3 = y2^-1 y1).
struct EmbeddingWords {
  std::string label;
  std::array<int, 3> slots{};  // 0: y3^-1 y2 y3, 1: y2, 2: y3^2
  bool valid = false;
};

/// All six orderings, with validity decided symbolically. Exactly the three
/// cyclic rotations are valid; iota_1 = (y3^-1y2y3, y2, y3^2),
/// iota_2 = (y2, y3^2, y3^-1y2y3), iota_3 = (y3^2, y3^-1y2y3, y2).
std::vector<EmbeddingWords> embedding_candidates();
EmbeddingWords embedding_words(Embedding e);
/// The alternative second embedding (y3^-1y2y3, y3^2, y2) sometimes quoted
/// alongside iota_1 and iota_3; it is a transposition, not a rotation.
EmbeddingWords alternative_iota2();

/// Evaluates the embedding words on a (2,5,10)-ske of an extended family and
/// returns the (5,5,5)-triple in the index-2 subgroup (d_exp = 0).
/// Throws ConsistencyError if an image leaves that subgroup or the triple
/// fails the (5,5,5) conditions in `base`.
Ske restrict_ske(const GroupSpec& hat, const GroupSpec& base, const Ske& K, Embedding which);

/// Same evaluation for arbitrary slots, without validation.
std::array<Element, 3> evaluate_embedding(const GroupSpec& hat, const Ske& K, const std::array<int, 3>& slots);

}  // namespace rmc
