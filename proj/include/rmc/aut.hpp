#pragma once

// Automorphism groups of the families and the Aut-orbits of skes.
//
// Every automorphism preserves the p-part P (the normal Sylow p-subgroup),
// so it is determined by a linear map L on P, the image gamma = w c^n of the
// c-slot generator and, for extended families, the image z d of the
// involution.  The constraints are
//   L C = C^n L,   (1 + C^n + ... + C^{4n}) w = 0,   (I - C^n) z = L v + 2w - W_n,
// and the last one has a unique solution because C^n has no eigenvalue 1.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rmc/epi.hpp"
#include "rmc/group.hpp"

namespace rmc {

class GroupAutomorphism {
 public:
  GroupAutomorphism() = default;
  GroupAutomorphism(const GroupSpec& G, const PMap& L, const Element& gamma, const std::optional<Element>& delta);

  const PMap& linear() const { return L_; }
  const Element& c_image() const { return gamma_pow_[1]; }
  const std::optional<Element>& d_image() const { return delta_; }
  int c_power() const { return gamma_pow_[1].c_exp; }

  Element apply(const GroupSpec& G, const Element& x) const;
  Ske apply(const GroupSpec& G, const Ske& k) const;
  /// Images of G.generators(), in the same order.
  std::vector<Element> generator_images(const GroupSpec& G) const;
  /// (*this) o other
  GroupAutomorphism compose(const GroupSpec& G, const GroupAutomorphism& other) const;
  GroupAutomorphism inverse(const GroupSpec& G) const;

  bool operator==(const GroupAutomorphism& o) const {
    return L_ == o.L_ && gamma_pow_[1] == o.gamma_pow_[1] && delta_ == o.delta_;
  }

 private:
  PMap L_;
  std::array<Element, 5> gamma_pow_{};
  std::optional<Element> delta_;
};

/// Builds the automorphism with the given generator images (G.generators()
/// order) after checking every defining relation and bijectivity. Returns
/// nullopt when the assignment does not extend to an automorphism.
std::optional<GroupAutomorphism> automorphism_from_images(const GroupSpec& G, std::span<const Element> images);

/// Aut(G) in structured form; elements are produced on demand by index.
class AutomorphismGroup {
 public:
  explicit AutomorphismGroup(const GroupSpec& G);

  const GroupSpec& group() const { return G_; }
  uint64_t size() const { return total_; }
  GroupAutomorphism at(uint64_t i) const;
  /// Position of phi in the enumeration, or nullopt if phi is not produced.
  std::optional<uint64_t> index_of(const GroupAutomorphism& phi) const;

  /// Number of admissible L (resp. w) for c -> w c^n, n in 1..4.
  uint64_t linear_count(int n) const { return linear_[static_cast<size_t>(n)].size(); }
  uint64_t tail_count(int n) const { return tails_[static_cast<size_t>(n)].size(); }

 private:
  GroupSpec G_;
  std::array<std::vector<PMap>, 5> linear_;
  std::array<std::vector<PVec>, 5> tails_;
  std::array<std::unordered_map<uint64_t, uint32_t>, 5> linear_pos_;
  std::array<std::unordered_map<uint64_t, uint32_t>, 5> tail_pos_;
  std::array<PMap, 5> d_solver_;  // (I - C^n)^-1
  std::array<uint64_t, 6> offset_{};
  uint64_t total_ = 0;

  uint64_t key(const PMap& L) const;
  uint64_t key(const PVec& w) const;
};

inline constexpr uint64_t kAutListCap = 400000;

/// The complete automorphism group as a list. Throws InputError above `cap`.
std::vector<GroupAutomorphism> automorphisms(const GroupSpec& G, uint64_t cap = kAutListCap);

struct ClosureCertificate {
  bool closed = false;
  uint64_t generators_used = 0;
  uint64_t group_size = 0;
  std::string failure;
};

/// Certifies that the structured enumeration is a group: grows a generating
/// set T inside it until the breadth-first closure of T (right
/// multiplication) has |Aut| elements, checking every product lies in the
/// enumeration. Combined with |<T>| = |Aut| this proves closure.
ClosureCertificate verify_closed(const AutomorphismGroup& aut);

// ---------------------------------------------------------------- orbits

enum class Chirality { Unknown, Reflexive, Chiral };
std::string chirality_name(Chirality c);

struct SkeClass {
  int id = 0;
  Family family{};
  Ske representative;  // least triple in the orbit
  uint64_t orbit_size = 0;
  uint64_t stabilizer = 0;
  Chirality chirality = Chirality::Unknown;
  std::optional<int> partner;  // chiral partner class id
  std::optional<int> surface_id;
};

struct Classification {
  std::vector<Ske> skes;        // sorted
  std::vector<int> class_of;    // parallel to skes
  std::vector<SkeClass> classes;

  /// Class id of k, or nullopt when k is not among the enumerated skes.
  std::optional<int> find(const Ske& k) const;
};

/// Partitions the (sorted) skes into Aut-orbits. Each orbit is swept once
/// from its least member; orbit_size * stabilizer = |Aut| is checked per
/// orbit. Throws ConsistencyError if an image is not an enumerated ske.
Classification orbit_classify(const GroupSpec& G, std::vector<Ske> skes, const AutomorphismGroup& aut);

/// Mirror test for one class.
Chirality chirality(const GroupSpec& G, const SkeClass& c, const Classification& cl, std::optional<int>* partner = nullptr);
/// Fills chirality and partner for every class.
void assign_chirality(const GroupSpec& G, Classification& cl);

// ---------------------------------------------------------------- constants

/// Fixed points of conjugation by d on the cosets P c^l, and the matrices
/// of the generation lemma for HatG0.
struct CanonicalizationData {
  int64_t delta = 0;                  // 2^-1 mod |a|
  std::array<PVec, 5> fixed_point{};  // index l = 1..4: (x_l, y_l) = delta * W_l
  std::array<std::array<int64_t, 4>, 3> lemma_matrix{};  // l = 1, 2 (HatG0 only)
  bool has_lemma_matrices = false;
};

/// M_{alpha,beta,l} over Z_p, row-major, for l in {1, 2}.
std::array<int64_t, 4> lemma_matrix(const PrimeParams& params, int64_t alpha, int64_t beta, int l);

CanonicalizationData canonicalization_data(const GroupSpec& hat, int64_t alpha = 0, int64_t beta = 0);

struct LemmaVerdict {
  int64_t det = 0;
  int64_t subgroup_order = 0;
  bool holds = true;  // det = 0 implies <a^alpha b^beta c^l, d> is proper
};

LemmaVerdict lemma_matrix_check(const GroupSpec& hat0, int64_t alpha, int64_t beta, int l);

}  // namespace rmc
