#pragma once

// Defining presentations of the group families, written from the prime's
// constants alone (never from a GroupSpec's stored action), so evaluating
// them under GroupSpec::mul is an independent check of the rewriting rules.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rmc/group.hpp"

namespace rmc {

/// (g_{i1}^{e1} g_{i2}^{e2} ...)^power
struct Term {
  std::vector<std::pair<int, int64_t>> factors;
  int64_t power = 1;
};
using Word = std::vector<Term>;

struct Relation {
  std::string name;
  Word lhs;
  Word rhs;  // empty word = identity
};

struct Presentation {
  std::vector<std::string> generators;  // same order as GroupSpec::generators()
  std::vector<Relation> relations;
  /// Generator indices in the order a backtracking search should assign them.
  std::vector<int> search_order;
};

Presentation presentation(const PrimeParams& params, Family family);
inline Presentation presentation(const GroupSpec& G) { return presentation(G.params(), G.family()); }

Element evaluate(const GroupSpec& H, const Word& w, std::span<const Element> images);
bool relation_holds(const GroupSpec& H, const Relation& r, std::span<const Element> images);

struct PresentationCheck {
  bool ok = true;
  std::vector<std::string> violated;
  int64_t closure_order = 0;
};

/// Evaluates every defining relation on G's own generators and checks that
/// they generate a group of the expected order.
PresentationCheck verify_presentation(const GroupSpec& G);

/// Calls visit(images) for every tuple of images in H of G's generators
/// that satisfies G's presentation, preserves generator orders and generates
/// H. Stops early when visit returns false. Generic backtracking; intended
/// for groups of a few thousand elements.
void for_each_generating_assignment(const GroupSpec& G, const GroupSpec& H,
                                    const std::function<bool(std::span<const Element>)>& visit);

inline constexpr int64_t kIsomorphismBudget = 5000;

/// Brute-force isomorphism test: order-census prefilter, then a search for
/// generator images. Throws InputError above `budget` elements.
bool is_isomorphic(const GroupSpec& G, const GroupSpec& H, int64_t budget = kIsomorphismBudget);

}  // namespace rmc
