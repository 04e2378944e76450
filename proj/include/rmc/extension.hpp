#pragma once

// Extending a (5,5,5)-action of an order-5p^2 group G to a (2,5,10)-action
// of the order-10p^2 group HatG that contains G with index 2.

#include <optional>

#include "rmc/aut.hpp"

namespace rmc {

struct ExtensionResult {
  /// Cyclic shift r applied to k before the search: (h1, h2, h3) is
  /// (g1, g2, g3), (g2, g3, g1) or (g3, g1, g2) for r = 0, 1, 2.
  int rotation = 0;
  /// Automorphism of G exchanging h1 and h2 (it then sends h3 to h2 h3 h2^-1).
  std::optional<GroupAutomorphism> swap;
  /// psi in Aut(G) with d psi(h2) d = psi(h1).
  std::optional<GroupAutomorphism> conjugator;
  /// (d, psi(h2), (d psi(h2))^-1) on HatG.
  std::optional<Ske> extension;
  /// Embedding along which the extension restricts to psi(k) exactly.
  Embedding embedding = Embedding::Iota1;
};

/// Tries the three cyclic shifts of k in turn (the hypermaps on one surface
/// are the restrictions along iota_1, iota_2, iota_3, which differ by a
/// cyclic shift). Throws InputError when k is not a (5,5,5)-ske of G or hat
/// is not the extended family of G.
ExtensionResult find_extension(const GroupSpec& G, const GroupSpec& hat, const Ske& k, const AutomorphismGroup& aut);

}  // namespace rmc
