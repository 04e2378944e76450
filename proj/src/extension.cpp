#include "rmc/extension.hpp"

namespace rmc {

namespace {

// iota_1 restricts (d, h, (dh)^-1) to (d h d, h, (dh)^-2); undoing a shift
// by r lands on iota_1, iota_3, iota_2.
constexpr std::array kEmbeddingForShift = {Embedding::Iota1, Embedding::Iota3, Embedding::Iota2};

}  // namespace

ExtensionResult find_extension(const GroupSpec& G, const GroupSpec& hat, const Ske& k, const AutomorphismGroup& aut) {
  if (extended_family(G.family()) != hat.family()) throw InputError("find_extension: hat is not the extension of G");
  if (k.signature != kSig555) throw InputError("find_extension needs a (0;5,5,5) ske");
  const std::string why = ske_violation(G, k);
  if (!why.empty()) throw InputError("find_extension: input is not a ske: " + why);

  ExtensionResult r;
  const Element d = hat.d();
  for (int shift = 0; shift < 3; ++shift) {
    const Element& h1 = k.triple[static_cast<size_t>(shift)];
    const Element& h2 = k.triple[static_cast<size_t>((shift + 1) % 3)];
    const Element& h3 = k.triple[static_cast<size_t>((shift + 2) % 3)];
    std::optional<GroupAutomorphism> swap;
    for (uint64_t i = 0; i < aut.size(); ++i) {
      const GroupAutomorphism phi = aut.at(i);
      if (phi.apply(G, h1) == h2 && phi.apply(G, h2) == h1) {
        if (phi.apply(G, h3) != G.conj(h2, h3)) throw ConsistencyError("swap automorphism does not fix the third entry");
        swap = phi;
        break;
      }
    }
    if (!swap) continue;

    r.rotation = shift;
    r.swap = swap;
    for (uint64_t i = 0; i < aut.size(); ++i) {
      const GroupAutomorphism psi = aut.at(i);
      const Element ph2 = psi.apply(G, h2);
      if (hat.conj(d, ph2) != psi.apply(G, h1)) continue;
      r.conjugator = psi;
      const Ske K = make_ske(hat, d, ph2, kSig2510);
      const std::string bad = ske_violation(hat, K);
      if (!bad.empty()) throw ConsistencyError("constructed extension is not a (2,5,10) ske: " + bad);
      r.embedding = kEmbeddingForShift[static_cast<size_t>(shift)];
      if (restrict_ske(hat, G, K, r.embedding) != psi.apply(G, k))
        throw ConsistencyError("extension does not restrict to an equivalent ske");
      r.extension = K;
      return r;
    }
    return r;
  }
  return r;
}

}  // namespace rmc
