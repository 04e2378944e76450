#include "rmc/epi.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <functional>
#include <sstream>

namespace rmc {

using Rational = boost::rational<int64_t>;

namespace {

Rational branching_sum(const Signature& sig) {
  Rational e(0);
  for (int64_t m : sig.periods) e += Rational(1) - Rational(1, m);
  return e;
}

}  // namespace

bool Signature::hyperbolic() const {
  return Rational(2 * orbit_genus - 2) + branching_sum(*this) > 0;
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << '(' << orbit_genus << ';';
  for (size_t i = 0; i < periods.size(); ++i) os << (i ? "," : "") << periods[i];
  os << ')';
  return os.str();
}

GenusResult rh_genus(int64_t group_order, const Signature& sig) {
  for (int64_t m : sig.periods)
    if (m < 2) throw InputError("signature periods must be >= 2");
  if (!sig.hyperbolic()) throw InputError("signature " + sig.to_string() + " is not hyperbolic");
  const Rational twice_g = Rational(group_order) * (Rational(2 * sig.orbit_genus - 2) + branching_sum(sig)) + 2;
  GenusResult r;
  r.twice_genus_num = twice_g.numerator();
  r.twice_genus_den = twice_g.denominator();
  r.integral = twice_g.denominator() == 1 && twice_g.numerator() % 2 == 0;
  if (r.integral) r.genus = twice_g.numerator() / 2;
  return r;
}

std::vector<Signature> admissible_signatures(int64_t group_order, int64_t genus, int64_t min_period) {
  if (group_order < 1 || genus < 2 || min_period < 2) throw InputError("admissible_signatures: bad arguments");
  const Rational target(2 * genus - 2, group_order);  // 2h - 2 + E
  std::vector<int64_t> periods;
  for (int64_t dv : divisors(group_order))
    if (dv >= min_period) periods.push_back(dv);
  const Rational min_term = Rational(1) - Rational(1, min_period);

  std::vector<Signature> out;
  for (int64_t h = 0; Rational(2 * h - 2) < target; ++h) {
    const Rational need = target - Rational(2 * h - 2);  // required E
    std::vector<int64_t> chosen;
    std::function<void(size_t, Rational)> extend = [&](size_t from, Rational e) {
      if (e == need && !chosen.empty()) out.push_back(Signature{h, chosen});
      if (e + min_term > need) return;
      for (size_t i = from; i < periods.size(); ++i) {
        const Rational next = e + Rational(1) - Rational(1, periods[i]);
        if (next > need) break;
        chosen.push_back(periods[i]);
        extend(i, next);
        chosen.pop_back();
      }
    };
    extend(0, Rational(0));
  }
  return out;
}

std::string ske_violation(const GroupSpec& G, const Ske& k) {
  const auto& [g1, g2, g3] = k.triple;
  if (k.signature.orbit_genus != 0 || k.signature.periods.size() != 3) return "signature is not a triangle signature";
  for (const Element& g : k.triple)
    if (!G.valid(g)) return "element outside the group";
  if (G.mul(G.mul(g1, g2), g3) != G.identity()) return "g1 g2 g3 != 1";
  for (size_t i = 0; i < 3; ++i) {
    if (G.order(k.triple[i]) != k.signature.periods[i])
      return "order(g" + std::to_string(i + 1) + ") != " + std::to_string(k.signature.periods[i]);
  }
  const std::array<Element, 2> gens{g1, g2};
  if (!generates(G, gens)) return "g1, g2 do not generate the group";
  return {};
}

Ske make_ske(const GroupSpec& G, const Element& g1, const Element& g2, const Signature& sig) {
  return Ske{{g1, g2, G.inv(G.mul(g1, g2))}, sig};
}

std::vector<Ske> enumerate_skes(const GroupSpec& G, const Signature& sig, int threads) {
  if (sig.orbit_genus != 0 || sig.periods.size() != 3) throw InputError("enumerate_skes needs a triangle signature");
  const auto orders = order_table(G);
  std::vector<Element> first, second;
  for (uint32_t i = 0; i < G.size(); ++i) {
    if (orders[i] == sig.periods[0]) first.push_back(G.element(i));
    if (orders[i] == sig.periods[1]) second.push_back(G.element(i));
  }
  const auto m3 = static_cast<uint32_t>(sig.periods[2]);

  std::vector<std::vector<Ske>> per_g1(first.size());
  const auto n = static_cast<int64_t>(first.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(std::max(1, threads))
  for (int64_t i = 0; i < n; ++i) {
    const Element& g1 = first[static_cast<size_t>(i)];
    auto& bucket = per_g1[static_cast<size_t>(i)];
    for (const Element& g2 : second) {
      const Element g3 = G.inv(G.mul(g1, g2));
      if (orders[G.index(g3)] != m3) continue;
      const std::array<Element, 2> gens{g1, g2};
      if (!generates(G, gens)) continue;
      bucket.push_back(Ske{{g1, g2, g3}, sig});
    }
  }
  std::vector<Ske> out;
  for (auto& bucket : per_g1) out.insert(out.end(), bucket.begin(), bucket.end());
  std::sort(out.begin(), out.end());
  return out;
}

Ske mirror(const GroupSpec& G, const Ske& k) {
  const auto& [g1, g2, g3] = k.triple;
  return Ske{{G.inv(g1), G.inv(g2), G.mul(g2, g1)}, k.signature};
}

// ---------------------------------------------------------------- restriction

namespace {

// Normal form in Z2 * Z5: alternating syllables (generator, exponent).
using FreeWord = std::vector<std::pair<int, int>>;

void push(FreeWord& w, int gen, int e) {
  const int m = gen == 0 ? 2 : 5;
  e = static_cast<int>(mod(e, m));
  if (e == 0) return;
  if (!w.empty() && w.back().first == gen) {
    const int merged = static_cast<int>(mod(w.back().second + e, m));
    w.pop_back();
    if (merged) w.emplace_back(gen, merged);
    return;
  }
  w.emplace_back(gen, e);
}

FreeWord concat(FreeWord a, const FreeWord& b) {
  for (const auto& [g, e] : b) push(a, g, e);
  return a;
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) push(out, it->first, -it->second);
  return out;
}

const FreeWord kY1{{0, 1}};
const FreeWord kY2{{1, 1}};
FreeWord y3() { return inverse(concat(kY1, kY2)); }

std::array<FreeWord, 3> slot_words() {
  const FreeWord t = y3();
  return {concat(concat(inverse(t), kY2), t), kY2, concat(t, t)};
}

const char* const kSlotNames[3] = {"y3^-1 y2 y3", "y2", "y3^2"};

EmbeddingWords make_words(const std::array<int, 3>& slots) {
  const auto words = slot_words();
  FreeWord prod;
  for (int s : slots) prod = concat(prod, words[static_cast<size_t>(s)]);
  std::string label = "(";
  for (size_t i = 0; i < 3; ++i) label += std::string(i ? ", " : "") + kSlotNames[slots[i]];
  label += ")";
  return {label, slots, prod.empty()};
}

}  // namespace

std::string embedding_name(Embedding e) {
  switch (e) {
    case Embedding::Iota1: return "iota1";
    case Embedding::Iota2: return "iota2";
    case Embedding::Iota3: return "iota3";
  }
  return "?";
}

std::vector<EmbeddingWords> embedding_candidates() {
  std::array<int, 3> slots{0, 1, 2};
  std::vector<EmbeddingWords> out;
  do {
    out.push_back(make_words(slots));
  } while (std::next_permutation(slots.begin(), slots.end()));
  return out;
}

EmbeddingWords embedding_words(Embedding e) {
  switch (e) {
    case Embedding::Iota1: return make_words({0, 1, 2});
    case Embedding::Iota2: return make_words({1, 2, 0});
    case Embedding::Iota3: return make_words({2, 0, 1});
  }
  throw InputError("unknown embedding");
}

EmbeddingWords alternative_iota2() { return make_words({0, 2, 1}); }

std::array<Element, 3> evaluate_embedding(const GroupSpec& hat, const Ske& K, const std::array<int, 3>& slots) {
  const auto& [y1, y2, y3] = K.triple;
  (void)y1;
  const std::array<Element, 3> values{hat.mul(hat.mul(hat.inv(y3), y2), y3), y2, hat.mul(y3, y3)};
  return {values[static_cast<size_t>(slots[0])], values[static_cast<size_t>(slots[1])],
          values[static_cast<size_t>(slots[2])]};
}

Ske restrict_ske(const GroupSpec& hat, const GroupSpec& base, const Ske& K, Embedding which) {
  if (!hat.d_present() || base.d_present() || base_family(hat.family()) != base.family())
    throw InputError("restrict_ske needs an extended family and its index-2 base family");
  const auto images = evaluate_embedding(hat, K, embedding_words(which).slots);
  Ske k{images, kSig555};
  for (const Element& g : k.triple)
    if (g.d_exp != 0) throw ConsistencyError("restriction left the index-2 subgroup");
  const std::string why = ske_violation(base, k);
  if (!why.empty()) throw ConsistencyError("restriction along " + embedding_name(which) + " is not a ske: " + why);
  return k;
}

}  // namespace rmc
