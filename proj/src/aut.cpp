#include "rmc/aut.hpp"

#include <algorithm>
#include <random>

#include "rmc/presentation.hpp"

namespace rmc {

GroupAutomorphism::GroupAutomorphism(const GroupSpec& G, const PMap& L, const Element& gamma,
                                     const std::optional<Element>& delta)
    : L_(L), delta_(delta) {
  gamma_pow_[0] = G.identity();
  for (size_t n = 1; n < 5; ++n) gamma_pow_[n] = G.mul(gamma_pow_[n - 1], gamma);
}

Element GroupAutomorphism::apply(const GroupSpec& G, const Element& x) const {
  Element y = G.mul(G.from_pvec(L_.apply(x.pvec)), gamma_pow_[static_cast<size_t>(x.c_exp)]);
  if (x.d_exp) y = G.mul(y, *delta_);
  return y;
}

Ske GroupAutomorphism::apply(const GroupSpec& G, const Ske& k) const {
  return Ske{{apply(G, k.triple[0]), apply(G, k.triple[1]), apply(G, k.triple[2])}, k.signature};
}

std::vector<Element> GroupAutomorphism::generator_images(const GroupSpec& G) const {
  std::vector<Element> out;
  for (const Element& g : G.generators()) out.push_back(apply(G, g));
  return out;
}

GroupAutomorphism GroupAutomorphism::compose(const GroupSpec& G, const GroupAutomorphism& other) const {
  std::optional<Element> delta;
  if (other.delta_) delta = apply(G, *other.delta_);
  return GroupAutomorphism(G, L_ * other.L_, apply(G, other.c_image()), delta);
}

GroupAutomorphism GroupAutomorphism::inverse(const GroupSpec& G) const {
  const PMap Linv = *L_.inverse();
  // preimage of c is u c^m with m n = 1 (mod 5) and L u = -(gamma^m)_P
  const int m = static_cast<int>(*inv_mod(c_power(), 5));
  const Element gm = gamma_pow_[static_cast<size_t>(m)];
  Element c_pre{Linv.apply(G.pneg(gm.pvec)), m, 0};
  std::optional<Element> d_pre;
  if (delta_) d_pre = Element{Linv.apply(G.pneg(delta_->pvec)), 0, 1};
  return GroupAutomorphism(G, Linv, c_pre, d_pre);
}

std::optional<GroupAutomorphism> automorphism_from_images(const GroupSpec& G, std::span<const Element> images) {
  const auto gens = G.generators();
  if (images.size() != gens.size()) throw InputError("wrong number of generator images");
  for (const Element& x : images)
    if (!G.valid(x)) throw InputError("generator image outside the group");
  size_t i = 0;
  const Element ia = images[i++];
  const Element ib = G.rank() == 2 ? images[i++] : Element{};
  const Element ic = images[i++];
  const std::optional<Element> id = G.d_present() ? std::optional<Element>(images[i++]) : std::nullopt;
  if (ia.c_exp || ia.d_exp || ib.c_exp || ib.d_exp) return std::nullopt;
  if (ic.c_exp == 0 || ic.d_exp) return std::nullopt;
  if (id && (id->d_exp != 1 || id->c_exp != 0)) return std::nullopt;
  PMap L = G.rank() == 1 ? PMap::scalar(1, G.modulus(), ia.pvec[0])
                         : PMap{2, G.modulus(), {ia.pvec[0], ib.pvec[0], ia.pvec[1], ib.pvec[1]}};
  if (!L.invertible()) return std::nullopt;
  const Presentation pr = presentation(G);
  for (const Relation& r : pr.relations)
    if (!relation_holds(G, r, images)) return std::nullopt;
  return GroupAutomorphism(G, L, ic, id);
}

// ---------------------------------------------------------------- Aut(G)

uint64_t AutomorphismGroup::key(const PMap& L) const {
  uint64_t k = 0;
  for (int64_t x : L.e) k = k * static_cast<uint64_t>(G_.modulus()) + static_cast<uint64_t>(x);
  return k;
}

uint64_t AutomorphismGroup::key(const PVec& w) const {
  return static_cast<uint64_t>(w[0]) * static_cast<uint64_t>(G_.modulus()) + static_cast<uint64_t>(w[1]);
}

AutomorphismGroup::AutomorphismGroup(const GroupSpec& G) : G_(G) {
  const int64_t m = G.modulus();
  const PMap& C = G.c_action();
  std::vector<PMap> invertible;
  if (G.rank() == 1) {
    for (int64_t l = 1; l < m; ++l)
      if (inv_mod(l, m)) invertible.push_back(PMap::scalar(1, m, l));
  } else {
    for (int64_t e0 = 0; e0 < m; ++e0)
      for (int64_t e1 = 0; e1 < m; ++e1)
        for (int64_t e2 = 0; e2 < m; ++e2)
          for (int64_t e3 = 0; e3 < m; ++e3) {
            PMap L{2, m, {e0, e1, e2, e3}};
            if (L.invertible()) invertible.push_back(L);
          }
  }
  std::vector<PVec> pvecs;
  for (int64_t x = 0; x < m; ++x) {
    if (G.rank() == 1) {
      pvecs.push_back({x, 0});
      continue;
    }
    for (int64_t y = 0; y < m; ++y) pvecs.push_back({x, y});
  }

  for (int n = 1; n < 5; ++n) {
    const auto sn = static_cast<size_t>(n);
    const PMap& Cn = G.c_power(n);
    for (const PMap& L : invertible)
      if (L * C == Cn * L) {
        linear_pos_[sn][key(L)] = static_cast<uint32_t>(linear_[sn].size());
        linear_[sn].push_back(L);
      }
    for (const PVec& w : pvecs) {
      PVec acc{0, 0};
      for (int i = 0; i < 5; ++i) acc = G.padd(acc, G.c_power(n * i).apply(w));
      if (acc == PVec{0, 0}) {
        tail_pos_[sn][key(w)] = static_cast<uint32_t>(tails_[sn].size());
        tails_[sn].push_back(w);
      }
    }
    if (G.d_present()) {
      PMap I_minus = PMap::identity(G.rank(), m);
      for (size_t j = 0; j < 4; ++j) I_minus.e[j] = mod(I_minus.e[j] - Cn.e[j], m);
      if (G.rank() == 1) I_minus.e = {I_minus.e[0], 0, 0, 0};
      const auto solver = I_minus.inverse();
      if (!solver) throw ConsistencyError("I - C^n is singular; d-images are not determined");
      d_solver_[sn] = *solver;
    }
    offset_[sn + 1] = offset_[sn] + linear_[sn].size() * tails_[sn].size();
  }
  total_ = offset_[5];
}

GroupAutomorphism AutomorphismGroup::at(uint64_t i) const {
  if (i >= total_) throw InputError("automorphism index out of range");
  size_t n = 1;
  while (i >= offset_[n + 1]) ++n;
  const uint64_t r = i - offset_[n];
  const PMap& L = linear_[n][r / tails_[n].size()];
  const PVec& w = tails_[n][r % tails_[n].size()];
  const Element gamma{w, static_cast<int>(n), 0};
  std::optional<Element> delta;
  if (G_.d_present()) {
    PVec rhs = G_.padd(G_.padd(L.apply(G_.d_twist()), G_.pscale(2, w)), G_.pneg(G_.twist_sum(static_cast<int>(n))));
    delta = Element{d_solver_[n].apply(rhs), 0, 1};
  }
  return GroupAutomorphism(G_, L, gamma, delta);
}

std::optional<uint64_t> AutomorphismGroup::index_of(const GroupAutomorphism& phi) const {
  const auto n = static_cast<size_t>(phi.c_power());
  if (n == 0) return std::nullopt;
  const auto li = linear_pos_[n].find(key(phi.linear()));
  const auto wi = tail_pos_[n].find(key(phi.c_image().pvec));
  if (li == linear_pos_[n].end() || wi == tail_pos_[n].end()) return std::nullopt;
  const uint64_t idx = offset_[n] + li->second * tails_[n].size() + wi->second;
  if (G_.d_present() && !(at(idx) == phi)) return std::nullopt;
  return idx;
}

std::vector<GroupAutomorphism> automorphisms(const GroupSpec& G, uint64_t cap) {
  const AutomorphismGroup aut(G);
  if (aut.size() > cap)
    throw InputError("|Aut| = " + std::to_string(aut.size()) + " exceeds the list cap of " + std::to_string(cap));
  std::vector<GroupAutomorphism> out;
  out.reserve(aut.size());
  for (uint64_t i = 0; i < aut.size(); ++i) out.push_back(aut.at(i));
  return out;
}

ClosureCertificate verify_closed(const AutomorphismGroup& aut) {
  const GroupSpec& G = aut.group();
  ClosureCertificate cert;
  cert.group_size = aut.size();
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<uint64_t> pick(0, aut.size() - 1);
  std::vector<GroupAutomorphism> T{aut.at(pick(rng)), aut.at(pick(rng))};

  const GroupAutomorphism id(G, PMap::identity(G.rank(), G.modulus()), G.c(),
                             G.d_present() ? std::optional<Element>(G.d()) : std::nullopt);
  const auto id_idx = aut.index_of(id);
  if (!id_idx) {
    cert.failure = "identity is not enumerated";
    return cert;
  }
  while (true) {
    std::vector<uint8_t> seen(aut.size(), 0);
    std::vector<uint64_t> queue{*id_idx};
    seen[*id_idx] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      const GroupAutomorphism x = aut.at(queue[head]);
      for (const GroupAutomorphism& t : T) {
        const auto y = aut.index_of(x.compose(G, t));
        if (!y) {
          cert.failure = "product of enumerated automorphisms is not enumerated";
          return cert;
        }
        if (!seen[*y]) {
          seen[*y] = 1;
          queue.push_back(*y);
        }
      }
    }
    cert.generators_used = T.size();
    if (queue.size() == aut.size()) {
      cert.closed = true;
      return cert;
    }
    uint64_t j = pick(rng);
    while (seen[j]) j = pick(rng);
    T.push_back(aut.at(j));
  }
}

// ---------------------------------------------------------------- orbits

std::string chirality_name(Chirality c) {
  switch (c) {
    case Chirality::Reflexive: return "reflexive";
    case Chirality::Chiral: return "chiral";
    case Chirality::Unknown: break;
  }
  return "unknown";
}

std::optional<int> Classification::find(const Ske& k) const {
  const auto it = std::lower_bound(skes.begin(), skes.end(), k);
  if (it == skes.end() || it->triple != k.triple) return std::nullopt;
  return class_of[static_cast<size_t>(it - skes.begin())];
}

Classification orbit_classify(const GroupSpec& G, std::vector<Ske> skes, const AutomorphismGroup& aut) {
  Classification cl;
  std::sort(skes.begin(), skes.end());
  cl.skes = std::move(skes);
  cl.class_of.assign(cl.skes.size(), -1);

  const uint64_t n = G.size();
  std::vector<uint64_t> keys(cl.skes.size());
  for (size_t i = 0; i < cl.skes.size(); ++i)
    keys[i] = G.index(cl.skes[i].triple[0]) * n + G.index(cl.skes[i].triple[1]);

  for (size_t i = 0; i < cl.skes.size(); ++i) {
    if (cl.class_of[i] >= 0) continue;
    SkeClass c;
    c.id = static_cast<int>(cl.classes.size());
    c.family = G.family();
    c.representative = cl.skes[i];
    const Ske& rep = cl.skes[i];
    for (uint64_t j = 0; j < aut.size(); ++j) {
      const GroupAutomorphism phi = aut.at(j);
      const uint64_t key = G.index(phi.apply(G, rep.triple[0])) * n + G.index(phi.apply(G, rep.triple[1]));
      const auto it = std::lower_bound(keys.begin(), keys.end(), key);
      if (it == keys.end() || *it != key) throw ConsistencyError("automorphism image of a ske was not enumerated");
      const auto pos = static_cast<size_t>(it - keys.begin());
      if (pos == i) ++c.stabilizer;
      if (cl.class_of[pos] < 0) {
        cl.class_of[pos] = c.id;
        ++c.orbit_size;
      } else if (cl.class_of[pos] != c.id) {
        throw ConsistencyError("Aut-orbits overlap");
      }
    }
    if (c.orbit_size * c.stabilizer != aut.size())
      throw ConsistencyError("orbit-stabiliser count fails for class " + std::to_string(c.id));
    cl.classes.push_back(std::move(c));
  }
  return cl;
}

Chirality chirality(const GroupSpec& G, const SkeClass& c, const Classification& cl, std::optional<int>* partner) {
  const auto m = cl.find(mirror(G, c.representative));
  if (!m) throw ConsistencyError("mirror of class " + std::to_string(c.id) + " is not an enumerated ske");
  if (partner) *partner = *m == c.id ? std::nullopt : std::optional<int>(*m);
  return *m == c.id ? Chirality::Reflexive : Chirality::Chiral;
}

void assign_chirality(const GroupSpec& G, Classification& cl) {
  for (SkeClass& c : cl.classes) c.chirality = chirality(G, c, cl, &c.partner);
  for (const SkeClass& c : cl.classes) {
    if (!c.partner) continue;
    const SkeClass& other = cl.classes[static_cast<size_t>(*c.partner)];
    if (other.partner != c.id) throw ConsistencyError("chiral partners are not matched");
  }
}

// ---------------------------------------------------------------- constants

std::array<int64_t, 4> lemma_matrix(const PrimeParams& params, int64_t alpha, int64_t beta, int l) {
  if (!params.t1) throw InputError("lemma matrices need p = -1 (mod 5)");
  const int64_t p = params.p, d = params.delta, t1 = *params.t1, t2 = *params.t2;
  const int64_t t1sq = t1 * t1 % p, t2sq = t2 * t2 % p;
  if (l == 1) {
    return {mod(alpha - d * t1sq, p), mod(beta - 1, p), mod(beta - 1, p), mod(-alpha * t2sq + beta - d, p)};
  }
  if (l == 2) {
    const int64_t off = mod(beta - 1 - d * t1, p);
    return {mod(alpha - d * t1sq - t1, p), off, off, mod(beta - alpha * t2sq - d - t2 - d * t1, p)};
  }
  throw InputError("lemma matrices are defined for l = 1, 2");
}

CanonicalizationData canonicalization_data(const GroupSpec& hat, int64_t alpha, int64_t beta) {
  if (!hat.d_present()) throw InputError("canonicalization data needs an extended family");
  CanonicalizationData data;
  data.delta = *inv_mod(2, hat.modulus());
  for (int l = 1; l < 5; ++l)
    data.fixed_point[static_cast<size_t>(l)] = hat.pscale(data.delta, hat.twist_sum(l));
  if (hat.family() == Family::HatG0) {
    data.has_lemma_matrices = true;
    data.lemma_matrix[1] = lemma_matrix(hat.params(), alpha, beta, 1);
    data.lemma_matrix[2] = lemma_matrix(hat.params(), alpha, beta, 2);
  }
  return data;
}

LemmaVerdict lemma_matrix_check(const GroupSpec& hat0, int64_t alpha, int64_t beta, int l) {
  if (hat0.family() != Family::HatG0) throw InputError("lemma_matrix_check needs HatG0");
  const int64_t p = hat0.params().p;
  const auto M = lemma_matrix(hat0.params(), alpha, beta, l);
  LemmaVerdict v;
  v.det = mod(M[0] * M[3] - M[1] * M[2], p);
  const std::array<Element, 2> gens{Element{{mod(alpha, p), mod(beta, p)}, l, 0}, hat0.d()};
  v.subgroup_order = closure(hat0, gens).order;
  v.holds = v.det != 0 || v.subgroup_order != hat0.expected_order();
  return v;
}

}  // namespace rmc
