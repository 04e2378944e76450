#include "rmc/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rmc {

// ---------------------------------------------------------------- families

std::string_view family_tag(Family f) {
  switch (f) {
    case Family::G1: return "G1";
    case Family::G_1_s: return "G_1_s";
    case Family::G_s_s: return "G_s_s";
    case Family::G_s_s2: return "G_s_s2";
    case Family::G_s_s4: return "G_s_s4";
    case Family::G0: return "G0";
    case Family::HatG1: return "HatG1";
    case Family::HatG_s_s2: return "HatG_s_s2";
    case Family::HatG_s_s4: return "HatG_s_s4";
    case Family::HatG0: return "HatG0";
  }
  return "?";
}

Family parse_family(std::string_view tag) {
  for (Family f : kAllFamilies)
    if (family_tag(f) == tag) return f;
  throw InputError("unknown family tag '" + std::string(tag) + "'");
}

bool is_extended(Family f) {
  return f == Family::HatG1 || f == Family::HatG_s_s2 || f == Family::HatG_s_s4 ||
         f == Family::HatG0;
}

Family base_family(Family f) {
  switch (f) {
    case Family::HatG1: return Family::G1;
    case Family::HatG_s_s2: return Family::G_s_s2;
    case Family::HatG_s_s4: return Family::G_s_s4;
    case Family::HatG0: return Family::G0;
    default: return f;
  }
}

std::optional<Family> extended_family(Family f) {
  switch (f) {
    case Family::G1: return Family::HatG1;
    case Family::G_s_s2: return Family::HatG_s_s2;
    case Family::G_s_s4: return Family::HatG_s_s4;
    case Family::G0: return Family::HatG0;
    default: return std::nullopt;
  }
}

bool family_admissible(Family f, int residue) {
  if (base_family(f) == Family::G0) return residue == 4;
  return residue == 1;
}

std::vector<Family> admissible_families(const PrimeParams& params) {
  std::vector<Family> out;
  for (Family f : kAllFamilies)
    if (family_admissible(f, params.residue)) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------- PMap

PMap PMap::identity(int rank, int64_t modulus) { return scalar(rank, modulus, 1); }

PMap PMap::scalar(int rank, int64_t modulus, int64_t lambda) {
  PMap m{rank, modulus, {}};
  m.e[0] = mod(lambda, modulus);
  if (rank == 2) m.e[3] = m.e[0];
  return m;
}

PVec PMap::apply(const PVec& u) const {
  if (rank == 1) return {mul_mod(e[0], u[0], modulus), 0};
  return {mod(e[0] * u[0] + e[1] * u[1], modulus), mod(e[2] * u[0] + e[3] * u[1], modulus)};
}

PMap PMap::operator*(const PMap& rhs) const {
  PMap out{rank, modulus, {}};
  if (rank == 1) {
    out.e[0] = mul_mod(e[0], rhs.e[0], modulus);
    return out;
  }
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.e[r * 2 + c] = mod(at(r, 0) * rhs.at(0, c) + at(r, 1) * rhs.at(1, c), modulus);
  return out;
}

PMap PMap::pow(int64_t n) const {
  PMap result = identity(rank, modulus);
  PMap base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

int64_t PMap::det() const {
  if (rank == 1) return e[0];
  return mod(e[0] * e[3] - e[1] * e[2], modulus);
}

bool PMap::invertible() const { return inv_mod(det(), modulus).has_value(); }

std::optional<PMap> PMap::inverse() const {
  const auto di = inv_mod(det(), modulus);
  if (!di) return std::nullopt;
  if (rank == 1) return PMap{1, modulus, {*di, 0, 0, 0}};
  PMap out{2, modulus, {}};
  out.e[0] = mul_mod(e[3], *di, modulus);
  out.e[1] = mul_mod(-e[1], *di, modulus);
  out.e[2] = mul_mod(-e[2], *di, modulus);
  out.e[3] = mul_mod(e[0], *di, modulus);
  return out;
}

// ---------------------------------------------------------------- GroupSpec

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupSpec::GroupSpec(const PrimeParams& params, Family family) : params_(params), family_(family) {
  if (!family_admissible(family, params.residue)) {
    throw InputError("family " + std::string(family_tag(family)) + " needs p = " +
                     (base_family(family) == Family::G0 ? "-1" : "1") + " (mod 5), but p = " +
                     std::to_string(params.p) + " = " + std::to_string(params.residue) + " (mod 5)");
  }
  const int64_t p = params.p;
  d_present_ = is_extended(family);
  PMap c;
  switch (base_family(family)) {
    case Family::G1:
      rank_ = 1;
      modulus_ = p * p;
      c = PMap::scalar(1, modulus_, *params.k);
      break;
    case Family::G_1_s:
      rank_ = 2;
      modulus_ = p;
      c = PMap{2, p, {1, 0, 0, *params.s}};
      break;
    case Family::G_s_s:
      rank_ = 2;
      modulus_ = p;
      c = PMap::scalar(2, p, *params.s);
      break;
    case Family::G_s_s2:
    case Family::G_s_s4: {
      rank_ = 2;
      modulus_ = p;
      const int64_t s = *params.s;
      const int64_t j = base_family(family) == Family::G_s_s2 ? 2 : 4;
      const int64_t sj = pow_mod(s, j, p);
      c = PMap{2, p, {s, 0, 0, sj}};
      if (d_present_) twist_ = {mod(1 - s, p), mod(1 - sj, p)};
      break;
    }
    case Family::G0: {
      rank_ = 2;
      modulus_ = p;
      const int64_t t1 = *params.t1, t2 = *params.t2;
      // columns are the images of a and b: c a c^-1 = b^{t2}, c b c^-1 = (ab)^{t1}
      c = PMap{2, p, {0, t1, t2, t1}};
      if (d_present_) twist_ = {mul_mod(t1, t1, p), mod(2, p)};
      break;
    }
    default:
      break;
  }
  for (int n = 0; n < 5; ++n) cpow_[static_cast<size_t>(n)] = c.pow(n);
  int64_t order = 5;
  for (int i = 0; i < rank_; ++i) order *= modulus_;
  if (d_present_) order *= 2;
  order_ = order;
  divisors_ = divisors(order_);
  recompute_twist_sums();
}

void GroupSpec::recompute_twist_sums() {
  wsum_[0] = {0, 0};
  for (int n = 0; n < 5; ++n)
    wsum_[static_cast<size_t>(n + 1)] = padd(wsum_[static_cast<size_t>(n)], cpow_[static_cast<size_t>(n)].apply(twist_));
}

GroupSpec GroupSpec::with_d_twist(const PVec& v) const {
  GroupSpec copy = *this;
  copy.twist_ = {mod(v[0], modulus_), rank_ == 2 ? mod(v[1], modulus_) : 0};
  copy.recompute_twist_sums();
  return copy;
}

Element GroupSpec::a() const { return Element{{1, 0}, 0, 0}; }
Element GroupSpec::b() const { return Element{{0, rank_ == 2 ? 1 : 0}, 0, 0}; }
Element GroupSpec::c() const { return Element{{0, 0}, 1, 0}; }
Element GroupSpec::d() const { return Element{{0, 0}, 0, d_present_ ? 1 : 0}; }

std::vector<Element> GroupSpec::generators() const {
  std::vector<Element> gens{a()};
  if (rank_ == 2) gens.push_back(b());
  gens.push_back(c());
  if (d_present_) gens.push_back(d());
  return gens;
}

Element GroupSpec::from_pvec(const PVec& u) const {
  return Element{{mod(u[0], modulus_), rank_ == 2 ? mod(u[1], modulus_) : 0}, 0, 0};
}

PVec GroupSpec::padd(const PVec& u, const PVec& v) const {
  return {mod(u[0] + v[0], modulus_), rank_ == 2 ? mod(u[1] + v[1], modulus_) : 0};
}

PVec GroupSpec::pneg(const PVec& u) const {
  return {mod(-u[0], modulus_), rank_ == 2 ? mod(-u[1], modulus_) : 0};
}

PVec GroupSpec::pscale(int64_t lambda, const PVec& u) const {
  return {mul_mod(lambda, u[0], modulus_), rank_ == 2 ? mul_mod(lambda, u[1], modulus_) : 0};
}

// (u1 c^n1 d^e1)(u2 c^n2 d^e2): move d^e1 past u2 (negating it) and past c^n2
// (d c^n = W_n c^n d), then move c^n1 past the p-part (acting by C^n1).
Element GroupSpec::mul(const Element& x, const Element& y) const {
  PVec moved = x.d_exp ? padd(pneg(y.pvec), wsum_[static_cast<size_t>(y.c_exp)]) : y.pvec;
  moved = cpow_[static_cast<size_t>(x.c_exp)].apply(moved);
  Element out;
  out.pvec = padd(x.pvec, moved);
  out.c_exp = (x.c_exp + y.c_exp) % 5;
  out.d_exp = (x.d_exp + y.d_exp) % 2;
  return out;
}

Element GroupSpec::inv(const Element& x) const {
  // (u c^n d^e)^-1 = d^e c^-n u^-1
  const Element de{{0, 0}, 0, x.d_exp};
  const Element cn{{0, 0}, (5 - x.c_exp) % 5, 0};
  const Element u{pneg(x.pvec), 0, 0};
  return mul(mul(de, cn), u);
}

Element GroupSpec::pow(const Element& x, int64_t n) const {
  Element base = n < 0 ? inv(x) : x;
  int64_t e = n < 0 ? -n : n;
  Element result = identity();
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int64_t GroupSpec::order(const Element& x) const {
  for (int64_t dv : divisors_)
    if (pow(x, dv) == identity()) return dv;
  throw ConsistencyError("element order does not divide the group order");
}

Element GroupSpec::conj(const Element& g, const Element& x) const { return mul(mul(g, x), inv(g)); }

Element GroupSpec::commutator(const Element& x, const Element& y) const {
  return mul(mul(x, y), mul(inv(x), inv(y)));
}

bool GroupSpec::valid(const Element& x) const {
  auto in = [&](int64_t v) { return v >= 0 && v < modulus_; };
  return in(x.pvec[0]) && (rank_ == 2 ? in(x.pvec[1]) : x.pvec[1] == 0) && x.c_exp >= 0 && x.c_exp < 5 &&
         (d_present_ ? (x.d_exp == 0 || x.d_exp == 1) : x.d_exp == 0);
}

// Index order agrees with lexicographic order on (pvec, c_exp, d_exp).
uint32_t GroupSpec::index(const Element& x) const {
  int64_t idx = x.pvec[0];
  if (rank_ == 2) idx = idx * modulus_ + x.pvec[1];
  idx = idx * 5 + x.c_exp;
  if (d_present_) idx = idx * 2 + x.d_exp;
  return static_cast<uint32_t>(idx);
}

Element GroupSpec::element(uint32_t index) const {
  int64_t idx = index;
  Element x;
  if (d_present_) {
    x.d_exp = static_cast<int>(idx % 2);
    idx /= 2;
  }
  x.c_exp = static_cast<int>(idx % 5);
  idx /= 5;
  if (rank_ == 2) {
    x.pvec[1] = idx % modulus_;
    idx /= modulus_;
  }
  x.pvec[0] = idx;
  return x;
}

// ---------------------------------------------------------------- subgroups

std::vector<uint32_t> order_table(const GroupSpec& G) {
  std::vector<uint32_t> orders(G.size());
  for (uint32_t i = 0; i < G.size(); ++i) orders[i] = static_cast<uint32_t>(G.order(G.element(i)));
  return orders;
}

Subgroup closure(const GroupSpec& G, std::span<const Element> gens, std::optional<int64_t> stop_above) {
  std::vector<uint8_t> seen(G.size(), 0);
  std::vector<Element> found{G.identity()};
  seen[G.index(G.identity())] = 1;
  for (size_t head = 0; head < found.size(); ++head) {
    for (const Element& g : gens) {
      const Element y = G.mul(found[head], g);
      const uint32_t iy = G.index(y);
      if (seen[iy]) continue;
      seen[iy] = 1;
      found.push_back(y);
      if (stop_above && static_cast<int64_t>(found.size()) > *stop_above) {
        std::sort(found.begin(), found.end());
        return {std::move(found), *stop_above + 1};
      }
    }
  }
  std::sort(found.begin(), found.end());
  const auto n = static_cast<int64_t>(found.size());
  return {std::move(found), n};
}

namespace {

// Size of the subgroup of P spanned by `vecs`.
int64_t span_size(const GroupSpec& G, const std::vector<PVec>& vecs) {
  const int64_t p = G.params().p;
  if (G.rank() == 1) {
    int64_t g = G.modulus();
    for (const PVec& v : vecs) g = std::gcd(g, v[0]);
    return G.modulus() / g;
  }
  const PVec* first = nullptr;
  for (const PVec& v : vecs) {
    if (v[0] == 0 && v[1] == 0) continue;
    if (!first) {
      first = &v;
      continue;
    }
    if (mod((*first)[0] * v[1] - (*first)[1] * v[0], p) != 0) return p * p;
  }
  return first ? p : 1;
}

}  // namespace

int64_t subgroup_order(const GroupSpec& G, std::span<const Element> gens) {
  int64_t factor = 1;
  std::vector<Element> layer(gens.begin(), gens.end());

  // Index-2 layer: Schreier generators for <gens> meet G' w.r.t. {1, t}.
  if (G.d_present()) {
    const auto t = std::find_if(layer.begin(), layer.end(), [](const Element& x) { return x.d_exp == 1; });
    if (t != layer.end()) {
      const Element tt = *t;
      const Element tinv = G.inv(tt);
      std::vector<Element> next;
      for (const Element& x : layer) {
        for (const Element& r : {G.identity(), tt}) {
          const Element rx = G.mul(r, x);
          next.push_back(rx.d_exp ? G.mul(rx, tinv) : rx);
        }
      }
      layer = std::move(next);
      factor *= 2;
    }
  }

  // Index-5 layer: rewrite everything over a generator g with c-exponent 1.
  std::vector<PVec> module;
  const auto g = std::find_if(layer.begin(), layer.end(), [](const Element& x) { return x.c_exp != 0; });
  if (g == layer.end()) {
    for (const Element& x : layer) module.push_back(x.pvec);
  } else {
    factor *= 5;
    const int64_t m = *inv_mod(g->c_exp, 5);
    const Element g1 = G.pow(*g, m);
    std::vector<PVec> seeds;
    for (const Element& x : layer) seeds.push_back(G.mul(x, G.pow(g1, -x.c_exp)).pvec);
    seeds.push_back(G.pow(g1, 5).pvec);
    for (const PVec& y : seeds)
      for (int i = 0; i < 5; ++i) module.push_back(G.c_power(i).apply(y));
  }
  return factor * span_size(G, module);
}

bool generates(const GroupSpec& G, std::span<const Element> gens) {
  return subgroup_order(G, gens) == G.expected_order();
}

std::vector<Element> center(const GroupSpec& G) {
  const auto gens = G.generators();
  std::vector<Element> out;
  for (uint32_t i = 0; i < G.size(); ++i) {
    const Element x = G.element(i);
    if (std::all_of(gens.begin(), gens.end(), [&](const Element& g) { return G.mul(x, g) == G.mul(g, x); }))
      out.push_back(x);
  }
  return out;
}

std::map<int64_t, int64_t> order_census(const GroupSpec& G) {
  std::map<int64_t, int64_t> census;
  for (uint32_t o : order_table(G)) ++census[o];
  return census;
}

std::vector<Element> elements_of_order(const GroupSpec& G, int64_t n) {
  std::vector<Element> out;
  for (uint32_t i = 0; i < G.size(); ++i) {
    const Element x = G.element(i);
    if (G.order(x) == n) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------- rendering

std::string render(const GroupSpec& G, const Element& x) {
  const bool g1_letters = G.rank() == 1;
  const char c_letter = g1_letters ? 'b' : 'c';
  const char d_letter = g1_letters ? 'c' : 'd';
  std::ostringstream os;
  bool any = false;
  auto emit = [&](char letter, int64_t e) {
    if (e == 0) return;
    if (any) os << ' ';
    os << letter;
    if (e != 1) os << '^' << e;
    any = true;
  };
  emit('a', x.pvec[0]);
  if (G.rank() == 2) emit('b', x.pvec[1]);
  emit(c_letter, x.c_exp);
  emit(d_letter, x.d_exp);
  return any ? os.str() : "1";
}

std::vector<int64_t> exponent_tuple(const GroupSpec& G, const Element& x) {
  std::vector<int64_t> t{x.pvec[0]};
  if (G.rank() == 2) t.push_back(x.pvec[1]);
  t.push_back(x.c_exp);
  t.push_back(x.d_exp);
  return t;
}

Element from_exponent_tuple(const GroupSpec& G, std::span<const int64_t> tuple) {
  const size_t want = G.rank() == 2 ? 4 : 3;
  if (tuple.size() != want) throw InputError("exponent tuple has wrong length");
  Element x;
  size_t i = 0;
  x.pvec[0] = tuple[i++];
  if (G.rank() == 2) x.pvec[1] = tuple[i++];
  x.c_exp = static_cast<int>(tuple[i++]);
  x.d_exp = static_cast<int>(tuple[i++]);
  if (!G.valid(x)) throw InputError("exponent tuple out of range for " + std::string(family_tag(G.family())));
  return x;
}

}  // namespace rmc
