#include "rmc/presentation.hpp"

#include <algorithm>

namespace rmc {

namespace {

Term gen(int g, int64_t e = 1) { return Term{{{g, e}}, 1}; }
Term product_power(std::vector<std::pair<int, int64_t>> factors, int64_t power) {
  return Term{std::move(factors), power};
}

}  // namespace

Presentation presentation(const PrimeParams& params, Family family) {
  const int64_t p = params.p;
  Presentation pr;
  const bool hat = is_extended(family);
  auto& rel = pr.relations;

  if (base_family(family) == Family::G1) {
    // slots: a = 0, order-5 = 1 (written b), involution = 2 (written c)
    pr.generators = {"a", "b"};
    if (hat) pr.generators.push_back("c");
    const int64_t k = *params.k;
    rel.push_back({"a^(p^2) = 1", {gen(0, p * p)}, {}});
    rel.push_back({"b^5 = 1", {gen(1, 5)}, {}});
    rel.push_back({"b a b^-1 = a^k", {gen(1), gen(0), gen(1, -1)}, {gen(0, k)}});
    if (hat) {
      rel.push_back({"c^2 = 1", {gen(2, 2)}, {}});
      rel.push_back({"(c a)^2 = 1", {product_power({{2, 1}, {0, 1}}, 2)}, {}});
      rel.push_back({"[c,b] = 1", {gen(2), gen(1), gen(2, -1), gen(1, -1)}, {}});
      pr.search_order = {1, 0, 2};
    } else {
      pr.search_order = {1, 0};
    }
    return pr;
  }

  pr.generators = {"a", "b", "c"};
  if (hat) pr.generators.push_back("d");
  rel.push_back({"a^p = 1", {gen(0, p)}, {}});
  rel.push_back({"b^p = 1", {gen(1, p)}, {}});
  rel.push_back({"c^5 = 1", {gen(2, 5)}, {}});
  rel.push_back({"[a,b] = 1", {gen(0), gen(1), gen(0, -1), gen(1, -1)}, {}});
  const Word cac = {gen(2), gen(0), gen(2, -1)};
  const Word cbc = {gen(2), gen(1), gen(2, -1)};

  switch (base_family(family)) {
    case Family::G_1_s:
    case Family::G_s_s:
    case Family::G_s_s2:
    case Family::G_s_s4: {
      const int64_t s = *params.s;
      const int64_t u = base_family(family) == Family::G_1_s ? 1 : s;
      int64_t j = 1;
      if (base_family(family) == Family::G_s_s2) j = 2;
      if (base_family(family) == Family::G_s_s4) j = 4;
      const int64_t v = pow_mod(s, j, p);
      const std::string uname = base_family(family) == Family::G_1_s ? "a" : "a^s";
      const std::string vname = j == 1 ? "b^s" : "b^(s^" + std::to_string(j) + ")";
      rel.push_back({"c a c^-1 = " + uname, cac, {gen(0, u)}});
      rel.push_back({"c b c^-1 = " + vname, cbc, {gen(1, v)}});
      if (hat) {
        rel.push_back({"d c d = a^(1-s) b^(1-s^" + std::to_string(j) + ") c",
                       {gen(3), gen(2), gen(3)},
                       {gen(0, mod(1 - s, p)), gen(1, mod(1 - v, p)), gen(2)}});
      }
      break;
    }
    case Family::G0: {
      const int64_t t1 = *params.t1, t2 = *params.t2;
      rel.push_back({"c a c^-1 = b^t2", cac, {gen(1, t2)}});
      rel.push_back({"c b c^-1 = (a b)^t1", cbc, {product_power({{0, 1}, {1, 1}}, t1)}});
      if (hat) {
        rel.push_back({"d c d = a^(t1^2) b^2 c",
                       {gen(3), gen(2), gen(3)},
                       {gen(0, mul_mod(t1, t1, p)), gen(1, 2), gen(2)}});
      }
      break;
    }
    default:
      break;
  }
  if (hat) {
    rel.push_back({"d^2 = 1", {gen(3, 2)}, {}});
    rel.push_back({"(d a)^2 = 1", {product_power({{3, 1}, {0, 1}}, 2)}, {}});
    rel.push_back({"(d b)^2 = 1", {product_power({{3, 1}, {1, 1}}, 2)}, {}});
    pr.search_order = {2, 0, 1, 3};
  } else {
    pr.search_order = {2, 0, 1};
  }
  return pr;
}

Element evaluate(const GroupSpec& H, const Word& w, std::span<const Element> images) {
  Element acc = H.identity();
  for (const Term& t : w) {
    Element base = H.identity();
    for (const auto& [g, e] : t.factors) base = H.mul(base, H.pow(images[static_cast<size_t>(g)], e));
    acc = H.mul(acc, H.pow(base, t.power));
  }
  return acc;
}

bool relation_holds(const GroupSpec& H, const Relation& r, std::span<const Element> images) {
  return evaluate(H, r.lhs, images) == evaluate(H, r.rhs, images);
}

PresentationCheck verify_presentation(const GroupSpec& G) {
  const Presentation pr = presentation(G);
  const auto gens = G.generators();
  PresentationCheck check;
  for (const Relation& r : pr.relations) {
    if (!relation_holds(G, r, gens)) {
      check.ok = false;
      check.violated.push_back(r.name);
    }
  }
  check.closure_order = closure(G, gens).order;
  if (check.closure_order != G.expected_order()) {
    check.ok = false;
    check.violated.push_back("closure order " + std::to_string(check.closure_order) + " != " +
                             std::to_string(G.expected_order()));
  }
  return check;
}

void for_each_generating_assignment(const GroupSpec& G, const GroupSpec& H,
                                    const std::function<bool(std::span<const Element>)>& visit) {
  const Presentation pr = presentation(G);
  const auto gens = G.generators();
  const size_t ngen = gens.size();
  const auto h_orders = order_table(H);

  std::vector<std::vector<Element>> candidates(ngen);
  for (size_t g = 0; g < ngen; ++g) {
    const auto want = static_cast<uint32_t>(G.order(gens[g]));
    for (uint32_t i = 0; i < H.size(); ++i)
      if (h_orders[i] == want) candidates[g].push_back(H.element(i));
  }

  // position in search order at which each relation becomes checkable
  std::vector<int> rank_of(ngen);
  for (size_t pos = 0; pos < pr.search_order.size(); ++pos) rank_of[static_cast<size_t>(pr.search_order[pos])] = static_cast<int>(pos);
  std::vector<std::vector<const Relation*>> due(ngen);
  for (const Relation& r : pr.relations) {
    int last = 0;
    for (const Word* w : {&r.lhs, &r.rhs})
      for (const Term& t : *w)
        for (const auto& f : t.factors) last = std::max(last, rank_of[static_cast<size_t>(f.first)]);
    due[static_cast<size_t>(last)].push_back(&r);
  }

  std::vector<Element> images(ngen);
  bool stop = false;
  std::function<void(size_t)> assign = [&](size_t pos) {
    if (stop) return;
    if (pos == ngen) {
      if (closure(H, images, H.expected_order() / 2).order <= H.expected_order() / 2) return;
      if (!visit(images)) stop = true;
      return;
    }
    const auto g = static_cast<size_t>(pr.search_order[pos]);
    for (const Element& x : candidates[g]) {
      images[g] = x;
      bool ok = true;
      for (const Relation* r : due[pos]) {
        if (!relation_holds(H, *r, images)) {
          ok = false;
          break;
        }
      }
      if (ok) assign(pos + 1);
      if (stop) return;
    }
  };
  assign(0);
}

bool is_isomorphic(const GroupSpec& G, const GroupSpec& H, int64_t budget) {
  if (G.expected_order() > budget || H.expected_order() > budget)
    throw InputError("isomorphism test refused: group order exceeds budget of " + std::to_string(budget));
  if (G.expected_order() != H.expected_order()) return false;
  if (order_census(G) != order_census(H)) return false;
  bool found = false;
  for_each_generating_assignment(G, H, [&](std::span<const Element>) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace rmc
