#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rmc/group.hpp"
#include "rmc/presentation.hpp"

using namespace rmc;

namespace {

std::vector<GroupSpec> all_groups() {
  std::vector<GroupSpec> out;
  for (int64_t p : {11, 19}) {
    const PrimeParams P = derive_params(p);
    for (Family f : admissible_families(P)) out.emplace_back(P, f);
  }
  return out;
}

Element random_element(const GroupSpec& G, std::mt19937_64& rng) {
  return G.element(static_cast<uint32_t>(rng() % G.size()));
}

}  // namespace

TEST(Families, TagsRoundTrip) {
  for (Family f : kAllFamilies) EXPECT_EQ(parse_family(family_tag(f)), f);
  EXPECT_THROW(parse_family("G2"), InputError);
  EXPECT_EQ(admissible_families(derive_params(11)).size(), 8u);
  EXPECT_EQ(admissible_families(derive_params(19)),
            (std::vector<Family>{Family::G0, Family::HatG0}));
  EXPECT_TRUE(admissible_families(derive_params(13)).empty());
}

TEST(BuildGroup, Examples) {
  const GroupSpec G0(derive_params(19), Family::G0);
  EXPECT_EQ(G0.c_action(), (PMap{2, 19, {0, 4, 14, 4}}));
  EXPECT_EQ(G0.expected_order(), 1805);

  const GroupSpec H(derive_params(11), Family::HatG_s_s2);
  EXPECT_EQ(H.c_action(), (PMap{2, 11, {3, 0, 0, 9}}));
  EXPECT_EQ(H.d_twist(), (PVec{mod(1 - 3, 11), mod(1 - 9, 11)}));
  EXPECT_EQ(H.expected_order(), 1210);

  EXPECT_THROW(GroupSpec(derive_params(13), Family::G1), InputError);
  EXPECT_THROW(GroupSpec(derive_params(19), Family::G1), InputError);
  EXPECT_THROW(GroupSpec(derive_params(11), Family::HatG0), InputError);
}

TEST(Mul, Examples) {
  const GroupSpec H(derive_params(11), Family::HatG_s_s2);
  const Element x = H.element(777);
  EXPECT_EQ(H.mul(H.identity(), x), x);
  EXPECT_EQ(H.conj(H.c(), H.a()), H.pow(H.a(), 3));

  const GroupSpec H0(derive_params(19), Family::HatG0);
  EXPECT_EQ(H0.mul(H0.mul(H0.d(), H0.c()), H0.d()), (Element{{16, 2}, 1, 0}));
}

TEST(Mul, GroupLaws) {
  std::mt19937_64 rng(7);
  for (const GroupSpec& G : all_groups()) {
    for (int i = 0; i < 10000; ++i) {
      const Element x = random_element(G, rng), y = random_element(G, rng), z = random_element(G, rng);
      ASSERT_EQ(G.mul(G.mul(x, y), z), G.mul(x, G.mul(y, z))) << family_tag(G.family());
    }
    for (uint32_t i = 0; i < G.size(); ++i) {
      const Element x = G.element(i);
      ASSERT_EQ(G.mul(x, G.identity()), x);
      ASSERT_EQ(G.mul(G.identity(), x), x);
      ASSERT_EQ(G.mul(x, G.inv(x)), G.identity());
      ASSERT_EQ(G.mul(G.inv(x), x), G.identity());
    }
  }
}

TEST(Mul, PowMatchesRepeatedProduct) {
  const GroupSpec G(derive_params(11), Family::HatG1);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Element x = random_element(G, rng);
    Element acc = G.identity();
    for (int n = 0; n < 12; ++n) {
      EXPECT_EQ(G.pow(x, n), acc);
      acc = G.mul(acc, x);
    }
    EXPECT_EQ(G.pow(x, -3), G.inv(G.pow(x, 3)));
  }
}

TEST(Index, RoundTripAndLexOrder) {
  for (const GroupSpec& G : all_groups()) {
    for (uint32_t i = 0; i < G.size(); ++i) {
      const Element x = G.element(i);
      ASSERT_TRUE(G.valid(x));
      ASSERT_EQ(G.index(x), i);
      if (i > 0) ASSERT_LT(G.element(i - 1), x);
    }
  }
}

TEST(Order, MatchesNaiveAndDividesGroupOrder) {
  for (const GroupSpec& G : all_groups()) {
    if (G.params().p != 11) continue;
    for (uint32_t i = 0; i < G.size(); ++i) {
      const Element x = G.element(i);
      const int64_t o = G.order(x);
      ASSERT_EQ(o, oracle::naive_order(G, x));
      ASSERT_EQ(G.expected_order() % o, 0);
    }
  }
}

TEST(Closure, Examples) {
  const PrimeParams P11 = derive_params(11);
  const GroupSpec G(P11, Family::G_s_s2);
  const std::vector<Element> ab{G.a(), G.b()};
  EXPECT_EQ(closure(G, ab).order, 121);

  const GroupSpec Gss(P11, Family::G_s_s);
  const std::vector<Element> abc{Gss.mul(Gss.a(), Gss.b()), Gss.c()};
  EXPECT_EQ(closure(Gss, abc).order, 55);
  EXPECT_EQ(subgroup_order(Gss, abc), 55);

  const GroupSpec H0(derive_params(19), Family::HatG0);
  EXPECT_EQ(closure(H0, H0.generators()).order, 3610);
}

TEST(Closure, GeneratorsGiveWholeGroup) {
  for (const GroupSpec& G : all_groups()) {
    EXPECT_EQ(closure(G, G.generators()).order, G.expected_order());
    EXPECT_TRUE(generates(G, G.generators()));
  }
}

TEST(Closure, EarlyStop) {
  const GroupSpec G(derive_params(11), Family::G1);
  const auto s = closure(G, G.generators(), 100);
  EXPECT_EQ(s.order, 101);
}

TEST(SubgroupOrder, AgreesWithBfsOracle) {
  std::mt19937_64 rng(11);
  for (const GroupSpec& G : all_groups()) {
    // mix of uniform elements and elements from the p-part / c-coset so that
    // proper subgroups of every shape occur
    auto pick = [&]() {
      Element x = random_element(G, rng);
      switch (rng() % 4) {
        case 0: x.c_exp = 0; x.d_exp = 0; break;
        case 1: x.d_exp = 0; break;
        case 2: if (G.rank() == 2) x.pvec = {x.pvec[0], mod(x.pvec[0] * 3, G.modulus())}; break;
        default: break;
      }
      if (G.rank() == 1 && rng() % 3 == 0) x.pvec[0] = mod(x.pvec[0] * G.params().p, G.modulus());
      return x;
    };
    const int trials = G.params().p == 11 ? 400 : 120;
    for (int i = 0; i < trials; ++i) {
      std::vector<Element> gens;
      const size_t n = 1 + rng() % 3;
      for (size_t j = 0; j < n; ++j) gens.push_back(pick());
      ASSERT_EQ(subgroup_order(G, gens), oracle::bfs_order(G, gens)) << family_tag(G.family());
    }
  }
}

TEST(Structure, CActionHasOrderFive) {
  for (const GroupSpec& G : all_groups()) {
    EXPECT_EQ(G.c_action().pow(5), PMap::identity(G.rank(), G.modulus()));
    EXPECT_NE(G.c_action(), PMap::identity(G.rank(), G.modulus()));
  }
  const GroupSpec G0(derive_params(19), Family::G0);
  const PMap& C = G0.c_action();
  EXPECT_EQ(mod(C.at(0, 0) + C.at(1, 1), 19), 4);  // trace t1
  EXPECT_EQ(C.det(), 1);
}

TEST(Structure, DInvertsThePPart) {
  for (const GroupSpec& G : all_groups()) {
    if (!G.d_present()) continue;
    for (int64_t x = 0; x < G.modulus(); ++x)
      for (int64_t y = 0; y < (G.rank() == 2 ? G.modulus() : 1); ++y) {
        const Element u = G.from_pvec({x, y});
        ASSERT_EQ(G.conj(G.d(), u), G.inv(u));
      }
  }
}

TEST(Center, MatchesBruteForce) {
  for (const GroupSpec& G : all_groups()) {
    if (G.params().p != 11 && !G.d_present()) continue;
    std::vector<Element> brute;
    for (uint32_t i = 0; i < G.size(); ++i) {
      const Element x = G.element(i);
      bool central = true;
      for (uint32_t j = 0; j < G.size() && central; ++j) {
        const Element y = G.element(j);
        central = G.mul(x, y) == G.mul(y, x);
      }
      if (central) brute.push_back(x);
    }
    EXPECT_EQ(center(G), brute) << family_tag(G.family());
  }
  const GroupSpec H(derive_params(11), Family::HatG_s_s2);
  EXPECT_EQ(center(H), std::vector<Element>{H.identity()});
}

TEST(Center, G1HasTrivialCenter) {
  // a^l is central iff k l = l (mod p^2); k - 1 is a unit, so only l = 0
  const GroupSpec G(derive_params(11), Family::G1);
  EXPECT_EQ(center(G), std::vector<Element>{G.identity()});
}

TEST(ElementsOfOrder, Examples) {
  const PrimeParams P = derive_params(11);
  EXPECT_EQ(elements_of_order(GroupSpec(P, Family::G_s_s2), 5).size(), 484u);
  EXPECT_EQ(elements_of_order(GroupSpec(P, Family::HatG_s_s4), 2).size(), 121u);

  const GroupSpec G1s(P, Family::G_1_s);
  const auto fives = elements_of_order(G1s, 5);
  uint64_t naive = 0;
  for (uint32_t i = 0; i < G1s.size(); ++i) naive += oracle::naive_order(G1s, G1s.element(i)) == 5;
  EXPECT_EQ(fives.size(), naive);
  EXPECT_EQ(fives.size(), 44u);
  for (const Element& x : fives) EXPECT_EQ(x.pvec[0], 0);
}

TEST(Presentation, HoldsForEveryFamily) {
  for (const GroupSpec& G : all_groups()) {
    const PresentationCheck c = verify_presentation(G);
    EXPECT_TRUE(c.ok) << family_tag(G.family());
    EXPECT_TRUE(c.violated.empty());
    EXPECT_EQ(c.closure_order, G.expected_order());
  }
}

TEST(Presentation, CorruptedTwistIsCaught) {
  const GroupSpec H0(derive_params(19), Family::HatG0);
  const PresentationCheck c = verify_presentation(H0.with_d_twist({1, 2}));
  EXPECT_FALSE(c.ok);
  ASSERT_EQ(c.violated.size(), 1u);
  EXPECT_EQ(c.violated[0], "d c d = a^(t1^2) b^2 c");

  const GroupSpec H(derive_params(11), Family::HatG_s_s2);
  EXPECT_FALSE(verify_presentation(H.with_d_twist({0, 0})).ok);
}

TEST(Isomorphism, Examples) {
  const PrimeParams P = derive_params(11);
  const GroupSpec s2(P, Family::G_s_s2), s4(P, Family::G_s_s4), g1s(P, Family::G_1_s), gss(P, Family::G_s_s);
  EXPECT_TRUE(is_isomorphic(s2, s2));
  EXPECT_FALSE(is_isomorphic(s2, s4));
  EXPECT_NE(order_census(g1s), order_census(gss));
  EXPECT_FALSE(is_isomorphic(g1s, gss));
  EXPECT_FALSE(is_isomorphic(s2, GroupSpec(P, Family::G1)));
  EXPECT_THROW(is_isomorphic(GroupSpec(derive_params(31), Family::HatG1), GroupSpec(derive_params(31), Family::HatG1)),
               InputError);
}

TEST(Render, ConventionalLetters) {
  const GroupSpec G(derive_params(11), Family::HatG1);
  EXPECT_EQ(render(G, Element{{3, 0}, 2, 1}), "a^3 b^2 c");
  EXPECT_EQ(render(G, G.identity()), "1");
  const GroupSpec H(derive_params(11), Family::HatG_s_s2);
  EXPECT_EQ(render(H, Element{{1, 1}, 1, 1}), "a b c d");
  for (uint32_t i = 0; i < H.size(); i += 37) {
    const Element x = H.element(i);
    const auto t = exponent_tuple(H, x);
    EXPECT_EQ(from_exponent_tuple(H, t), x);
  }
  const std::vector<int64_t> bad{11, 0, 0, 0};
  EXPECT_THROW(from_exponent_tuple(H, bad), InputError);
}
