#include "thhcheck/bcy/bcy.hpp"

#include <gtest/gtest.h>

#include <array>
#include <numeric>

#include "oracles.hpp"
#include "thhcheck/bcy/comma.hpp"
#include "thhcheck/bcy/verify.hpp"
#include "thhcheck/error.hpp"

using namespace thhcheck;
using namespace thhcheck::bcy;
using fincat::ImageVector;

namespace {

Injection inj(int target, std::initializer_list<int> images) { return Injection(target, ImageVector(images)); }
Permutation perm(std::initializer_list<int> images) { return Permutation(ImageVector(images)); }

oracle::Vec vec(std::span<const int> s) { return {s.begin(), s.end()}; }
Tuple tuple_of(const oracle::Vec& v) { return Tuple(v.begin(), v.end()); }
Injection from_vec(int target, const oracle::Vec& v) { return Injection(target, ImageVector(v.begin(), v.end())); }

MonotoneMap face(int i, int k) { return MonotoneMap::face(i, k); }

// A random morphism out of `source` whose I-part pads each pulled entry by 0 or 1.
BcyMor random_mor(std::mt19937_64& rng, const BcyObj& source, int max_k) {
  const auto maps = fincat::enumerate_monotone_maps(oracle::draw(rng, 0, max_k), source.degree());
  const MonotoneMap& alpha = maps[static_cast<std::size_t>(oracle::draw(rng, 0, static_cast<int>(maps.size()) - 1))];
  MorTuple parts;
  for (int a : act_on_object(alpha, source).tuple) {
    const int b = a + oracle::draw(rng, 0, 1);
    parts.push_back(from_vec(b, oracle::random_injection(rng, a, b)));
  }
  return BcyMor(source, alpha, parts);
}

BcyObj random_obj(std::mt19937_64& rng, int max_k, int max_n) {
  Tuple t;
  const int k = oracle::draw(rng, 0, max_k);
  for (int j = 0; j <= k; ++j) t.push_back(oracle::draw(rng, 0, max_n));
  return BcyObj(t);
}

}  // namespace

TEST(Tuples, FaceExamples) {
  EXPECT_EQ(face_on_tuple(0, {2, 3}), (BcyObj{5}));
  EXPECT_EQ(face_on_tuple(1, {2, 3}), (BcyObj{5}));
  EXPECT_EQ(face_on_tuple(1, {1, 0, 2}), (BcyObj{1, 2}));
  EXPECT_EQ(face_on_tuple(2, {1, 0, 2}), (BcyObj{3, 0}));
  EXPECT_THROW(face_on_tuple(0, {4}), IndexError);
  EXPECT_THROW(face_on_tuple(3, {1, 0, 2}), IndexError);
}

TEST(Tuples, DegeneracyExamples) {
  EXPECT_EQ(degeneracy_on_tuple(0, {3}), (BcyObj{3, 0}));
  EXPECT_EQ(degeneracy_on_tuple(1, {1, 2}), (BcyObj{1, 2, 0}));
  EXPECT_EQ(face_on_tuple(0, degeneracy_on_tuple(0, {3})), (BcyObj{3}));
  EXPECT_THROW(degeneracy_on_tuple(2, {1, 2}), IndexError);
}

TEST(Tuples, RejectsMalformedObjects) {
  EXPECT_THROW(BcyObj(Tuple{}), ArityError);
  EXPECT_THROW((BcyObj{1, -1}), ArityError);
}

TEST(Tuples, CyclicExamples) {
  EXPECT_EQ(cyclic_on_tuple({2, 3}), (BcyObj{3, 2}));
  const BcyObj obj{1, 2, 3};
  EXPECT_EQ(cyclic_on_tuple(cyclic_on_tuple(cyclic_on_tuple(obj))), obj);
  for (int k = 1; k <= 4; ++k) {
    for (const auto& t : all_tuples(k + 1, 2)) {
      const BcyObj o(t);
      ASSERT_EQ(face_on_tuple(0, cyclic_on_tuple(o)), face_on_tuple(k, o)) << o.to_string();
    }
  }
}

TEST(Morphisms, ActionExamples) {
  const Injection f0 = inj(2, {2});
  const Injection f1 = inj(1, {1});
  const MorTuple d0 = face_on_morphisms(0, std::vector<Injection>{f0, f1});
  ASSERT_EQ(d0.size(), 1u);
  EXPECT_EQ(d0[0], inj(3, {2, 3}));

  const MorTuple last = face_on_morphisms(1, std::vector<Injection>{f0, f1});
  EXPECT_EQ(last[0], inj(3, {1, 3}));

  const MorTuple s0 = degeneracy_on_morphisms(0, std::vector<Injection>{f0});
  ASSERT_EQ(s0.size(), 2u);
  EXPECT_EQ(s0[0], f0);
  EXPECT_EQ(s0[1], Injection::identity(0));

  EXPECT_EQ(cyclic_on_morphisms(std::vector<Injection>{f0, f1})[0], f1);
}

TEST(Morphisms, ActionMatchesGeneratorComposite) {
  oracle::for_seeds(200, [](std::mt19937_64& rng) {
    const int l = oracle::draw(rng, 0, 3);
    std::vector<Injection> maps;
    for (int j = 0; j <= l; ++j) {
      const int a = oracle::draw(rng, 0, 2);
      const int b = oracle::draw(rng, a, 3);
      maps.push_back(from_vec(b, oracle::random_injection(rng, a, b)));
    }
    const auto alphas = fincat::enumerate_monotone_maps(oracle::draw(rng, 0, 3), l);
    const MonotoneMap& alpha =
        alphas[static_cast<std::size_t>(oracle::draw(rng, 0, static_cast<int>(alphas.size()) - 1))];
    MorTuple expected(maps.begin(), maps.end());
    const SimplicialWord word = fincat::normal_form(alpha).word();
    for (const auto& g : word.letters()) {
      expected = g.is_face() ? face_on_morphisms(g.index, as_span(expected))
                             : degeneracy_on_morphisms(g.index, as_span(expected));
    }
    ASSERT_EQ(simplicial_action_on_morphisms(alpha, maps), expected) << alpha.to_string();
  });
}

TEST(BlockPlans, MatchWrapOracle) {
  for (int k = 0; k <= 4; ++k) {
    for (int l = 0; l <= 4; ++l) {
      for (const auto& alpha : fincat::enumerate_monotone_maps(k, l)) {
        const BlockPlan plan = block_plan(alpha);
        const auto expected = oracle::wrap_blocks(vec(alpha.values()), l);
        ASSERT_EQ(plan.input_degree(), l);
        ASSERT_EQ(plan.output_degree(), k);
        for (int j = 0; j <= k; ++j) {
          ASSERT_EQ(vec(plan.blocks_of(j)), expected[static_cast<std::size_t>(j)]) << alpha.to_string();
        }
        for (const auto& t : oracle::tuples(l + 1, 2)) {
          ASSERT_EQ(vec(as_span(act_on_object(alpha, BcyObj(tuple_of(t))).tuple)),
                    oracle::pull_tuple(vec(alpha.values()), l, t));
        }
      }
    }
  }
}

TEST(Twists, Examples) {
  EXPECT_EQ(twist(MonotoneMap::degeneracy(0, 1), std::vector<int>{2, 3}), Permutation::identity(5));
  EXPECT_EQ(twist(face(1, 1), std::vector<int>{1, 1}), perm({2, 1}));
  const MonotoneMap last_last = compose(face(2, 2), face(1, 1));
  EXPECT_EQ(twist(last_last, std::vector<int>{1, 1, 1}), perm({3, 1, 2}));
  EXPECT_EQ(twist(last_last, std::vector<int>{1, 1, 1}),
            compose(fincat::block_permutation(2, 1), fincat::block_permutation(2, 1)));
  EXPECT_EQ(twist(face(0, 1), std::vector<int>{1, 1}), Permutation::identity(2));
  EXPECT_EQ(cyclic_twist(std::vector<int>{2, 3}).as_injection(), from_vec(5, oracle::swap_blocks(2, 3)));
  EXPECT_THROW(twist(face(1, 1), std::vector<int>{1, 1, 1}), ArityError);
}

TEST(Twists, EqualMapsGiveEqualTwists) {
  const SimplicialWord w1(0, {Generator::face(2, 2), Generator::face(1, 1)});
  const SimplicialWord w2(0, {Generator::face(1, 2), Generator::face(1, 1)});
  const std::vector<int> t{1, 1, 1};
  EXPECT_EQ(word_twist(w1, t), word_twist(w2, t));
}

TEST(Twists, MatchClosedForm) {
  for (int k = 0; k <= 4; ++k) {
    for (int l = 0; l <= 4; ++l) {
      for (const auto& alpha : fincat::enumerate_monotone_maps(k, l)) {
        for (const auto& t : oracle::tuples(l + 1, 2)) {
          const Permutation got = twist(alpha, t);
          ASSERT_EQ(got.as_injection(), from_vec(got.degree(), oracle::closed_form_twist(vec(alpha.values()), t)))
              << alpha.to_string();
        }
      }
    }
  }
}

TEST(Twists, EveryFactorizationMatchesClosedForm) {
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l <= 2; ++l) {
      for (const auto& alpha : fincat::enumerate_monotone_maps(k, l)) {
        for (const auto& word : fincat::all_factorizations(alpha, 2)) {
          for (const auto& t : oracle::tuples(l + 1, 2)) {
            const Permutation got = word_twist(word, t);
            ASSERT_EQ(got.as_injection(), from_vec(got.degree(), oracle::closed_form_twist(vec(alpha.values()), t)))
                << word.to_string();
          }
        }
      }
    }
  }
}

TEST(Twists, UntwistedModeIsTrivial) {
  for (const auto& alpha : fincat::enumerate_monotone_maps(1, 3)) {
    for (const auto& t : oracle::tuples(4, 1)) {
      const int n = std::accumulate(t.begin(), t.end(), 0);
      ASSERT_EQ(twist(alpha, t, TwistMode::Untwisted), Permutation::identity(n));
    }
  }
}

TEST(MuTw, ObjectExamples) {
  EXPECT_EQ(mu_tw_object({1, 0, 2}), (MuTwObject{2, 3}));
  EXPECT_EQ(mu_tw_object({0}), (MuTwObject{0, 0}));
  EXPECT_EQ(mu_tw_object({2, 3}), (MuTwObject{1, 5}));
}

TEST(MuTw, ObjectTotalIsPreservedByGenerators) {
  for (int k = 0; k <= 4; ++k) {
    for (const auto& t : all_tuples(k + 1, 2)) {
      const BcyObj obj(t);
      const int total = mu_tw_object(obj).total;
      for (int i = 0; i <= k; ++i) {
        ASSERT_EQ(mu_tw_object(degeneracy_on_tuple(i, obj)).total, total);
        if (k >= 1) ASSERT_EQ(mu_tw_object(face_on_tuple(i, obj)).total, total);
      }
      ASSERT_EQ(mu_tw_object(cyclic_on_tuple(obj)).total, total);
    }
  }
}

TEST(MuTw, MorphismExamples) {
  const BcyObj obj{1, 1};
  const MuTwMorphism id = mu_tw_morphism(BcyMor::identity(obj));
  EXPECT_EQ(id.delta, MonotoneMap::identity(1));
  EXPECT_EQ(id.arrow, Injection::identity(2));

  const MuTwMorphism last = mu_tw_morphism(BcyMor::pure(obj, face(1, 1)));
  EXPECT_EQ(last.delta, face(1, 1));
  EXPECT_EQ(last.arrow, inj(2, {2, 1}));

  const MuTwMorphism first = mu_tw_morphism(BcyMor::pure(obj, face(0, 1)));
  EXPECT_EQ(first.arrow, Injection::identity(2));
}

TEST(MuTw, LastFaceCompositeMatchesComposedTwist) {
  const BcyObj obj{1, 1, 1};
  const BcyMor m1 = BcyMor::pure(obj, face(2, 2));
  const BcyMor m2 = BcyMor::pure(m1.target(), face(1, 1));
  const MuTwMorphism whole = mu_tw_morphism(groth_compose(m2, m1));
  EXPECT_EQ(whole.arrow, inj(3, {3, 1, 2}));
  EXPECT_EQ(whole, compose(mu_tw_morphism(m2), mu_tw_morphism(m1)));
}

TEST(MuTw, FunctorialOnRandomPairs) {
  oracle::for_seeds(500, [](std::mt19937_64& rng) {
    const BcyObj obj = random_obj(rng, 4, 2);
    const BcyMor m1 = random_mor(rng, obj, 4);
    const BcyMor m2 = random_mor(rng, m1.target(), 4);
    ASSERT_EQ(mu_tw_morphism(groth_compose(m2, m1)), compose(mu_tw_morphism(m2), mu_tw_morphism(m1)));
  });
}

TEST(MuTw, UntwistedIsNotFunctorial) {
  // An i-part that moves block 1, then the last face: the untwisted
  // composite keeps the blocks in their rotated order.
  const BcyMor m1(BcyObj{1, 1}, MonotoneMap::identity(1), MorTuple{Injection::identity(1), inj(2, {2})});
  const BcyMor m2 = BcyMor::pure(m1.target(), face(1, 1));
  const auto untwisted = TwistMode::Untwisted;
  EXPECT_EQ(mu_tw_morphism(groth_compose(m2, m1), untwisted).arrow, inj(3, {2, 3}));
  EXPECT_EQ(compose(mu_tw_morphism(m2, untwisted), mu_tw_morphism(m1, untwisted)).arrow, inj(3, {1, 3}));
  EXPECT_EQ(mu_tw_morphism(groth_compose(m2, m1)).arrow, inj(3, {3, 2}));
  EXPECT_EQ(compose(mu_tw_morphism(m2), mu_tw_morphism(m1)).arrow, inj(3, {3, 2}));
  EXPECT_FALSE(verify_mu_tw_functor({.max_k = 2, .max_n = 1, .mode = TwistMode::Untwisted}).passed());
}

TEST(Grothendieck, IdentityAndPureComposites) {
  oracle::for_seeds(200, [](std::mt19937_64& rng) {
    const BcyObj obj = random_obj(rng, 3, 2);
    const BcyMor m = random_mor(rng, obj, 3);
    ASSERT_EQ(groth_compose(m, BcyMor::identity(obj)), m);
    ASSERT_EQ(groth_compose(BcyMor::identity(m.target()), m), m);
  });
  const BcyObj obj{2, 0, 1};
  const BcyMor a = BcyMor::pure(obj, face(0, 2));
  const BcyMor b = BcyMor::pure(a.target(), MonotoneMap::degeneracy(0, 1));
  EXPECT_EQ(groth_compose(b, a), BcyMor::pure(obj, compose(face(0, 2), MonotoneMap::degeneracy(0, 1))));
}

TEST(Grothendieck, RejectsMismatches) {
  const BcyMor a = BcyMor::pure({1, 1}, face(0, 1));
  EXPECT_THROW(groth_compose(a, a), CompositionError);
  EXPECT_THROW(BcyMor(BcyObj{1, 1}, face(0, 2), MorTuple{}), ArityError);
  EXPECT_THROW(BcyMor(BcyObj{1, 1}, face(0, 1), MorTuple{Injection::identity(1)}), ArityError);
}

TEST(Grothendieck, CategoryLaws) { EXPECT_TRUE(verify_groth_category_laws(3, 2, 2000, 0).passed()); }

TEST(Sweeps, SimplicialAndCyclicIdentities) {
  EXPECT_TRUE(verify_simplicial_identities(3, 1).passed());
  EXPECT_TRUE(verify_cyclic_identities(3, 1).passed());
}

TEST(Sweeps, WellDefinedAgreesWithExplicitFactorizations) {
  const Report graph = verify_twist_well_defined(3, 2, 2);
  const Report explicit_words = verify_twist_factorizations(2, 2, 2);
  EXPECT_TRUE(graph.passed());
  EXPECT_TRUE(explicit_words.passed());
  EXPECT_GT(graph.instances_checked, 0u);
  EXPECT_GT(explicit_words.instances_checked, 0u);
}

TEST(Sweeps, TwistsAreBlockPermutations) { EXPECT_TRUE(verify_twist_block_structure(3, 2).passed()); }

TEST(Sweeps, FunctorAtSmallBounds) {
  const Report r = verify_mu_tw_functor({.max_k = 3, .max_n = 2});
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.instances_checked, 0u);
}

TEST(Sweeps, UntwistedFunctorWitness) {
  const Report r = verify_mu_tw_functor({.max_k = 2, .max_n = 1, .mode = TwistMode::Untwisted});
  ASSERT_FALSE(r.passed());
  ASSERT_FALSE(r.violations.empty());
  EXPECT_TRUE(r.violations.front().contains("m1"));
  EXPECT_NE(r.violations.front()["mu_of_composite"], r.violations.front()["composite_of_mu"]);
}

TEST(Sweeps, Naturality) {
  EXPECT_TRUE(verify_twist_naturality(3, 2, 2).passed());
  EXPECT_FALSE(verify_twist_naturality(2, 1, 1, TwistMode::Untwisted).passed());
}

TEST(Sweeps, BoundOverflow) {
  try {
    verify_mu_tw_functor({.max_k = 6, .max_n = 6});
    FAIL() << "expected BoundError";
  } catch (const BoundError& e) {
    EXPECT_LT(e.suggested_max(), 6);
  }
  EXPECT_THROW(verify_simplicial_identities(-1, 2), std::invalid_argument);
}

TEST(Sweeps, FunctorIsDeterministic) {
  const FunctorSweep sweep{.max_k = 2, .max_n = 2, .ipart_cap = 2, .seed = 7};
  const Report a = verify_mu_tw_functor(sweep);
  const Report b = verify_mu_tw_functor(sweep);
  EXPECT_EQ(a.instances_checked, b.instances_checked);
  EXPECT_EQ(a.details, b.details);
}

TEST(Comma, TwoComponents) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(comma_components_mu2(n), 2) << n;
  EXPECT_THROW(comma_components_mu2(0), std::invalid_argument);
}

TEST(Comma, DiscriminatorIsInvariant) {
  const Report r = verify_comma_components(3);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.value, 2);
  EXPECT_GT(r.instances_checked, 0u);
}

TEST(Comma, MatchesReachabilityOracle) {
  for (int n = 1; n <= 2; ++n) {
    std::vector<std::array<int, 3>> objects;
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) {
        for (int p = 1; p <= a + b; ++p) objects.push_back({a, b, p});
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      for (std::size_t j = 0; j < objects.size(); ++j) {
        const auto [a, b, p] = objects[i];
        const auto [c, d, q] = objects[j];
        for (const auto& f1 : oracle::injections(a, c)) {
          for (const auto& f2 : oracle::injections(b, d)) {
            const int image =
                p <= a ? f1[static_cast<std::size_t>(p - 1)] : c + f2[static_cast<std::size_t>(p - a - 1)];
            if (image == q) edges.emplace_back(i, j);
          }
        }
      }
    }
    EXPECT_EQ(static_cast<int>(oracle::count_classes(oracle::closure_min(objects.size(), edges))),
              comma_components_mu2(n));
  }
}
