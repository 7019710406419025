#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "thhcheck/error.hpp"
#include "thhcheck/fincat/injection.hpp"
#include "thhcheck/fincat/simplex.hpp"

using namespace thhcheck;
using namespace thhcheck::fincat;

namespace {

Injection inj(int target, std::initializer_list<int> images) { return Injection(target, ImageVector(images)); }
Permutation perm(std::initializer_list<int> images) { return Permutation(ImageVector(images)); }

oracle::Vec vec(std::span<const int> s) { return {s.begin(), s.end()}; }

Injection from_vec(int target, const oracle::Vec& v) { return Injection(target, ImageVector(v.begin(), v.end())); }

}  // namespace

TEST(Injection, RejectsNonInjectiveAndOutOfRange) {
  EXPECT_THROW(inj(3, {1, 1}), ArityError);
  EXPECT_THROW(inj(2, {3}), ArityError);
  EXPECT_THROW(inj(2, {0}), ArityError);
  EXPECT_THROW(Permutation(inj(3, {1, 2})), ArityError);
}

TEST(Injection, ComposeExamples) {
  const Injection f = inj(3, {2});
  EXPECT_EQ(compose(Injection::identity(3), f), f);
  EXPECT_EQ(compose(inj(3, {3, 1}), inj(2, {2})), inj(3, {1}));
  EXPECT_EQ(compose(inj(4, {4, 1, 2}), Injection::empty(3)), Injection::empty(4));
  EXPECT_THROW(compose(inj(3, {3, 1}), inj(3, {2})), CompositionError);
}

TEST(Injection, ConcatExamples) {
  EXPECT_EQ(concat(Injection::identity(2), Injection::identity(3)), Injection::identity(5));
  EXPECT_EQ(concat(Injection::identity(1), inj(2, {2})), inj(3, {1, 3}));
  const Injection f = inj(4, {3, 1});
  EXPECT_EQ(concat(f, Injection()), f);
  EXPECT_EQ(concat(Injection(), f), f);
}

TEST(Injection, BlockPermutationExamples) {
  EXPECT_TRUE(block_permutation(2, 0).is_identity());
  EXPECT_TRUE(block_permutation(0, 2).is_identity());
  EXPECT_EQ(block_permutation(1, 1), perm({2, 1}));
  EXPECT_EQ(vec(block_permutation(2, 1).images()), (oracle::Vec{2, 3, 1}));
}

TEST(Injection, EnumerationMatchesBruteForce) {
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= n + 1; ++m) {
      const auto expected = oracle::injections(m, n);
      const auto got = enumerate_injections(m, n);
      ASSERT_EQ(got.size(), expected.size()) << m << "->" << n;
      ASSERT_EQ(count_injections(m, n), expected.size());
      for (std::size_t r = 0; r < got.size(); ++r) {
        ASSERT_EQ(vec(got[r].images()), expected[r]);
        ASSERT_EQ(injection_rank(got[r]), r);
        ASSERT_EQ(injection_unrank(m, n, r), got[r]);
      }
    }
  }
  EXPECT_EQ(enumerate_injections(0, 5).size(), 1u);
  EXPECT_EQ(enumerate_injections(2, 3).size(), 6u);
  EXPECT_TRUE(enumerate_injections(3, 2).empty());
}

TEST(Injection, CountsAreFallingFactorials) {
  for (int n = 0; n <= 6; ++n) {
    std::uint64_t falling = 1;
    for (int m = 0; m <= n; ++m) {
      EXPECT_EQ(count_injections(m, n), falling);
      falling *= static_cast<std::uint64_t>(n - m);
    }
    EXPECT_EQ(count_injections(n + 1, n), 0u);
  }
}

TEST(InjectionProperty, AssociativityAndUnits) {
  oracle::for_seeds(400, [](std::mt19937_64& rng) {
    const int a = oracle::draw(rng, 0, 6);
    const int b = oracle::draw(rng, a, 6);
    const int c = oracle::draw(rng, b, 6);
    const int d = oracle::draw(rng, c, 6);
    const Injection f = from_vec(b, oracle::random_injection(rng, a, b));
    const Injection g = from_vec(c, oracle::random_injection(rng, b, c));
    const Injection h = from_vec(d, oracle::random_injection(rng, c, d));
    ASSERT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
    ASSERT_EQ(compose(g, Injection::identity(b)), g);
    ASSERT_EQ(compose(Injection::identity(c), g), g);
    ASSERT_EQ(vec(compose(g, f).images()), oracle::compose(vec(g.images()), vec(f.images())));
  });
}

TEST(InjectionProperty, InterchangeAndSymmetryNaturality) {
  oracle::for_seeds(400, [](std::mt19937_64& rng) {
    const int m1 = oracle::draw(rng, 0, 4);
    const int n1 = oracle::draw(rng, m1, 4);
    const int p1 = oracle::draw(rng, n1, 4);
    const int m2 = oracle::draw(rng, 0, 4);
    const int n2 = oracle::draw(rng, m2, 4);
    const int p2 = oracle::draw(rng, n2, 4);
    const Injection f1 = from_vec(n1, oracle::random_injection(rng, m1, n1));
    const Injection g1 = from_vec(p1, oracle::random_injection(rng, n1, p1));
    const Injection f2 = from_vec(n2, oracle::random_injection(rng, m2, n2));
    const Injection g2 = from_vec(p2, oracle::random_injection(rng, n2, p2));
    ASSERT_EQ(concat(compose(g1, f1), compose(g2, f2)), compose(concat(g1, g2), concat(f1, f2)));
    ASSERT_EQ(compose(block_permutation(n1, n2).as_injection(), concat(f1, f2)),
              compose(concat(f2, f1), block_permutation(m1, m2).as_injection()));
  });
}

TEST(InjectionProperty, ConcatIsStrictlyAssociative) {
  oracle::for_seeds(200, [](std::mt19937_64& rng) {
    std::vector<Injection> fs;
    for (int i = 0; i < 3; ++i) {
      const int m = oracle::draw(rng, 0, 3);
      const int n = oracle::draw(rng, m, 4);
      fs.push_back(from_vec(n, oracle::random_injection(rng, m, n)));
    }
    ASSERT_EQ(concat(concat(fs[0], fs[1]), fs[2]), concat(fs[0], concat(fs[1], fs[2])));
    ASSERT_EQ(concat_all(fs), concat(concat(fs[0], fs[1]), fs[2]));
  });
}

TEST(Permutation, SymmetryIsInvolutive) {
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      EXPECT_TRUE(compose(block_permutation(n, m), block_permutation(m, n)).is_identity());
      EXPECT_EQ(vec(block_permutation(m, n).images()), oracle::swap_blocks(m, n));
      EXPECT_EQ(block_permutation(m, n).inverse(), block_permutation(n, m));
    }
  }
}

TEST(Permutation, HexagonForBlockPermutations) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) {
        // a | b | c -> b | c | a, moved in one step or one block at a time.
        const Permutation direct = block_permutation(a, b + c);
        const Permutation stepwise = compose(concat(Permutation::identity(b), block_permutation(a, c)),
                                             concat(block_permutation(a, b), Permutation::identity(c)));
        EXPECT_EQ(direct, stepwise);
      }
    }
  }
}

TEST(Permutation, CanonicalExtension) {
  const Injection f = inj(4, {3, 1});
  const Permutation chi = canonical_extension(f);
  EXPECT_EQ(vec(chi.images()), (oracle::Vec{3, 1, 2, 4}));
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (const auto& g : enumerate_injections(m, n)) {
        const Permutation ext = canonical_extension(g);
        EXPECT_EQ(compose(ext.as_injection(), Injection::inclusion(m, n)), g);
      }
    }
  }
}

TEST(Monotone, Validation) {
  EXPECT_THROW(MonotoneMap(2, ImageVector{1, 0}), ArityError);
  EXPECT_THROW(MonotoneMap(1, ImageVector{0, 2}), ArityError);
  EXPECT_THROW(MonotoneMap::face(3, 2), IndexError);
  EXPECT_THROW(MonotoneMap::face(0, 0), IndexError);
  EXPECT_THROW(MonotoneMap::degeneracy(2, 1), IndexError);
}

TEST(Monotone, EnumerationMatchesBruteForce) {
  for (int k = 0; k <= 4; ++k) {
    for (int l = 0; l <= 4; ++l) {
      const auto expected = oracle::monotone_maps(k, l);
      const auto got = enumerate_monotone_maps(k, l);
      ASSERT_EQ(got.size(), expected.size());
      for (std::size_t r = 0; r < got.size(); ++r) ASSERT_EQ(vec(got[r].values()), expected[r]);
    }
  }
}

TEST(Monotone, GeneratorsMatchPointwiseDefinitions) {
  for (int k = 1; k <= 5; ++k) {
    for (int i = 0; i <= k; ++i) EXPECT_EQ(vec(MonotoneMap::face(i, k).values()), oracle::face_values(i, k));
  }
  for (int k = 0; k <= 5; ++k) {
    for (int i = 0; i <= k; ++i) {
      EXPECT_EQ(vec(MonotoneMap::degeneracy(i, k).values()), oracle::degeneracy_values(i, k));
    }
  }
}

TEST(Monotone, CosimplicialIdentities) {
  auto d = [](int i, int k) { return MonotoneMap::face(i, k); };
  auto s = [](int i, int k) { return MonotoneMap::degeneracy(i, k); };
  int checked = 0;
  for (int k = 1; k <= 5; ++k) {
    // delta^j delta^i = delta^i delta^(j-1), i < j, maps [k-1] -> [k+1].
    for (int j = 1; j <= k + 1; ++j) {
      for (int i = 0; i < j; ++i, ++checked)
        EXPECT_EQ(compose(d(j, k + 1), d(i, k)), compose(d(i, k + 1), d(j - 1, k)));
    }
    // sigma^j sigma^i = sigma^i sigma^(j+1), i <= j, maps [k+2] -> [k].
    for (int j = 0; j <= k; ++j) {
      for (int i = 0; i <= j; ++i, ++checked)
        EXPECT_EQ(compose(s(j, k), s(i, k + 1)), compose(s(i, k), s(j + 1, k + 1)));
    }
    // Mixed relations, maps [k] -> [k].
    for (int j = 0; j <= k; ++j) {
      for (int i = 0; i <= k + 1; ++i, ++checked) {
        const MonotoneMap lhs = compose(s(j, k), d(i, k + 1));
        if (i < j) {
          EXPECT_EQ(lhs, compose(d(i, k), s(j - 1, k - 1)));
        } else if (i == j || i == j + 1) {
          EXPECT_TRUE(lhs.is_identity());
        } else {
          EXPECT_EQ(lhs, compose(d(i - 1, k), s(j, k - 1)));
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(NormalForm, Examples) {
  const NormalForm id = normal_form(MonotoneMap::identity(3));
  EXPECT_TRUE(id.faces.empty());
  EXPECT_TRUE(id.degeneracies.empty());
  const NormalForm a = normal_form(MonotoneMap(2, ImageVector{0, 2}));
  EXPECT_EQ(a.faces, std::vector<int>{1});
  EXPECT_TRUE(a.degeneracies.empty());
  const NormalForm b = normal_form(MonotoneMap(0, ImageVector{0, 0}));
  EXPECT_TRUE(b.faces.empty());
  EXPECT_EQ(b.degeneracies, std::vector<int>{0});
}

TEST(NormalForm, RoundTripAndUniqueness) {
  for (int k = 0; k <= 5; ++k) {
    for (int l = 0; l <= 5; ++l) {
      const auto maps = enumerate_monotone_maps(k, l);
      std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
      for (const auto& alpha : maps) {
        const NormalForm nf = normal_form(alpha);
        ASSERT_EQ(nf.evaluate(), alpha);
        ASSERT_TRUE(std::is_sorted(nf.faces.rbegin(), nf.faces.rend()));
        ASSERT_TRUE(std::adjacent_find(nf.faces.begin(), nf.faces.end()) == nf.faces.end());
        ASSERT_TRUE(std::is_sorted(nf.degeneracies.begin(), nf.degeneracies.end()));
        ASSERT_TRUE(seen.insert({nf.faces, nf.degeneracies}).second);
      }
    }
  }
}

TEST(Words, ChainingIsValidated) {
  EXPECT_THROW(SimplicialWord(0, {Generator::face(1, 2)}), CompositionError);
  EXPECT_NO_THROW(SimplicialWord(0, {Generator::face(2, 2), Generator::face(1, 1)}));
}

TEST(Factorizations, Examples) {
  const auto id0 = all_factorizations(MonotoneMap::identity(0), 0);
  ASSERT_EQ(id0.size(), 1u);
  EXPECT_EQ(id0[0].length(), 0u);

  const auto id_extra = all_factorizations(MonotoneMap::identity(0), 2);
  const SimplicialWord sd(0, {Generator::degeneracy(0, 0), Generator::face(0, 1)});
  EXPECT_NE(std::find(id_extra.begin(), id_extra.end(), sd), id_extra.end());

  const SimplicialWord w1(0, {Generator::face(2, 2), Generator::face(1, 1)});
  const SimplicialWord w2(0, {Generator::face(1, 2), Generator::face(1, 1)});
  EXPECT_EQ(w1.evaluate(), w2.evaluate());
  const auto words = all_factorizations(w1.evaluate(), 0);
  EXPECT_NE(std::find(words.begin(), words.end(), w1), words.end());
  EXPECT_NE(std::find(words.begin(), words.end(), w2), words.end());
}

TEST(Factorizations, MatchEvaluateAndFilter) {
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l <= 2; ++l) {
      for (const auto& alpha : enumerate_monotone_maps(k, l)) {
        const auto shortest = static_cast<int>(normal_form(alpha).length());
        const auto got = all_factorizations(alpha, 2);
        std::size_t expected = 0;
        for (int len = shortest; len <= shortest + 2; ++len) {
          for (const auto& w : oracle::words(k, l, len)) {
            if (oracle::evaluate(w, k) == vec(alpha.values())) ++expected;
          }
        }
        ASSERT_EQ(got.size(), expected) << alpha.to_string();
        for (const auto& w : got) ASSERT_EQ(w.evaluate(), alpha);
        ASSERT_NE(std::find(got.begin(), got.end(), normal_form(alpha).word()), got.end());
      }
    }
  }
}

TEST(MonotoneMaps, KeysAreDistinct) {
  std::set<std::uint64_t> keys;
  std::size_t count = 0;
  for (int k = 0; k <= 5; ++k) {
    for (int l = 0; l <= 5; ++l) {
      for (const auto& alpha : enumerate_monotone_maps(k, l)) {
        keys.insert(alpha.key());
        ++count;
      }
    }
  }
  EXPECT_EQ(keys.size(), count);
}
