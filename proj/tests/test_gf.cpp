#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "asmax/error.hpp"
#include "asmax/gf.hpp"

using namespace asmax;

namespace {

const std::vector<std::pair<std::uint32_t, int>> kFields{{3, 1}, {3, 2}, {3, 4}, {3, 6}, {5, 1}, {5, 3},
                                                         {7, 2}, {11, 2}, {13, 3}, {3, 12}, {5, 8}};

}  // namespace

TEST(Field, Axioms) {
  std::mt19937_64 rng(1);
  for (auto [p0, m] : kFields) {
    const FieldPtr K = make_field(p0, m);
    for (int t = 0; t < 200; ++t) {
      const FFElem a = K->random(rng), b = K->random(rng), c = K->random(rng);
      EXPECT_EQ(K->mul(K->mul(a, b), c), K->mul(a, K->mul(b, c)));
      EXPECT_EQ(K->add(K->add(a, b), c), K->add(a, K->add(b, c)));
      EXPECT_EQ(K->mul(a, K->add(b, c)), K->add(K->mul(a, b), K->mul(a, c)));
      EXPECT_EQ(K->add(a, K->neg(a)), K->zero());
      if (!K->is_zero(a)) EXPECT_EQ(K->mul(a, K->inv(a)), K->one());
    }
  }
}

TEST(Field, GeneratorAndFrobenius) {
  std::mt19937_64 rng(2);
  for (auto [p0, m] : kFields) {
    const FieldPtr K = make_field(p0, m);
    EXPECT_EQ(K->mult_order(K->generator()), K->order() - 1);
    EXPECT_EQ(make_field(p0, m).get(), K.get());
    for (int t = 0; t < 50; ++t) {
      const FFElem a = K->random(rng);
      EXPECT_EQ(K->frobenius(a, 1), K->pow(a, p0));
      EXPECT_EQ(K->frobenius(a, m), a);
      EXPECT_EQ(K->from_index(K->index(a)), a);
    }
  }
}

TEST(Field, IrreducibleModulus) {
  EXPECT_EQ(smallest_irreducible(3, 2), (std::vector<Coeff>{1, 0, 1}));
  for (auto [p0, m] : kFields) {
    const auto f = smallest_irreducible(p0, m);
    EXPECT_TRUE(is_irreducible(p0, f));
    const FieldPtr K = make_field(p0, m);
    const std::vector<std::int64_t> poly(f.begin(), f.end());
    EXPECT_EQ(K->roots_of_prime_poly(poly).size(), static_cast<std::size_t>(m));
  }
  EXPECT_FALSE(is_irreducible(3, {2, 0, 1}));
}

TEST(Field, TraceLinearity) {
  // exhaustive up to 3^6
  const FieldPtr K = make_field(3, 6);
  for (int d : {1, 2, 3}) {
    const auto sub = K->subfield_elements(d);
    EXPECT_EQ(sub.size(), static_cast<std::size_t>(std::pow(3, d)));
    for (std::uint64_t i = 0; i < K->order(); i += 1) {
      const FFElem x = K->from_index(i);
      const FFElem c = sub[i % sub.size()];
      const FFElem t = K->trace_to(x, d);
      ASSERT_TRUE(K->in_subfield(t, d));
      ASSERT_EQ(K->trace_to(K->mul(c, x), d), K->mul(c, t));
    }
  }
  std::mt19937_64 rng(3);
  const FieldPtr L = make_field(5, 8);
  const auto c = L->subfield_generator(4);
  for (int t = 0; t < 200; ++t) {
    const FFElem x = L->random(rng), y = L->random(rng);
    EXPECT_EQ(L->trace_to(L->add(L->mul(c, x), y), 4), L->add(L->mul(c, L->trace_to(x, 4)), L->trace_to(y, 4)));
  }
}

TEST(Field, TraceComposition) {
  std::mt19937_64 rng(4);
  const FieldPtr K = make_field(3, 12);
  for (int t = 0; t < 100; ++t) {
    const FFElem x = K->random(rng);
    for (int mid : {2, 3, 4, 6}) {
      EXPECT_EQ(K->relative_trace(K->trace_to(x, mid), mid, 1), K->trace_to(x, 1));
    }
    EXPECT_EQ(K->prime_trace(x), K->trace_to(x, 1).c[0]);
  }
}

TEST(Field, SubfieldEmbedding) {
  std::mt19937_64 rng(5);
  for (auto [p0, small, big] : std::vector<std::tuple<std::uint32_t, int, int>>{{3, 2, 6}, {3, 3, 12}, {5, 2, 4}, {7, 1, 2}}) {
    const FieldPtr S = make_field(p0, small), B = make_field(p0, big);
    const SubfieldEmbed emb(S, B);
    for (int t = 0; t < 100; ++t) {
      const FFElem a = S->random(rng), b = S->random(rng);
      EXPECT_EQ(emb.map(S->mul(a, b)), B->mul(emb.map(a), emb.map(b)));
      EXPECT_EQ(emb.map(S->add(a, b)), B->add(emb.map(a), emb.map(b)));
      EXPECT_TRUE(B->in_subfield(emb.map(a), small));
      EXPECT_EQ(emb.preimage(emb.map(a)).value(), a);
      // Tr_{big/p0}(a) = [big:small] Tr_{small/p0}(a)
      EXPECT_EQ(B->prime_trace(emb.map(a)), (S->prime_trace(a) * static_cast<std::uint32_t>(big / small)) % p0);
    }
  }
}

TEST(Field, LegendreMultiplicative) {
  std::mt19937_64 rng(6);
  for (auto [p0, m] : kFields) {
    const FieldPtr K = make_field(p0, m);
    for (int t = 0; t < 100; ++t) {
      const FFElem x = K->random(rng), y = K->random(rng);
      if (K->is_zero(x) || K->is_zero(y)) continue;
      EXPECT_EQ(K->legendre(K->mul(x, y)), K->legendre(x) * K->legendre(y));
    }
    EXPECT_EQ(K->legendre(K->generator()), -1);
  }
}

TEST(Field, Rejections) {
  EXPECT_THROW(make_field(9, 2), Error);
  EXPECT_THROW(make_field(3, kMaxDegree + 1), Error);
  const FieldPtr K = make_field(3, 2);
  EXPECT_THROW(K->inv(K->zero()), Error);
}
