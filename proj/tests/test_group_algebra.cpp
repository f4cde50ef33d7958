#include <gtest/gtest.h>

#include <random>

#include "twistder/twistder.hpp"

using namespace twistder;

namespace {

template <DiscreteGroup G>
AlgebraElement<G> random_element(const GroupPtr<G>& group, const std::vector<Elem<G>>& pool, std::mt19937& rng,
                                 std::size_t max_support = 5) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<std::size_t> count(0, max_support);
  AlgebraElement<G> f(group);
  for (std::size_t k = count(rng); k > 0; --k) {
    f.add_term(pool[pick(rng)], GaussianRational(mpq_class(coef(rng), 1 + (coef(rng) + 4) % 3), coef(rng)));
  }
  return f;
}

}  // namespace

TEST(GaussianRational, CanonicalForm) {
  GaussianRational a(mpq_class(2, 4), mpq_class(-3, -6));
  EXPECT_EQ(rational_string(a.re()), "1/2");
  EXPECT_EQ(rational_string(a.im()), "1/2");
  EXPECT_EQ(a.to_string(), "1/2+1/2i");
  EXPECT_EQ(GaussianRational(3).to_string(), "3");
  EXPECT_EQ(parse_rational("-6/4"), mpq_class(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(GaussianRational, FieldAxiomsSampled) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-7, 7);
  auto draw = [&] { return GaussianRational(mpq_class(d(rng), 1 + std::abs(d(rng))), mpq_class(d(rng), 1 + std::abs(d(rng)))); };
  for (int t = 0; t < 500; ++t) {
    auto a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
  EXPECT_THROW(GaussianRational(1) / GaussianRational(0), std::domain_error);
}

TEST(AlgebraElement, ConvolutionExamples) {
  auto C2 = cyclic_group(2);
  auto e = AlgebraElement<FiniteGroup>::basis(C2, 0), s = AlgebraElement<FiniteGroup>::basis(C2, 1);
  EXPECT_TRUE(((e + s) * (e - s)).is_zero());

  auto S3 = symmetric_group(3);
  auto t = AlgebraElement<FiniteGroup>::basis(S3, 1);
  EXPECT_EQ(t * t, AlgebraElement<FiniteGroup>::unit(S3));
}

TEST(AlgebraElement, AddScaleExamples) {
  auto G = cyclic_group(3);
  auto f = AlgebraElement<FiniteGroup>::basis(G, 1, 2) + AlgebraElement<FiniteGroup>::basis(G, 2, GaussianRational::i());
  EXPECT_TRUE(add(f, scale(GaussianRational(-1), f)).is_zero());
  EXPECT_TRUE(scale(GaussianRational(0), f).is_zero());
  EXPECT_EQ(scale(GaussianRational(0), f).support_size(), 0u);
  auto two_e = AlgebraElement<FiniteGroup>::basis(G, 0, 2), three_e = AlgebraElement<FiniteGroup>::basis(G, 0, 3);
  EXPECT_EQ(add(two_e, three_e), AlgebraElement<FiniteGroup>::basis(G, 0, 5));
}

TEST(AlgebraElement, ApplyEndomorphismCollidingImages) {
  auto C4 = cyclic_group(4);
  auto sq = make_endomorphism(C4, {2});
  AlgebraElement<FiniteGroup> f(C4);
  for (std::uint32_t g = 0; g < 4; ++g) f.add_term(g, 1);
  auto expected = AlgebraElement<FiniteGroup>::basis(C4, 0, 2) + AlgebraElement<FiniteGroup>::basis(C4, 2, 2);
  EXPECT_EQ(apply_endomorphism(sq, f), expected);
  EXPECT_EQ(apply_endomorphism(identity_endomorphism(C4), f), f);
  EXPECT_EQ(apply_endomorphism(sq, AlgebraElement<FiniteGroup>::basis(C4, 3, 7)), AlgebraElement<FiniteGroup>::basis(C4, 2, 7));
}

TEST(AlgebraElement, GroupMismatch) {
  auto a = AlgebraElement<FiniteGroup>::unit(cyclic_group(2));
  auto b = AlgebraElement<FiniteGroup>::unit(cyclic_group(2));
  try {
    (void)convolve(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupMismatch);
  }
  EXPECT_THROW(add(a, b), Error);
}

TEST(AlgebraElement, IndicatorsReproduceCayleyTable) {
  for (auto G : {symmetric_group(3), quaternion8(), dihedral_group(4)}) {
    for (std::uint32_t u = 0; u < G->order(); ++u)
      for (std::uint32_t v = 0; v < G->order(); ++v)
        ASSERT_EQ(AlgebraElement<FiniteGroup>::basis(G, u) * AlgebraElement<FiniteGroup>::basis(G, v),
                  AlgebraElement<FiniteGroup>::basis(G, G->multiply(u, v)));
  }
}

TEST(AlgebraElement, RingPropertiesFinite) {
  std::mt19937 rng(42);
  for (auto G : {symmetric_group(3), quaternion8(), heisenberg_mod(3)}) {
    auto pool = G->elements();
    auto unit = AlgebraElement<FiniteGroup>::unit(G);
    auto endos = all_endomorphisms(G);
    std::uniform_int_distribution<std::size_t> pick(0, endos.size() - 1);
    for (int t = 0; t < 100; ++t) {
      auto f = random_element(G, pool, rng), g = random_element(G, pool, rng), h = random_element(G, pool, rng);
      ASSERT_EQ((f * g) * h, f * (g * h));
      ASSERT_EQ(unit * f, f);
      ASSERT_EQ(f * unit, f);
      ASSERT_EQ(f * (g + h), f * g + f * h);
      const auto& phi = endos[pick(rng)];
      ASSERT_EQ(apply_endomorphism(phi, f * g), apply_endomorphism(phi, f) * apply_endomorphism(phi, g));
    }
  }
}

TEST(AlgebraElement, RingPropertiesHeisenberg) {
  std::mt19937 rng(9);
  auto H = HeisenbergGroup::instance();
  auto pool = ball(*H, 3);
  auto phi = make_endomorphism(H, {Triple{1, 2, 0}, Triple{0, 1, 5}});
  for (int t = 0; t < 100; ++t) {
    auto f = random_element(H, pool, rng), g = random_element(H, pool, rng), h = random_element(H, pool, rng);
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ(AlgebraElement<HeisenbergGroup>::unit(H) * f, f);
    ASSERT_EQ(apply_endomorphism(phi, f * g), apply_endomorphism(phi, f) * apply_endomorphism(phi, g));
  }
}

TEST(AlgebraElement, CanonicalSparseForm) {
  auto G = cyclic_group(5);
  AlgebraElement<FiniteGroup> f(G);
  f.add_term(2, GaussianRational(3));
  f.add_term(2, GaussianRational(-3));
  EXPECT_TRUE(f.is_zero());
  f.add_term(4, GaussianRational(0));
  EXPECT_EQ(f.support_size(), 0u);
}
