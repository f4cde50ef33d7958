#include <gtest/gtest.h>

#include <random>

#include "twistder/twistder.hpp"

using namespace twistder;
using E = FiniteGroup::element_type;
using M = Morphism<E>;

namespace {

GroupoidView<FiniteGroup> view_of(const Endomorphism<FiniteGroup>& s, const Endomorphism<FiniteGroup>& t) {
  return GroupoidView<FiniteGroup>(s, t, Scope<FiniteGroup>::full(*s.group()));
}

std::vector<FiniteGroupPtr> test_groups() {
  return {cyclic_group(2), cyclic_group(3), cyclic_group(4), cyclic_group(6), symmetric_group(3),
          dihedral_group(4), quaternion8(), heisenberg_mod(2)};
}

}  // namespace

TEST(Groupoid, SourceTargetIdentities) {
  auto S3 = symmetric_group(3);
  auto id = identity_endomorphism(S3);
  auto view = view_of(id, id);
  for (E u = 0; u < 6; ++u) {
    EXPECT_EQ(view.source({u, 0}), u);
    EXPECT_EQ(view.target({u, 0}), u);
    for (E v = 0; v < 6; ++v) {
      EXPECT_EQ(view.source({u, v}), S3->multiply(S3->inverse(v), u));
      EXPECT_EQ(view.target({u, v}), S3->multiply(u, S3->inverse(v)));
    }
  }
}

TEST(Groupoid, HeisenbergSourceTarget) {
  auto H = HeisenbergGroup::instance();
  Triple x{2, 3, 0}, y{2, 3, 1};
  GroupoidView<HeisenbergGroup> view(inner_endomorphism(H, x), inner_endomorphism(H, y), Scope<HeisenbergGroup>::of_ball(*H, 2));
  Morphism<Triple> m{Triple{1, -1, 4}, Triple{0, 2, -1}};
  // sigma(v^-1) u with sigma = conjugation by x, tau(v^-1) by y
  auto vinv = H->inverse(m.v);
  EXPECT_EQ(view.source(m), H->multiply(H->multiply(H->multiply(x, vinv), H->inverse(x)), m.u));
  EXPECT_EQ(view.target(m), H->multiply(m.u, H->multiply(H->multiply(y, vinv), H->inverse(y))));
}

TEST(Groupoid, ComposeWithIdentityAndNotComposable) {
  auto S3 = symmetric_group(3);
  auto view = view_of(inner_endomorphism(S3, 1), inner_endomorphism(S3, 3));
  for (E a = 0; a < 6; ++a)
    for (E v = 0; v < 6; ++v) {
      M m = view.morphism_from(a, v);
      EXPECT_EQ(view.compose(view.identity_at(a), m), m);
      EXPECT_EQ(view.compose(m, view.identity_at(view.target(m))), m);
    }
  M m = view.morphism_from(0, 1);
  M bad = view.morphism_from(view.target(m) == 2 ? 3 : 2, 1);
  try {
    view.compose(m, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotComposable);
  }
}

TEST(Groupoid, ComposeUntwistedFormula) {
  auto S3 = symmetric_group(3);
  auto id = identity_endomorphism(S3);
  auto view = view_of(id, id);
  for (E u1 = 0; u1 < 6; ++u1)
    for (E v1 = 0; v1 < 6; ++v1)
      for (E v2 = 0; v2 < 6; ++v2) {
        M phi{u1, v1};
        M psi = view.morphism_from(view.target(phi), v2);
        EXPECT_EQ(view.compose(phi, psi), (M{S3->multiply(psi.u, v1), S3->multiply(v2, v1)}));
      }
}

TEST(Groupoid, CompositionAssociativeAndConsistent) {
  for (auto G : test_groups()) {
    auto autos = all_automorphisms(G);
    auto endos = all_endomorphisms(G);
    std::vector<std::pair<Endomorphism<FiniteGroup>, Endomorphism<FiniteGroup>>> pairs{
        {endos.front(), endos.back()}, {autos.front(), autos.back()}};
    for (const auto& [s, t] : pairs) {
      auto view = view_of(s, t);
      const auto n = G->order();
      for (E a = 0; a < n; ++a)
        for (E v1 = 0; v1 < n; ++v1) {
          M f = view.morphism_from(a, v1);
          for (E v2 = 0; v2 < n; ++v2) {
            M g = view.morphism_from(view.target(f), v2);
            M fg = view.compose(f, g);
            ASSERT_EQ(view.source(fg), a);
            ASSERT_EQ(view.target(fg), view.target(g));
            // connecting identity, with the later morphism in the first slot
            ASSERT_EQ(G->multiply(s(G->inverse(g.v)), g.u), G->multiply(f.u, t(G->inverse(f.v))));
            for (E v3 = 0; v3 < n; v3 += 1 + n / 4) {
              M h = view.morphism_from(view.target(g), v3);
              ASSERT_EQ(view.compose(view.compose(f, g), h), view.compose(f, view.compose(g, h)));
            }
          }
        }
    }
  }
}

TEST(Groupoid, DerivationSplittingComposition) {
  auto S3 = symmetric_group(3);
  for (E x = 0; x < 6; ++x)
    for (E y = 0; y < 6; ++y) {
      auto s = inner_endomorphism(S3, x), t = inner_endomorphism(S3, y);
      auto view = view_of(s, t);
      for (E h = 0; h < 6; ++h)
        for (E g1 = 0; g1 < 6; ++g1)
          for (E g2 = 0; g2 < 6; ++g2) {
            M later{S3->multiply(h, t(S3->inverse(g1))), g2};
            M earlier{S3->multiply(s(S3->inverse(g2)), h), g1};
            ASSERT_EQ(view.after(later, earlier), (M{h, S3->multiply(g2, g1)}));
          }
    }
}

TEST(Groupoid, ClassesExamples) {
  auto S3 = symmetric_group(3);
  auto id = identity_endomorphism(S3);
  auto view = view_of(id, id);
  auto comps = view.components();
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<E>{0}));
  EXPECT_EQ(comps[1], (std::vector<E>{1, 2, 5}));
  EXPECT_EQ(comps[2], (std::vector<E>{3, 4}));
  EXPECT_EQ(view.conjugacy_class(1).elements.size(), 3u);
  EXPECT_EQ(view.conjugacy_class(0).elements, (std::vector<E>{0}));

  auto C4 = cyclic_group(4);
  auto sq = make_endomorphism(C4, {2});
  // sigma(g^-1) a g = a g^-1 sweeps the group
  auto v4 = view_of(sq, identity_endomorphism(C4));
  EXPECT_EQ(v4.components().size(), 1u);
  // sigma = id, tau = square: a g^-1... a g^2 g^-1 = a g
  auto v4b = view_of(identity_endomorphism(C4), sq);
  EXPECT_EQ(v4b.components().size(), 1u);
}

TEST(Groupoid, PartitionAndOrbitDefinitionsAgree) {
  for (auto G : test_groups()) {
    for (const auto& s : all_endomorphisms(G))
      for (const auto& t : all_automorphisms(G)) {
        auto view = view_of(s, t);
        auto comps = view.components();
        std::size_t total = 0;
        std::vector<int> owner(G->order(), -1);
        for (std::size_t k = 0; k < comps.size(); ++k) {
          total += comps[k].size();
          for (auto x : comps[k]) {
            ASSERT_EQ(owner[x], -1);
            owner[x] = static_cast<int>(k);
          }
        }
        ASSERT_EQ(total, G->order());
        for (E a = 0; a < G->order(); ++a) {
          // {sigma(v) a tau(v^-1)} equals {sigma(g^-1) a tau(g)}
          ElementSet<FiniteGroup> other;
          for (E v = 0; v < G->order(); ++v) other.insert(view.act(v, a));
          auto cls = view.conjugacy_class(a).elements;
          ASSERT_EQ(std::vector<E>(other.begin(), other.end()), cls);
        }
      }
  }
}

TEST(Groupoid, CentralizerAndOrbitStabilizer) {
  for (auto G : test_groups()) {
    for (const auto& s : all_endomorphisms(G))
      for (const auto& t : all_endomorphisms(G)) {
        auto view = view_of(s, t);
        for (E a = 0; a < G->order(); ++a) {
          auto Z = view.centralizer(a);
          ASSERT_EQ(Z.size() * view.conjugacy_class(a).elements.size(), G->order());
          // subgroup
          ElementSet<FiniteGroup> zs(Z.begin(), Z.end());
          ASSERT_TRUE(zs.count(G->identity()));
          for (auto x : Z) {
            ASSERT_TRUE(zs.count(G->inverse(x)));
            for (auto y : Z) ASSERT_TRUE(zs.count(G->multiply(x, y)));
          }
          // loops at a are indexed by the centralizer
          auto loops = view.hom_set(a, a);
          ASSERT_EQ(loops.size(), Z.size());
          for (const auto& m : loops) {
            ASSERT_TRUE(zs.count(m.v));
            ASSERT_EQ(m.u, G->multiply(s(m.v), a));
            ASSERT_TRUE(view.is_loop(m));
          }
        }
      }
  }
}

TEST(Groupoid, CentralizerExamples) {
  auto S3 = symmetric_group(3);
  auto id = identity_endomorphism(S3);
  EXPECT_EQ(view_of(id, id).centralizer(1).size(), 2u);
  auto Q = quaternion8();
  auto qid = identity_endomorphism(Q);
  EXPECT_EQ(view_of(qid, qid).center(), (std::vector<E>{0, 1}));
}

TEST(Groupoid, HomSetBruteForce) {
  auto G = dihedral_group(4);
  auto s = inner_endomorphism(G, 1), t = make_endomorphism(G, {0, 4});
  auto view = view_of(s, t);
  for (E a = 0; a < 8; ++a)
    for (E b = 0; b < 8; ++b) {
      std::vector<M> brute;
      for (E u = 0; u < 8; ++u)
        for (E v = 0; v < 8; ++v)
          if (view.source({u, v}) == a && view.target({u, v}) == b) brute.push_back({u, v});
      auto hs = view.hom_set(a, b);
      std::sort(brute.begin(), brute.end(), MorphismLess<FiniteGroup>{});
      std::sort(hs.begin(), hs.end(), MorphismLess<FiniteGroup>{});
      ASSERT_EQ(hs, brute);
    }
  auto C3 = cyclic_group(3);
  auto cid = identity_endomorphism(C3);
  auto v3 = view_of(cid, cid);
  EXPECT_EQ(v3.hom_set(1, 1).size(), 3u);
  EXPECT_TRUE(v3.hom_set(1, 2).empty());
}

TEST(Groupoid, HeisenbergClassesAndCenter) {
  auto H = HeisenbergGroup::instance();
  auto s = inner_endomorphism(H, Triple{2, 3, 0}), t = inner_endomorphism(H, Triple{2, 3, 1});
  GroupoidView<HeisenbergGroup> view(s, t, Scope<HeisenbergGroup>::of_ball(*H, 3));
  for (std::int64_t r = -3; r <= 3; ++r) {
    auto cls = view.conjugacy_class(HeisenbergGroup::z(r));
    EXPECT_FALSE(cls.truncated);
    EXPECT_EQ(cls.elements, (std::vector<Triple>{HeisenbergGroup::z(r)}));
  }
  auto cls = view.conjugacy_class(Triple{1, 0, 0});
  EXPECT_TRUE(cls.truncated);
  auto Z = view.center();
  EXPECT_TRUE(Z.contains(Triple{0, 0, 17}));
  EXPECT_FALSE(Z.contains(Triple{1, 0, 0}));
  EXPECT_EQ(character_space_dimension(Z), 1u);
  // closed-form centralizer agrees with the definition on a ball
  for (const auto& u : ball(*H, 2)) {
    auto C = view.centralizer(u);
    for (const auto& z : ball(*H, 3)) {
      bool in = H->multiply(s(z), u) == H->multiply(u, t(z));
      ASSERT_EQ(C.contains(z), in) << u << " " << z;
    }
  }
}

TEST(Groupoid, HeisenbergCentralizerNeedsInner) {
  auto H = HeisenbergGroup::instance();
  auto phi = make_endomorphism(H, {Triple{1, 1, 0}, Triple{0, 1, 0}});
  GroupoidView<HeisenbergGroup> view(phi, phi, Scope<HeisenbergGroup>::of_ball(*H, 1));
  try {
    view.centralizer(Triple{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSupportedForScope);
  }
}

TEST(Groupoid, SigmaEqualsTauInnerGivesOrdinaryClasses) {
  for (auto G : test_groups()) {
    auto id = identity_endomorphism(G);
    auto plain = view_of(id, id).components();
    for (E x = 0; x < G->order(); ++x) {
      auto sx = inner_endomorphism(G, x);
      EXPECT_EQ(view_of(sx, sx).components(), plain);
    }
  }
}

TEST(Character, ZeroRoundTripAndAdditivity) {
  auto S3 = symmetric_group(3);
  auto id = identity_endomorphism(S3);
  auto view = view_of(id, id);
  auto zero = DerivationTable<FiniteGroup>::zero(id, id, S3->elements());
  auto chi = character_from_derivation(view, zero);
  EXPECT_TRUE(chi.is_zero());
  EXPECT_EQ(derivation_from_character(view, chi), zero);
}

TEST(Character, InnerDerivationCharacterVanishesOnLoops) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> c(-3, 3);
  for (auto G : test_groups()) {
    auto s = inner_endomorphism(G, G->order() - 1), t = inner_endomorphism(G, 1);
    auto view = view_of(s, t);
    AlgebraElement<FiniteGroup> p(G);
    for (E x = 0; x < G->order(); ++x) p.add_term(x, GaussianRational(c(rng), c(rng)));
    auto D = inner_derivation(s, t, p);
    auto chi = character_from_derivation(view, D);
    for (E a = 0; a < G->order(); ++a)
      for (const auto& m : view.hom_set(a, a)) ASSERT_TRUE(chi(m).is_zero());
    EXPECT_EQ(derivation_from_character(view, chi), D);
  }
}

TEST(Character, NonDerivationRejected) {
  auto S3 = symmetric_group(3);
  auto id = identity_endomorphism(S3);
  auto view = view_of(id, id);
  auto D = inner_derivation(id, id, AlgebraElement<FiniteGroup>::basis(S3, 1));
  auto values = D.values();
  values.at(3).add_term(0, GaussianRational(1));
  DerivationTable<FiniteGroup> bad(id, id, values);
  try {
    character_from_derivation(view, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotADerivation);
  }
}

TEST(Character, OutsideScopeColumnRejected) {
  auto H = HeisenbergGroup::instance();
  auto id = identity_endomorphism(H);
  GroupoidView<HeisenbergGroup> view(id, id, Scope<HeisenbergGroup>::of_ball(*H, 1));
  Character<HeisenbergGroup>::Values values;
  values.emplace(Morphism<Triple>{Triple{}, Triple{5, 5, 5}}, GaussianRational(1));
  try {
    derivation_from_character(view, Character<HeisenbergGroup>(values));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotLocallyFinite);
  }
}
