#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "spinal/bundle.hpp"
#include "spinal/errors.hpp"
#include "spinal/normal_form.hpp"

namespace spinal {
namespace {

GradedAction act(const PlumbingGraph& g, const char* word) {
  return word_action(g, parse_word(word, g));
}

GradedGroup circle() {
  GradedGroup h;
  h.set(0, AbelianGroup::free(1));
  h.set(1, AbelianGroup::free(1));
  return h;
}

/// H_k(V x F) for F a wedge of m circles: H_k(V) + H_{k-1}(V)^m.
GradedGroup kunneth_with_wedge(const GradedGroup& base, std::size_t m) {
  GradedGroup out;
  std::map<int, std::size_t> ranks;
  for (const auto& [deg, g] : base.degrees()) {
    ranks[deg] += g.free_rank();
    ranks[deg + 1] += m * g.free_rank();
  }
  for (const auto& [deg, r] : ranks) out.set(deg, AbelianGroup::free(r));
  return out;
}

TEST(WangPieces, IdentityMonodromy) {
  const auto g = preset_graph("a2-3pt-n3");
  const auto base = base_homology(g);
  const std::vector<GradedAction> id{GradedAction{}};
  const WangPieces p = wang_pieces(base, id);
  for (const auto& [deg, group] : base.degrees()) {
    EXPECT_EQ(p.degrees.at(deg).cokernel, group);
    EXPECT_EQ(p.degrees.at(deg).kernel_rank, group.free_rank());
  }
}

TEST(WangPieces, SingleTwistOddN) {
  const auto g = preset_graph("a2-3pt-n3");
  const std::vector<GradedAction> phi{act(g, "t1")};
  const WangPieces p = wang_pieces(base_homology(g), phi);
  EXPECT_EQ(p.degrees.at(3).cokernel, AbelianGroup(1, {3}));
  EXPECT_EQ(p.degrees.at(3).kernel_rank, 1u);
}

TEST(WangPieces, TwistAndIdentity) {
  const auto g = preset_graph("a2-3pt-n3");
  const std::vector<GradedAction> phi{act(g, "t1"), GradedAction{}};
  const WangPieces p = wang_pieces(base_homology(g), phi);
  // SNF of the 2x4 block [[0,-3,0,0],[0,0,0,0]] is diag(3,0).
  EXPECT_EQ(p.degrees.at(3).cokernel, AbelianGroup(1, {3}));
  EXPECT_EQ(p.degrees.at(3).kernel_rank, 3u);
}

TEST(WangPieces, BlockOrderIrrelevant) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const PlumbingGraph g = oracle::random_graph(rng, 2 + trial % 6);
    const GradedAction phi = word_action(g, oracle::random_word(rng, g));
    const std::vector<GradedAction> ab{phi, GradedAction{}}, ba{GradedAction{}, phi};
    EXPECT_EQ(wang_pieces(base_homology(g), ab), wang_pieces(base_homology(g), ba));
  }
}

TEST(WangPieces, Errors) {
  const auto g = preset_graph("a2-3pt-n3");
  EXPECT_THROW(wang_pieces(base_homology(g), std::span<const GradedAction>{}), InputError);

  GradedAction wrong;
  wrong.set(3, IntMatrix::identity(3));
  const std::vector<GradedAction> bad{wrong};
  EXPECT_THROW(wang_pieces(base_homology(g), bad), InputError);

  GradedGroup torsion_base;
  torsion_base.set(0, AbelianGroup::free(1));
  torsion_base.set(1, AbelianGroup(0, {2}));
  const std::vector<GradedAction> id{GradedAction{}};
  EXPECT_THROW(wang_pieces(torsion_base, id), InputError);

  GradedAction swaps_components;
  swaps_components.set(0, IntMatrix{{-1}});
  const std::vector<GradedAction> h0{swaps_components};
  EXPECT_THROW(wang_pieces(base_homology(g), h0), InvariantViolation);
}

TEST(MappingTorus, IdentityIsKunneth) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const PlumbingGraph g = oracle::random_graph(rng, 1 + trial % 7);
    const GradedGroup base = base_homology(g);
    EXPECT_EQ(mapping_torus_homology(base, GradedAction{}), kunneth_with_wedge(base, 1));
  }
}

TEST(MappingTorus, DegreeDCircleMap) {
  // <a, t | t a t^-1 = a^d> abelianises to Z + Z/(d-1).
  for (long d = 2; d <= 20; ++d) {
    GradedEndomorphism phi;
    phi.set(1, IntMatrix{{d}});
    const GradedGroup h = mapping_torus_homology(circle(), phi);
    EXPECT_EQ(h.at(0), AbelianGroup::free(1));
    if (d == 2) EXPECT_EQ(h.at(1), AbelianGroup::free(1));
    else EXPECT_EQ(h.at(1), AbelianGroup(1, {d - 1}));
    EXPECT_TRUE(h.at(2).is_trivial());
  }
}

TEST(MappingTorus, OddTwist) {
  const auto g = preset_graph("a2-3pt-n3");
  const GradedGroup h = mapping_torus_homology(base_homology(g), act(g, "t1"));
  EXPECT_EQ(h.at(3), AbelianGroup(1, {3}));
  EXPECT_EQ(h.at(4), AbelianGroup::free(1));
  EXPECT_EQ(h.euler_characteristic(), 0);
}

TEST(MappingTorus, EulerCharacteristicVanishes) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 150; ++trial) {
    const PlumbingGraph g = oracle::random_graph(rng, 2 + trial % 6);
    const GradedGroup h =
        mapping_torus_homology(base_homology(g), word_action(g, oracle::random_word(rng, g)));
    EXPECT_EQ(h.euler_characteristic(), 0);
  }
}

TEST(SurfaceBundle, TorsionThreeK) {
  const auto g = preset_graph("a2-3pt-n3");
  for (long k = 1; k <= 10; ++k) {
    const Representation rep{1, {power(act(g, "t1"), k), GradedAction{}}};
    const GradedGroup h = surface_bundle_homology(base_homology(g), rep);
    EXPECT_EQ(h.at(3).invariant_factors(), std::vector<Integer>{Integer(3 * k)});
  }
}

TEST(SurfaceBundle, IdentityIsProductWithSurface) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 60; ++trial) {
    const PlumbingGraph g = oracle::random_graph(rng, 1 + trial % 7);
    const int genus = 1 + trial % 3;
    Representation rep{genus, std::vector<GradedAction>(2 * genus)};
    const GradedGroup base = base_homology(g);
    EXPECT_EQ(surface_bundle_homology(base, rep), kunneth_with_wedge(base, 2 * genus));
  }
}

TEST(SurfaceBundle, EvenCaseTorsionMatchesDeterminant) {
  const auto g = preset_graph("a2-3pt-n2");
  const GradedAction phi = act(g, "t1 t2");
  for (long k = 1; k <= 8; ++k) {
    const Representation rep{1, {power(phi, k), GradedAction{}}};
    const GradedGroup h = surface_bundle_homology(base_homology(g), rep);
    const IntMatrix d = power(phi, k).matrix(2, 2) - IntMatrix::identity(2);
    EXPECT_EQ(h.at(2).torsion_order(), abs(oracle::cofactor_det(d)));
  }
}

TEST(SurfaceBundle, EulerCharacteristicAndTorsionProperties) {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 6;
    const PlumbingGraph g = oracle::random_graph(rng, n);
    const int genus = 1 + trial % 2;
    Representation rep{genus, {}};
    for (int i = 0; i < 2 * genus; ++i)
      rep.assignments.push_back(word_action(g, oracle::random_word(rng, g)));
    const GradedGroup base = base_homology(g);
    const GradedGroup h = surface_bundle_homology(base, rep);
    EXPECT_EQ(h.euler_characteristic(), (1 - 2 * genus) * plumbing_euler_characteristic(g));

    const WangPieces p = wang_pieces(base, rep.assignments);
    for (const auto& [deg, piece] : p.degrees)
      EXPECT_EQ(h.at(deg).invariant_factors(), piece.cokernel.invariant_factors());
  }
}

TEST(SurfaceBundle, ConjugationInvariance) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 80; ++trial) {
    const PlumbingGraph g = oracle::random_graph(rng, 2 + trial % 6);
    const int d = g.dimension;
    const GradedGroup base = base_homology(g);
    const std::size_t r = base.rank(d);
    const GradedAction phi = word_action(g, oracle::random_word(rng, g));
    GradedAction u;
    u.set(d, oracle::random_unimodular(rng, r));
    const GradedAction conj = compose(compose(u, phi), inverse(u));
    EXPECT_EQ(mapping_torus_homology(base, conj), mapping_torus_homology(base, phi));
    const Representation a{1, {phi, GradedAction{}}}, b{1, {conj, GradedAction{}}};
    EXPECT_EQ(surface_bundle_homology(base, a), surface_bundle_homology(base, b));
  }
}

TEST(SurfaceBundle, ShapeErrors) {
  const auto g = preset_graph("a2-3pt-n3");
  EXPECT_THROW(surface_bundle_homology(base_homology(g), Representation{1, {GradedAction{}}}),
               InputError);
  EXPECT_THROW(surface_bundle_homology(base_homology(g), Representation{0, {}}), InputError);
}

TEST(BoundaryCheck, IdentityPartnerAlwaysOk) {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const PlumbingGraph g = oracle::random_graph(rng, 2 + trial % 6);
    const Representation rep{1, {word_action(g, oracle::random_word(rng, g)), GradedAction{}}};
    EXPECT_TRUE(boundary_check(rep).ok);
  }
}

TEST(BoundaryCheck, EvenTwistsDoNotCommute) {
  const auto g = preset_graph("a2-3pt-n2");
  const auto check = boundary_check(Representation{1, {act(g, "t1"), act(g, "t2")}});
  EXPECT_FALSE(check.ok);
  // T1 T2 T1^-1 T2^-1, multiplied out by hand.
  EXPECT_EQ(check.product.matrix(2, 2), (IntMatrix{{55, 21}, {-21, -8}}));
}

TEST(BoundaryCheck, GenusTwoProductOfInverseCommutators) {
  const auto g = preset_graph("a2-3pt-n3");
  const auto t1 = act(g, "t1"), t2 = act(g, "t2");
  // [T1,T2] = [[73,-27],[-27,10]] and [T2,T1] is its inverse.
  const auto single = boundary_check(Representation{1, {t1, t2}});
  EXPECT_FALSE(single.ok);
  EXPECT_EQ(single.product.matrix(3, 2), (IntMatrix{{73, -27}, {-27, 10}}));
  EXPECT_TRUE(boundary_check(Representation{2, {t1, t2, t2, t1}}).ok);
}

}  // namespace
}  // namespace spinal
