#include <gtest/gtest.h>

#include "symvar/divisor_theory.hpp"
#include "test_util.hpp"

using namespace symvar;
using testutil::q;
using testutil::v;

namespace {

ColoredFan standard(const std::string& name) {
  auto s = builtin_space(name);
  return ColoredFan(s, {make_colored_cone(s, s.roots().negative_chamber().rays(), {})});
}

BDivisor rays(std::initializer_list<std::pair<const char*, long>> xs) {
  BDivisor d;
  for (auto [k, x] : xs) d.rays[k] = x;
  return d;
}

BDivisor colors(std::initializer_list<std::pair<const char*, long>> xs) {
  BDivisor d;
  for (auto [k, x] : xs) d.colors[ColorId::parse(k)] = x;
  return d;
}

// A2 with one colored cone cone(-ω_2^∨, α_2^∨) covering C⁻.
ColoredFan a2_simple_colored() {
  auto s = builtin_space("A2");
  return ColoredFan(s, {make_colored_cone(s, {v({-1, -2})}, {ColorId{1, ColorSign::None}})});
}

}  // namespace

TEST(Divisors, Principal) {
  auto a1 = standard("A1-rank1");
  EXPECT_EQ(principal_divisor(a1, v({1})), colors({{"F0", 1}}) - rays({{"r0", 1}}));
  auto bc = standard("BC1-exceptional");
  EXPECT_EQ(principal_divisor(bc, v({1})), colors({{"F0+", 1}, {"F0-", 1}}) - rays({{"r0", 1}}));
  EXPECT_EQ(principal_divisor(a1, v({0})), BDivisor{});
  auto coarse = SymmetricSpaceData::make({{{Family::A, 1}, false}}, Matrix::from_rows({v({2})}), {{0, 1, false}});
  ColoredFan cf(coarse, {make_colored_cone(coarse, {v({-1})}, {})});
  EXPECT_THROW(principal_divisor(cf, v({1})), InputError);
  EXPECT_EQ(principal_divisor(cf, v({2})), colors({{"F0", 2}}) - rays({{"r0", 1}}));
}

TEST(Divisors, ClassGroup) {
  auto a1 = standard("A1-rank1");
  EXPECT_EQ(class_group(a1).rank(), 1u);
  EXPECT_EQ(divisor_class(a1, colors({{"F0", 1}})), divisor_class(a1, rays({{"r0", 1}})));
  auto bc = standard("BC1-exceptional");
  auto g = class_group(bc);
  EXPECT_EQ(g.rank(), 2u);
  EXPECT_EQ(g.generators, (std::vector<std::string>{"F0+", "F0-", "r0"}));
  EXPECT_EQ(g.basis, (std::vector<std::string>{"r0", "F0+"}));
  EXPECT_EQ(divisor_class(bc, rays({{"r0", 1}})), divisor_class(bc, colors({{"F0+", 1}, {"F0-", 1}})));
  for (const auto& name : builtin_space_names()) {
    auto f = standard(name);
    auto p = class_group(f);
    EXPECT_EQ(p.rank(), p.generators.size() - f.space().rank()) << name;
    EXPECT_EQ(rank(p.relations), f.space().rank()) << name;
    for (std::size_t k = 0; k < f.space().rank(); ++k)
      EXPECT_TRUE(is_zero(divisor_class(f, principal_divisor(f, f.space().lattice().row(k)))));
    for (std::size_t i = 0; i < p.rank(); ++i) {
      auto e = unit_vec(p.rank(), i);
      EXPECT_EQ(divisor_class(f, divisor_with_class(f, e)), e);
    }
  }
  EXPECT_THROW(divisor_class(a1, rays({{"r7", 1}})), InputError);
  EXPECT_THROW(divisor_class(a1, colors({{"F0+", 1}})), InputError);
}

TEST(Divisors, CartierData) {
  auto a1 = standard("A1-rank1");
  auto h = cartier_data(a1, rays({{"r0", 3}}));
  ASSERT_TRUE(h);
  EXPECT_EQ(h->pieces, std::vector<RationalVec>{v({-3})});
  EXPECT_TRUE(h->integral);
  auto aa = standard("A1xA1");
  EXPECT_EQ(cartier_data(aa, rays({{"r0", 1}}))->pieces, std::vector<RationalVec>{v({-1, 0})});
  EXPECT_EQ(cartier_data(aa, {})->pieces, std::vector<RationalVec>{v({0, 0})});
  auto half = cartier_data(a1, BDivisor{{}, {{"r0", Rational(1, 2)}}});
  ASSERT_TRUE(half);
  EXPECT_FALSE(half->integral);
}

TEST(Divisors, NotQCartier) {
  auto s = SymmetricSpaceData::make({{{Family::A, 1}, false}, {{Family::A, 1}, false}, {{Family::A, 1}, false}},
                                    Matrix::identity(3), {{0, 1, false}, {1, 1, false}, {2, 1, false}});
  ColoredFan square(s, {make_colored_cone(s, {v({-1, -1, -1}), v({-1, -1, -3}), v({-1, -3, -3}), v({-1, -3, -1})}, {})});
  auto ids = square.rays();
  ASSERT_EQ(ids.size(), 4u);
  BDivisor one;
  one.rays[ids[0].id] = 1;
  EXPECT_FALSE(is_q_cartier(square, one));
  BDivisor all;
  for (const auto& r : ids) all.rays[r.id] = 0;
  EXPECT_TRUE(is_q_cartier(square, all));
}

TEST(Divisors, NefAmple) {
  auto a1 = standard("A1-rank1");
  EXPECT_TRUE(is_nef(a1, rays({{"r0", 3}})));
  EXPECT_TRUE(is_ample(a1, rays({{"r0", 3}})));
  EXPECT_TRUE(is_nef(a1, {}));
  EXPECT_FALSE(is_ample(a1, {}));
  EXPECT_FALSE(is_nef(a1, rays({{"r0", -1}})));
  EXPECT_TRUE(is_globally_generated(a1, rays({{"r0", 2}})));
  auto subdiv = [] {
    auto s = builtin_space("A1xA1");
    return ColoredFan(s, {make_colored_cone(s, {v({-1, 0}), v({-1, -1})}, {}),
                          make_colored_cone(s, {v({-1, -1}), v({0, -1})}, {})});
  }();
  // rays: r0 = (-1,-1), r1 = (-1,0), r2 = (0,-1)
  EXPECT_FALSE(is_ample(subdiv, rays({{"r0", 1}, {"r1", 1}, {"r2", 1}})));
  EXPECT_TRUE(is_ample(subdiv, rays({{"r0", 3}, {"r1", 2}, {"r2", 2}})));
  EXPECT_TRUE(is_nef(subdiv, rays({{"r0", 2}, {"r1", 1}, {"r2", 1}})));
  EXPECT_FALSE(is_ample(subdiv, rays({{"r0", 2}, {"r1", 1}, {"r2", 1}})));
  EXPECT_FALSE(is_nef(subdiv, rays({{"r0", 3}, {"r1", 1}, {"r2", 1}})));
  auto amp = find_ample_divisor(subdiv);
  ASSERT_TRUE(amp);
  EXPECT_TRUE(is_ample(subdiv, *amp));
  auto ampc = find_ample_divisor(a2_simple_colored());
  ASSERT_TRUE(ampc);
  EXPECT_TRUE(is_ample(a2_simple_colored(), *ampc));
}

TEST(Divisors, ReduceStar) {
  auto a1 = standard("A1-rank1");
  auto r = reduce_star(a1, rays({{"r0", 2}}));
  EXPECT_EQ(r.d1, rays({{"r0", 2}}));
  EXPECT_EQ(r.d2, BDivisor{});
  auto bc = standard("BC1-exceptional");
  auto r1 = reduce_star(bc, colors({{"F0+", 1}, {"F0-", 1}}));
  EXPECT_EQ(r1.d1, rays({{"r0", 1}}));
  EXPECT_EQ(r1.d2, BDivisor{});
  auto r2 = reduce_star(bc, colors({{"F0+", 2}, {"F0-", 1}}));
  EXPECT_EQ(r2.d1, rays({{"r0", 1}}));
  EXPECT_EQ(r2.d2, colors({{"F0+", 1}}));
  EXPECT_TRUE(r2.renamed.empty());
  auto r3 = reduce_star(bc, colors({{"F0+", 1}, {"F0-", 3}}));
  EXPECT_EQ(r3.d2, colors({{"F0-", 2}}));
  EXPECT_EQ(r3.d2_plus, colors({{"F0+", 2}}));
  EXPECT_EQ(r3.renamed, std::vector<std::size_t>{0});
  auto d = colors({{"F0+", 1}, {"F0-", 3}}) + rays({{"r0", 2}});
  auto r4 = reduce_star(bc, d);
  EXPECT_EQ(r4.d1 + r4.d2 + principal_divisor_q(bc, r4.shift), d);
  EXPECT_EQ(r4.h1->pieces[0], sub(cartier_data(bc, d)->pieces[0], r4.shift));
}

TEST(Divisors, MomentPolytope) {
  auto a1 = standard("A1-rank1");
  EXPECT_EQ(moment_polytope(a1, rays({{"r0", 3}})).vertices(), (std::vector<RationalVec>{v({0}), v({3})}));
  EXPECT_EQ(moment_polytope(a1, {}).vertices(), (std::vector<RationalVec>{v({0})}));
  EXPECT_TRUE(moment_polytope(a1, rays({{"r0", -1}})).is_empty());
  EXPECT_EQ(h0_highest_weights(a1, rays({{"r0", 3}})), (std::vector<RationalVec>{v({0}), v({1}), v({2}), v({3})}));
  EXPECT_EQ(h0_highest_weights(a1, {}), (std::vector<RationalVec>{v({0})}));
  EXPECT_TRUE(h0_highest_weights(a1, rays({{"r0", -1}})).empty());
  EXPECT_THROW(h0_highest_weights(a1, BDivisor{{}, {{"r0", Rational(1, 2)}}}), InputError);
}

TEST(Divisors, WeightPolytope) {
  auto a1 = standard("A1-rank1");
  EXPECT_EQ(weight_polytope(a1, rays({{"r0", 3}})).vertices(), (std::vector<RationalVec>{v({-3}), v({3})}));
  EXPECT_EQ(weight_polytope(a1, {}).vertices(), (std::vector<RationalVec>{v({0})}));
  auto aa = standard("A1xA1");
  EXPECT_EQ(weight_polytope(aa, rays({{"r0", 1}})).vertices(), (std::vector<RationalVec>{v({-1, 0}), v({1, 0})}));
  EXPECT_EQ(toric_volume(a1, rays({{"r0", 3}})), 6);
  EXPECT_EQ(toric_volume(a1, {}), 0);
  EXPECT_EQ(toric_volume(aa, rays({{"r0", 1}})), 0);
  EXPECT_EQ(toric_volume(aa, rays({{"r0", 1}, {"r1", 1}})), 8);
  EXPECT_THROW(weight_polytope(a1, rays({{"r0", -1}})), PreconditionError);
  EXPECT_THROW(weight_polytope(a1, colors({{"F0", 1}})), PreconditionError);
}

TEST(Divisors, MomentEqualsChamberCapWeightPolytopeA2) {
  auto a2 = standard("A2");
  // rays: r0 = (-2,-1) = -3ω_1^∨, r1 = (-1,-2)
  for (auto d : {rays({{"r0", 2}, {"r1", 1}}), rays({{"r0", 1}, {"r1", 2}}), rays({{"r0", 5}, {"r1", 4}})}) {
    ASSERT_TRUE(is_nef(a2, d));
    auto p = moment_polytope(a2, d);
    auto qd = intersect(weight_polytope(a2, d), PolytopeQ::from_halfspaces({{v({1, 0}), 0}, {v({0, 1}), 0}}, {}, 2));
    EXPECT_EQ(p, qd);
  }
}

TEST(Divisors, SliceRestriction) {
  auto bc = standard("BC1-exceptional");
  for (const auto& k : restriction_kernel_basis(bc)) EXPECT_TRUE(slice_restriction_class(bc, k).is_zero());
  auto a1 = standard("A1-rank1");
  auto e = slice_restriction_class(a1, rays({{"r0", 1}}));
  EXPECT_FALSE(e.is_zero());
  EXPECT_EQ(e, toric_class(a1, v({1, 1})));
  EXPECT_TRUE(slice_restriction_class(a1, principal_divisor(a1, v({1}))).is_zero());
  auto mixed = [] {
    auto s = builtin_space("A1xBC1");
    return ColoredFan(s, {make_colored_cone(s, {v({-1, 0}), v({-1, -1})}, {}),
                          make_colored_cone(s, {v({-1, -1}), v({0, -1})}, {})});
  }();
  for (const auto& k : restriction_kernel_basis(mixed)) EXPECT_TRUE(slice_restriction_class(mixed, k).is_zero());
  ASSERT_EQ(mixed.rays().size(), 3u);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        auto d = rays({{"r0", a}, {"r1", b}, {"r2", c}});
        EXPECT_EQ(slice_restriction_class(mixed, d).is_zero(), a == 0 && b == 0 && c == 0);
      }
  auto twice_plus = slice_restriction_class(mixed, colors({{"F1+", 2}}));
  auto y = rays({{"r0", 1}, {"r2", 1}});  // Σ <ω_1, -v_E> E
  EXPECT_EQ(twice_plus, slice_restriction_class(mixed, y));
  EXPECT_EQ(slice_restriction_class(mixed, colors({{"F1-", 2}})), twice_plus);
}

TEST(Divisors, EffectiveCone) {
  auto a1 = effective_cone(standard("A1-rank1"));
  ASSERT_EQ(a1.ray_members.size(), 1u);
  EXPECT_EQ(a1.predicted, std::vector<std::size_t>{1});
  EXPECT_TRUE(a1.matches_prediction);
  auto bc = effective_cone(standard("BC1-exceptional"));
  ASSERT_EQ(bc.ray_members.size(), 2u);
  EXPECT_EQ(bc.predicted, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(bc.cone.contains(bc.classes[2], ContainMode::RelativeInterior));
  EXPECT_TRUE(bc.matches_prediction);
  auto aa = effective_cone(standard("A1xA1"));
  ASSERT_EQ(aa.ray_members.size(), 2u);
  EXPECT_EQ(aa.predicted, (std::vector<std::size_t>{2, 3}));
  EXPECT_TRUE(aa.matches_prediction);
}

TEST(Divisors, Proportionality) {
  EXPECT_EQ(proportional_to_color(standard("A1-rank1"), 0), (std::vector<std::vector<std::size_t>>{{0}}));
  EXPECT_EQ(proportional_to_color(standard("A1xA1"), 0), (std::vector<std::vector<std::size_t>>{{0}}));
  EXPECT_TRUE(proportional_to_color(standard("A2"), 0).empty());
  EXPECT_THROW(proportional_to_color(standard("A2"), 5), InputError);
}

TEST(Divisors, BigCone) {
  auto bc = standard("BC1-exceptional");
  EXPECT_TRUE(big_cone_membership(bc, divisor_class(bc, rays({{"r0", 1}}))));
  EXPECT_FALSE(big_cone_membership(bc, divisor_class(bc, colors({{"F0+", 1}}))));
  auto a1 = standard("A1-rank1");
  EXPECT_FALSE(big_cone_membership(a1, v({0})));
  EXPECT_TRUE(is_big_nef(a1, rays({{"r0", 3}})));
  EXPECT_FALSE(is_big_nef(a1, {}));
  EXPECT_FALSE(is_big_nef(standard("A1xA1"), rays({{"r0", 1}})));
  EXPECT_THROW(is_big_nef(a1, rays({{"r0", -1}})), PreconditionError);
  auto mixed = standard("A1xBC1");
  EXPECT_FALSE(is_big(mixed, colors({{"F0", 1}, {"F1+", 3}, {"F1-", -1}})));
  EXPECT_TRUE(is_big(mixed, colors({{"F0", 1}, {"F1+", 1}, {"F1-", 1}})));
  EXPECT_FALSE(is_big(mixed, principal_divisor(mixed, v({1, -1}))));
}

TEST(Divisors, Picard) {
  EXPECT_EQ(picard_group(standard("A1-rank1")).rank(), 1u);
  EXPECT_EQ(picard_group(standard("BC1-exceptional")).rank(), 2u);
  for (const auto& name : builtin_space_names()) {
    auto f = standard(name);
    EXPECT_EQ(picard_group(f).rank(), class_group(f).rank()) << name;
  }
  auto x = a2_simple_colored();
  ASSERT_TRUE(validate_fan(x).ok()) << validate_fan(x).summary();
  ASSERT_TRUE(is_complete(x));
  ASSERT_TRUE(is_qfactorial(x));
  EXPECT_EQ(class_group(x).rank(), 1u);
  EXPECT_EQ(picard_group(x).basis, row_space_basis({divisor_class(x, colors({{"F0", 1}}))}, 1));
  // Simple, not Q-factorial: Pic is free on the three colors outside F(X) = ∅.
  auto s = SymmetricSpaceData::make({{{Family::A, 1}, false}, {{Family::A, 1}, false}, {{Family::A, 1}, false}},
                                    Matrix::identity(3), {{0, 1, false}, {1, 1, false}, {2, 1, false}});
  ColoredFan square(s, {make_colored_cone(s, {v({-1, -1, -1}), v({-1, -1, -3}), v({-1, -3, -3}), v({-1, -3, -1})}, {})});
  EXPECT_EQ(class_group(square).rank(), 4u);
  std::vector<RationalVec> fc;
  for (auto c : {"F0", "F1", "F2"}) fc.push_back(divisor_class(square, colors({{c, 1}})));
  EXPECT_EQ(rank(fc, 4), 3u);
  EXPECT_EQ(picard_group(square).basis, row_space_basis(fc, 4));
}
