#include "l2b/catalog.hpp"
#include "l2b/generator.hpp"

#include <gtest/gtest.h>

using namespace l2b;
using namespace l2b::instances;

namespace {

WeilElement A(std::size_t n0, std::size_t n1, std::size_t i) { return WeilElement::alpha(n0, n1, i); }
WeilElement G(std::size_t n0, std::size_t n1, std::size_t b) { return WeilElement::gamma(n0, n1, b); }
WeilElement operator*(const WeilElement &x, const WeilElement &y) { return weil_mul(x, y); }

WeilElement random_element(std::size_t n0, std::size_t n1, int degree, SeededRng &rng) {
    WeilElement e(n0, n1);
    std::vector<WeilMonomial> ms;
    for (const auto &m : monomials_up_to(n0, n1, degree))
        if (m.total_degree() == degree)
            ms.push_back(m);
    for (int t = 0; t < 3 && !ms.empty(); ++t)
        e.add_term(ms[rng.below(ms.size())], rng.between(-2, 2));
    return e;
}

} // namespace

TEST(WeilProduct, Signs) {
    auto a1 = A(2, 2, 0), a2 = A(2, 2, 1), g1 = G(2, 2, 0), g2 = G(2, 2, 1);
    EXPECT_EQ(a1 * a2, -(a2 * a1));
    EXPECT_EQ(g1 * g2, g2 * g1);
    EXPECT_TRUE((a1 * a1).is_zero());
    EXPECT_EQ(a1 * g1, g1 * a1);
    EXPECT_EQ((a2 * a1).str(), "-a0*a1");
    EXPECT_EQ((g2 * g1 * g1).str(), "g0^2*g1");
}

TEST(WeilProduct, GradedCommutativeAndAssociative) {
    SeededRng rng(4);
    for (int t = 0; t < 100; ++t) {
        int p = 1 + static_cast<int>(rng.below(4)), q = 1 + static_cast<int>(rng.below(4));
        auto x = random_element(3, 2, p, rng), y = random_element(3, 2, q, rng), z = random_element(3, 2, 2, rng);
        WeilElement yx = y * x;
        if ((p * q) % 2)
            yx = -yx;
        EXPECT_EQ(x * y, yx);
        EXPECT_EQ((x * y) * z, x * (y * z));
    }
}

TEST(WeilProduct, DimensionMismatch) {
    EXPECT_THROW(A(2, 1, 0) * A(3, 1, 0), Error);
    EXPECT_THROW(WeilElement(33, 1), Error);
}

TEST(WeilElement, Bidegrees) {
    auto x = A(2, 2, 0) * G(2, 2, 1) * G(2, 2, 1);
    EXPECT_EQ(*x.bidegree(), (Bidegree{3, 2}));
    EXPECT_EQ(*x.total_degree(), 5);
    EXPECT_FALSE((A(2, 2, 0) + G(2, 2, 0)).bidegree());
}

TEST(DeltaV, Examples) {
    EXPECT_TRUE(build_delta_v(TwoVectorSpace(2, 3)).is_zero());
    auto d1 = build_delta_v(TwoVectorSpace(Matrix::identity(1)));
    EXPECT_EQ(d1.image({false, 0}), G(1, 1, 0));
    EXPECT_TRUE(d1.image({true, 0}).is_zero());
    // alpha_1 alpha_2 -> gamma_1 alpha_2 - alpha_1 gamma_2
    auto d2 = build_delta_v(TwoVectorSpace(Matrix::identity(2)));
    auto got = apply_derivation(d2, A(2, 2, 0) * A(2, 2, 1));
    EXPECT_EQ(got, G(2, 2, 0) * A(2, 2, 1) - A(2, 2, 0) * G(2, 2, 1));
    // gamma_1 alpha_1 -> gamma_1 gamma_1
    EXPECT_EQ(apply_derivation(d1, G(1, 1, 0) * A(1, 1, 0)), G(1, 1, 0) * G(1, 1, 0));
}

TEST(DeltaH, Examples) {
    EXPECT_TRUE(build_delta_h(SparseTensor({2, 2, 2}), SparseTensor({2, 1, 1})).is_zero());
    auto dh = build_delta_h(axb().structure(), SparseTensor({2, 0, 0}));
    EXPECT_TRUE(dh.image({false, 0}).is_zero());
    EXPECT_EQ(dh.image({false, 1}), -(A(2, 0, 0) * A(2, 0, 1)));
    auto cm = scaling(1, 1).cm1();
    auto ds = build_delta_h(cm.base().structure(), cm.action());
    EXPECT_EQ(ds.image({true, 0}), -(A(1, 1, 0) * G(1, 1, 0)));
    EXPECT_THROW(build_delta_h(SparseTensor({2, 2, 2}), SparseTensor({3, 1, 1})), Error);
}

TEST(DeltaJ, Examples) {
    EXPECT_TRUE(build_delta_j(SparseTensor({3, 3, 3, 1})).is_zero());
    auto dj = build_delta_j(alternating_l3(3, 1, 0, 1, 2, 0, 1));
    auto a123 = A(3, 1, 0) * A(3, 1, 1) * A(3, 1, 2);
    EXPECT_EQ(dj.image({true, 0}), -a123);
    auto g = G(3, 1, 0);
    EXPECT_EQ(apply_derivation(dj, g * g), Rational(-2) * (a123 * g));
    SparseTensor bad({3, 3, 3, 1});
    bad.set({0, 1, 2, 0}, 1);
    EXPECT_THROW(build_delta_j(bad), Error);
}

TEST(ApplyDerivation, ConstantsAndGenerators) {
    auto dh = build_delta_h(sl2().structure(), adjoint_rep(sl2()).to_action());
    EXPECT_TRUE(apply_derivation(dh, WeilElement::one(3, 3)).is_zero());
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(apply_derivation(dh, A(3, 3, i)), dh.image({false, i}));
        EXPECT_EQ(apply_derivation(dh, G(3, 3, i)), dh.image({true, i}));
    }
}

TEST(ApplyDerivation, LeibnizOnProducts) {
    SeededRng rng(8);
    auto cm = adjoint(sl2());
    auto d = build_delta_h(cm.base().structure(), cm.action()) + build_delta_v(cm.tvs());
    for (int t = 0; t < 60; ++t) {
        int p = 1 + static_cast<int>(rng.below(4));
        auto x = random_element(3, 3, p, rng), y = random_element(3, 3, 1 + static_cast<int>(rng.below(3)), rng);
        WeilElement rhs = apply_derivation(d, x) * y;
        WeilElement tail = x * apply_derivation(d, y);
        rhs += (p % 2) ? -tail : tail;
        EXPECT_EQ(apply_derivation(d, x * y), rhs);
    }
}

TEST(GradedDerivation, DegreeValidation) {
    std::vector<WeilElement> ai = {G(1, 1, 0)}, gi = {WeilElement(1, 1)};
    EXPECT_NO_THROW(GradedDerivation(1, 1, 1, Bidegree{0, 1}, ai, gi));
    EXPECT_THROW(GradedDerivation(1, 1, 2, std::nullopt, ai, gi), Error);
    EXPECT_THROW(GradedDerivation(1, 1, 1, Bidegree{1, 0}, ai, gi), Error);
}

TEST(Commutator, SelfIsTwiceSquare) {
    auto cm = affine();
    auto d = build_delta_h(cm.base().structure(), cm.action()) + build_delta_v(TwoVectorSpace(Matrix(2, 1, {1, 1})));
    auto c = graded_commutator(d, d);
    for (std::size_t k = 0; k < 3; ++k) {
        Generator g = k < 2 ? Generator{false, k} : Generator{true, 0};
        EXPECT_EQ(c.image(g), Rational(2) * apply_derivation(d, d.image(g)));
    }
}

TEST(Commutator, AdjointSl2Vanishes) {
    auto cm = adjoint(sl2());
    auto c = graded_commutator(build_delta_h(cm.base().structure(), cm.action()), build_delta_v(cm.tvs()));
    EXPECT_TRUE(c.is_zero());
    EXPECT_EQ(*c.bidegree(), (Bidegree{1, 1}));
}

TEST(SquareZero, Examples) {
    EXPECT_TRUE(check_square_zero(build_delta_v(TwoVectorSpace(Matrix(2, 3, {1, 2, 3, 4, 5, 6})))).passed());
    EXPECT_TRUE(check_square_zero(build_delta_h(sl2().structure(), SparseTensor({3, 0, 0}))).passed());

    SparseTensor c = sl2().structure();
    c.set({2, 0, 0}, 3);
    c.set({0, 2, 0}, -3);
    auto r = check_square_zero(build_delta_h(c, SparseTensor({3, 0, 0})));
    EXPECT_FALSE(r.find("square_zero.alpha")->pass);

    SparseTensor a = adjoint_rep(sl2()).to_action();
    a.add({0, 0, 0}, 1);
    auto r2 = check_square_zero(build_delta_h(sl2().structure(), a));
    EXPECT_TRUE(r2.find("square_zero.alpha")->pass);
    EXPECT_FALSE(r2.find("square_zero.gamma")->pass);
    EXPECT_EQ(r2.find("square_zero.gamma")->witness->indices[0], 1u);

    auto even = graded_commutator(build_delta_v(TwoVectorSpace(1, 1)), build_delta_v(TwoVectorSpace(1, 1)));
    EXPECT_THROW(check_square_zero(even), Error);
}

TEST(CmWeil, ComponentsTrackConditions) {
    auto pop = crossed_module_population(23, 120);
    for (const auto &m : pop) {
        auto cm = to_crossed_module(m.doc);
        auto def = verify_cm(cm), weil = verify_cm_weil(cm);
        EXPECT_EQ(def.passed(), weil.passed()) << m.origin;
        EXPECT_EQ(def.find("J")->pass, weil.find("delta_h.square_zero.alpha")->pass) << m.origin;
        EXPECT_TRUE(weil.passed_prefix("delta_v"));
        if (def.find("J")->pass) {
            EXPECT_EQ(def.find("R")->pass, weil.find("delta_h.square_zero.gamma")->pass) << m.origin;
        }
        EXPECT_EQ(def.find("A")->pass, weil.find("commutator.alpha")->pass) << m.origin;
        EXPECT_EQ(def.find("B")->pass, weil.find("commutator.gamma")->pass) << m.origin;
    }
}

TEST(WeakLie2, Examples) {
    for (const auto &cm : base_crossed_modules())
        EXPECT_TRUE(verify_weak_lie2(WeakLie2Data::from_crossed_module(cm)).passed());
    auto r = verify_weak_lie2(weak_l3());
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks().size(), 5u);

    // strict adjoint sl2 plus l3(e,f,h) = e': delta_v delta_J + delta_J delta_v no longer vanishes
    auto cm = adjoint(sl2());
    WeakLie2Data w(cm.tvs().partial(), cm.base().structure(), cm.action(), alternating_l3(3, 3, 0, 1, 2, 0, 1));
    auto r2 = verify_weak_lie2(w);
    EXPECT_FALSE(r2.passed());
    EXPECT_FALSE(r2.find("delta_squared(2,0)")->pass);
    EXPECT_TRUE(r2.find("delta_squared(1,1)")->pass);

    // partial = 0, e0 |> f = f, l3(e1,e2,e3) = f: delta_J delta_h gamma = -a0*a1*a2*a3 (n0 = 4 so 4-forms exist)
    SparseTensor act({4, 1, 1});
    act.set({0, 0, 0}, 1);
    WeakLie2Data w2(Matrix(4, 1), SparseTensor({4, 4, 4}), act, alternating_l3(4, 1, 1, 2, 3, 0, 1));
    auto r3 = verify_weak_lie2(w2);
    EXPECT_TRUE(r3.find("delta_squared(2,0)")->pass);
    ASSERT_FALSE(r3.find("delta_squared(3,-1)")->pass);
    EXPECT_EQ(r3.find("delta_squared(3,-1)")->witness->lhs, "-a0*a1*a2*a3");
}

TEST(WeakLie2, StrictAgreesWithVerifyCm) {
    for (const auto &m : crossed_module_population(31, 80)) {
        auto cm = to_crossed_module(m.doc);
        EXPECT_EQ(verify_weak_lie2(WeakLie2Data::from_crossed_module(cm)).passed(), verify_cm(cm).passed())
            << m.origin;
    }
}
