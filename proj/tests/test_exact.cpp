#include "l2b/catalog.hpp"
#include "l2b/generator.hpp"

#include <gtest/gtest.h>

using namespace l2b;

TEST(Rational, ParseCanonical) {
    EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
    EXPECT_EQ(Rational::parse("-6/3").str(), "-2");
    EXPECT_EQ(Rational::parse("0/5").str(), "0");
    EXPECT_EQ(Rational::parse("7").str(), "7");
    EXPECT_EQ(Rational::parse("+3/6").str(), "1/2");
}

TEST(Rational, BadInput) {
    for (const char *s : {"1/0", "3/-6", "", "x", "1/", "/2", "1.5", "1//2", " 1"}) {
        try {
            Rational::parse(s);
            ADD_FAILURE() << s;
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::bad_rational) << s;
        }
    }
}

TEST(Rational, NoOverflow) {
    Rational x = Rational::parse("9223372036854775807");
    Rational y = x * x * x;
    EXPECT_EQ((y / x / x).str(), "9223372036854775807");
}

TEST(Matrix, InverseOfRandomInvertible) {
    SeededRng rng(11);
    for (int t = 0; t < 20; ++t) {
        Matrix q = random_invertible(3, rng);
        EXPECT_EQ(q * q.inverse(), Matrix::identity(3));
        EXPECT_EQ(q.inverse() * q, Matrix::identity(3));
    }
}

TEST(Matrix, SingularThrows) {
    Matrix m(2, 2, {1, 2, 2, 4});
    EXPECT_THROW(m.inverse(), Error);
}

TEST(Tensor, ContractIdentity) {
    SparseTensor id({2, 2});
    id.set({0, 0}, 1);
    id.set({1, 1}, 1);
    SparseTensor v({2});
    v.set({0}, 1);
    auto r = contract(id, v, {{1, 0}});
    EXPECT_EQ(r.get({0}), Rational(1));
    EXPECT_EQ(r.get({1}), Rational(0));
}

TEST(Tensor, ContractZero) {
    SparseTensor z({3, 3, 3}), v({3});
    v.set({1}, 5);
    EXPECT_TRUE(contract(z, v, {{0, 0}}).is_zero());
}

TEST(Tensor, ContractSl2EF) {
    // [e,f] = h, basis (e,f,h)
    auto c = instances::sl2().structure();
    SparseTensor e({3}), f({3});
    e.set({0}, 1);
    f.set({1}, 1);
    auto col = contract(contract(c, e, {{0, 0}}), f, {{0, 0}});
    ASSERT_EQ(col.dims(), std::vector<std::size_t>{3});
    EXPECT_EQ(col.get({0}), Rational(0));
    EXPECT_EQ(col.get({1}), Rational(0));
    EXPECT_EQ(col.get({2}), Rational(1));
}

TEST(Tensor, ContractDimensionMismatch) {
    SparseTensor a({2, 3}), b({2});
    try {
        contract(a, b, {{1, 0}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::dimension_mismatch);
        EXPECT_NE(std::string(e.what()).find("(1,0)"), std::string::npos);
    }
}

TEST(Tensor, AlternateSymmetricVanishes) {
    SparseTensor s({2, 2});
    s.set({0, 1}, 3);
    s.set({1, 0}, 3);
    s.set({1, 1}, 2);
    EXPECT_TRUE(alternate(s, {0, 1}).is_zero());
}

TEST(Tensor, AlternateIdempotent) {
    SparseTensor a({3, 3});
    a.set({0, 2}, 4);
    a.set({2, 0}, -4);
    EXPECT_EQ(alternate(a, {0, 1}), a);
    SparseTensor r({3, 3, 3});
    r.set({0, 1, 2}, 1);
    auto once = alternate(r, {0, 1, 2});
    EXPECT_EQ(alternate(once, {0, 1, 2}), once);
    EXPECT_EQ(once.get({2, 1, 0}), Rational(-1, 6));
    EXPECT_EQ(once.get({1, 2, 0}), Rational(1, 6));
}

TEST(Tensor, AlternateSimpleTensor) {
    SparseTensor ef({2, 2});
    ef.set({0, 1}, 1);
    auto a = alternate(ef, {0, 1});
    EXPECT_EQ(a.get({0, 1}), Rational(1, 2));
    EXPECT_EQ(a.get({1, 0}), Rational(-1, 2));
    EXPECT_EQ(a.nnz(), 2u);
}

TEST(Tensor, KoszulSigns) {
    EXPECT_EQ(koszul_sign({1, 1}, {1, 0}), -1);
    EXPECT_EQ(koszul_sign({1, 2}, {1, 0}), 1);
    EXPECT_EQ(koszul_sign({1, 1, 1}, {2, 0, 1}), 1);
    EXPECT_EQ(koszul_sign({1, 1, 1}, {1, 0, 2}), -1);
    EXPECT_THROW(koszul_sign({1, 1}, {0, 0}), Error);
    EXPECT_THROW(koszul_sign({1, 1}, {0}), Error);
}

TEST(Tensor, KoszulMatchesTranspositionCount) {
    // odd degrees only: koszul sign is the permutation parity
    std::vector<std::size_t> p = {0, 1, 2, 3};
    do {
        int inv = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                inv += p[i] > p[j];
        EXPECT_EQ(koszul_sign({1, 3, 5, 1}, p), inv % 2 ? -1 : 1);
        EXPECT_EQ(koszul_sign({2, 3, 4, 1}, p), koszul_sign({0, 1, 0, 1}, p));
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST(Tensor, PermuteAxesRoundTrip) {
    SparseTensor t({2, 3, 4});
    t.set({1, 2, 3}, 5);
    t.set({0, 1, 2}, -1);
    auto p = t.permute_axes({1, 2, 0});
    EXPECT_EQ(p.dims(), (std::vector<std::size_t>{3, 4, 2}));
    EXPECT_EQ(p.permute_axes({2, 0, 1}), t);
    EXPECT_THROW(t.permute_axes({0, 0, 1}), Error);
}

TEST(Tensor, IndexRange) {
    SparseTensor t({2, 2});
    EXPECT_THROW(t.set({2, 0}, 1), Error);
    EXPECT_THROW(t.get({0}), Error);
}

TEST(Tensor, ZeroEntriesNotStored) {
    SparseTensor t({2});
    t.set({0}, 3);
    t.add({0}, -3);
    EXPECT_EQ(t.nnz(), 0u);
    EXPECT_TRUE(t.is_zero());
}
