#include <gtest/gtest.h>

#include <vector>

#include "algpers/exact/field.hpp"
#include "algpers/exact/matrix.hpp"
#include "algpers/exact/polynomial.hpp"
#include "algpers/verify.hpp"

using namespace algpers;

namespace {

// Rank over Q from the largest nonzero minor, by enumerating row and column
// subsets; only for tiny matrices.
Rational det(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) {
                a[r][k] -= f * a[c][k];
            }
        }
    }
    return d;
}

std::size_t minor_rank(const std::vector<std::vector<Rational>>& m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t best = 0;
    for (unsigned rm = 1; rm < (1u << rows); ++rm) {
        for (unsigned cm = 1; cm < (1u << cols); ++cm) {
            if (__builtin_popcount(rm) != __builtin_popcount(cm)) {
                continue;
            }
            std::vector<std::vector<Rational>> sub;
            for (std::size_t r = 0; r < rows; ++r) {
                if (!((rm >> r) & 1u)) {
                    continue;
                }
                sub.emplace_back();
                for (std::size_t c = 0; c < cols; ++c) {
                    if ((cm >> c) & 1u) {
                        sub.back().push_back(m[r][c]);
                    }
                }
            }
            if (det(sub) != 0) {
                best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(rm)));
            }
        }
    }
    return best;
}

} // namespace

TEST(PrimeField, ArithmeticAndValidation)
{
    EXPECT_THROW(PrimeField(4), std::invalid_argument);
    EXPECT_THROW(PrimeField(1), std::invalid_argument);
    const PrimeField f(7);
    EXPECT_EQ(f.mul(3, f.inv(3)), 1u);
    EXPECT_EQ(f.from_int(-1), 6u);
    EXPECT_EQ(f.from_rational(Rational(1, 2)), 4u);
    EXPECT_THROW(f.from_rational(Rational(1, 7)), std::domain_error);
    EXPECT_THROW(f.inv(0), std::domain_error);
}

TEST(FieldChoice, Parsing)
{
    EXPECT_EQ(FieldChoice::parse("q"), FieldChoice::rationals());
    EXPECT_EQ(FieldChoice::parse("f2"), FieldChoice::prime(2));
    EXPECT_EQ(FieldChoice::parse("fp:5"), FieldChoice::prime(5));
    EXPECT_THROW(FieldChoice::parse("fp:6"), std::invalid_argument);
    EXPECT_THROW(FieldChoice::parse("r"), std::invalid_argument);
    EXPECT_EQ(FieldChoice::prime(3).name(), "fp:3");
}

TEST(Polynomial, ParseAndArithmetic)
{
    const auto p = Polynomial::parse("3*x1^2*x2 - 1/2*x3 + 1", 3);
    EXPECT_EQ(p.to_string(), "3*x1^2*x2 - 1/2*x3 + 1");
    const auto a = Polynomial::parse("x1+x2", 2);
    const auto b = Polynomial::parse("x1-x2", 2);
    EXPECT_EQ(a * b, Polynomial::parse("x1^2 - x2^2", 2));
    EXPECT_EQ(divide_exact(a * b, b), a);
    EXPECT_THROW(divide_exact(a, b), std::domain_error);
    EXPECT_EQ(a.pow(2), Polynomial::parse("x1^2+2*x1*x2+x2^2", 2));
    EXPECT_THROW(Polynomial::parse("x3", 2), std::invalid_argument);
    EXPECT_THROW(Polynomial::parse("x1 +", 2), std::invalid_argument);
    EXPECT_THROW(a + Polynomial::parse("x1", 1), std::invalid_argument);
    const std::vector<Rational> pt{1, -1};
    EXPECT_EQ(a.evaluate(pt), 0);
    EXPECT_EQ(b.evaluate(pt), 2);
    EXPECT_EQ(max_variable_index("x1+x12*x3"), 12u);
}

TEST(SparseMatrix, SetGetErase)
{
    SparseMatrix<std::int64_t> m(2, 2);
    m.set(1, 0, 5);
    m.set(0, 0, 3);
    EXPECT_EQ(m.get(1, 0, 0), 5);
    m.set(1, 0, 0);
    EXPECT_EQ(m.nonzeros(), 1u);
    EXPECT_THROW(m.set(2, 0, 1), std::out_of_range);
}

TEST(Rank, FieldAndBareissAgreeWithMinors)
{
    verify::Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = verify::uniform(rng, 1, 4);
        const int cols = verify::uniform(rng, 1, 4);
        std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
        SparseMatrix<Rational> m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                const int v = verify::uniform(rng, -2, 2) * (verify::uniform(rng, 0, 1));
                dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
                m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), Rational(v));
            }
        }
        const std::size_t expect = minor_rank(dense);
        EXPECT_EQ(rank_kernel(RationalField{}, m).rank, expect);
        EXPECT_EQ(bareiss_rank(m), expect);
        EXPECT_EQ(rank_kernel(RationalField{}, m).kernel_dim, static_cast<std::size_t>(cols) - expect);
    }
}

TEST(Rank, CharacteristicMatters)
{
    // [[1,1],[1,-1]] has determinant -2: rank 2 over Q, rank 1 over F2.
    SparseMatrix<std::int64_t> m(2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    m.set(1, 1, -1);
    const PrimeField f2(2);
    EXPECT_EQ(rank_kernel(f2, m.map([&](std::int64_t v) { return f2.from_int(v); })).rank, 1u);
    EXPECT_EQ(rank_kernel(RationalField{}, m.map([](std::int64_t v) { return Rational(v); })).rank, 2u);
}

TEST(Rank, BareissOverPolynomials)
{
    // [[x1, x2], [x1*x2, x2^2]] is singular; [[x1, x2], [x2, x1]] is not.
    SparseMatrix<Polynomial> a(2, 2);
    a.set(0, 0, Polynomial::parse("x1", 2));
    a.set(0, 1, Polynomial::parse("x2", 2));
    a.set(1, 0, Polynomial::parse("x1*x2", 2));
    a.set(1, 1, Polynomial::parse("x2^2", 2));
    EXPECT_EQ(bareiss_rank(a, 2), 1u);
    a.set(1, 0, Polynomial::parse("x2", 2));
    a.set(1, 1, Polynomial::parse("x1", 2));
    EXPECT_EQ(bareiss_rank(a, 2), 2u);
}

TEST(PersistenceReduce, TriangleFilling)
{
    // Vertices 0,1,2; edges 3={0,1}, 4={0,2}, 5={1,2}; triangle 6.
    std::vector<BoundaryColumn> cols{{0, {}}, {0, {}}, {0, {}}, {1, {{0, -1}, {1, 1}}}, {1, {{0, -1}, {2, 1}}},
                                     {1, {{1, -1}, {2, 1}}}, {2, {{3, 1}, {4, -1}, {5, 1}}}};
    for (const auto& p : {persistence_reduce(cols, PrimeField(2)), persistence_reduce(cols, PrimeField(3))}) {
        EXPECT_EQ(p.pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {2, 4}, {5, 6}}));
        EXPECT_EQ(p.essential, std::vector<std::size_t>{0});
    }
    const auto q = persistence_reduce(cols, RationalField{});
    EXPECT_EQ(q.essential, std::vector<std::size_t>{0});
    std::vector<BoundaryColumn> bad{{0, {}}, {1, {{1, 1}}}};
    EXPECT_THROW(persistence_reduce(bad, PrimeField(2)), std::invalid_argument);
}
