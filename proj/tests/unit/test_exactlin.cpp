#include "entwine/search.hpp"
#include "entwine/solution_space.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace entwine;

namespace {

Matrix from_ints(const Field& f, const std::vector<std::vector<long>>& rows) {
    Matrix m(f, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, f.from_int(rows[i][j]));
    return m;
}

// naive product used as an oracle for Matrix::apply
Vector naive_apply(const Matrix& m, const Vector& x) {
    Vector y(m.rows(), m.field().zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m.at(i, j) * x[j];
    return y;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int spread = 3) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, f.from_int(static_cast<long>(rng() % (2 * spread + 1)) - spread));
    return m;
}

} // namespace

TEST(Scalar, RationalParsingCanonicalizes) {
    auto q = Field::rationals();
    EXPECT_EQ(q.parse("6/4").to_string(), "3/2");
    EXPECT_EQ(q.parse("-4/2").to_string(), "-2");
    EXPECT_EQ(q.parse("0/5").to_string(), "0");
    EXPECT_THROW(q.parse("1/0"), ParseError);
    EXPECT_THROW(q.parse("1.5"), ParseError);
    EXPECT_THROW(q.parse(""), ParseError);
}

TEST(Scalar, PrimeFieldInversesAndReduction) {
    auto f = Field::prime(7);
    for (long a = 1; a < 7; ++a) EXPECT_TRUE((f.from_int(a) * f.from_int(a).inverse()).is_one()) << a;
    EXPECT_EQ(f.parse("-1").to_string(), "6");
    EXPECT_EQ(f.parse("15").to_string(), "1");
    EXPECT_THROW(Field::prime(9), ContractViolation);
    // 2^61 - 1 is prime
    auto big = Field::prime((1ULL << 61) - 1);
    auto x = big.from_int(123456789);
    EXPECT_TRUE((x * x.inverse()).is_one());
}

TEST(Scalar, MixedFieldsRejected) {
    auto a = Field::prime(5).one();
    auto b = Field::prime(7).one();
    EXPECT_THROW(a + b, ContractViolation);
}

TEST(Matrix, HilbertInverseOverQ) {
    auto q = Field::rationals();
    Matrix h(q, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) h.set(i, j, q.parse("1/" + std::to_string(i + j + 1)));
    auto inv = h.inverse();
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(*inv, from_ints(q, {{9, -36, 30}, {-36, 192, -180}, {30, -180, 180}}));
}

TEST(Matrix, SingularHasNoInverse) {
    auto q = Field::rationals();
    EXPECT_FALSE(from_ints(q, {{1, 2}, {2, 4}}).inverse().has_value());
    // singular mod 3 only
    auto m = from_ints(Field::prime(3), {{1, 1}, {1, 4}});
    EXPECT_FALSE(m.inverse().has_value());
    EXPECT_TRUE(from_ints(q, {{1, 1}, {1, 4}}).inverse().has_value());
}

TEST(Matrix, RrefPivotsAreFirstNonzeroColumns) {
    auto q = Field::rationals();
    auto m = from_ints(q, {{0, 2, 4, 2}, {0, 1, 2, 3}, {0, 0, 0, 0}});
    auto e = m.rref();
    EXPECT_EQ(e.pivots, (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(m.rank(), 2u);
}

TEST(Matrix, KernelDimensionAndMembershipRandomized) {
    std::mt19937_64 rng(7);
    for (auto f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto m = random_matrix(f, 3 + trial % 3, 5, rng, 1);
            auto ker = kernel_basis(m);
            EXPECT_EQ(ker.size() + m.rank(), m.cols());
            for (const auto& v : ker)
                for (const auto& x : naive_apply(m, v)) EXPECT_TRUE(x.is_zero());
        }
    }
}

TEST(Matrix, SolveLinearAgreesWithSubstitution) {
    std::mt19937_64 rng(11);
    for (auto f : {Field::rationals(), Field::prime(3)}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto m = random_matrix(f, 4, 4, rng);
            Vector x(4, f.zero());
            for (auto& v : x) v = f.from_int(static_cast<long>(rng() % 5));
            auto b = naive_apply(m, x);
            auto sol = solve_linear(m, b);
            ASSERT_TRUE(sol.particular.has_value());
            EXPECT_EQ(naive_apply(m, *sol.particular), b);
        }
    }
    // inconsistent system
    auto q = Field::rationals();
    auto sol = solve_linear(from_ints(q, {{1, 1}, {1, 1}}), {q.one(), q.zero()});
    EXPECT_FALSE(sol.particular.has_value());
}

TEST(LinMap, FlattenUnflattenRoundTrip) {
    for (const Shape& s : {Shape{}, Shape{3}, Shape{2, 3}, Shape{2, 1, 4}, Shape{4, 4, 2}}) {
        for (std::size_t k = 0; k < total(s); ++k) EXPECT_EQ(flatten(s, unflatten(s, k)), k);
    }
    EXPECT_EQ(flatten({2, 3}, {1, 2}), 5u);
}

TEST(LinMap, TensorActsFactorwise) {
    auto q = Field::rationals();
    auto f = LinMap({2}, {2}, from_ints(q, {{1, 2}, {3, 4}}));
    auto g = LinMap({3}, {1}, from_ints(q, {{5, 6, 7}}));
    auto t = tensor(f, g);
    EXPECT_EQ(t.domain(), (Shape{2, 3}));
    EXPECT_EQ(t.codomain(), (Shape{2, 1}));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                EXPECT_EQ(t.coeff(k, i * 3 + j), f.coeff(k, i) * g.coeff(0, j));
}

TEST(LinMap, PermutationAndSwap) {
    auto q = Field::rationals();
    auto p = LinMap::permutation(q, {2, 3, 4}, {2, 0, 1});
    EXPECT_EQ(p.codomain(), (Shape{4, 2, 3}));
    // basis (i, j, k) goes to (k, i, j)
    EXPECT_TRUE(p.coeff(flatten({4, 2, 3}, {3, 1, 2}), flatten({2, 3, 4}, {1, 2, 3})).is_one());
    auto s = LinMap::swap(q, {2}, {3});
    EXPECT_EQ(LinMap::swap(q, {3}, {2}) * s, LinMap::identity(q, {2, 3}));
    EXPECT_EQ(s, LinMap::permutation(q, {2, 3}, {1, 0}));
}

TEST(LinMap, CompositionIsAfter) {
    auto q = Field::rationals();
    auto f = LinMap({2}, {2}, from_ints(q, {{0, 1}, {0, 0}}));
    auto g = LinMap({2}, {2}, from_ints(q, {{1, 0}, {1, 1}}));
    EXPECT_EQ((g * f).matrix(), g.matrix() * f.matrix());
    EXPECT_THROW(f * LinMap::identity(q, {3}), ContractViolation);
}

TEST(SolutionSpace, CommutantOfADiagonalMatrix) {
    auto q = Field::rationals();
    auto d = LinMap({3}, {3}, from_ints(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    auto space = solve_homogeneous(q, {3}, {3}, [d](const LinMap& x) { return std::vector<LinMap>{x * d - d * x}; });
    // block sizes 2 and 1 give 4 + 1
    EXPECT_EQ(space.dim(), 5u);
    for (const auto& b : space.basis()) EXPECT_TRUE(space.satisfied_by(b));
    EXPECT_FALSE(space.satisfied_by(elementary(q, {3}, {3}, 0, 2)));
    auto c = space.coordinates_of(space.combine({q.one(), q.from_int(2), q.zero(), q.one(), q.from_int(-1)}));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ((*c)[1], q.from_int(2));
}

TEST(Search, ExhaustiveOverSmallPrimeField) {
    auto f = Field::prime(2);
    SearchBudget b;
    auto plan = detail::plan_search(f, 3, b);
    EXPECT_TRUE(plan.exhaustive);
    std::set<std::vector<std::string>> seen;
    for (std::uint64_t i = 0; i < plan.enumerated; ++i) {
        std::vector<std::string> key;
        for (const auto& s : detail::candidate(plan, i)) key.push_back(s.to_string());
        seen.insert(key);
    }
    EXPECT_EQ(seen.size(), plan.enumerated);
    EXPECT_GE(seen.size(), 7u);
    EXPECT_FALSE(detail::plan_search(Field::rationals(), 2, b).exhaustive);
    EXPECT_TRUE(detail::plan_search(Field::rationals(), 1, b).exhaustive);
}

TEST(Search, FirstSuccessIsDeterministicAcrossThreading) {
    auto body = [](std::uint64_t i) { return i % 97 == 53 || i == 4000; };
    auto a = detail::first_success(10000, true, body);
    auto b = detail::first_success(10000, false, body);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(*a, 53u);
    EXPECT_EQ(*a, *b);
    EXPECT_FALSE(detail::first_success(100, true, [](std::uint64_t) { return false; }).has_value());
}

TEST(Search, BilinearFindsProductSolution) {
    // s0 t0 = 1 with s, t in F_3^2 ; terms[i][j] = [i == 0 && j == 0]
    auto f = Field::prime(3);
    BilinearProblem p{f, 2, 2, {}, {f.one()}};
    p.terms = {{{f.one()}, {f.zero()}}, {{f.zero()}, {f.zero()}}};
    auto r = solve_bilinear(p, {});
    ASSERT_EQ(r.answer, Answer::yes);
    EXPECT_TRUE((r.s[0] * r.t[0]).is_one());
    // no term can reach a nonzero target
    p.terms[0][0] = {f.zero()};
    EXPECT_EQ(solve_bilinear(p, {}).answer, Answer::no);
}

TEST(LinMap, TensorThenMatchesExplicitKronecker) {
    std::mt19937_64 rng(5);
    for (auto f : {Field::rationals(), Field::prime(3)}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto a = LinMap({2}, {3}, random_matrix(f, 3, 2, rng, 1));
            auto b = LinMap({3}, {2}, random_matrix(f, 2, 3, rng, 1));
            auto x = LinMap({4}, {2, 3}, random_matrix(f, 6, 4, rng, 2));
            auto y = LinMap({3, 2}, {5}, random_matrix(f, 5, 6, rng, 2));
            EXPECT_EQ(tensor_then(a, b, x), tensor(a, b) * x);
            EXPECT_EQ(then_tensor(y, a, b), y * tensor(a, b));
            EXPECT_EQ(compose_tensored({{y}, {a, b}, {x}}), y * tensor(a, b) * x);
            EXPECT_EQ(compose_tensored({{b, a}, {a, b}, {x}}), tensor(b, a) * tensor(a, b) * x);
        }
    }
}
