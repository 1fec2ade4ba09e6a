#include "helpers.hpp"

#include "entwine/ringext.hpp"

#include <gtest/gtest.h>

using namespace entwine;
using namespace testing_helpers;

namespace {

ringext::RingExtension ext(const std::string& name, const Field& f) { return payload_of<ringext::RingExtension>(name, f); }

// M2 basis e11, e12, e21, e22 at index 2i + j
std::size_t unit_matrix(std::size_t i, std::size_t j) { return 2 * i + j; }

LinMap element_of_SS(const Field& f, std::size_t ns, const std::map<std::pair<std::size_t, std::size_t>, long>& terms) {
    Vector v(ns * ns, f.zero());
    for (const auto& [k, c] : terms) v[k.first * ns + k.second] = f.from_int(c);
    return LinMap::element(f, {ns, ns}, v);
}

// sum_ij e_ij (x) e_ji
LinMap matrix_casimir(const Field& f) {
    std::map<std::pair<std::size_t, std::size_t>, long> t;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) t[{unit_matrix(i, j), unit_matrix(j, i)}] = 1;
    return element_of_SS(f, 4, t);
}

} // namespace

TEST(Ringext, TensorOverR) {
    auto f = Field::rationals();
    EXPECT_EQ(ringext::tensor_over_R(ext("ext-k-M2", f)).dim, 16u);
    EXPECT_EQ(ringext::tensor_over_R(ext("ext-k-kC3", f)).dim, 9u);
    for (const char* name : {"ext-id-kC2", "ext-id-M2"}) {
        auto x = ext(name, f);
        auto q = ringext::tensor_over_R(x);
        EXPECT_EQ(q.dim, x.ns()) << name;
        EXPECT_EQ(q.projection * q.section, LinMap::identity(f, {q.dim})) << name;
    }
    // over the diagonal only e_ij (x) e_jk survives
    EXPECT_EQ(ringext::tensor_over_R(ext("ext-kxk-M2", f)).dim, 8u);
}

TEST(Ringext, ConditionalExpectationsAndHom) {
    for (auto f : {Field::rationals(), Field::prime(2)}) {
        EXPECT_EQ(ringext::conditional_expectations(ext("ext-k-M2", f)).dim(), 4u);
        EXPECT_EQ(ringext::conditional_expectations(ext("ext-k-kC2", f)).dim(), 2u);
        EXPECT_EQ(ringext::hom_R(ext("ext-k-M2", f)).dim(), 4u);
        EXPECT_EQ(ringext::conditional_expectations(ext("ext-id-M2", f)).dim(), 1u);
    }
}

TEST(Ringext, Split) {
    for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        for (const char* name : {"ext-k-kC2", "ext-k-M2", "ext-id-kC2", "ext-id-M2"}) {
            auto v = ringext::split_check(ext(name, f));
            ASSERT_TRUE(v.yes()) << name;
            EXPECT_EQ(v.at("nu").matrix().cols(), ext(name, f).ns());
        }
    }
}

TEST(Ringext, Separable) {
    auto q = Field::rationals();
    auto f2 = Field::prime(2);
    EXPECT_TRUE(ringext::separable_check(ext("ext-k-kC2", q)).yes());
    EXPECT_EQ(ringext::separable_check(ext("ext-k-kC2", f2)).answer, Answer::no);
    EXPECT_TRUE(ringext::separable_check(ext("ext-k-kC3", f2)).yes());
    EXPECT_EQ(ringext::separable_check(ext("ext-k-kC3", Field::prime(3))).answer, Answer::no);
    for (auto f : {q, f2}) {
        EXPECT_TRUE(ringext::separable_check(ext("ext-id-kC2", f)).yes());
        auto x = ext("ext-k-M2", f);
        auto tq = ringext::tensor_over_R(x);
        EXPECT_EQ(ringext::casimir_elements(x, tq).dim(), 4u);
        // sum_i e_i1 (x) e_1i
        auto e = tq.projection * element_of_SS(f, 4, {{{unit_matrix(0, 0), unit_matrix(0, 0)}, 1}, {{unit_matrix(1, 0), unit_matrix(0, 1)}, 1}});
        EXPECT_TRUE(ringext::casimir_elements(x, tq).satisfied_by(e));
        EXPECT_FALSE(ringext::casimir_elements(x, tq).satisfied_by(tq.projection * element_of_SS(f, 4, {{{0, 0}, 1}})));
        EXPECT_TRUE(ringext::separable_check(x).yes());
    }
}

TEST(Ringext, FrobeniusHandWitnesses) {
    for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        auto x = ext("ext-k-M2", f);
        auto q = ringext::tensor_over_R(x);
        auto trace = LinMap::functional(f, {4}, ints(f, {1, 0, 0, 1}));
        auto e = q.projection * matrix_casimir(f);
        EXPECT_TRUE(ringext::check_frobenius_witnesses(x, q, trace, e).valid());
        auto db = ringext::dual_basis_S(x, q, trace, e);
        EXPECT_TRUE(ringext::check_dual_basis_S(x, db).valid());
        // the e11 coefficient is a conditional expectation but pairs with no e
        auto e11 = LinMap::functional(f, {4}, ints(f, {1, 0, 0, 0}));
        EXPECT_FALSE(ringext::check_frobenius_witnesses(x, q, e11, e).valid());

        auto c2 = ext("ext-k-kC2", f);
        auto qc = ringext::tensor_over_R(c2);
        auto nu = LinMap::functional(f, {2}, ints(f, {1, 0}));
        auto ec = qc.projection * element_of_SS(f, 2, {{{0, 0}, 1}, {{1, 1}, 1}});
        EXPECT_TRUE(ringext::check_frobenius_witnesses(c2, qc, nu, ec).valid()) << f.name();
        EXPECT_TRUE(ringext::frobenius_check(c2).yes());

        auto id = ext("ext-id-M2", f);
        auto qi = ringext::tensor_over_R(id);
        auto one = qi.projection * element_of_SS(f, 4, {{{unit_matrix(0, 0), unit_matrix(0, 0)}, 1}, {{unit_matrix(1, 1), unit_matrix(1, 1)}, 1}});
        EXPECT_TRUE(ringext::check_frobenius_witnesses(id, qi, LinMap::identity(f, {4}), one).valid());
    }
}

TEST(Ringext, RoutesAgree) {
    for (auto f : {Field::prime(2), Field::prime(3)}) {
        for (const auto& [name, x] : corpus::builtin_extensions(f)) {
            auto w = ringext::frobenius_check(x, Route::witnesses);
            auto i = ringext::frobenius_check(x, Route::isomorphism);
            EXPECT_EQ(w.answer, i.answer) << name << " over " << f.name();
        }
    }
}

TEST(Ringext, ProjectivityOfS) {
    auto f = Field::prime(2);
    for (const char* name : {"ext-k-M2", "ext-kxk-M2", "ext-id-kC2"}) {
        auto x = ext(name, f);
        auto hom = ringext::hom_R(x);
        auto db = ringext::projective_dual_basis(x, hom);
        ASSERT_TRUE(db.has_value()) << name;
        EXPECT_TRUE(ringext::check_dual_basis_S(x, *db).valid()) << name;
    }
    // k is not projective over k[x]/x^2
    auto dn = ext("ext-kDN-k", f);
    EXPECT_FALSE(ringext::projective_dual_basis(dn, ringext::hom_R(dn)).has_value());
}

TEST(Ringext, NonUnitalMapIsInvalid) {
    auto f = Field::rationals();
    auto k = corpus::trivial_algebra(f);
    auto s = corpus::cyclic_group_algebra(f, 2);
    EXPECT_THROW(ringext::RingExtension(k, s, LinMap::element(f, {2}, ints(f, {0, 1}))), InvalidStructure);
}
