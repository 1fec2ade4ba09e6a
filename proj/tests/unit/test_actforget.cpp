#include "helpers.hpp"

#include "entwine/actforget.hpp"

#include <gtest/gtest.h>

using namespace entwine;
using namespace testing_helpers;

namespace {

// e(c) = 1 (x) 1 + g (x) g for both grouplikes of GL2, A = kC2
LinMap group_casimir(const Field& f) { return sparse_map(f, {2}, {2, 2}, {{{0, 0}, 1}, {{3, 0}, 1}, {{0, 1}, 1}, {{3, 1}, 1}}); }

// vartheta(c (x) a) = coefficient of 1 in a, on C (x) A ordered (c, a)
LinMap unit_coefficient(const Field& f) { return LinMap::functional(f, {2, 2}, ints(f, {1, 0, 1, 0})); }

} // namespace

TEST(Actforget, TrivialAlgebraOverGrouplikes) {
    for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        auto e = entwining_of("flip-k-GL2", f);
        EXPECT_EQ(actforget::compute_V1prime(e).dim(), 2u);
        EXPECT_EQ(actforget::compute_W1prime(e).dim(), 2u);
        auto sep = actforget::Fprime_separable(e);
        ASSERT_TRUE(sep.yes());
        EXPECT_EQ(sep.at("vartheta").matrix(), LinMap::functional(f, {2, 1}, ints(f, {1, 1})).matrix());
        auto gsep = actforget::Gprime_separable(e);
        ASSERT_TRUE(gsep.yes());
        EXPECT_EQ(gsep.at("e").matrix(), sparse_map(f, {2}, {1, 1}, {{{0, 0}, 1}, {{0, 1}, 1}}).matrix());
    }
}

TEST(Actforget, DualNumberCoalgebra) {
    for (auto f : {Field::rationals(), Field::prime(2)}) {
        auto e = entwining_of("flip-k-DN", f);
        EXPECT_EQ(actforget::compute_V1prime(e).dim(), 2u);
        EXPECT_TRUE(actforget::Fprime_separable(e).yes());
        EXPECT_TRUE(actforget::Gprime_separable(e).yes());
    }
}

TEST(Actforget, GroupAlgebraSeparabilityDependsOnCharacteristic) {
    for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        auto e = entwining_of("flip-kC2-GL2", f);
        EXPECT_EQ(actforget::compute_V1prime(e).dim(), 4u);
        // e(c) ranges over the Casimir elements of kC2 for each grouplike
        EXPECT_EQ(actforget::compute_W1prime(e).dim(), 4u);
        EXPECT_TRUE(actforget::Fprime_separable(e).yes());
        EXPECT_EQ(actforget::Gprime_separable(e).answer, f.characteristic() == 2 ? Answer::no : Answer::yes) << f.name();
    }
}

TEST(Actforget, HandWitnesses) {
    for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        auto e = entwining_of("flip-kC2-GL2", f);
        auto t = unit_coefficient(f);
        EXPECT_TRUE(actforget::check_frobenius_witnesses(e, t, group_casimir(f)).valid());
        // 1 (x) 1 normalizes correctly but does not commute with g
        auto not_casimir = sparse_map(f, {2}, {2, 2}, {{{0, 0}, 1}, {{0, 1}, 1}});
        EXPECT_FALSE(actforget::compute_W1prime(e).satisfied_by(not_casimir));
        EXPECT_FALSE(actforget::check_frobenius_witnesses(e, t, not_casimir).valid());

        auto db = actforget::dual_basis_A(e, t, group_casimir(f));
        EXPECT_EQ(db.size(), 2u);
        EXPECT_TRUE(actforget::check_dual_basis_A(e, db).valid());
    }
}

TEST(Actforget, TrivialDualBasis) {
    auto f = Field::prime(3);
    auto e = entwining_of("flip-k-GL2", f);
    auto v = actforget::FprimeGprime_frobenius(e);
    ASSERT_TRUE(v.yes());
    auto db = actforget::dual_basis_A(e, v.at("vartheta"), v.at("e"));
    EXPECT_EQ(db.size(), 1u);
    EXPECT_TRUE(actforget::check_dual_basis_A(e, db).valid());
}

TEST(Actforget, ConvertersAreMutuallyInverse) {
    for (auto f : {Field::prime(2), Field::prime(3)}) {
        for (const char* name : {"flip-k-GL2", "flip-kC2-GL2", "doihopf-kC2", "flip-kDN-DN"}) {
            auto e = entwining_of(name, f);
            auto v1 = actforget::compute_V1prime(e);
            auto w1 = actforget::compute_W1prime(e);
            for (const auto& t : v1.basis())
                EXPECT_EQ(actforget::Omegabar_to_vartheta(e, actforget::vartheta_to_Omegabar(e, t)).matrix(), t.matrix()) << name;
            for (const auto& x : w1.basis())
                EXPECT_EQ(actforget::Omega_to_e(e, actforget::e_to_Omega(e, x)).matrix(), x.matrix()) << name;
        }
    }
}

TEST(Actforget, WitnessAndIsomorphismRoutesAgree) {
    for (auto f : {Field::prime(2), Field::prime(3)}) {
        for (const auto& [name, e] : corpus::builtin_entwinings(f)) {
            auto w = actforget::FprimeGprime_frobenius(e, Route::witnesses);
            auto i = actforget::FprimeGprime_frobenius(e, Route::isomorphism);
            EXPECT_EQ(w.answer, i.answer) << name << " over " << f.name();
            if (i.yes()) EXPECT_TRUE(actforget::check_frobenius_witnesses(e, i.at("vartheta"), i.at("e")).valid()) << name;
        }
    }
}

TEST(Actforget, RejectsWrongShapes) {
    auto f = Field::prime(2);
    auto e = entwining_of("flip-kC2-GL2", f);
    EXPECT_THROW(actforget::vartheta_residual(e, LinMap::functional(f, {3}, ints(f, {1, 0, 0}))), ContractViolation);
}
