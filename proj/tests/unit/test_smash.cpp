#include "helpers.hpp"

#include "entwine/coforget.hpp"
#include "entwine/smash.hpp"

#include <gtest/gtest.h>

using namespace entwine;
using namespace testing_helpers;

namespace {

smash::Factorization fact(const std::string& name, const Field& f) { return payload_of<smash::Factorization>(name, f); }

std::vector<std::pair<std::string, smash::Factorization>> factorizations(const Field& f) {
    std::vector<std::pair<std::string, smash::Factorization>> out;
    for (const auto& e : corpus::all_builtins(f))
        if (const auto* x = std::get_if<smash::Factorization>(&e.payload)) out.emplace_back(e.name, *x);
    return out;
}

} // namespace

TEST(Smash, FlipGivesTheProductGroup) {
    for (auto f : {Field::rationals(), Field::prime(2)}) {
        auto F = fact("fact-flip-kC2-kC2", f);
        EXPECT_TRUE(smash::check_factorization(F).valid());
        auto s = smash::smash_product(F);
        EXPECT_TRUE(check_algebra(s).valid());
        // b # a at index 2b + a multiplies componentwise in C2 x C2
        std::map<std::pair<std::size_t, std::size_t>, long> table;
        for (std::size_t x = 0; x < 4; ++x)
            for (std::size_t y = 0; y < 4; ++y) table[{x ^ y, x * 4 + y}] = 1;
        EXPECT_EQ(s.mult.matrix(), sparse_map(f, {4, 4}, {4}, table).matrix());
    }
}

TEST(Smash, IdentityInPlaceOfTheFlipIsRejected) {
    auto f = Field::prime(3);
    auto a = corpus::cyclic_group_algebra(f, 2);
    smash::Factorization bad(a, corpus::cyclic_group_algebra(f, 2), LinMap::identity(f, {2, 2}));
    EXPECT_FALSE(smash::check_factorization(bad).valid());
}

TEST(Smash, OpDualIsAnInvolution) {
    for (auto f : {Field::prime(2), Field::prime(3)}) {
        for (const auto& [name, F] : factorizations(f)) {
            auto dd = smash::op_dual(smash::op_dual(F));
            EXPECT_EQ(dd.rmap, F.rmap) << name;
            EXPECT_EQ(dd.a.mult, F.a.mult) << name;
            EXPECT_EQ(dd.b.mult, F.b.mult) << name;
            EXPECT_TRUE(smash::check_factorization(smash::op_dual(F)).valid()) << name;
            EXPECT_TRUE(smash::check_op_dual_isomorphism(F).valid()) << name;
        }
    }
}

TEST(Smash, DictionaryRoundTrip) {
    for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        for (const auto& [name, e] : corpus::builtin_entwinings(f)) {
            auto F = smash::entwining_to_factorization(e);
            EXPECT_TRUE(smash::check_factorization(F).valid()) << name;
            EXPECT_EQ(smash::factorization_to_entwining(F, e.c).psi, e.psi) << name;
        }
    }
    auto f = Field::prime(2);
    auto e = entwining_of("flip-kC2-GL2", f);
    EXPECT_EQ(smash::entwining_to_factorization(e).rmap.matrix(), LinMap::swap(f, {2}, {2}).matrix());
}

TEST(Smash, GammaBridge) {
    for (auto f : {Field::prime(2), Field::prime(3)}) {
        for (const auto& [name, F] : factorizations(f)) EXPECT_TRUE(smash::check_gamma_bridge(F).valid()) << name;
    }
}

TEST(Smash, TrivialFactorsAreFrobenius) {
    auto f = Field::rationals();
    auto k = corpus::trivial_algebra(f);
    smash::Factorization F(k, k, LinMap::identity(f, {1}));
    for (const auto& r : {smash::smash_over_A_report(F), smash::smash_over_B_report(F)}) {
        EXPECT_TRUE(r.split.yes());
        EXPECT_TRUE(r.separable.yes());
        EXPECT_TRUE(r.frobenius.yes());
        EXPECT_TRUE(r.consistent);
    }
}

TEST(Smash, ReportsMatchTheRingExtension) {
    for (auto f : {Field::prime(2), Field::prime(3)}) {
        for (const auto& [name, F] : factorizations(f)) {
            for (const auto& r : {smash::smash_over_A_report(F), smash::smash_over_B_report(F)}) {
                EXPECT_TRUE(r.consistent) << name;
                EXPECT_EQ(r.split.answer, r.ringext_split.answer) << name;
                EXPECT_EQ(r.separable.answer, r.ringext_separable.answer) << name;
                EXPECT_EQ(r.frobenius.answer, r.ringext_frobenius.answer) << name;
            }
        }
    }
}

TEST(Smash, KC2OverKC2Separability) {
    // kC2 x C2 over one factor is separable exactly when 2 is invertible
    for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        auto r = smash::smash_over_A_report(fact("fact-flip-kC2-kC2", f));
        EXPECT_EQ(r.separable.answer, f.characteristic() == 2 ? Answer::no : Answer::yes) << f.name();
        EXPECT_TRUE(r.frobenius.yes());
    }
}

TEST(Smash, CrossCheckAgreesWithCoforget) {
    for (auto f : {Field::prime(2), Field::prime(3)}) {
        for (const char* name : {"flip-k-GL2", "flip-k-DN", "doihopf-kC2", "flip-kC2-GL2"}) {
            auto c = smash::cross_check_frobenius(entwining_of(name, f));
            EXPECT_TRUE(c.agree) << name;
            EXPECT_EQ(c.coforget.answer, c.smash.answer) << name;
            EXPECT_EQ(c.coforget.answer, coforget::FG_frobenius(entwining_of(name, f)).answer) << name;
        }
    }
    EXPECT_TRUE(smash::cross_check_frobenius(entwining_of("flip-k-GL2", Field::rationals())).smash.yes());
}
