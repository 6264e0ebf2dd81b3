#include "zerosum/builders.hpp"
#include "zerosum/decompose.hpp"
#include "zerosum/engine.hpp"
#include "zerosum/error.hpp"

#include <gtest/gtest.h>

using namespace zerosum;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an exception";
    return ErrorKind::Internal;
}

} // namespace

TEST(Decompose, MiddlePositions) {
    EXPECT_EQ(middle_positions(3, 2), (std::vector<std::size_t>{2}));
    EXPECT_EQ(middle_positions(7, 2), (std::vector<std::size_t>{4}));
    EXPECT_EQ(middle_positions(8, 3), (std::vector<std::size_t>{3, 6}));
    EXPECT_EQ(middle_positions(5, 3), (std::vector<std::size_t>{2, 4}));
    EXPECT_THROW((void)middle_positions(4, 2), Error);
}

TEST(Decompose, UnitsOverZ25) {
    const auto cert = decompose(Seq(25, {10, 4, 20}), Family::Units, ZnContext(25));
    EXPECT_EQ(cert.prime, 5u);
    EXPECT_EQ(cert.middle_positions, (std::vector<std::size_t>{2}));
    EXPECT_EQ(cert.connector.values, (std::vector<Value>{4}));
    ASSERT_EQ(cert.children.size(), 2u);
    EXPECT_EQ(cert.children[0].sequence, Seq(5, {2}));
    EXPECT_EQ(cert.children[1].sequence, Seq(5, {4}));
    EXPECT_EQ(cert.children[0].leaf, "unit singleton");
    EXPECT_TRUE(check_certificate(cert).ok);
}

TEST(Decompose, UnitsOverZ75HasNestedSplit) {
    const auto cert = decompose(Seq(75, {30, 12, 60, 38, 30, 63, 60}), Family::Units, ZnContext(75));
    EXPECT_EQ(cert.prime, 3u);
    EXPECT_EQ(cert.connector.values, (std::vector<Value>{38}));
    EXPECT_EQ(cert.children[0].sequence, Seq(25, {10, 4, 20}));
    EXPECT_EQ(cert.children[1].sequence, Seq(25, {10, 21, 20}));
    EXPECT_EQ(cert.children[1].prime, 5u);
    EXPECT_TRUE(check_certificate(cert).ok);
    EXPECT_EQ(build(to_recipe(cert)), cert.sequence);
}

TEST(Decompose, CubesOverZ95) {
    const auto three = decompose(Seq(95, {38, 37, 38, 78, 76}), Family::UnitsCubed, ZnContext(95));
    EXPECT_EQ(three.prime, 19u);
    EXPECT_EQ(three.middle_positions, (std::vector<std::size_t>{2, 4}));
    EXPECT_EQ(three.connector.images, (std::vector<Value>{18, 2}));
    EXPECT_EQ(three.children.size(), 3u);
    EXPECT_TRUE(three.alternate_primes.empty());
    EXPECT_TRUE(check_certificate(three).ok);

    const auto two = decompose(Seq(95, {15, 30, 69, 25, 35}), Family::UnitsCubed, ZnContext(95));
    EXPECT_EQ(two.prime, 5u);
    EXPECT_EQ(two.middle_positions, (std::vector<std::size_t>{3}));
    EXPECT_EQ(two.connector.images, (std::vector<Value>{4}));
    EXPECT_EQ(two.children[0].sequence, Seq(19, {3, 6}));
    EXPECT_EQ(two.children[0].leaf, "coset pair");
    EXPECT_TRUE(check_certificate(two).ok);
}

TEST(Decompose, SquaresOverZ25FitsTheThreePartPattern) {
    // Outside the builder regime (5 < 7), so checked piece by piece.
    const Seq s(25, {20, 10, 21, 5, 15, 12, 15, 20});
    EXPECT_FALSE(has_zero_window(s, WeightSet::units_pow(ZnContext(25), 2)).has_value());
    EXPECT_EQ(split_primes(s, 3u), (std::vector<Value>{5}));
    const auto q5 = WeightSet::units_pow(ZnContext(5), 2);
    EXPECT_FALSE(has_zero_window(Seq(5, {21 % 5, 12 % 5}), q5).has_value());
    for (const Seq& part : {Seq(5, {4, 2}), Seq(5, {1, 3}), Seq(5, {3, 4})})
        EXPECT_FALSE(has_zero_window(part, q5).has_value());
    EXPECT_EQ(kind_of([&] { (void)decompose(s, Family::UnitsSquared, ZnContext(25)); }), ErrorKind::DomainRejected);
}

TEST(Decompose, SquaresRoundTrip) {
    const ZnContext ctx(77);
    const Seq s = build(default_recipe(Family::UnitsSquared, ctx));
    const auto cert = decompose(s, Family::UnitsSquared, ctx);
    EXPECT_TRUE(cert.alternate_primes.empty());
    EXPECT_TRUE(check_certificate(cert).ok);
    EXPECT_EQ(build(to_recipe(cert)), s);
}

TEST(Decompose, Rejections) {
    EXPECT_EQ(kind_of([] { (void)decompose(Seq(25, {10, 5, 20}), Family::Units, ZnContext(25)); }),
              ErrorKind::NotExtremal);
    EXPECT_EQ(kind_of([] { (void)decompose(Seq(25, {10, 4}), Family::Units, ZnContext(25)); }),
              ErrorKind::NotExtremal);
    EXPECT_EQ(kind_of([] { (void)decompose(Seq(10, {5, 2, 5}), Family::Units, ZnContext(10)); }),
              ErrorKind::DomainRejected);
    EXPECT_EQ(kind_of([] { (void)decompose(Seq(25, {10, 4, 20}), Family::Units, ZnContext(75)); }),
              ErrorKind::InvalidArgument);
}

TEST(Decompose, TamperedCertificatesFail) {
    const auto good = decompose(Seq(75, {30, 12, 60, 38, 30, 63, 60}), Family::Units, ZnContext(75));
    auto c = good;
    c.prime = 5;
    EXPECT_FALSE(check_certificate(c).ok);
    c = good;
    c.connector.values = {37};
    EXPECT_FALSE(check_certificate(c).ok);
    c = good;
    c.children[1].children[0].sequence = Seq(5, {1});
    EXPECT_FALSE(check_certificate(c).ok);
    c = good;
    c.alternate_primes = {5};
    EXPECT_FALSE(check_certificate(c).ok);
    c = good;
    c.children[0].leaf = "coset pair";
    EXPECT_FALSE(check_certificate(c).ok);
    c = good;
    c.middle_positions = {3};
    EXPECT_FALSE(check_certificate(c).ok);
    const auto r = check_certificate(c);
    EXPECT_FALSE(r.reason.empty());
}

TEST(Decompose, CoprimeTermCounts) {
    const auto counts = coprime_term_counts(Seq(75, {30, 12, 60, 38, 30, 63, 60}));
    ASSERT_EQ(counts.size(), 2u);
    EXPECT_EQ(counts[0].prime, 3u);
    EXPECT_EQ(counts[0].coprime_terms, 1u);
    EXPECT_EQ(counts[1].prime, 5u);
    EXPECT_EQ(counts[1].coprime_terms, 3u);
}

TEST(Decompose, LiftImplication) {
    // (10, 15)/5 = (2, 3) is a U(5) zero-sum, and so is (10, 15) over U(25).
    const auto lift = lift_zero_sum_by_prime(Seq(25, {10, 15}), 5, 1);
    EXPECT_TRUE(lift.quotient_zero_sum);
    EXPECT_TRUE(lift.zero_sum);
    EXPECT_TRUE(lift.holds());
    const auto none = lift_zero_sum_by_prime(Seq(25, {10}), 5, 1);
    EXPECT_FALSE(none.quotient_zero_sum);
    EXPECT_THROW((void)lift_zero_sum_by_prime(Seq(25, {10, 4}), 5, 1), Error);
}

TEST(Decompose, JsonFieldOrderIsFixed) {
    const auto json = to_json(decompose(Seq(25, {10, 4, 20}), Family::Units, ZnContext(25)));
    EXPECT_EQ(json.rfind("{\"family\":\"units\",\"n\":25,\"sequence\":[10,4,20],\"prime\":5,", 0), 0u) << json;
    EXPECT_NE(json.find("\"leaf\":\"unit singleton\""), std::string::npos);
    EXPECT_EQ(json, to_json(decompose(Seq(25, {10, 4, 20}), Family::Units, ZnContext(25))));
}
