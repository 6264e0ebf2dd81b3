#include "zerosum/error.hpp"
#include "zerosum/sequence.hpp"

#include <gtest/gtest.h>

using namespace zerosum;

TEST(Sequence, ParseAndFormat) {
    const Seq s = parse_seq(25, "10,4,20");
    EXPECT_EQ(s, Seq(25, {10, 4, 20}));
    EXPECT_EQ(to_string(s), "(10,4,20)");
    EXPECT_EQ(format_terms(s.terms()), "10,4,20");
    EXPECT_TRUE(parse_seq(5, "").empty());
}

TEST(Sequence, ParseRejectsMalformed) {
    EXPECT_THROW((void)parse_seq(25, "10,,4"), Error);
    EXPECT_THROW((void)parse_seq(25, "10, 4"), Error);
    EXPECT_THROW((void)parse_seq(25, "25"), Error);
    EXPECT_THROW((void)parse_seq(25, "-1"), Error);
    EXPECT_THROW((void)parse_seq(25, "1,"), Error);
}

TEST(Sequence, TermsMustBeReduced) {
    EXPECT_THROW(Seq(7, {7}), Error);
    EXPECT_THROW(Seq(1, {0}), Error);
}

TEST(Sequence, SliceAndOrdering) {
    const Seq s(9, {1, 2, 3, 4});
    EXPECT_EQ(s.slice(1, 2), Seq(9, {2, 3}));
    EXPECT_THROW((void)s.slice(3, 2), Error);
    EXPECT_LT(Seq(9, {1, 2}), Seq(9, {1, 3}));
    EXPECT_EQ(s.at(2), (Residue{3, 9}));
}

TEST(Sequence, DivideAndScale) {
    const Seq s(95, {38, 38, 76});
    EXPECT_EQ(divide_by(s, 19), Seq(5, {2, 2, 4}));
    EXPECT_EQ(scale_into(Seq(5, {2, 2, 4}), 19, 95), s);
    EXPECT_THROW((void)divide_by(Seq(95, {38, 37}), 19), Error);
    EXPECT_THROW((void)divide_by(Seq(5, {0}), 5), Error);
}

TEST(Sequence, NaturalMap) {
    EXPECT_EQ(natural_map(Seq(95, {38, 37, 38, 78, 76}), 19), Seq(19, {0, 18, 0, 2, 0}));
}
