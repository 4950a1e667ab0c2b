#include "support.hpp"

#include <gtest/gtest.h>

using namespace modgraph;

TEST(ParseDescriptor, CyclicDefaultsRingToModulus)
{
    auto [ring, module] = parse_descriptor("Z12", std::nullopt);
    EXPECT_EQ(ring.modulus(), 12u);
    EXPECT_EQ(module.factors(), (std::vector<Int>{12}));
    EXPECT_TRUE(module.is_regular());
}

TEST(ParseDescriptor, ExplicitRing)
{
    auto [ring, module] = parse_descriptor("Z2xZ4", "Z8");
    EXPECT_EQ(ring.modulus(), 8u);
    EXPECT_EQ(module.factors(), (std::vector<Int>{2, 4}));
    EXPECT_EQ(module.order(), 8u);
    EXPECT_FALSE(module.is_regular());
}

TEST(ParseDescriptor, DefaultRingIsLcm)
{
    auto [ring, module] = parse_descriptor("Z4xZ6", std::nullopt);
    EXPECT_EQ(ring.modulus(), 12u);
    EXPECT_EQ(module.descriptor(), "Z4xZ6");
}

TEST(ParseDescriptor, FactorMustDivideModulus)
{
    try {
        parse_descriptor("Z5", "Z6");
        FAIL() << "expected a divisibility error";
    } catch (const DescriptorError& e) {
        EXPECT_NE(std::string(e.what()).find("5"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("6"), std::string::npos);
    }
}

TEST(ParseDescriptor, MalformedText)
{
    for (const char* bad : {"", "Z", "Z1", "Z0", "12", "z12", "Z12x", "xZ12", "Z12xx Z2", "Z2*Z4", "Z-3", "Z 4",
                            "Z99999999999999"})
        EXPECT_THROW(parse_descriptor(bad, std::nullopt), DescriptorError) << bad;
    EXPECT_THROW(parse_descriptor("Z4", "Z4xZ2"), DescriptorError);
    EXPECT_THROW(parse_descriptor("Z4", "Z1"), DescriptorError);
}

TEST(FiniteModule, EncodeDigitsRoundTrip)
{
    FiniteModule m(Ring(12), {2, 6, 4});
    EXPECT_EQ(m.order(), 48u);
    for (Element x = 0; x < m.order(); ++x) {
        auto d = m.digits(x);
        EXPECT_EQ(m.encode(d), x);
    }
    // First factor is most significant, so index order is tuple order.
    EXPECT_EQ(m.digits(1), (std::vector<Int>{0, 0, 1}));
    EXPECT_EQ(m.digits(4), (std::vector<Int>{0, 1, 0}));
}

TEST(FiniteModule, ArithmeticMatchesTuples)
{
    FiniteModule m(Ring(12), {2, 6});
    auto naive = support::naive(m);
    for (Element x = 0; x < m.order(); ++x)
        for (Element y = 0; y < m.order(); ++y) {
            auto dx = m.digits(x), dy = m.digits(y);
            auto sum = naive.add(oracle::Tuple(dx.begin(), dx.end()), oracle::Tuple(dy.begin(), dy.end()));
            auto got = m.digits(m.add(x, y));
            EXPECT_EQ(oracle::Tuple(got.begin(), got.end()), sum);
        }
    for (Int r = 0; r < 12; ++r)
        for (Element x = 0; x < m.order(); ++x) {
            auto dx = m.digits(x);
            auto got = m.digits(m.scale(r, x));
            EXPECT_EQ(oracle::Tuple(got.begin(), got.end()), naive.scale(r, oracle::Tuple(dx.begin(), dx.end())));
        }
}

TEST(FiniteModule, Formatting)
{
    FiniteModule z12 = FiniteModule::regular(Ring(12));
    EXPECT_EQ(z12.format(5), "5");
    FiniteModule m(Ring(4), {2, 4});
    EXPECT_EQ(m.format(m.encode(std::vector<Int>{1, 3})), "(1,3)");
    EXPECT_EQ(m.descriptor(), "Z2xZ4");
}

TEST(FiniteModule, RejectsBadFactors)
{
    EXPECT_THROW(FiniteModule(Ring(6), {4}), DescriptorError);
    EXPECT_THROW(FiniteModule(Ring(6), {1}), DescriptorError);
    EXPECT_THROW(FiniteModule(Ring(6), {}), DescriptorError);
}
