#include <doctest.h>

#include <cmath>

#include "blbc/philox.hpp"

using namespace blbc;

TEST_CASE("Philox4x32-10 known-answer vectors")
{
    using B = Philox4x32::Block;
    CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("counter streams")
{
    CounterStream a(5, 17, 1), b(5, 17, 1), c(5, 18, 1), d(5, 17, 2);
    for (int i = 0; i < 10; ++i) {
        const auto x = a.next_u32();
        CHECK(x == b.next_u32());
        (void)c.next_u32();
        (void)d.next_u32();
    }
    CHECK(CounterStream(5, 17, 1).next_u32() != CounterStream(5, 18, 1).next_u32());
    CHECK(CounterStream(5, 17, 1).next_u32() != CounterStream(6, 17, 1).next_u32());

    SUBCASE("normal moments")
    {
        CounterStream s(123, 0);
        const int n = 400000;
        double m1 = 0, m2 = 0, m4 = 0;
        for (int i = 0; i < n; ++i) {
            const double z = s.next_normal();
            m1 += z;
            m2 += z * z;
            m4 += z * z * z * z;
        }
        m1 /= n, m2 /= n, m4 /= n;
        CHECK(std::abs(m1) < 5.0 / std::sqrt(n));
        CHECK(std::abs(m2 - 1.0) < 5.0 * std::sqrt(2.0 / n));
        CHECK(std::abs(m4 - 3.0) < 5.0 * std::sqrt(96.0 / n));
    }
    SUBCASE("uniforms stay in the open interval")
    {
        CounterStream s(0, 0);
        for (int i = 0; i < 100000; ++i) {
            const double u = s.next_uniform();
            CHECK_UNARY(u > 0.0 && u < 1.0);
        }
    }
}
