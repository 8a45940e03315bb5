#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A stream is fully
// addressed by (seed, stream id, tag), so draws do not depend on thread layout.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace blbc {

class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Block generate(Block counter, Key key)
    {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kW0;
                key[1] += kW1;
            }
            const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * counter[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * counter[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
            counter = {hi1 ^ counter[1] ^ key[0], lo1, hi0 ^ counter[3] ^ key[1], lo0};
        }
        return counter;
    }

private:
    static constexpr std::uint32_t kM0 = 0xD2511F53;
    static constexpr std::uint32_t kM1 = 0xCD9E8D57;
    static constexpr std::uint32_t kW0 = 0x9E3779B9;
    static constexpr std::uint32_t kW1 = 0xBB67AE85;
};

/// Sequential view of the blocks (0, id_lo, id_hi, tag), (1, id_lo, id_hi, tag), ...
class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint64_t id, std::uint32_t tag = 0)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          id_lo_(static_cast<std::uint32_t>(id)), id_hi_(static_cast<std::uint32_t>(id >> 32)), tag_(tag)
    {
    }

    std::uint32_t next_u32()
    {
        if (pos_ == 4) {
            buffer_ = Philox4x32::generate({block_++, id_lo_, id_hi_, tag_}, key_);
            pos_ = 0;
        }
        return buffer_[pos_++];
    }

    /// Uniform on the open interval (0, 1) with 53-bit resolution.
    double next_uniform()
    {
        const std::uint64_t hi = next_u32();
        const std::uint64_t lo = next_u32();
        const std::uint64_t bits = ((hi << 32) | lo) >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; the second variate of each pair is cached.
    double next_normal()
    {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double radius = std::sqrt(-2.0 * std::log(next_uniform()));
        const double angle = 2.0 * std::numbers::pi * next_uniform();
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    Philox4x32::Key key_;
    std::uint32_t id_lo_;
    std::uint32_t id_hi_;
    std::uint32_t tag_;
    std::uint32_t block_ = 0;
    Philox4x32::Block buffer_{};
    int pos_ = 4;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace blbc
