#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace asmkit {

/// Seeded source of sample rationals p/q with p, q in [1, 9].
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Independent stream for one (seed, tag, n) job, so results do not
    /// depend on how jobs are scheduled.
    static Sampler for_job(std::uint64_t seed, std::string_view tag, int n) {
        std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
        for (unsigned char c : tag) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                          static_cast<std::uint32_t>(n)};
        std::vector<std::uint32_t> out(2);
        seq.generate(out.begin(), out.end());
        return Sampler((static_cast<std::uint64_t>(out[0]) << 32) | out[1]);
    }

    BigRational rational() {
        const long p = static_cast<long>(rng_() % 9) + 1;
        const long q = static_cast<long>(rng_() % 9) + 1;
        return make_rational(p, q);
    }

    std::vector<BigRational> rationals(std::size_t count) {
        std::vector<BigRational> v;
        v.reserve(count);
        for (std::size_t i = 0; i < count; ++i) v.push_back(rational());
        return v;
    }

    std::uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

inline constexpr int default_retries = 200;

/// Runs `draw_and_eval(sampler)` until it completes without hitting a pole.
/// Throws resource_limit once `retries` consecutive draws were degenerate.
template <class Fn>
auto with_resampling(Sampler& sampler, Fn&& draw_and_eval, int retries = default_retries) {
    for (int attempt = 0; attempt < retries; ++attempt) {
        try {
            return draw_and_eval(sampler);
        } catch (const division_by_zero&) {
        }
    }
    throw resource_limit("no admissible sample point found after " + std::to_string(retries) + " draws");
}

}  // namespace asmkit
