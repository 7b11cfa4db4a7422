#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace qint {

// Compensated (Neumaier) accumulator. Used wherever node contributions are
// reduced so that results do not depend on partitioning.
class NeumaierSum {
  public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Deterministic random source. mt19937_64 with an explicit 53-bit mantissa
// mapping and a hand-rolled Box-Muller transform, so streams are identical
// across standard libraries and platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {
        // mt19937_64 seeding per std::mersenne_twister_engine
        mt_[0] = s_;
        for (std::uint32_t i = 1; i < kN; ++i) {
            mt_[i] = 6364136223846793005ull * (mt_[i - 1] ^ (mt_[i - 1] >> 62)) + i;
        }
        idx_ = kN;
    }

    std::uint64_t next_u64() {
        if (idx_ >= kN) twist();
        std::uint64_t y = mt_[idx_++];
        y ^= (y >> 29) & 0x5555555555555555ull;
        y ^= (y << 17) & 0x71d67fffeda60000ull;
        y ^= (y << 37) & 0xfff7eee000000000ull;
        y ^= y >> 43;
        return y;
    }

    // uniform in [0, 1)
    double uniform53() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform53(); }

    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = 1.0 - uniform53();  // (0, 1]
        const double u2 = uniform53();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

  private:
    static constexpr std::uint32_t kN = 312;
    static constexpr std::uint32_t kM = 156;

    void twist() {
        static constexpr std::uint64_t kMatrixA = 0xb5026f5aa96619e9ull;
        static constexpr std::uint64_t kUpper = 0xffffffff80000000ull;
        static constexpr std::uint64_t kLower = 0x7fffffffull;
        for (std::uint32_t i = 0; i < kN; ++i) {
            const std::uint64_t v = (mt_[i] & kUpper) | (mt_[(i + 1) % kN] & kLower);
            mt_[i] = mt_[(i + kM) % kN] ^ (v >> 1) ^ ((v & 1) ? kMatrixA : 0ull);
        }
        idx_ = 0;
    }

    std::uint64_t s_;
    std::uint64_t mt_[kN];
    std::uint32_t idx_ = kN;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
// Legendre recurrence. Accurate to machine precision for the node counts
// used here (n <= 128).
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace qint
