#pragma once

#include <cstdint>

namespace combalg {

/// Deterministic splitmix64 generator. Used everywhere a seed appears so that
/// reports are byte-identical across runs and platforms (std::uniform_*
/// distributions are implementation-defined and would break that).
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). Rejection-free modulo is fine here: n is tiny
    /// compared to 2^64 in every caller, so the bias is far below any
    /// tolerance in play.
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    /// Uniform double in [0, 1) with 53 bits.
    double real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool coin() { return (next_u64() & 1) != 0; }

    /// Derive an independent stream (for per-trial reproducibility).
    Rng fork() { return Rng(next_u64()); }

   private:
    std::uint64_t state_;
};

}  // namespace combalg
