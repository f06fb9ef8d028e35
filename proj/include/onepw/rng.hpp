#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>

#include "onepw/field.hpp"

namespace onepw {

/// Byte-level randomness source. uniform()/uniform_below() build unbiased
/// field elements on top via rejection sampling. Not safe for concurrent
/// use of one instance; give each thread its own.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    virtual void fill_bytes(std::span<std::uint8_t> out) = 0;

    /// Uniform integer in [0, bound); bound > 0.
    mpz_class uniform_below(const mpz_class& bound);

    /// Uniform element of GF(q).
    FieldElement uniform(const ModulusPtr& m);

    std::uint64_t uniform_u64(std::uint64_t bound);
};

/// OS randomness via OpenSSL RAND_bytes.
class SystemRng final : public RandomSource {
public:
    void fill_bytes(std::span<std::uint8_t> out) override;
};

/// Deterministic stream for tests; never used by production code paths.
class SeededRng final : public RandomSource {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}
    void fill_bytes(std::span<std::uint8_t> out) override;

private:
    std::mt19937_64 gen_;
};

}  // namespace onepw
