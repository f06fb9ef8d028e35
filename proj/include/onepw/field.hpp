#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "onepw/errors.hpp"

namespace onepw {

class Modulus;
using ModulusPtr = std::shared_ptr<const Modulus>;

/// Prime arithmetic domain. q is chosen so that every digest of
/// hash_hex_len lowercase hex characters embeds as an integer below q,
/// i.e. q > 16^hash_hex_len - 1. Immutable, shared by value handles.
class Modulus {
public:
    /// Smallest prime q >= 16^hash_hex_len (deterministic). hash_hex_len >= 1.
    static ModulusPtr for_hex_len(unsigned hash_hex_len);

    /// Any prime q with q > 16^hash_hex_len - 1; hash_hex_len may be 0 for
    /// arithmetic-only test moduli that never embed digests.
    static ModulusPtr custom(const mpz_class& q, unsigned hash_hex_len);

    /// SHA-256 domain: smallest prime >= 16^64, pinned and self-checked.
    static const ModulusPtr& production();

    /// q = 10007, hash_hex_len = 3 (pairs with HashAlgo sha256-t3).
    static const ModulusPtr& toy();

    const mpz_class& q() const { return q_; }
    unsigned hash_hex_len() const { return hex_len_; }

    /// Bit length of q.
    unsigned bits() const { return bits_; }
    /// Fixed serialization width for one coordinate: ceil(bits(q)/4).
    unsigned coord_hex_width() const { return (bits_ + 3) / 4; }
    /// Fixed byte width for constant-time export: ceil(bits(q)/8).
    unsigned coord_byte_width() const { return (bits_ + 7) / 8; }

    bool same_field(const Modulus& other) const {
        return this == &other || q_ == other.q_;
    }

private:
    Modulus(mpz_class q, unsigned hex_len);

    mpz_class q_;
    unsigned hex_len_;
    unsigned bits_;
};

/// mpz_probab_prime_p wrapper: true for "definitely" and "probably" prime.
bool probable_prime(const mpz_class& n, int reps = 32);

/// Exact integer in [0, q-1] bound to one Modulus. Immutable value type.
class FieldElement {
public:
    /// value is reduced into [0, q-1] (negatives wrap).
    FieldElement(mpz_class value, ModulusPtr m);

    static FieldElement zero(const ModulusPtr& m) { return {0, m}; }
    static FieldElement one(const ModulusPtr& m) { return {1, m}; }
    static FieldElement from_int(long v, const ModulusPtr& m) { return {v, m}; }

    /// Big-endian parse of exactly m->hash_hex_len() lowercase hex chars.
    /// The Modulus invariant guarantees the value lands below q unreduced.
    static FieldElement from_hex(std::string_view hex, const ModulusPtr& m);

    const mpz_class& value() const { return v_; }
    const ModulusPtr& modulus() const { return m_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;

    /// Multiplicative inverse; throws FieldError on zero.
    FieldElement inverse() const;

    /// Equal iff same field (same q) and same value.
    bool operator==(const FieldElement& rhs) const {
        return m_->same_field(*rhs.m_) && v_ == rhs.v_;
    }
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// Fixed-width lowercase hex, width = modulus()->coord_hex_width().
    std::string to_coord_hex() const;

private:
    mpz_class v_;
    ModulusPtr m_;
};

/// Comparison over fixed-width big-endian exports; data-independent timing
/// in the comparison itself (not in the preceding arithmetic).
bool constant_time_equal(const FieldElement& a, const FieldElement& b);

/// Shared-field check used by every binary operation.
const ModulusPtr& require_same_field(const FieldElement& a, const FieldElement& b);

}  // namespace onepw
