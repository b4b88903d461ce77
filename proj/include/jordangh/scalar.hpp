#pragma once

/**
 * @file scalar.hpp
 * @brief Exact scalar domains of characteristic != 2: rationals and odd prime fields.
 *
 * All arithmetic is exact. Rationals are arbitrary-precision and kept in
 * lowest terms with positive denominator; prime-field values are kept as
 * canonical residues in [0, p). Equality is structural on canonical forms;
 * there is no tolerance parameter anywhere in this library.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace jordangh {

/// A field of characteristic != 2: the rationals, or Z/p for an odd prime p.
class ScalarDomain {
public:
    enum class Kind { rationals, prime_field };

    static ScalarDomain rationals();

    /// Z/p. Rejects p = 2 (the whole library assumes 2 is invertible),
    /// composite p, and p > 2^31 (residue arithmetic headroom).
    static ScalarDomain prime_field(std::uint32_t p);

    /// Parses the CLI spelling: "Q" or "Fp:<p>".
    static ScalarDomain parse(const std::string& spec);

    Kind kind() const { return kind_; }

    /// 0 for the rationals, p for Z/p. Never 2.
    std::uint32_t characteristic() const { return p_; }

    std::string spelling() const;

    friend bool operator==(const ScalarDomain&, const ScalarDomain&) = default;

private:
    ScalarDomain(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

/// An exact element of a ScalarDomain. Immutable value type apart from the
/// compound assignment operators; always in canonical form.
class Scalar {
public:
    static Scalar zero(const ScalarDomain& d) { return of(d, 0); }
    static Scalar one(const ScalarDomain& d) { return of(d, 1); }
    static Scalar of(const ScalarDomain& d, long value);

    /// num/den in the given domain; den must be nonzero (and invertible mod p).
    static Scalar fraction(const ScalarDomain& d, long num, long den);

    const ScalarDomain& domain() const { return domain_; }
    bool is_zero() const;
    bool is_one() const;

    /// Exact division by 2; total because the domain characteristic is never 2.
    Scalar halved() const;

    /// Canonical spelling: "5/6", "-7", or a prime-field residue "4".
    std::string str() const;

    /// Numerator/denominator access, rationals only.
    const mpq_class& rational() const;
    /// Residue access, prime fields only.
    std::uint64_t residue() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
    Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    explicit Scalar(const ScalarDomain& d) : domain_(d) {}

    ScalarDomain domain_;
    mpq_class q_;            // rationals payload, canonical by GMP invariants
    std::uint64_t r_ = 0;    // prime-field residue, canonical in [0, p)
};

/// Spec-level name for exact division by 2.
inline Scalar halve(const Scalar& a) { return a.halved(); }

}  // namespace jordangh
