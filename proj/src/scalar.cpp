#include "jordangh/scalar.hpp"

#include <stdexcept>
#include <utility>

namespace jordangh {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Extended Euclid on int64; p < 2^31 so no overflow.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("scalar: division by zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("scalar: residue not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

void require_same_domain(const Scalar& a, const Scalar& b) {
    if (!(a.domain() == b.domain()))
        throw std::invalid_argument("scalar: domain mismatch between operands");
}

}  // namespace

ScalarDomain ScalarDomain::rationals() { return ScalarDomain(Kind::rationals, 0); }

ScalarDomain ScalarDomain::prime_field(std::uint32_t p) {
    if (p == 2) throw std::invalid_argument("scalar: characteristic 2 is not supported");
    if (p > (1u << 31)) throw std::invalid_argument("scalar: prime modulus exceeds 2^31");
    if (!is_prime(p)) throw std::invalid_argument("scalar: modulus is not prime");
    return ScalarDomain(Kind::prime_field, p);
}

ScalarDomain ScalarDomain::parse(const std::string& spec) {
    if (spec == "Q") return rationals();
    if (spec.rfind("Fp:", 0) == 0) {
        const std::string digits = spec.substr(3);
        if (digits.empty() || digits.size() > 10 ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("scalar: bad field spec '" + spec + "'");
        unsigned long p = std::stoul(digits);
        if (p > (1ul << 31)) throw std::invalid_argument("scalar: prime modulus exceeds 2^31");
        return prime_field(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("scalar: bad field spec '" + spec + "' (expected Q or Fp:<p>)");
}

std::string ScalarDomain::spelling() const {
    return kind_ == Kind::rationals ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar Scalar::of(const ScalarDomain& d, long value) {
    Scalar s(d);
    if (d.kind() == ScalarDomain::Kind::rationals) {
        s.q_ = mpq_class(value);
    } else {
        const std::int64_t p = d.characteristic();
        std::int64_t r = value % p;
        if (r < 0) r += p;
        s.r_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::fraction(const ScalarDomain& d, long num, long den) {
    if (den == 0) throw std::domain_error("scalar: zero denominator");
    if (d.kind() == ScalarDomain::Kind::rationals) {
        Scalar s(d);
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
        return s;
    }
    return of(d, num) / of(d, den);
}

bool Scalar::is_zero() const {
    return domain_.kind() == ScalarDomain::Kind::rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return domain_.kind() == ScalarDomain::Kind::rationals ? q_ == 1 : r_ == 1;
}

Scalar Scalar::halved() const {
    if (domain_.kind() == ScalarDomain::Kind::rationals) {
        Scalar s(domain_);
        s.q_ = q_ / 2;
        return s;
    }
    const std::uint64_t p = domain_.characteristic();
    Scalar s(domain_);
    s.r_ = (r_ * ((p + 1) / 2)) % p;  // (p+1)/2 is the inverse of 2 mod p
    return s;
}

std::string Scalar::str() const {
    return domain_.kind() == ScalarDomain::Kind::rationals ? q_.get_str()
                                                           : std::to_string(r_);
}

const mpq_class& Scalar::rational() const {
    if (domain_.kind() != ScalarDomain::Kind::rationals)
        throw std::logic_error("scalar: rational() on a prime-field value");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (domain_.kind() != ScalarDomain::Kind::prime_field)
        throw std::logic_error("scalar: residue() on a rational value");
    return r_;
}

Scalar Scalar::operator-() const {
    Scalar s(domain_);
    if (domain_.kind() == ScalarDomain::Kind::rationals) {
        s.q_ = -q_;
    } else {
        const std::uint64_t p = domain_.characteristic();
        s.r_ = r_ == 0 ? 0 : p - r_;
    }
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_domain(a, b);
    Scalar s(a.domain_);
    if (a.domain_.kind() == ScalarDomain::Kind::rationals) {
        s.q_ = a.q_ + b.q_;
    } else {
        s.r_ = (a.r_ + b.r_) % a.domain_.characteristic();
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_domain(a, b);
    Scalar s(a.domain_);
    if (a.domain_.kind() == ScalarDomain::Kind::rationals) {
        s.q_ = a.q_ * b.q_;
    } else {
        s.r_ = (a.r_ * b.r_) % a.domain_.characteristic();
    }
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_domain(a, b);
    if (b.is_zero()) throw std::domain_error("scalar: division by zero");
    Scalar s(a.domain_);
    if (a.domain_.kind() == ScalarDomain::Kind::rationals) {
        s.q_ = a.q_ / b.q_;
    } else {
        const std::uint64_t p = a.domain_.characteristic();
        s.r_ = (a.r_ * mod_inverse(b.r_, p)) % p;
    }
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.domain_ == b.domain_)) return false;
    return a.domain_.kind() == ScalarDomain::Kind::rationals ? a.q_ == b.q_
                                                             : a.r_ == b.r_;
}

}  // namespace jordangh
