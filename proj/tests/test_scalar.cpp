#include "jordangh/scalar.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

using namespace jordangh;

namespace {

const ScalarDomain kQ = ScalarDomain::rationals();
const ScalarDomain kF7 = ScalarDomain::prime_field(7);

Scalar q(long num, long den = 1) { return Scalar::fraction(kQ, num, den); }

}  // namespace

TEST_CASE("domain construction rejects characteristic 2 and composites") {
    CHECK_THROWS_AS(ScalarDomain::prime_field(2), std::invalid_argument);
    CHECK_THROWS_AS(ScalarDomain::prime_field(9), std::invalid_argument);
    CHECK_THROWS_AS(ScalarDomain::prime_field(1), std::invalid_argument);
    CHECK_THROWS_AS(ScalarDomain::prime_field(0), std::invalid_argument);
    CHECK(ScalarDomain::prime_field(3).characteristic() == 3);
    CHECK(kQ.characteristic() == 0);
}

TEST_CASE("domain spelling round-trips through parse") {
    CHECK(ScalarDomain::parse("Q") == kQ);
    CHECK(ScalarDomain::parse("Fp:7") == kF7);
    CHECK(ScalarDomain::parse("Fp:101").spelling() == "Fp:101");
    CHECK_THROWS_AS(ScalarDomain::parse("Fp:4"), std::invalid_argument);
    CHECK_THROWS_AS(ScalarDomain::parse("R"), std::invalid_argument);
    CHECK_THROWS_AS(ScalarDomain::parse("Fp:"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK((q(1, 2) + q(1, 3)).str() == "5/6");
    CHECK(q(4, 6) == q(2, 3));
    CHECK(q(4, -6).str() == "-2/3");
    CHECK(q(-7).str() == "-7");
    CHECK((q(3) * q(0)).str() == "0");
}

TEST_CASE("prime field arithmetic reduces to canonical residues") {
    const Scalar two = Scalar::of(kF7, 2);
    const Scalar four = Scalar::of(kF7, 4);
    CHECK((two * four).str() == "1");  // 8 mod 7
    CHECK(Scalar::of(kF7, -1).residue() == 6);
    CHECK((Scalar::of(kF7, 3) - Scalar::of(kF7, 5)).residue() == 5);
}

TEST_CASE("division by a nonzero element is exact inversion") {
    CHECK(q(5, 6) / q(5, 6) == Scalar::one(kQ));
    for (long v = 1; v < 7; ++v) {
        const Scalar x = Scalar::of(kF7, v);
        CHECK(x / x == Scalar::one(kF7));
    }
    CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
    CHECK_THROWS_AS(Scalar::one(kF7) / Scalar::zero(kF7), std::domain_error);
}

TEST_CASE("operations reject mixed domains") {
    CHECK_THROWS_AS(q(1) + Scalar::one(kF7), std::invalid_argument);
    CHECK_THROWS_AS(q(1) * Scalar::one(ScalarDomain::prime_field(5)), std::invalid_argument);
}

TEST_CASE("halve is exact division by 2") {
    CHECK(halve(Scalar::one(kQ)) == q(1, 2));
    CHECK(halve(Scalar::one(kF7)).residue() == 4);  // 2*4 = 8 = 1 mod 7
    CHECK(halve(Scalar::zero(kQ)).is_zero());
    CHECK(halve(Scalar::zero(kF7)).is_zero());
}

TEST_CASE("field axioms hold on sampled triples") {
    std::mt19937_64 rng(20240811);
    auto sample = [&](const ScalarDomain& d) {
        if (d.kind() == ScalarDomain::Kind::rationals) {
            const long num = static_cast<long>(rng() % 41) - 20;
            const long den = static_cast<long>(rng() % 20) + 1;
            return Scalar::fraction(d, num, den);
        }
        return Scalar::of(d, static_cast<long>(rng() % d.characteristic()));
    };

    for (const ScalarDomain& d : {kQ, kF7, ScalarDomain::prime_field(101)}) {
        const Scalar zero = Scalar::zero(d), one = Scalar::one(d);
        for (int i = 0; i < 1000; ++i) {
            const Scalar a = sample(d), b = sample(d), c = sample(d);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == zero);
            if (!a.is_zero()) CHECK(a * (one / a) == one);
            CHECK(Scalar::of(d, 2) * halve(a) == a);
            CHECK(halve(Scalar::of(d, 2) * a) == a);
        }
    }
}

TEST_CASE("equality is structural on canonical forms") {
    CHECK(q(2, 4) == q(1, 2));
    CHECK_FALSE(q(1, 2) == Scalar::of(kF7, 4));  // different domains never equal
    std::vector<Scalar> column(3, Scalar::zero(kQ));
    CHECK(column[0] == column[2]);
}
