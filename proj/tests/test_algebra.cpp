#include "jordangh/algebra.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace jordangh;

namespace {

const ScalarDomain kQ = ScalarDomain::rationals();

Element unit_elem(const AlgebraPtr& a, std::uint32_t i, std::uint32_t j) {
    return Element::basis(a, a->ordinal_of(i, j));
}

Element random_elem(const AlgebraPtr& a, std::mt19937_64& rng) {
    std::vector<Scalar> coeffs;
    for (std::size_t k = 0; k < a->dim(); ++k)
        coeffs.push_back(Scalar::of(a->domain(), static_cast<long>(rng() % 7) - 3));
    return Element(a, std::move(coeffs));
}

}  // namespace

TEST_CASE("triangular builder: basis counts and ordering") {
    const AlgebraPtr t2 = Algebra::upper_triangular(2, kQ);
    CHECK(t2->dim() == 3);
    CHECK(t2->label(0).i == 1);
    CHECK(t2->label(0).j == 1);
    CHECK(t2->label(1).i == 1);
    CHECK(t2->label(1).j == 2);
    CHECK(t2->label(2).i == 2);
    CHECK(t2->label(2).j == 2);

    CHECK(Algebra::upper_triangular(5, kQ)->dim() == 15);
    CHECK(Algebra::full_matrix(2, kQ)->dim() == 4);
    CHECK_THROWS_AS(Algebra::upper_triangular(0, kQ), std::invalid_argument);
    CHECK_THROWS_AS(Algebra::full_matrix(0, kQ), std::invalid_argument);
}

TEST_CASE("ordinal lookup is the inverse of the basis labels") {
    for (const AlgebraPtr& a : {Algebra::upper_triangular(4, kQ), Algebra::full_matrix(3, kQ)}) {
        for (const BasisIndex& b : a->basis()) CHECK(a->ordinal_of(b.i, b.j) == b.ordinal);
    }
    const AlgebraPtr t3 = Algebra::upper_triangular(3, kQ);
    CHECK_THROWS_AS(t3->ordinal_of(2, 1), std::out_of_range);
    CHECK_THROWS_AS(t3->ordinal_of(0, 1), std::out_of_range);
    CHECK_THROWS_AS(t3->ordinal_of(1, 4), std::out_of_range);
}

TEST_CASE("delta rule on matrix units") {
    const AlgebraPtr t2 = Algebra::upper_triangular(2, kQ);
    CHECK(multiply(unit_elem(t2, 1, 1), unit_elem(t2, 1, 2)) == unit_elem(t2, 1, 2));
    CHECK(multiply(unit_elem(t2, 1, 2), unit_elem(t2, 1, 1)).is_zero());
    CHECK(multiply(unit_elem(t2, 1, 2), unit_elem(t2, 2, 2)) == unit_elem(t2, 1, 2));

    const AlgebraPtr m2 = Algebra::full_matrix(2, kQ);
    CHECK(multiply(unit_elem(m2, 1, 2), unit_elem(m2, 2, 1)) == unit_elem(m2, 1, 1));
    CHECK(multiply(unit_elem(m2, 2, 1), unit_elem(m2, 1, 2)) == unit_elem(m2, 2, 2));

    const AlgebraPtr m3 = Algebra::full_matrix(3, ScalarDomain::prime_field(7));
    CHECK(multiply(unit_elem(m3, 1, 3), unit_elem(m3, 3, 2)) == unit_elem(m3, 1, 2));
}

TEST_CASE("bilinear expansion of products") {
    const AlgebraPtr t2 = Algebra::upper_triangular(2, kQ);
    const Element sum = unit_elem(t2, 1, 1) + unit_elem(t2, 1, 2);
    CHECK(multiply(sum, unit_elem(t2, 1, 1)) == unit_elem(t2, 1, 1));
}

TEST_CASE("unit law and associativity on random elements") {
    std::mt19937_64 rng(7);
    for (const AlgebraPtr& a : {Algebra::upper_triangular(3, kQ), Algebra::full_matrix(2, kQ)}) {
        const Element one = Element::unit(a);
        for (int i = 0; i < 50; ++i) {
            const Element x = random_elem(a, rng), y = random_elem(a, rng),
                          z = random_elem(a, rng);
            CHECK(multiply(x, one) == x);
            CHECK(multiply(one, x) == x);
            CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
        }
    }
}

TEST_CASE("jordan product is symmetric and matches its definition") {
    const AlgebraPtr m2 = Algebra::full_matrix(2, kQ);
    const Element e12 = unit_elem(m2, 1, 2), e21 = unit_elem(m2, 2, 1);
    CHECK(jordan_product(e12, e21) == unit_elem(m2, 1, 1) + unit_elem(m2, 2, 2));

    const AlgebraPtr t2 = Algebra::upper_triangular(2, kQ);
    const Element e11 = unit_elem(t2, 1, 1);
    CHECK(jordan_product(e11, e11) == e11.scaled(Scalar::of(kQ, 2)));
    CHECK(jordan_product(e11, unit_elem(t2, 2, 2)).is_zero());

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const Element x = random_elem(m2, rng), y = random_elem(m2, rng);
        CHECK(jordan_product(x, y) == jordan_product(y, x));
        CHECK(jordan_product(x, y) == multiply(x, y) + multiply(y, x));
    }
}

TEST_CASE("multiply is bilinear on sampled arguments") {
    std::mt19937_64 rng(13);
    const AlgebraPtr t3 = Algebra::upper_triangular(3, kQ);
    for (int i = 0; i < 50; ++i) {
        const Element x = random_elem(t3, rng), xp = random_elem(t3, rng),
                      y = random_elem(t3, rng);
        const Scalar alpha = Scalar::of(kQ, static_cast<long>(rng() % 7) - 3);
        CHECK(multiply(x.scaled(alpha) + xp, y) ==
              multiply(x, y).scaled(alpha) + multiply(xp, y));
        CHECK(multiply(y, x.scaled(alpha) + xp) ==
              multiply(y, x).scaled(alpha) + multiply(y, xp));
    }
}

TEST_CASE("full-matrix structure restricted to triangular coordinates matches T_n") {
    for (std::size_t n : {2u, 3u, 4u}) {
        const AlgebraPtr tn = Algebra::upper_triangular(n, kQ);
        const AlgebraPtr mn = Algebra::full_matrix(n, kQ);
        for (const BasisIndex& a : tn->basis()) {
            for (const BasisIndex& b : tn->basis()) {
                const SparseVec& tprod = tn->basis_product(a.ordinal, b.ordinal);
                const SparseVec& mprod = mn->basis_product(mn->ordinal_of(a.i, a.j),
                                                           mn->ordinal_of(b.i, b.j));
                REQUIRE(tprod.size() == mprod.size());
                for (std::size_t t = 0; t < tprod.size(); ++t) {
                    const BasisIndex& out = tn->label(tprod[t].coord);
                    CHECK(mprod[t].coord == mn->ordinal_of(out.i, out.j));
                    CHECK(mprod[t].coeff == tprod[t].coeff);
                }
            }
        }
    }
}

TEST_CASE("elements reject mismatched algebras and domains") {
    const AlgebraPtr t2a = Algebra::upper_triangular(2, kQ);
    const AlgebraPtr t2b = Algebra::upper_triangular(2, kQ);  // distinct instance
    CHECK_THROWS_AS(multiply(Element::unit(t2a), Element::unit(t2b)), std::invalid_argument);
    CHECK_THROWS_AS(Element(t2a, std::vector<Scalar>(2, Scalar::zero(kQ))),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        Element(t2a, std::vector<Scalar>(3, Scalar::zero(ScalarDomain::prime_field(5)))),
        std::invalid_argument);
}

TEST_CASE("algebra spec parsing") {
    CHECK(Algebra::parse("tn:3", kQ)->spelling() == "tn:3");
    CHECK(Algebra::parse("mn:2", kQ)->dim() == 4);
    CHECK_THROWS_AS(Algebra::parse("xx:2", kQ), std::invalid_argument);
    CHECK_THROWS_AS(Algebra::parse("tn:", kQ), std::invalid_argument);
    CHECK_THROWS_AS(Algebra::parse("tn:0", kQ), std::invalid_argument);
}
