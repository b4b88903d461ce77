#include "jordangh/linmap.hpp"
#include "jordangh/oracle.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace jordangh;

namespace {

const ScalarDomain kQ = ScalarDomain::rationals();

Element unit_elem(const AlgebraPtr& a, std::uint32_t i, std::uint32_t j) {
    return Element::basis(a, a->ordinal_of(i, j));
}

LinearMap random_map(const AlgebraPtr& a, std::mt19937_64& rng) {
    std::vector<Scalar> table;
    for (std::size_t k = 0; k < a->dim() * a->dim(); ++k)
        table.push_back(Scalar::of(a->domain(), static_cast<long>(rng() % 7) - 3));
    return LinearMap(a, std::move(table));
}

}  // namespace

TEST_CASE("identity and zero maps") {
    const AlgebraPtr t2 = Algebra::upper_triangular(2, kQ);
    const Element e12 = unit_elem(t2, 1, 2);
    CHECK(LinearMap::identity(t2).apply(e12) == e12);
    CHECK(LinearMap::zero(t2).apply(e12).is_zero());
}

TEST_CASE("apply is linear by construction") {
    const AlgebraPtr t2 = Algebra::upper_triangular(2, kQ);
    LinearMap m = LinearMap::zero(t2);
    // Single column e11 -> e12.
    std::vector<Scalar> table(9, Scalar::zero(kQ));
    table[t2->ordinal_of(1, 1) * 3 + t2->ordinal_of(1, 2)] = Scalar::one(kQ);
    m = LinearMap(t2, table);
    CHECK(m.apply(unit_elem(t2, 1, 1).scaled(Scalar::of(kQ, 3))) ==
          unit_elem(t2, 1, 2).scaled(Scalar::of(kQ, 3)));

    std::mt19937_64 rng(3);
    const AlgebraPtr m2 = Algebra::full_matrix(2, kQ);
    for (int i = 0; i < 30; ++i) {
        const LinearMap f = random_map(m2, rng);
        const Element x = random_element(m2, rng), y = random_element(m2, rng);
        const Scalar alpha = Scalar::of(kQ, static_cast<long>(rng() % 7) - 3);
        CHECK(f.apply(x.scaled(alpha) + y) == f.apply(x).scaled(alpha) + f.apply(y));
    }
}

TEST_CASE("jordan multiplication operator columns") {
    const AlgebraPtr t2 = Algebra::upper_triangular(2, kQ);
    const Scalar one = Scalar::one(kQ);
    const Element a(t2, {one, one, one});  // e11 + e12 + e22

    const LinearMap op = jordan_mult_operator(a);
    // a o e11 expands by the delta rule to 2 e11 + e12.
    CHECK(op.apply(unit_elem(t2, 1, 1)) ==
          unit_elem(t2, 1, 1).scaled(Scalar::of(kQ, 2)) + unit_elem(t2, 1, 2));

    CHECK(jordan_mult_operator(Element::unit(t2)) ==
          LinearMap::identity(t2).scaled(Scalar::of(kQ, 2)));
    CHECK(jordan_mult_operator(Element::zero(t2)).is_zero());

    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const Element b = random_element(t2, rng), x = random_element(t2, rng);
        CHECK(jordan_mult_operator(b).apply(x) == jordan_product(b, x));
    }
}

TEST_CASE("inner derivations") {
    const AlgebraPtr t2 = Algebra::upper_triangular(2, kQ);
    const LinearMap d = inner_derivation(unit_elem(t2, 1, 2));
    CHECK(d.apply(unit_elem(t2, 1, 1)) == -unit_elem(t2, 1, 2));
    CHECK(d.apply(unit_elem(t2, 2, 2)) == unit_elem(t2, 1, 2));
    CHECK(d.apply(unit_elem(t2, 1, 2)).is_zero());

    CHECK(inner_derivation(Element::unit(t2)).is_zero());

    const AlgebraPtr m2 = Algebra::full_matrix(2, kQ);
    const LinearMap d2 = inner_derivation(unit_elem(m2, 1, 1));
    CHECK(d2.apply(unit_elem(m2, 1, 2)) == unit_elem(m2, 1, 2));
    CHECK(d2.apply(unit_elem(m2, 2, 1)) == -unit_elem(m2, 2, 1));
}

TEST_CASE("inner derivations satisfy the derivation law") {
    std::mt19937_64 rng(17);
    const AlgebraPtr m2 = Algebra::full_matrix(2, kQ);
    for (int i = 0; i < 20; ++i) {
        const LinearMap d = inner_derivation(random_element(m2, rng));
        const DerivationTriple t(d, d, d);
        for (int j = 0; j < 50; ++j) {
            const Element x = random_element(m2, rng), y = random_element(m2, rng);
            CHECK(d.apply(multiply(x, y)) ==
                  multiply(d.apply(x), y) + multiply(x, d.apply(y)));
        }
        CHECK(is_gh_derivation(t, 10, 42).passed);
    }
}

TEST_CASE("triple pack and unpack round-trip") {
    const AlgebraPtr t2 = Algebra::upper_triangular(2, kQ);
    CHECK(triple_pack(DerivationTriple(LinearMap::zero(t2), LinearMap::zero(t2),
                                       LinearMap::zero(t2)))
              .size() == 27);

    std::mt19937_64 rng(23);
    for (const AlgebraPtr& a : {t2, Algebra::full_matrix(2, kQ)}) {
        for (int i = 0; i < 20; ++i) {
            const DerivationTriple t(random_map(a, rng), random_map(a, rng),
                                     random_map(a, rng));
            CHECK(triple_unpack(a, triple_pack(t)) == t);
        }
    }

    CHECK_THROWS_AS(triple_unpack(t2, std::vector<Scalar>(26, Scalar::zero(kQ))),
                    std::invalid_argument);
}

TEST_CASE("packing layout is f, then g, then h, column-major") {
    const AlgebraPtr t2 = Algebra::upper_triangular(2, kQ);
    LinearMap f = LinearMap::zero(t2), g = LinearMap::zero(t2), h = LinearMap::zero(t2);
    std::vector<Scalar> table(9, Scalar::zero(kQ));
    table[1 * 3 + 2] = Scalar::of(kQ, 5);  // entry (out 2, in 1)
    g = LinearMap(t2, table);
    const std::vector<Scalar> packed = triple_pack(DerivationTriple(f, g, h));
    CHECK(packed[9 + 1 * 3 + 2] == Scalar::of(kQ, 5));
    for (std::size_t i = 0; i < packed.size(); ++i)
        if (i != 9 + 1 * 3 + 2) CHECK(packed[i].is_zero());
}
