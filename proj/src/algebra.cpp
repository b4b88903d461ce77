#include "jordangh/algebra.hpp"

#include <random>
#include <stdexcept>

namespace jordangh {

namespace {

void require_same_algebra(const Element& x, const Element& y) {
    if (x.algebra() != y.algebra())
        throw std::invalid_argument("algebra: operands belong to different algebras");
}

// Accumulates c * (sparse vec) into a dense vector.
void add_scaled(std::vector<Scalar>& acc, const SparseVec& v, const Scalar& c) {
    for (const auto& [coord, coeff] : v) acc[coord] += c * coeff;
}

}  // namespace

Algebra::Algebra(std::size_t n, bool triangular, const ScalarDomain& domain)
    : n_(n), triangular_(triangular), domain_(domain) {
    if (n == 0) throw std::invalid_argument("algebra: n must be >= 1");

    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = triangular ? i : 1; j <= n; ++j)
            basis_.push_back({i, j, basis_.size()});

    const std::size_t d = basis_.size();
    const Scalar one = Scalar::one(domain_);

    // Matrix-unit products: e_ij * e_kl = delta_jk * e_il.
    table_.resize(d * d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
            const BasisIndex& a = basis_[k];
            const BasisIndex& b = basis_[l];
            // Delta rule; for T_n the result e_{a.i, b.j} is upper triangular
            // automatically (a.i <= a.j = b.i <= b.j).
            if (a.j == b.i) table_[k * d + l].push_back({ordinal_of(a.i, b.j), one});
        }
    }

    unit_.assign(d, Scalar::zero(domain_));
    for (std::uint32_t i = 1; i <= n; ++i) unit_[ordinal_of(i, i)] = one;

    validate();
}

std::size_t Algebra::ordinal_of(std::uint32_t i, std::uint32_t j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_ || (triangular_ && i > j))
        throw std::out_of_range("algebra: no basis unit at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
    if (triangular_) {
        // Row i starts after rows 1..i-1, which hold (n) + (n-1) + ... entries.
        const std::size_t row_start = (i - 1) * n_ - ((i - 1) * (i - 2)) / 2;
        return row_start + (j - i);
    }
    return (i - 1) * n_ + (j - 1);
}

void Algebra::validate() const {
    const std::size_t d = dim();
    const Scalar zero = Scalar::zero(domain_);

    auto mul_dense_basis = [&](const std::vector<Scalar>& x, std::size_t k) {
        std::vector<Scalar> out(d, zero);
        for (std::size_t q = 0; q < d; ++q)
            if (!x[q].is_zero()) add_scaled(out, basis_product(q, k), x[q]);
        return out;
    };
    auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        // (b_i b_j) b_k vs b_i (b_j b_k), both expanded through the table.
        std::vector<Scalar> left(d, zero);
        for (const auto& [q, c] : basis_product(i, j))
            add_scaled(left, basis_product(q, k), c);
        std::vector<Scalar> right(d, zero);
        for (const auto& [q, c] : basis_product(j, k))
            add_scaled(right, basis_product(i, q), c);
        if (left != right) throw std::logic_error("algebra: structure table not associative");
    };

    if (d <= 36) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) check_triple(i, j, k);
    } else {
        std::mt19937_64 rng(0x5eed5eedULL);
        for (int t = 0; t < 10000; ++t) {
            const std::size_t i = rng() % d, j = rng() % d, k = rng() % d;
            check_triple(i, j, k);
        }
    }

    // Unit law on every basis element.
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<Scalar> bk(d, zero);
        bk[k] = Scalar::one(domain_);
        if (mul_dense_basis(unit_, k) != bk)
            throw std::logic_error("algebra: unit law fails on the left");
        std::vector<Scalar> right(d, zero);
        for (std::size_t q = 0; q < d; ++q)
            if (!unit_[q].is_zero()) add_scaled(right, basis_product(k, q), unit_[q]);
        if (right != bk) throw std::logic_error("algebra: unit law fails on the right");
    }
}

AlgebraPtr Algebra::upper_triangular(std::size_t n, const ScalarDomain& domain) {
    return AlgebraPtr(new Algebra(n, true, domain));
}

AlgebraPtr Algebra::full_matrix(std::size_t n, const ScalarDomain& domain) {
    return AlgebraPtr(new Algebra(n, false, domain));
}

AlgebraPtr Algebra::parse(const std::string& spec, const ScalarDomain& domain) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    if (colon == std::string::npos || (kind != "tn" && kind != "mn"))
        throw std::invalid_argument("algebra: bad spec '" + spec + "' (expected tn:<n> or mn:<n>)");
    const std::string digits = spec.substr(colon + 1);
    if (digits.empty() || digits.size() > 3 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("algebra: bad size in spec '" + spec + "'");
    const std::size_t n = std::stoul(digits);
    if (n == 0) throw std::invalid_argument("algebra: n must be >= 1");
    return kind == "tn" ? upper_triangular(n, domain) : full_matrix(n, domain);
}

std::string Algebra::spelling() const {
    return (triangular_ ? "tn:" : "mn:") + std::to_string(n_);
}

Element::Element(AlgebraPtr algebra, std::vector<Scalar> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != algebra_->dim())
        throw std::invalid_argument("element: coefficient count does not match algebra dim");
    for (const Scalar& c : coeffs_)
        if (!(c.domain() == algebra_->domain()))
            throw std::invalid_argument("element: coefficient domain does not match algebra");
}

Element Element::zero(const AlgebraPtr& a) {
    return Element(a, std::vector<Scalar>(a->dim(), Scalar::zero(a->domain())));
}

Element Element::basis(const AlgebraPtr& a, std::size_t ordinal) {
    if (ordinal >= a->dim()) throw std::out_of_range("element: basis ordinal out of range");
    Element e = zero(a);
    e.coeffs_[ordinal] = Scalar::one(a->domain());
    return e;
}

Element Element::unit(const AlgebraPtr& a) { return Element(a, a->unit_coeffs()); }

bool Element::is_zero() const {
    for (const Scalar& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Element Element::operator-() const {
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const Scalar& c : coeffs_) out.push_back(-c);
    return Element(algebra_, std::move(out));
}

Element Element::scaled(const Scalar& c) const {
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const Scalar& v : coeffs_) out.push_back(c * v);
    return Element(algebra_, std::move(out));
}

Element operator+(const Element& x, const Element& y) {
    require_same_algebra(x, y);
    std::vector<Scalar> out;
    out.reserve(x.coeffs_.size());
    for (std::size_t k = 0; k < x.coeffs_.size(); ++k) out.push_back(x.coeffs_[k] + y.coeffs_[k]);
    return Element(x.algebra_, std::move(out));
}

Element operator-(const Element& x, const Element& y) { return x + (-y); }

bool operator==(const Element& x, const Element& y) {
    return x.algebra_ == y.algebra_ && x.coeffs_ == y.coeffs_;
}

Element multiply(const Element& x, const Element& y) {
    require_same_algebra(x, y);
    const Algebra& a = *x.algebra();
    std::vector<Scalar> out(a.dim(), Scalar::zero(a.domain()));
    for (std::size_t k = 0; k < a.dim(); ++k) {
        if (x.coeff(k).is_zero()) continue;
        for (std::size_t l = 0; l < a.dim(); ++l) {
            if (y.coeff(l).is_zero()) continue;
            add_scaled(out, a.basis_product(k, l), x.coeff(k) * y.coeff(l));
        }
    }
    return Element(x.algebra(), std::move(out));
}

Element jordan_product(const Element& x, const Element& y) {
    return multiply(x, y) + multiply(y, x);
}

}  // namespace jordangh
