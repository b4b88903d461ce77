#pragma once

/**
 * @file algebra.hpp
 * @brief Finite-dimensional unital associative algebras presented by structure
 *        constants, with builders for upper-triangular and full matrix algebras
 *        on the matrix-unit basis.
 *
 * The basis ordering is frozen as row-major (i, j) lexicographic; every
 * coefficient table, solver column index, and JSON report depends on it.
 */

#include "jordangh/scalar.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace jordangh {

/// Matrix-unit label (i, j), 1-based, plus its 0-based position in the basis.
struct BasisIndex {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    std::size_t ordinal = 0;
};

struct SparseTerm {
    std::size_t coord;
    Scalar coeff;
};

/// Sorted by coord, nonzero coefficients only.
using SparseVec = std::vector<SparseTerm>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
public:
    /// T_n over the given domain: matrix units e_ij with i <= j, dim n(n+1)/2.
    static AlgebraPtr upper_triangular(std::size_t n, const ScalarDomain& domain);

    /// M_n over the given domain: all matrix units, dim n^2.
    static AlgebraPtr full_matrix(std::size_t n, const ScalarDomain& domain);

    /// Parses the CLI spelling "tn:<n>" or "mn:<n>".
    static AlgebraPtr parse(const std::string& spec, const ScalarDomain& domain);

    const ScalarDomain& domain() const { return domain_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t matrix_size() const { return n_; }
    bool triangular() const { return triangular_; }
    std::string spelling() const;

    const std::vector<BasisIndex>& basis() const { return basis_; }
    const BasisIndex& label(std::size_t ordinal) const { return basis_.at(ordinal); }

    /// Ordinal of e_ij; throws if (i, j) is not in this algebra's basis.
    std::size_t ordinal_of(std::uint32_t i, std::uint32_t j) const;

    /// Structure-table row: the product b_k * b_l as a sparse coefficient vector.
    const SparseVec& basis_product(std::size_t k, std::size_t l) const {
        return table_[k * dim() + l];
    }

    /// Coefficient vector of the multiplicative identity (sum of e_ii).
    const std::vector<Scalar>& unit_coeffs() const { return unit_; }

private:
    Algebra(std::size_t n, bool triangular, const ScalarDomain& domain);
    void validate() const;  // associativity + unit law

    std::size_t n_;
    bool triangular_;
    ScalarDomain domain_;
    std::vector<BasisIndex> basis_;
    std::vector<SparseVec> table_;  // dim x dim, row-major on (k, l)
    std::vector<Scalar> unit_;
};

/// A value of an Algebra: dense coefficient vector over the fixed basis.
class Element {
public:
    Element(AlgebraPtr algebra, std::vector<Scalar> coeffs);

    static Element zero(const AlgebraPtr& a);
    static Element basis(const AlgebraPtr& a, std::size_t ordinal);
    static Element unit(const AlgebraPtr& a);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& coeff(std::size_t k) const { return coeffs_[k]; }
    bool is_zero() const;

    Element operator-() const;
    Element scaled(const Scalar& c) const;
    friend Element operator+(const Element& x, const Element& y);
    friend Element operator-(const Element& x, const Element& y);
    friend bool operator==(const Element& x, const Element& y);

private:
    AlgebraPtr algebra_;
    std::vector<Scalar> coeffs_;
};

/// Exact product via the structure table. Arguments must share one algebra.
Element multiply(const Element& x, const Element& y);

/// x o y = xy + yx. Symmetric in its arguments.
Element jordan_product(const Element& x, const Element& y);

}  // namespace jordangh
