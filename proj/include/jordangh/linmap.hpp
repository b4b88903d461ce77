#pragma once

/**
 * @file linmap.hpp
 * @brief Linear endomorphisms of an Algebra as basis-indexed coefficient
 *        tables, plus the derivation-triple type the whole library revolves
 *        around.
 *
 * Packing layout (frozen): a triple (f, g, h) flattens to a vector of length
 * 3*dim^2 holding the f table column-major, then g, then h. Column k of a
 * table is the coefficient vector of the image of basis element b_k, so the
 * flat index of table entry (out m, in k) within its block is k*dim + m.
 */

#include "jordangh/algebra.hpp"

#include <vector>

namespace jordangh {

class LinearMap {
public:
    /// table is dim*dim, column-major; entry (m, k) at table[k*dim + m].
    LinearMap(AlgebraPtr algebra, std::vector<Scalar> table);

    static LinearMap zero(const AlgebraPtr& a);
    static LinearMap identity(const AlgebraPtr& a);
    static LinearMap from_columns(const AlgebraPtr& a, const std::vector<Element>& images);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Scalar>& table() const { return table_; }

    /// Coefficient of b_out in the image of b_in.
    const Scalar& entry(std::size_t out, std::size_t in) const {
        return table_[in * algebra_->dim() + out];
    }

    /// Image of b_k.
    Element column(std::size_t k) const;

    Element apply(const Element& x) const;

    LinearMap operator-() const;
    LinearMap scaled(const Scalar& c) const;
    friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
    friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
    friend bool operator==(const LinearMap& a, const LinearMap& b);
    bool is_zero() const;

private:
    AlgebraPtr algebra_;
    std::vector<Scalar> table_;
};

/// x |-> a o x (Jordan multiplication by a).
LinearMap jordan_mult_operator(const Element& a);

/// x |-> ax - xa. Always a derivation; seeds nontrivial test triples.
LinearMap inner_derivation(const Element& a);

/// The object all derivation conditions constrain.
struct DerivationTriple {
    LinearMap f, g, h;

    DerivationTriple(LinearMap f_, LinearMap g_, LinearMap h_);
    const AlgebraPtr& algebra() const { return f.algebra(); }
    friend bool operator==(const DerivationTriple&, const DerivationTriple&);
};

/// Flattens per the frozen f,g,h column-major layout; length 3*dim^2.
std::vector<Scalar> triple_pack(const DerivationTriple& t);

/// Inverse of triple_pack; rejects vectors of the wrong length.
DerivationTriple triple_unpack(const AlgebraPtr& a, const std::vector<Scalar>& v);

}  // namespace jordangh
