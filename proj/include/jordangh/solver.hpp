#pragma once

/**
 * @file solver.hpp
 * @brief Linear constraint systems over triple-space and their exact null
 *        spaces.
 *
 * Both defining identities are bilinear in (x, y), so a triple satisfies one
 * everywhere iff it satisfies it on all ordered basis pairs. The assembler
 * therefore emits one row per (ordered pair, output coordinate, branch);
 * redundant symmetric duplicates are left in and removed by elimination.
 *
 * Column layout matches triple_pack: f block, then g, then h, each column-major,
 * so the unknown "coefficient of b_m in X(b_k)" sits at block + k*dim + m.
 */

#include "jordangh/linmap.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jordangh {

enum class ConstraintMode { gh, jordan, jordan_with_corner };

std::string mode_spelling(ConstraintMode mode);  // "gh" | "jordan" | "jordan-corner"
ConstraintMode parse_mode(const std::string& spec);

/// Provenance of one constraint row: which generator produced it.
struct RowTag {
    enum class Branch : std::uint8_t {
        g_first,  // f(xy) = g(x)y + xh(y) at (b_k, b_l), coordinate m
        h_first,  // f(xy) = h(x)y + xg(y) at (b_k, b_l), coordinate m
        jordan,   // f(x o y) = g(x) o y + x o h(y) at (b_k, b_l), coordinate m
        corner,   // f(e_ii) = g(e_ii)e_ii + e_ii h(e_ii); k = l = ordinal of e_ii
    };
    Branch branch;
    std::uint32_t k, l, m;
};

std::string branch_spelling(RowTag::Branch b);

struct Triplet {
    std::size_t row, col;
    Scalar value;
};

class ConstraintSystem {
public:
    ConstraintSystem(AlgebraPtr algebra, ConstraintMode mode, std::size_t n_rows,
                     std::vector<Triplet> entries, std::vector<RowTag> tags);

    const AlgebraPtr& algebra() const { return algebra_; }
    ConstraintMode mode() const { return mode_; }
    std::size_t rows() const { return n_rows_; }
    std::size_t cols() const { return 3 * algebra_->dim() * algebra_->dim(); }
    const std::vector<Triplet>& entries() const { return entries_; }
    const std::vector<RowTag>& row_tags() const { return tags_; }

    /// Re-derives the row a tag describes, independent of the stored entries.
    /// Sorted by column; the provenance-decode invariant asserts this matches.
    SparseVec regenerate_row(const RowTag& tag) const;

    /// Row-by-row view of the stored entries, sorted by column.
    std::vector<SparseVec> rows_as_sparse() const;

    /// Residual of every row against a packed triple-vector; true iff all zero.
    bool satisfied_by(const std::vector<Scalar>& packed) const;

private:
    AlgebraPtr algebra_;
    ConstraintMode mode_;
    std::size_t n_rows_;
    std::vector<Triplet> entries_;
    std::vector<RowTag> tags_;
};

/// Emits the full row family for the given mode, all ordered basis pairs.
ConstraintSystem assemble(const AlgebraPtr& algebra, ConstraintMode mode);

/// Exact null-space basis in reduced row echelon form (canonical, diffable).
class SolutionSpace {
public:
    SolutionSpace(AlgebraPtr algebra, ConstraintMode mode,
                  std::vector<std::vector<Scalar>> basis);

    const AlgebraPtr& algebra() const { return algebra_; }
    ConstraintMode mode() const { return mode_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::vector<Scalar>>& basis() const { return basis_; }

    /// Basis vector idx, unpacked to a triple.
    DerivationTriple triple(std::size_t idx) const;

private:
    AlgebraPtr algebra_;
    ConstraintMode mode_;
    std::vector<std::vector<Scalar>> basis_;
};

/// Sparse exact Gauss-Jordan. Pivot: leftmost column, then fewest-nonzeros row,
/// ties by row index, so results are reproducible byte-for-byte.
SolutionSpace null_space(const ConstraintSystem& system);

enum class SubspaceRelation { equal, a_strict_superset, b_strict_superset, incomparable };

std::string relation_spelling(SubspaceRelation r);

struct ComparisonReport {
    SubspaceRelation relation;
    std::size_t dim_a, dim_b;
    /// A packed vector of the strictly larger side that the other side's
    /// constraints reject; absent when the spaces are equal.
    std::optional<std::vector<Scalar>> witness;
};

/// Decides containment each way by checking basis vectors against the other
/// side's regenerated constraint system. Requires one shared algebra.
ComparisonReport compare(const SolutionSpace& a, const SolutionSpace& b);

}  // namespace jordangh
