#include "jordangh/solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jordangh {

namespace {

// Product-incidence indexes over the structure table, built once per assembly:
//   left[l][m]  holds (q, c) with [b_q * b_l]_m = c   (who hits m by right-multiplying b_l)
//   right[k][m] holds (q, c) with [b_k * b_q]_m = c   (who hits m by left-multiplying b_k)
struct ProductIndex {
    std::vector<std::vector<SparseVec>> left, right;

    explicit ProductIndex(const Algebra& a) {
        const std::size_t d = a.dim();
        left.assign(d, std::vector<SparseVec>(d));
        right.assign(d, std::vector<SparseVec>(d));
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t l = 0; l < d; ++l)
                for (const auto& [m, c] : a.basis_product(k, l)) {
                    left[l][m].push_back({k, c});
                    right[k][m].push_back({l, c});
                }
    }
};

// Accumulates one constraint row as col -> coefficient, dropping zeros at the end.
class RowBuilder {
public:
    void add(std::size_t col, const Scalar& c) {
        auto it = acc_.find(col);
        if (it == acc_.end())
            acc_.emplace(col, c);
        else
            it->second += c;
    }

    SparseVec take() const {
        SparseVec out;
        for (const auto& [col, c] : acc_)
            if (!c.is_zero()) out.push_back({col, c});
        return out;
    }

private:
    std::map<std::size_t, Scalar> acc_;
};

SparseVec build_row(const Algebra& a, const ProductIndex& px, const RowTag& tag) {
    const std::size_t d = a.dim();
    const std::size_t block = d * d;
    const auto col_f = [&](std::size_t in, std::size_t out) { return in * d + out; };
    const auto col_g = [&](std::size_t in, std::size_t out) { return block + in * d + out; };
    const auto col_h = [&](std::size_t in, std::size_t out) { return 2 * block + in * d + out; };

    const std::size_t k = tag.k, l = tag.l, m = tag.m;
    RowBuilder row;

    switch (tag.branch) {
        case RowTag::Branch::g_first:
        case RowTag::Branch::corner:
            // [f(b_k b_l) - g(b_k) b_l - b_k h(b_l)]_m
            for (const auto& [e, c] : a.basis_product(k, l)) row.add(col_f(e, m), c);
            for (const auto& [q, c] : px.left[l][m]) row.add(col_g(k, q), -c);
            for (const auto& [q, c] : px.right[k][m]) row.add(col_h(l, q), -c);
            break;
        case RowTag::Branch::h_first:
            // [f(b_k b_l) - h(b_k) b_l - b_k g(b_l)]_m
            for (const auto& [e, c] : a.basis_product(k, l)) row.add(col_f(e, m), c);
            for (const auto& [q, c] : px.left[l][m]) row.add(col_h(k, q), -c);
            for (const auto& [q, c] : px.right[k][m]) row.add(col_g(l, q), -c);
            break;
        case RowTag::Branch::jordan:
            // [f(b_k o b_l) - g(b_k) o b_l - b_k o h(b_l)]_m
            for (const auto& [e, c] : a.basis_product(k, l)) row.add(col_f(e, m), c);
            for (const auto& [e, c] : a.basis_product(l, k)) row.add(col_f(e, m), c);
            for (const auto& [q, c] : px.left[l][m]) row.add(col_g(k, q), -c);
            for (const auto& [q, c] : px.right[l][m]) row.add(col_g(k, q), -c);
            for (const auto& [q, c] : px.right[k][m]) row.add(col_h(l, q), -c);
            for (const auto& [q, c] : px.left[k][m]) row.add(col_h(l, q), -c);
            break;
    }
    return row.take();
}

}  // namespace

std::string mode_spelling(ConstraintMode mode) {
    switch (mode) {
        case ConstraintMode::gh: return "gh";
        case ConstraintMode::jordan: return "jordan";
        case ConstraintMode::jordan_with_corner: return "jordan-corner";
    }
    throw std::logic_error("solver: bad mode");
}

ConstraintMode parse_mode(const std::string& spec) {
    if (spec == "gh") return ConstraintMode::gh;
    if (spec == "jordan") return ConstraintMode::jordan;
    if (spec == "jordan-corner") return ConstraintMode::jordan_with_corner;
    throw std::invalid_argument("solver: bad mode '" + spec +
                                "' (expected gh, jordan, or jordan-corner)");
}

std::string branch_spelling(RowTag::Branch b) {
    switch (b) {
        case RowTag::Branch::g_first: return "g-first";
        case RowTag::Branch::h_first: return "h-first";
        case RowTag::Branch::jordan: return "jordan";
        case RowTag::Branch::corner: return "corner";
    }
    throw std::logic_error("solver: bad branch");
}

ConstraintSystem::ConstraintSystem(AlgebraPtr algebra, ConstraintMode mode,
                                   std::size_t n_rows, std::vector<Triplet> entries,
                                   std::vector<RowTag> tags)
    : algebra_(std::move(algebra)),
      mode_(mode),
      n_rows_(n_rows),
      entries_(std::move(entries)),
      tags_(std::move(tags)) {
    if (tags_.size() != n_rows_)
        throw std::invalid_argument("solver: one tag per row required");
}

SparseVec ConstraintSystem::regenerate_row(const RowTag& tag) const {
    const ProductIndex px(*algebra_);
    return build_row(*algebra_, px, tag);
}

std::vector<SparseVec> ConstraintSystem::rows_as_sparse() const {
    std::vector<SparseVec> rows(n_rows_);
    for (const Triplet& t : entries_) rows[t.row].push_back({t.col, t.value});
    for (SparseVec& r : rows)
        std::sort(r.begin(), r.end(),
                  [](const SparseTerm& a, const SparseTerm& b) { return a.coord < b.coord; });
    return rows;
}

bool ConstraintSystem::satisfied_by(const std::vector<Scalar>& packed) const {
    if (packed.size() != cols())
        throw std::invalid_argument("solver: packed vector length mismatch");
    std::vector<Scalar> residual(n_rows_, Scalar::zero(algebra_->domain()));
    for (const Triplet& t : entries_) residual[t.row] += t.value * packed[t.col];
    for (const Scalar& r : residual)
        if (!r.is_zero()) return false;
    return true;
}

ConstraintSystem assemble(const AlgebraPtr& algebra, ConstraintMode mode) {
    const Algebra& a = *algebra;
    const std::size_t d = a.dim();
    const ProductIndex px(a);

    std::vector<Triplet> entries;
    std::vector<RowTag> tags;

    auto emit_family = [&](RowTag::Branch branch) {
        for (std::uint32_t k = 0; k < d; ++k)
            for (std::uint32_t l = 0; l < d; ++l)
                for (std::uint32_t m = 0; m < d; ++m) {
                    const RowTag tag{branch, k, l, m};
                    for (const auto& [col, c] : build_row(a, px, tag))
                        entries.push_back({tags.size(), col, c});
                    tags.push_back(tag);
                }
    };

    switch (mode) {
        case ConstraintMode::gh:
            emit_family(RowTag::Branch::g_first);
            emit_family(RowTag::Branch::h_first);
            break;
        case ConstraintMode::jordan:
            emit_family(RowTag::Branch::jordan);
            break;
        case ConstraintMode::jordan_with_corner: {
            emit_family(RowTag::Branch::jordan);
            for (std::uint32_t i = 1; i <= a.matrix_size(); ++i) {
                const auto dd = static_cast<std::uint32_t>(a.ordinal_of(i, i));
                for (std::uint32_t m = 0; m < d; ++m) {
                    const RowTag tag{RowTag::Branch::corner, dd, dd, m};
                    for (const auto& [col, c] : build_row(a, px, tag))
                        entries.push_back({tags.size(), col, c});
                    tags.push_back(tag);
                }
            }
            break;
        }
    }

    const std::size_t n_rows = tags.size();
    return ConstraintSystem(algebra, mode, n_rows, std::move(entries), std::move(tags));
}

SolutionSpace::SolutionSpace(AlgebraPtr algebra, ConstraintMode mode,
                             std::vector<std::vector<Scalar>> basis)
    : algebra_(std::move(algebra)), mode_(mode), basis_(std::move(basis)) {}

DerivationTriple SolutionSpace::triple(std::size_t idx) const {
    return triple_unpack(algebra_, basis_.at(idx));
}

namespace {

// One working row of the sparse eliminator: sorted (col, coeff) terms.
struct WorkRow {
    std::vector<std::pair<std::size_t, Scalar>> terms;
    std::size_t id = 0;

    std::size_t lead() const { return terms.front().first; }
};

// dst -= c * src, merging sorted term lists and dropping cancellations.
void subtract_scaled(WorkRow& dst, const WorkRow& src, const Scalar& c) {
    std::vector<std::pair<std::size_t, Scalar>> out;
    out.reserve(dst.terms.size() + src.terms.size());
    auto a = dst.terms.begin();
    auto b = src.terms.begin();
    while (a != dst.terms.end() || b != src.terms.end()) {
        if (b == src.terms.end() || (a != dst.terms.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == dst.terms.end() || b->first < a->first) {
            out.emplace_back(b->first, -(c * b->second));
            ++b;
        } else {
            Scalar v = a->second - c * b->second;
            if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    dst.terms = std::move(out);
}

void normalize(WorkRow& row) {
    const Scalar inv_lead = Scalar::one(row.terms.front().second.domain()) / row.terms.front().second;
    if (inv_lead.is_one()) return;
    for (auto& [col, c] : row.terms) c *= inv_lead;
}

}  // namespace

SolutionSpace null_space(const ConstraintSystem& system) {
    const std::size_t n_cols = system.cols();
    const ScalarDomain domain = system.algebra()->domain();

    // Load nonempty rows.
    std::vector<WorkRow> pool;
    {
        std::vector<SparseVec> sparse_rows = system.rows_as_sparse();
        for (std::size_t r = 0; r < sparse_rows.size(); ++r) {
            if (sparse_rows[r].empty()) continue;
            WorkRow row;
            row.id = r;
            for (const auto& [col, c] : sparse_rows[r]) row.terms.emplace_back(col, c);
            pool.push_back(std::move(row));
        }
    }

    // Bucket active rows by current leading column.
    std::vector<std::vector<std::size_t>> bucket(n_cols);
    for (std::size_t idx = 0; idx < pool.size(); ++idx)
        bucket[pool[idx].lead()].push_back(idx);

    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (col, pool index), asc col

    for (std::size_t col = 0; col < n_cols; ++col) {
        std::vector<std::size_t>& cands = bucket[col];
        if (cands.empty()) continue;

        // Markowitz-lite: fewest nonzeros, ties by original row index.
        std::size_t best = cands[0];
        for (const std::size_t idx : cands) {
            const auto key = std::make_pair(pool[idx].terms.size(), pool[idx].id);
            const auto best_key = std::make_pair(pool[best].terms.size(), pool[best].id);
            if (key < best_key) best = idx;
        }

        normalize(pool[best]);
        for (const std::size_t idx : cands) {
            if (idx == best) continue;
            subtract_scaled(pool[idx], pool[best], pool[idx].terms.front().second);
            if (!pool[idx].terms.empty()) bucket[pool[idx].lead()].push_back(idx);
        }
        cands.clear();
        pivots.emplace_back(col, best);
    }

    // Back substitution: clear every pivot column from earlier pivot rows.
    for (std::size_t r = pivots.size(); r-- > 0;) {
        const auto [pcol, pidx] = pivots[r];
        for (std::size_t s = 0; s < r; ++s) {
            WorkRow& upper = pool[pivots[s].second];
            const auto it = std::lower_bound(
                upper.terms.begin(), upper.terms.end(), pcol,
                [](const auto& term, std::size_t c) { return term.first < c; });
            if (it != upper.terms.end() && it->first == pcol)
                subtract_scaled(upper, pool[pidx], it->second);
        }
    }

    // Kernel basis from the RREF: one vector per free column, ascending.
    std::vector<bool> is_pivot(n_cols, false);
    for (const auto& [pcol, pidx] : pivots) is_pivot[pcol] = true;

    std::vector<std::vector<Scalar>> basis;
    const Scalar zero = Scalar::zero(domain);
    for (std::size_t fc = 0; fc < n_cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Scalar> v(n_cols, zero);
        v[fc] = Scalar::one(domain);
        for (const auto& [pcol, pidx] : pivots) {
            const WorkRow& row = pool[pidx];
            const auto it = std::lower_bound(
                row.terms.begin(), row.terms.end(), fc,
                [](const auto& term, std::size_t c) { return term.first < c; });
            if (it != row.terms.end() && it->first == fc) v[pcol] = -it->second;
        }
        basis.push_back(std::move(v));
    }

    return SolutionSpace(system.algebra(), system.mode(), std::move(basis));
}

std::string relation_spelling(SubspaceRelation r) {
    switch (r) {
        case SubspaceRelation::equal: return "equal";
        case SubspaceRelation::a_strict_superset: return "a_strict_superset";
        case SubspaceRelation::b_strict_superset: return "b_strict_superset";
        case SubspaceRelation::incomparable: return "incomparable";
    }
    throw std::logic_error("solver: bad relation");
}

ComparisonReport compare(const SolutionSpace& a, const SolutionSpace& b) {
    if (a.algebra() != b.algebra())
        throw std::invalid_argument("solver: compare requires one shared algebra and layout");

    const ConstraintSystem sys_a = assemble(a.algebra(), a.mode());
    const ConstraintSystem sys_b = assemble(b.algebra(), b.mode());

    std::optional<std::vector<Scalar>> a_witness;  // vector of a rejected by b's system
    for (const auto& v : a.basis()) {
        if (!sys_b.satisfied_by(v)) {
            a_witness = v;
            break;
        }
    }
    std::optional<std::vector<Scalar>> b_witness;  // vector of b rejected by a's system
    for (const auto& v : b.basis()) {
        if (!sys_a.satisfied_by(v)) {
            b_witness = v;
            break;
        }
    }

    const bool a_contains_b = !b_witness.has_value();
    const bool b_contains_a = !a_witness.has_value();

    ComparisonReport report{SubspaceRelation::incomparable, a.dim(), b.dim(), std::nullopt};
    if (a_contains_b && b_contains_a) {
        report.relation = SubspaceRelation::equal;
    } else if (a_contains_b) {
        report.relation = SubspaceRelation::a_strict_superset;
        report.witness = a_witness;
    } else if (b_contains_a) {
        report.relation = SubspaceRelation::b_strict_superset;
        report.witness = b_witness;
    } else {
        report.witness = a_witness;
    }
    return report;
}

}  // namespace jordangh
