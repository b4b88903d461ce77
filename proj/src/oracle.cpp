#include "jordangh/oracle.hpp"

#include <stdexcept>

namespace jordangh {

namespace {

// Deterministic draw in [0, bound); bound is tiny so modulo bias is irrelevant
// and, unlike std::uniform_int_distribution, the stream is portable.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

Scalar random_scalar(const ScalarDomain& d, std::mt19937_64& rng) {
    if (d.kind() == ScalarDomain::Kind::rationals)
        return Scalar::of(d, static_cast<long>(draw_below(rng, 7)) - 3);
    return Scalar::of(d, static_cast<long>(draw_below(rng, d.characteristic())));
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(seed ^ trial);
}

}  // namespace

Element random_element(const AlgebraPtr& a, std::mt19937_64& rng) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(a->dim());
    for (std::size_t k = 0; k < a->dim(); ++k)
        coeffs.push_back(random_scalar(a->domain(), rng));
    return Element(a, std::move(coeffs));
}

Element gh_defect(const DerivationTriple& t, const Element& x, const Element& y,
                  RowTag::Branch branch) {
    const Element fxy = t.f.apply(multiply(x, y));
    if (branch == RowTag::Branch::h_first)
        return multiply(t.h.apply(x), y) + multiply(x, t.g.apply(y)) - fxy;
    return multiply(t.g.apply(x), y) + multiply(x, t.h.apply(y)) - fxy;
}

Element jordan_defect(const DerivationTriple& t, const Element& x, const Element& y) {
    return jordan_product(t.g.apply(x), y) + jordan_product(x, t.h.apply(y)) -
           t.f.apply(jordan_product(x, y));
}

namespace {

// Scans ordered basis pairs in (k, l) lexicographic order; for the first kind
// the g-first branch is checked before h-first at each pair. Returns the first
// violation, if any.
std::optional<CheckWitness> first_basis_violation(const DerivationTriple& t,
                                                  ConstraintMode kind) {
    const AlgebraPtr& a = t.algebra();
    for (std::size_t k = 0; k < a->dim(); ++k) {
        const Element bk = Element::basis(a, k);
        for (std::size_t l = 0; l < a->dim(); ++l) {
            const Element bl = Element::basis(a, l);
            if (kind == ConstraintMode::gh) {
                for (const auto branch : {RowTag::Branch::g_first, RowTag::Branch::h_first}) {
                    Element defect = gh_defect(t, bk, bl, branch);
                    if (!defect.is_zero())
                        return CheckWitness{bk, bl, branch_spelling(branch), std::move(defect)};
                }
            } else {
                Element defect = jordan_defect(t, bk, bl);
                if (!defect.is_zero())
                    return CheckWitness{bk, bl, "jordan", std::move(defect)};
            }
        }
    }
    return std::nullopt;
}

std::optional<CheckWitness> first_random_violation(const DerivationTriple& t,
                                                   ConstraintMode kind,
                                                   std::uint64_t trials,
                                                   std::uint64_t seed) {
    const AlgebraPtr& a = t.algebra();
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng = trial_engine(seed, trial);
        const Element x = random_element(a, rng);
        const Element y = random_element(a, rng);
        if (kind == ConstraintMode::gh) {
            for (const auto branch : {RowTag::Branch::g_first, RowTag::Branch::h_first}) {
                Element defect = gh_defect(t, x, y, branch);
                if (!defect.is_zero())
                    return CheckWitness{x, y, branch_spelling(branch), std::move(defect)};
            }
        } else {
            Element defect = jordan_defect(t, x, y);
            if (!defect.is_zero()) return CheckWitness{x, y, "jordan", std::move(defect)};
        }
    }
    return std::nullopt;
}

CheckReport run_checker(const DerivationTriple& t, ConstraintMode kind,
                        std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("oracle: trials must be >= 1");
    CheckReport report;
    report.trials = trials;
    report.seed = seed;
    report.witness = first_basis_violation(t, kind);
    if (!report.witness) report.witness = first_random_violation(t, kind, trials, seed);
    report.passed = !report.witness.has_value();
    return report;
}

}  // namespace

bool passes_on_basis_pairs(const DerivationTriple& t, ConstraintMode kind) {
    return !first_basis_violation(t, kind).has_value();
}

bool passes_on_random_pairs(const DerivationTriple& t, ConstraintMode kind,
                            std::uint64_t trials, std::uint64_t seed) {
    return !first_random_violation(t, kind, trials, seed).has_value();
}

CheckReport is_gh_derivation(const DerivationTriple& t, std::uint64_t trials,
                             std::uint64_t seed) {
    return run_checker(t, ConstraintMode::gh, trials, seed);
}

CheckReport is_jordan_gh_derivation(const DerivationTriple& t, std::uint64_t trials,
                                    std::uint64_t seed) {
    return run_checker(t, ConstraintMode::jordan, trials, seed);
}

CheckReport check_swap_identities(const DerivationTriple& t, std::uint64_t trials,
                                  std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("oracle: trials must be >= 1");
    if (!passes_on_basis_pairs(t, ConstraintMode::jordan))
        throw std::invalid_argument(
            "oracle: swap identities require a triple passing the Jordan identity");

    const AlgebraPtr& alg = t.algebra();
    CheckReport report;
    report.trials = trials;
    report.seed = seed;

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng = trial_engine(seed, trial);
        const Element a = random_element(alg, rng);
        const Element b = random_element(alg, rng);

        // Square swap: hypothesis f(a^2) = g(a)a + ah(a).
        if (gh_defect(t, a, a, RowTag::Branch::g_first).is_zero()) {
            ++report.qualifying_square;
            Element defect = gh_defect(t, a, a, RowTag::Branch::h_first);
            if (!defect.is_zero() && !report.witness) {
                report.witness = CheckWitness{a, a, "square-swap", std::move(defect)};
            }
        } else {
            ++report.skipped;
        }

        // Reversal: hypothesis is both equalities for f(ab).
        if (gh_defect(t, a, b, RowTag::Branch::g_first).is_zero() &&
            gh_defect(t, a, b, RowTag::Branch::h_first).is_zero()) {
            ++report.qualifying_reversal;
            for (const auto branch : {RowTag::Branch::g_first, RowTag::Branch::h_first}) {
                Element defect = gh_defect(t, b, a, branch);
                if (!defect.is_zero() && !report.witness) {
                    report.witness = CheckWitness{b, a, "reversal-" + branch_spelling(branch),
                                                  std::move(defect)};
                }
            }
        } else {
            ++report.skipped;
        }
    }

    report.inconclusive =
        report.qualifying_square == 0 || report.qualifying_reversal == 0;
    report.passed = !report.witness.has_value() && !report.inconclusive;
    return report;
}

DerivationTriple counterexample_t2(const ScalarDomain& domain) {
    const AlgebraPtr t2 = Algebra::upper_triangular(2, domain);
    const Scalar one = Scalar::one(domain);
    const Element a(t2, {one, one, one});  // e11 + e12 + e22
    const LinearMap g = jordan_mult_operator(a);
    return DerivationTriple(LinearMap::zero(t2), g, -g);
}

std::size_t brute_force_null_space_dim(const ConstraintSystem& system) {
    const std::size_t n_cols = system.cols();
    if (n_cols > 300)
        throw std::invalid_argument("oracle: dense elimination budget is 300 columns");

    const Scalar zero = Scalar::zero(system.algebra()->domain());
    std::vector<std::vector<Scalar>> m(system.rows(), std::vector<Scalar>(n_cols, zero));
    for (const Triplet& t : system.entries()) m[t.row][t.col] += t.value;

    // Textbook Gauss-Jordan, first nonzero row as pivot, eliminate everywhere.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);

        const Scalar inv = Scalar::one(zero.domain()) / m[rank][col];
        for (std::size_t j = col; j < n_cols; ++j) m[rank][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const Scalar factor = m[r][col];
            for (std::size_t j = col; j < n_cols; ++j) m[r][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return n_cols - rank;
}

}  // namespace jordangh
