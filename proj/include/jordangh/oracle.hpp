#pragma once

/**
 * @file oracle.hpp
 * @brief Independent brute-force checkers and property suites: the ground
 *        truth the solver is validated against.
 *
 * Nothing here shares an elimination code path with the solver. The checkers
 * evaluate the defining identities directly on elements; the dense eliminator
 * is a textbook Gauss-Jordan written separately from the sparse one, so
 * agreement between the two routes is evidence, not tautology.
 */

#include "jordangh/solver.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace jordangh {

struct CheckWitness {
    Element x, y;
    std::string branch;
    Element defect;  // (claimed right side) - (left side); nonzero by construction
};

struct CheckReport {
    bool passed = false;
    bool inconclusive = false;  // swap-identity runs with no qualifying samples
    std::uint64_t trials = 0;
    std::uint64_t skipped = 0;
    std::uint64_t qualifying_square = 0;    // swap-identity suite only
    std::uint64_t qualifying_reversal = 0;  // swap-identity suite only
    std::uint64_t seed = 0;
    std::optional<CheckWitness> witness;
};

/// Deterministic sampling: each coordinate uniform on the integers -3..3
/// (rationals) or on the residues 0..p-1 (prime fields). Per-trial engines
/// are derived as seed XOR trial-index so parallel and serial runs agree.
Element random_element(const AlgebraPtr& a, std::mt19937_64& rng);

/// Defect of one instance of an identity of the first kind:
///   g-first: g(x)y + xh(y) - f(xy);  h-first: h(x)y + xg(y) - f(xy).
Element gh_defect(const DerivationTriple& t, const Element& x, const Element& y,
                  RowTag::Branch branch);

/// Defect of the Jordan identity: g(x) o y + x o h(y) - f(x o y).
Element jordan_defect(const DerivationTriple& t, const Element& x, const Element& y);

/// Exhaustive scan of all ordered basis pairs. Complete by bilinearity: a
/// triple passes here iff it satisfies the identity for all arguments.
bool passes_on_basis_pairs(const DerivationTriple& t, ConstraintMode kind);

/// Random dense pairs only; the probabilistic half of the bilinearity check.
bool passes_on_random_pairs(const DerivationTriple& t, ConstraintMode kind,
                            std::uint64_t trials, std::uint64_t seed);

/// Checks both equalities of the first identity on all ordered basis pairs and
/// on `trials` seeded random dense pairs; passed iff every defect is zero.
CheckReport is_gh_derivation(const DerivationTriple& t, std::uint64_t trials,
                             std::uint64_t seed);

/// Same scan for the Jordan identity.
CheckReport is_jordan_gh_derivation(const DerivationTriple& t, std::uint64_t trials,
                                    std::uint64_t seed);

/// Consequence checks available to any Jordan triple (which is a precondition,
/// enforced exactly; violation throws rather than reporting failure):
///   square swap:  f(a^2) = g(a)a + ah(a)  implies  f(a^2) = h(a)a + ag(a);
///   reversal:     f(ab) = g(a)b + ah(b) = h(a)b + ag(b)
///                 implies f(ba) = g(b)a + bh(a) = h(b)a + bg(a).
/// Samples that miss a hypothesis are skipped and counted; zero qualifying
/// samples for either identity makes the run inconclusive, not passed.
CheckReport check_swap_identities(const DerivationTriple& t, std::uint64_t trials,
                                  std::uint64_t seed);

/// The T_2 triple (0, a o -, -(a o -)) with a = e11 + e12 + e22: passes the
/// Jordan checker, fails the gh checker at (e11, e11) with defect -e12.
DerivationTriple counterexample_t2(const ScalarDomain& domain);

/// Nullity by dense textbook Gauss-Jordan over the system's field.
/// Guard: refuses systems wider than 300 columns.
std::size_t brute_force_null_space_dim(const ConstraintSystem& system);

}  // namespace jordangh
