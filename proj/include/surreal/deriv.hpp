#pragma once

// The derivation: pre-derivations on log-atomic monomials, paths and their
// derivatives, and ∂ as the sum of all path-derivatives.

#include <vector>

#include "surreal/transseries.hpp"

namespace surreal {

enum class DerivationMode {
    simplest,            // with the kappa correction; ∂(ω) = 1
    no_kappa_correction, // exp(Σ log_i λ); never hits 1
};

struct DerivationConfig {
    DerivationMode mode = DerivationMode::simplest;
    PrecisionContext precision{};
};

// ∂_L(λ) for an atom λ; always a single exact monomial.
Monomial pre_derive(const Monomial& lambda, DerivationMode mode = DerivationMode::simplest);

struct Path {
    enum class Terminal {
        log_atomic, // ends at a log-atomic entry reached through explicit terms
        tail_leaf,  // went through one of the expanded members of a tail family
        truncated,  // stands for the unexpanded remainder of a tail family
    };
    // entries[i+1] is a term of ℓ(entries[i]); the last entry is log-atomic.
    // For a truncated path the last entries follow the first omitted member.
    std::vector<Term> entries;
    Terminal terminal = Terminal::log_atomic;

    // Index of the first log-atomic entry.
    std::size_t log_atomic_index() const;
};

std::vector<Path> enumerate_paths(const Transseries& x, const PrecisionContext& ctx = {});

// Π_{i<k} P(i) · ∂_L(P(k)) at the first log-atomic entry k.
Term path_derivative(const Path& p, DerivationMode mode = DerivationMode::simplest);
// Same product stopping at an explicit log-atomic index k (for testing that
// the choice of k does not matter; entries past the end follow the log chain).
Term path_derivative_at(const Path& p, std::size_t k, DerivationMode mode = DerivationMode::simplest);

// ∂x.  Path-derivatives are computed in parallel; derive_serial is the
// reference implementation and must agree exactly.
Transseries derive(const Transseries& x, const DerivationConfig& cfg = {});
Transseries derive_serial(const Transseries& x, const DerivationConfig& cfg = {});

// The path through leading terms; its derivative is the leading term of ∂x.
Path dominant_path(const Transseries& x);
Term dominant_derivative(const Transseries& x, DerivationMode mode = DerivationMode::simplest);

// ∂(x)/x.
Transseries log_derivative(const Transseries& x, const DerivationConfig& cfg = {});

} // namespace surreal
