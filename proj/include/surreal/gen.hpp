#pragma once

// Deterministic random values and a small exhaustive universe for the
// property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "surreal/transseries.hpp"

namespace surreal {

struct GenSpec {
    int size = 3;        // maximal number of terms at each level
    int max_depth = 2;   // exponential nesting of generated monomials
    int kappa_depth = 2; // atoms kappa_{-alpha} with alpha < kappa_depth
    bool allow_tails = false;
    std::uint64_t seed = 1;
};

using Rng = std::mt19937_64;

// Seed of case `index` of a run seeded with `seed`.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

Transseries gen_random(const GenSpec& spec);
Transseries gen_random(const GenSpec& spec, Rng& rng);
// Nonzero purely infinite value (a valid monomial exponent).
Transseries gen_purely_infinite(const GenSpec& spec, Rng& rng);
// Infinite monomial.
Monomial gen_infinite_monomial(const GenSpec& spec, Rng& rng);
// Log-atomic atom exp_m(kappa_{-alpha}) with alpha < spec.kappa_depth.
Monomial gen_atom(const GenSpec& spec, Rng& rng);
Coefficient gen_coefficient(Rng& rng);

// All sums of at most two terms over a fixed set of small monomials and
// coefficients, plus the rationals of the coefficient set.  Tail-free, exact,
// and at most 10^4 elements.
const std::vector<Transseries>& small_universe();

} // namespace surreal
