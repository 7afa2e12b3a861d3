#pragma once

// Nested truncation x ⊴ y, the nested truncation rank, and per-path checks
// of the T4 and ELT4 axioms.

#include <optional>
#include <vector>

#include "surreal/deriv.hpp"
#include "surreal/transseries.hpp"

namespace surreal {

// x ⊴ y on nonzero exact tail-free values.
bool nested_trunc_le(const Transseries& x, const Transseries& y);
// Every y ⊴ x with y != x, sorted by decreasing value.
std::vector<Transseries> proper_nested_truncations(const Transseries& x);
// Foundation rank of ⊴; rank(0) = 0.
unsigned ntrank(const Transseries& x);

// ±λ^{±1} for a log-atomic λ (the non-constant rank-zero values).
bool is_signed_atomic_power(const Transseries& x);

enum class PathVerdict { satisfies, refutes, unexplored };

// ℓ(P(i)) = gamma + P(i+1) + delta in standard form.
struct PathSplit {
    Transseries gamma;
    Term entry;
    Transseries delta;
};

struct T4Report {
    Path path;
    std::vector<PathSplit> splits; // splits[i] describes ℓ(P(i))
    std::optional<std::size_t> k;  // from k on every entry is ±1·m with delta = 0
    PathVerdict verdict = PathVerdict::satisfies;
};

struct Elt4Report {
    Path path;
    std::optional<std::size_t> enters_at; // first index with P(i) log-atomic
    PathVerdict verdict = PathVerdict::satisfies;
};

std::vector<T4Report> check_t4(const Transseries& x, const PrecisionContext& ctx = {});
std::vector<Elt4Report> check_elt4(const Transseries& x, const PrecisionContext& ctx = {});

const char* to_string(PathVerdict v);

} // namespace surreal
