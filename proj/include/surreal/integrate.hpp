#pragma once

// Asymptotic integrals (Rosenlicht's formula with u = κ_{-α}) and a
// fuel-bounded antidifferentiation loop built on them.

#include <string_view>
#include <vector>

#include "surreal/deriv.hpp"

namespace surreal {

// A term y with ∂y ∼ x.
Term asymptotic_integral(const Transseries& x, const DerivationConfig& cfg = {});

enum class IntegrationStatus { exact, exhausted };
enum class ExhaustionReason {
    none,
    fuel,        // ran out of iterations
    precision,   // the residual is only known as a remainder
    no_progress, // the residual did not shrink; never expected
};

struct IntegrationResult {
    Transseries antiderivative;
    Transseries residual; // x - ∂(antiderivative)
    IntegrationStatus status = IntegrationStatus::exact;
    ExhaustionReason reason = ExhaustionReason::none;
    int steps = 0;
    std::vector<Transseries> residuals; // residual before each step, then the final one
};

IntegrationResult integrate(const Transseries& x, const DerivationConfig& cfg = {});

// y(α) = log ∂κ_{-α} = -Σ_{β<α} Σ_i log_i κ_{-β}.
Transseries psi(int alpha, DerivationMode mode = DerivationMode::simplest);

std::string_view to_string(IntegrationStatus s);
std::string_view to_string(ExhaustionReason r);

} // namespace surreal
