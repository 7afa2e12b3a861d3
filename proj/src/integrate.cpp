#include "surreal/integrate.hpp"

namespace surreal {

namespace {

// Leading monomial, or the remainder bound when nothing else is known.
Monomial size_of(const Transseries& x)
{
    if (!x.terms().empty() || x.has_tails())
        return leading_monomial(x);
    return *x.marker();
}

} // namespace

Term asymptotic_integral(const Transseries& x, const DerivationConfig& cfg)
{
    if (x.is_zero())
        raise(ErrorKind::zero_value, "asymptotic integral of zero");
    if (x.terms().empty() && !x.has_tails())
        raise(ErrorKind::indeterminate_leading, "only a remainder is known");
    const Term t = leading_term(x);
    for (int alpha = 0; alpha <= cfg.precision.kappa_depth; ++alpha) {
        const Monomial u = Monomial::atom(alpha, 0);
        const Term w = t * Term{1, u / pre_derive(u, cfg.mode)};
        if (w.monomial.is_one())
            continue; // x u / ∂u ≍ 1: the formula degenerates
        const Term y = t * w / dominant_derivative(Transseries::term(w), cfg.mode);
        // Only the leading term of y is known here, so a constant y leaves
        // nothing to return once its real part is removed.
        if (y.monomial.is_one())
            continue;
        if (dominant_derivative(Transseries::term(y), cfg.mode) == t)
            return y;
    }
    raise(ErrorKind::needs_deeper_kappa,
          "no u = kappa_{-alpha} with alpha <= " + std::to_string(cfg.precision.kappa_depth) +
              " yields an asymptotic integral");
}

IntegrationResult integrate(const Transseries& x, const DerivationConfig& cfg)
{
    IntegrationResult r;
    r.residual = x;
    r.residuals.push_back(x);
    while (!r.residual.is_zero()) {
        if (r.steps >= cfg.precision.fuel) {
            r.status = IntegrationStatus::exhausted;
            r.reason = ExhaustionReason::fuel;
            return r;
        }
        if (r.residual.terms().empty() && !r.residual.has_tails()) {
            r.status = IntegrationStatus::exhausted;
            r.reason = ExhaustionReason::precision;
            return r;
        }
        const Term t = asymptotic_integral(r.residual, cfg);
        r.antiderivative += Transseries::term(t);
        Transseries next = r.residual - derive(Transseries::term(t), cfg);
        ++r.steps;
        r.residuals.push_back(next);
        const bool shrank = next.is_zero() || compare(size_of(next), size_of(r.residual)) < 0;
        r.residual = std::move(next);
        if (!shrank) {
            r.status = IntegrationStatus::exhausted;
            r.reason = ExhaustionReason::no_progress;
            return r;
        }
    }
    return r;
}

Transseries psi(int alpha, DerivationMode mode)
{
    return pre_derive(Monomial::atom(alpha, 0), mode).log();
}

std::string_view to_string(IntegrationStatus s)
{
    return s == IntegrationStatus::exact ? "exact" : "exhausted";
}

std::string_view to_string(ExhaustionReason r)
{
    switch (r) {
    case ExhaustionReason::none: return "none";
    case ExhaustionReason::fuel: return "fuel";
    case ExhaustionReason::precision: return "precision";
    case ExhaustionReason::no_progress: return "no-progress";
    }
    return "?";
}

} // namespace surreal
