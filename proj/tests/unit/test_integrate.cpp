#include <doctest.h>

#include "surreal/integrate.hpp"
#include "surreal/order.hpp"
#include "surreal/textio.hpp"

using namespace surreal;

namespace {
Transseries P(const char* s) { return parse(s); }
} // namespace

TEST_CASE("asymptotic integrals")
{
    CHECK(asymptotic_integral(P("1")) == Term{1, Monomial::omega()});
    CHECK(asymptotic_integral(P("1/w")) == Term{1, Monomial::atom(0, -1)});
    CHECK(asymptotic_integral(P("log(w)")) == Term{1, leading_monomial(P("w*log(w)"))});
    CHECK(asymptotic_integral(P("1/(w*log(w))")) == Term{1, Monomial::atom(0, -2)});
    CHECK(asymptotic_integral(P("exp(w)")) == Term{1, Monomial::atom(0, 1)});
    CHECK_THROWS_AS(asymptotic_integral(Transseries{}), Error);
    for (const char* s : {"w^3", "exp(-w)", "1/w^2", "k(-1)", "exp(w^2)", "3*log2(w)/w"}) {
        auto x = P(s);
        auto y = asymptotic_integral(x);
        CHECK(leading_term(derive(Transseries::term(y))) == leading_term(x));
    }
}

TEST_CASE("integration")
{
    struct Case {
        const char* x;
        const char* expected;
        int steps;
    };
    for (auto c : {Case{"1", "w", 1}, Case{"1/w", "log(w)", 1}, Case{"log(w)", "w*log(w) - w", 2},
                   Case{"exp(w)", "exp(w)", 1}}) {
        auto r = integrate(P(c.x));
        CHECK(r.status == IntegrationStatus::exact);
        CHECK(r.residual.is_zero());
        CHECK(r.antiderivative == P(c.expected));
        CHECK(r.steps == c.steps);
        CHECK(derive(r.antiderivative) == P(c.x));
    }
    auto r = integrate(P("w^2 + 1/w - exp(-w)"));
    CHECK(r.status == IntegrationStatus::exact);
    CHECK(derive(r.antiderivative) == P("w^2 + 1/w - exp(-w)"));

    DerivationConfig cfg;
    cfg.precision.fuel = 3;
    auto e = integrate(P("exp(w^2)"), cfg);
    CHECK(e.status == IntegrationStatus::exhausted);
    CHECK(e.reason == ExhaustionReason::fuel);
    for (std::size_t i = 1; i < e.residuals.size(); ++i)
        CHECK(leading_monomial(e.residuals[i]) < leading_monomial(e.residuals[i - 1]));
}

TEST_CASE("the correction-free derivation has no integral of 1")
{
    DerivationConfig cfg;
    cfg.mode = DerivationMode::no_kappa_correction;
    try {
        integrate(P("1"), cfg);
        FAIL("expected NeedsDeeperKappa");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::needs_deeper_kappa);
    }
}

TEST_CASE("psi values")
{
    CHECK(psi(0).is_zero());
    CHECK(psi(1) == Transseries::tail(0, 1, -1));
    for (int a = 1; a <= 4; ++a)
        for (int b = 0; b < a; ++b) {
            CHECK(is_truncation(psi(b), psi(a)));
            CHECK(psi(b) != psi(a));
            CHECK(compare(psi(b), psi(a)) == Order::greater);
        }
}
