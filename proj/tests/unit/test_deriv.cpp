#include <doctest.h>

#include "surreal/deriv.hpp"
#include "surreal/explog.hpp"
#include "surreal/textio.hpp"

using namespace surreal;

namespace {

Transseries P(const char* s) { return parse(s); }
Monomial L(int alpha, int m) { return Monomial::atom(alpha, m); }

// Chain-rule evaluator, independent of paths: ∂κ_{-α} from its closed form,
// ∂exp(λ) = exp(λ)∂λ, ∂log(λ) = ∂λ/λ, ∂exp(γ) = exp(γ)∂γ termwise.
Transseries oracle(const Transseries& x);

Transseries oracle(const Monomial& m)
{
    if (m.is_one())
        return {};
    if (m.is_atom()) {
        const int a = m.alpha(), k = m.tower();
        if (k == 0) {
            Transseries g;
            for (int b = 0; b < a; ++b)
                g -= Transseries::tail(b, 1);
            return Transseries::monomial(Monomial::from_log(g));
        }
        if (k > 0)
            return oracle(L(a, k - 1)).scaled(Term{1, m});
        return oracle(L(a, k + 1)).scaled(Term{1, L(a, k + 1).inverse()});
    }
    return oracle(m.exponent()).scaled(Term{1, m});
}

Transseries oracle(const Transseries& x)
{
    Transseries sum;
    for (const auto& t : x.terms())
        sum += oracle(t.monomial).scaled(t.coeff);
    return sum;
}

const char* samples[] = {
    "w", "exp(w)", "exp(2*w + 3*log(w))", "w + 1/w", "k(-1)", "log2(k(-2)) - 7",
    "w^2*log(w) - 3*w + 1/2", "exp(w^(1/2) - log2(w)) + k(-1)^3", "exp(exp(w) - w)/w",
    "1/(w*log(w)*log2(w))", "exp(-w)*w^5 + log3(w)", "3*exp(2*k(-1) + log(k(-3)))",
};

} // namespace

TEST_CASE("pre-derivation")
{
    CHECK(pre_derive(Monomial::omega()) == Monomial::one());
    CHECK(pre_derive(L(1, 0)) == Monomial::from_log(Transseries::tail(0, 1, -1)));
    CHECK(pre_derive(L(0, -2)) == leading_monomial(P("1/(w*log(w))")));
    // oracle: both sums expanded to six terms cancel to -log w - log2 w
    auto expanded = expand_tails(Transseries::tail(0, 1, -1), 6) + expand_tails(Transseries::tail(0, 3), 6);
    CHECK(truncate_at(expanded, L(0, -7)) == P("-log(w) - log2(w)"));
    CHECK_THROWS_AS(pre_derive(leading_monomial(P("w^2"))), Error);

    CHECK(pre_derive(Monomial::omega(), DerivationMode::no_kappa_correction) ==
          Monomial::from_log(Transseries::tail(0, 1)));
    for (auto mode : {DerivationMode::simplest, DerivationMode::no_kappa_correction})
        for (int a = 0; a <= 3; ++a)
            for (int m = -4; m <= 3; ++m) {
                // ∂_L(exp λ) = exp(λ) ∂_L(λ)
                CHECK(pre_derive(L(a, m + 1), mode) == L(a, m + 1) * pre_derive(L(a, m), mode));
            }
}

TEST_CASE("paths")
{
    CHECK(enumerate_paths(Transseries(5)).empty());
    auto x = P("exp(2*w + 3*log(w))");
    auto paths = enumerate_paths(x);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].entries.size() == 3);
    CHECK(paths[0].entries[1] == Term{2, Monomial::omega()});
    CHECK(paths[1].entries[1] == Term{3, L(0, -1)});
    CHECK(path_derivative(paths[0]) == Term{2, leading_monomial(x)});
    CHECK(path_derivative(paths[1]) == Term{3, leading_monomial(P("exp(2*w + 2*log(w))"))});
    CHECK(enumerate_paths(P("w + 1/w")).size() == 2);
    CHECK(enumerate_paths(P("w")).front().entries.size() == 1);

    for (const char* s : samples)
        for (const auto& p : enumerate_paths(P(s)))
            for (std::size_t extra = 1; extra <= 3; ++extra)
                CHECK(path_derivative_at(p, p.log_atomic_index() + extra) == path_derivative(p));

    auto tail_paths = enumerate_paths(Transseries::tail(0, 1));
    PrecisionContext ctx;
    CHECK(tail_paths.size() == static_cast<std::size_t>(ctx.tail_expand + 1));
    CHECK(tail_paths.back().terminal == Path::Terminal::truncated);
    CHECK_THROWS_AS(path_derivative(tail_paths.back()), Error);
}

TEST_CASE("derivative examples")
{
    CHECK(derive(P("w")) == Transseries(1));
    CHECK(derive(P("exp(w)")) == P("exp(w)"));
    CHECK(derive(P("exp(2*w + 3*log(w))")) ==
          P("2*exp(2*w + 3*log(w)) + 3*exp(2*w + 2*log(w))"));
    CHECK(derive(P("k(-1)")) == Transseries::monomial(Monomial::from_log(Transseries::tail(0, 1, -1))));
    CHECK(derive(P("7")).is_zero());
    for (int n = 1; n <= 4; ++n) {
        Transseries prod = 1;
        for (int i = 1; i <= n; ++i)
            prod = prod * exp_n_omega(i);
        CHECK(derive(exp_n_omega(n)) == prod);
        Transseries den = 1;
        for (int i = 0; i < n; ++i)
            den = den * log_n_omega(i);
        CHECK(derive(log_n_omega(n)) == inverse(den));
    }
}

TEST_CASE("derivative agrees with the chain-rule oracle")
{
    for (const char* s : samples) {
        auto x = P(s);
        CHECK_MESSAGE(derive(x) == oracle(x), s);
        CHECK(derive(x) == derive_serial(x));
    }
}

TEST_CASE("Leibniz and linearity on fixed pairs")
{
    for (const char* a : samples)
        for (const char* b : {"w + 1", "exp(w)/log(w)", "k(-1) - 2*log(w)"}) {
            auto x = P(a), y = P(b);
            CHECK(derive(x * y) == x * derive(y) + y * derive(x));
            CHECK(derive(x + y.scaled(3)) == derive(x) + derive(y).scaled(3));
        }
}

TEST_CASE("remainders and tails")
{
    auto d = derive(P("w + O(1/w)"));
    CHECK(d == Transseries(1) + Transseries::big_o(Monomial::omega().pow(-2)));
    CHECK_THROWS_AS(derive(P("w + O(1)")), Error);
    auto t = derive(Transseries::tail(0, 1));
    CHECK(t.marker().has_value());
    CHECK(t.terms().front() == Term{1, Monomial::omega().inverse()});
    CHECK(derive(Transseries::tail(0, 1)) == derive_serial(Transseries::tail(0, 1)));
    // ∂ of the derivative of κ_{-1}: paths go through the tail in the exponent
    auto dk = derive(Transseries::monomial(Monomial::from_log(Transseries::tail(0, 1, -1))));
    CHECK(dk.marker().has_value());
    CHECK(dk.terms().front().coeff == -1);
}

TEST_CASE("dominant path")
{
    CHECK(dominant_path(P("w + log(w)")).entries.size() == 1);
    auto q = dominant_path(P("exp(2*w + 3*log(w))"));
    REQUIRE(q.entries.size() == 3);
    CHECK(q.entries[1] == Term{2, Monomial::omega()});
    CHECK(q.entries[2] == Term{1, L(0, -1)});
    CHECK(dominant_path(P("k(-1) + 1")).entries.size() == 1);
    CHECK_THROWS_AS(dominant_path(P("3")), Error);
    for (const char* s : samples) {
        auto x = P(s);
        CHECK(dominant_derivative(x) == leading_term(derive(x)));
    }
}

TEST_CASE("logarithmic derivative")
{
    CHECK(log_derivative(P("w")) == P("1/w"));
    CHECK(log_derivative(P("exp(w)")) == Transseries(1));
    CHECK(log_derivative(P("k(-1)")) ==
          Transseries::monomial(Monomial::from_log(Transseries::tail(0, 1, -1)) * L(1, 0).inverse()));
    CHECK_THROWS_AS(log_derivative(Transseries{}), Error);
}
