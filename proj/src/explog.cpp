#include "surreal/explog.hpp"

#include <cstdlib>

#include "surreal/order.hpp"

namespace surreal {

namespace {

// Leading monomial of a nonzero value, or its marker if nothing else is known.
Monomial size_of(const Transseries& x)
{
    if (!x.terms().empty() || x.has_tails())
        return leading_monomial(x);
    return *x.marker();
}

} // namespace

Transseries exp(const Transseries& x, const PrecisionContext& ctx)
{
    const Decomposition d = decompose(x);
    if (d.real != 0)
        raise(ErrorKind::real_part_not_zero, "exp of a nonzero rational is not rational");
    const Monomial m = Monomial::from_log(d.purely_infinite);
    const Transseries& eps = d.infinitesimal;
    if (eps.is_zero())
        return Transseries::monomial(m);

    // sum_{n<N} eps^n/n! + O(eps^N)
    const Transseries bound = Transseries::big_o(size_of(eps).pow(ctx.series_order));
    Transseries sum = Transseries(1) + bound;
    Transseries power = 1;
    Coefficient factorial = 1;
    for (int n = 1; n < ctx.series_order; ++n) {
        power = mul(power, eps, ctx) + bound;
        factorial *= n;
        sum += power.scaled(1 / factorial);
    }
    return sum.scaled(Term{1, m}, ctx);
}

Transseries log(const Transseries& x0, const PrecisionContext& ctx)
{
    if (sign(x0) <= 0)
        raise(ErrorKind::nonpositive_argument, "log of a non-positive value");
    const Transseries x = expand_tails(x0, ctx.tail_expand);
    const Term t = leading_term(x0);
    if (t.coeff != 1)
        raise(ErrorKind::nonunital_leading_coefficient,
              "log needs leading coefficient 1 (log of a rational is irrational)");
    const Transseries head = t.monomial.log();
    if (x0.single_term())
        return head;

    // x = m (1 + eps)
    const Transseries eps = (x - Transseries::term(t)).scaled(Term{1, t.monomial.inverse()}, ctx);
    if (eps.is_zero())
        return head;
    const Transseries bound = Transseries::big_o(size_of(eps).pow(ctx.series_order + 1));
    Transseries sum = bound;
    Transseries power = 1;
    for (int n = 1; n <= ctx.series_order; ++n) {
        power = mul(power, eps, ctx) + bound;
        sum += power.scaled(Coefficient(n % 2 == 1 ? 1 : -1, n));
    }
    return head + sum;
}

Transseries pow(const Transseries& x, const Coefficient& q, const PrecisionContext& ctx)
{
    if (q.get_den() == 1) {
        if (!q.get_num().fits_slong_p())
            raise(ErrorKind::domain_error, "exponent too large");
        const long n = q.get_num().get_si();
        if (n == 0)
            return 1;
        if (auto t = x.single_term()) {
            Coefficient c = 1;
            for (long i = 0; i < std::abs(n); ++i)
                c *= t->coeff;
            if (n < 0)
                c = 1 / c;
            return Transseries::term(c, t->monomial.pow(q));
        }
        const Transseries p = power(x, static_cast<unsigned>(std::abs(n)), ctx);
        return n > 0 ? p : inverse(p, ctx);
    }
    if (auto t = x.single_term(); t && t->coeff == 1)
        return Transseries::monomial(t->monomial.pow(q));
    return exp(log(x, ctx).scaled(q), ctx);
}

Transseries exp_n_omega(int n)
{
    return Transseries::monomial(Monomial::atom(0, n));
}

Transseries log_n_omega(int n)
{
    return Transseries::monomial(Monomial::atom(0, -n));
}

} // namespace surreal
