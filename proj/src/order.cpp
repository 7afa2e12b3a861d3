#include "surreal/order.hpp"

namespace surreal {

namespace {

Order from_int(int c)
{
    return c < 0 ? Order::less : (c > 0 ? Order::greater : Order::equal);
}

Dominance dominance_of(int c)
{
    return c < 0 ? Dominance::below : (c > 0 ? Dominance::above : Dominance::same);
}

Term determinate_leading(const Transseries& x)
{
    try {
        return leading_term(x);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::indeterminate_leading)
            raise(ErrorKind::indeterminate, "leading term hidden by a remainder");
        throw;
    }
}

Monomial checked_representative(const Transseries& x)
{
    if (!x.is_exact())
        raise(ErrorKind::not_exact, "levels are only taken of exact values");
    if (!is_positive_infinite(x))
        raise(ErrorKind::not_positive_infinite, "argument is not above every integer");
    return level_atom(leading_monomial(x));
}

} // namespace

int sign(const Transseries& x)
{
    if (x.is_zero())
        return 0;
    return sign(determinate_leading(x).coeff);
}

Order compare(const Transseries& x, const Transseries& y)
{
    return from_int(sign(x - y));
}

DominanceReport dominance(const Transseries& x, const Transseries& y)
{
    DominanceReport r{compare(x, y), Dominance::same, false};
    if (x.is_zero() || y.is_zero()) {
        if (x.is_zero() && y.is_zero())
            raise(ErrorKind::zero_value, "dominance of two zeros");
        r.dominance = x.is_zero() ? Dominance::below : Dominance::above;
        return r;
    }
    const Term tx = determinate_leading(x);
    const Term ty = determinate_leading(y);
    r.dominance = dominance_of(surreal::compare(tx.monomial, ty.monomial));
    r.asymptotic = tx == ty;
    return r;
}

Dominance kappa_compare(const Transseries& x, const Transseries& y)
{
    const Monomial a = checked_representative(x);
    const Monomial b = checked_representative(y);
    // Smaller kappa index means a larger kappa class.
    return dominance_of(b.alpha() - a.alpha());
}

Dominance level_compare(const Transseries& x, const Transseries& y)
{
    return dominance_of(surreal::compare(checked_representative(x), checked_representative(y)));
}

Monomial level_representative(const Transseries& x)
{
    return checked_representative(x);
}

bool is_log_atomic(const Monomial& m)
{
    return m.is_atom();
}

bool is_log_atomic(const Transseries& x)
{
    auto t = x.single_term();
    return t && t->is_log_atomic();
}

bool is_positive_infinite(const Transseries& x)
{
    if (x.is_zero())
        return false;
    const Term t = determinate_leading(x);
    return t.coeff > 0 && t.monomial.is_infinite();
}

const char* to_symbol(Order o)
{
    switch (o) {
    case Order::less: return "<";
    case Order::equal: return "=";
    case Order::greater: return ">";
    }
    return "?";
}

const char* to_symbol(Dominance d)
{
    switch (d) {
    case Dominance::below: return "≺";
    case Dominance::same: return "≍";
    case Dominance::above: return "≻";
    }
    return "?";
}

} // namespace surreal
