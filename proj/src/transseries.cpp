#include "surreal/transseries.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace surreal {

int sign(const Coefficient& c)
{
    return sgn(c);
}

namespace {

int sgn_int(int v)
{
    return (v > 0) - (v < 0);
}

// Chain member log_i(kappa_{-alpha}) with i >= 1, else nullopt.
std::optional<std::pair<int, int>> chain_index(const Monomial& m)
{
    if (m.is_atom() && m.tower() < 0)
        return std::pair{m.alpha(), -m.tower()};
    return std::nullopt;
}

void sort_merge(std::vector<Term>& terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return compare(a.monomial, b.monomial) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    terms = std::move(out);
}

// Exact series comparison; used for monomial exponents, which never carry
// markers.
int compare_exact(const Transseries& a, const Transseries& b)
{
    if (!a.has_tails() && !b.has_tails()) {
        const auto& x = a.terms();
        const auto& y = b.terms();
        std::size_t i = 0, j = 0;
        while (i < x.size() && j < y.size()) {
            int c = compare(x[i].monomial, y[j].monomial);
            if (c > 0)
                return sign(x[i].coeff);
            if (c < 0)
                return -sign(y[j].coeff);
            if (x[i].coeff != y[j].coeff)
                return cmp(x[i].coeff, y[j].coeff) > 0 ? 1 : -1;
            ++i;
            ++j;
        }
        if (i < x.size())
            return sign(x[i].coeff);
        if (j < y.size())
            return -sign(y[j].coeff);
        return 0;
    }
    Transseries d = a - b;
    if (d.is_zero())
        return 0;
    return sign(leading_term(d).coeff);
}

// Leading monomial, falling back to the marker for a pure O(m).
Monomial lead_or_marker(const Transseries& x)
{
    if (!x.terms().empty() || x.has_tails())
        return leading_monomial(x);
    return *x.marker();
}

const Monomial& max_monomial(const Monomial& a, const Monomial& b)
{
    return compare(a, b) >= 0 ? a : b;
}

} // namespace

// Monomial --------------------------------------------------------------------

Monomial Monomial::atom(int alpha, int tower)
{
    if (alpha < 0)
        raise(ErrorKind::domain_error, "kappa index must be non-negative");
    Monomial m;
    m.kind_ = Kind::atom;
    m.alpha_ = alpha;
    m.tower_ = tower;
    return m;
}

Monomial Monomial::from_log(const Transseries& gamma)
{
    if (!gamma.is_exact())
        raise(ErrorKind::not_exact, "monomial exponent carries a remainder");
    if (gamma.is_zero())
        return {};
    if (!gamma.is_purely_infinite())
        raise(ErrorKind::domain_error, "monomial exponent is not purely infinite");
    if (auto t = gamma.single_term(); t && t->is_log_atomic())
        return atom(t->monomial.alpha(), t->monomial.tower() + 1);
    Monomial m;
    m.kind_ = Kind::exp;
    m.exponent_ = std::make_shared<const Transseries>(gamma);
    return m;
}

Transseries Monomial::log() const
{
    switch (kind_) {
    case Kind::one: return {};
    case Kind::atom: return Transseries::monomial(atom(alpha_, tower_ - 1));
    case Kind::exp: return *exponent_;
    }
    return {};
}

bool Monomial::is_infinite() const
{
    return compare(*this, Monomial{}) > 0;
}

bool Monomial::is_infinitesimal() const
{
    return compare(*this, Monomial{}) < 0;
}

bool Monomial::has_tails() const
{
    return is_exp() && exponent_->has_tails_deep();
}

int Monomial::depth() const
{
    return is_exp() ? 1 + exponent_->depth() : 0;
}

Monomial Monomial::inverse() const
{
    return from_log(-log());
}

Monomial Monomial::pow(const Coefficient& q) const
{
    if (q == 0)
        return {};
    return from_log(log().scaled(q));
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    if (a.is_one())
        return b;
    if (b.is_one())
        return a;
    return Monomial::from_log(a.log() + b.log());
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    if (b.is_one())
        return a;
    return Monomial::from_log(a.log() - b.log());
}

bool operator==(const Monomial& a, const Monomial& b)
{
    if (a.kind_ != b.kind_)
        return false;
    switch (a.kind_) {
    case Monomial::Kind::one: return true;
    case Monomial::Kind::atom: return a.alpha_ == b.alpha_ && a.tower_ == b.tower_;
    case Monomial::Kind::exp:
        return a.exponent_ == b.exponent_ || *a.exponent_ == *b.exponent_;
    }
    return false;
}

int compare(const Monomial& a, const Monomial& b)
{
    if (a.is_atom() && b.is_atom()) {
        if (a.alpha() != b.alpha())
            return a.alpha() > b.alpha() ? -1 : 1;
        return sgn_int(a.tower() - b.tower());
    }
    if (a.is_one() && b.is_one())
        return 0;
    return compare_exact(a.log(), b.log());
}

Term operator*(const Term& a, const Term& b)
{
    return {a.coeff * b.coeff, a.monomial * b.monomial};
}

Term operator/(const Term& a, const Term& b)
{
    if (b.coeff == 0)
        raise(ErrorKind::zero_division, "division by a zero term");
    return {a.coeff / b.coeff, a.monomial / b.monomial};
}

// Transseries -----------------------------------------------------------------

Transseries::Transseries(const Coefficient& c)
{
    if (c != 0)
        terms_.push_back({c, Monomial{}});
}

Transseries Transseries::term(const Coefficient& c, const Monomial& m)
{
    Transseries x;
    if (c != 0)
        x.terms_.push_back({c, m});
    return x;
}

Transseries Transseries::tail(int alpha, int start, const Coefficient& c)
{
    if (alpha < 0 || start < 1)
        raise(ErrorKind::domain_error, "tail needs alpha >= 0 and start >= 1");
    return from_parts({}, {TailFamily{alpha, start, c}}, std::nullopt);
}

Transseries Transseries::big_o(const Monomial& m)
{
    Transseries x;
    x.marker_ = m;
    return x;
}

Transseries Transseries::from_parts(std::vector<Term> terms, std::vector<TailFamily> tails,
                                    std::optional<Monomial> marker)
{
    sort_merge(terms);

    // Tail families: per alpha, the effective coefficient of log_i is
    // e_i = d_i + sum_k c_k [i >= s_k].  Past the last explicit index and the
    // last start it is the constant C = sum_k c_k; the canonical tail starts
    // at the smallest index from which e_i == C holds.
    std::map<int, std::vector<TailFamily>> groups;
    for (auto& f : tails) {
        if (f.alpha < 0 || f.start < 1)
            raise(ErrorKind::domain_error, "malformed tail family");
        if (f.coeff != 0)
            groups[f.alpha].push_back(std::move(f));
    }
    std::vector<TailFamily> out_tails;
    if (!groups.empty()) {
        std::vector<Term> rest;
        std::map<int, std::map<int, Coefficient>> chain;
        for (auto& t : terms) {
            auto ci = chain_index(t.monomial);
            if (ci && groups.count(ci->first))
                chain[ci->first][ci->second] += t.coeff;
            else
                rest.push_back(std::move(t));
        }
        for (auto& [alpha, fams] : groups) {
            auto& d = chain[alpha];
            Coefficient total = 0;
            int last_start = 1;
            for (const auto& f : fams) {
                total += f.coeff;
                last_start = std::max(last_start, f.start);
            }
            int last_explicit = d.empty() ? 0 : d.rbegin()->first;
            int bound = std::max(last_start, last_explicit + 1);
            auto effective = [&](int i) {
                Coefficient e = 0;
                if (auto it = d.find(i); it != d.end())
                    e = it->second;
                for (const auto& f : fams)
                    if (i >= f.start)
                        e += f.coeff;
                return e;
            };
            int start = bound;
            if (total != 0)
                while (start > 1 && effective(start - 1) == total)
                    --start;
            for (int i = 1; i < start; ++i) {
                Coefficient e = effective(i);
                if (e != 0)
                    rest.push_back({e, Monomial::atom(alpha, -i)});
            }
            if (total != 0)
                out_tails.push_back({alpha, start, total});
        }
        terms = std::move(rest);
        sort_merge(terms);
    }

    if (marker) {
        std::erase_if(terms, [&](const Term& t) { return compare(t.monomial, *marker) <= 0; });
        std::vector<TailFamily> kept;
        bool added = false;
        for (auto& f : out_tails) {
            auto cut = chain_cut(f.alpha, *marker);
            if (!cut) {
                kept.push_back(std::move(f));
                continue;
            }
            for (int i = f.start; i < *cut; ++i) {
                terms.push_back({f.coeff, Monomial::atom(f.alpha, -i)});
                added = true;
            }
        }
        out_tails = std::move(kept);
        if (added)
            sort_merge(terms);
    }

    Transseries x;
    x.terms_ = std::move(terms);
    x.tails_ = std::move(out_tails);
    x.marker_ = std::move(marker);
    return x;
}

bool Transseries::has_tails_deep() const
{
    if (!tails_.empty())
        return true;
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.monomial.has_tails(); });
}

bool Transseries::is_constant() const
{
    return tails_.empty() && !marker_ &&
           (terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()));
}

bool Transseries::is_purely_infinite() const
{
    if (marker_ && !marker_->is_infinite())
        return false;
    return terms_.empty() || terms_.back().monomial.is_infinite();
}

std::optional<Term> Transseries::single_term() const
{
    if (terms_.size() == 1 && tails_.empty() && !marker_)
        return terms_[0];
    return std::nullopt;
}

Coefficient Transseries::coefficient(const Monomial& m) const
{
    for (const auto& t : terms_)
        if (t.monomial == m)
            return t.coeff;
    if (auto ci = chain_index(m))
        for (const auto& f : tails_)
            if (f.alpha == ci->first && ci->second >= f.start)
                return f.coeff;
    return 0;
}

int Transseries::depth() const
{
    int d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.monomial.depth());
    if (marker_)
        d = std::max(d, marker_->depth());
    return d;
}

Transseries Transseries::operator-() const
{
    Transseries x = *this;
    for (auto& t : x.terms_)
        t.coeff = -t.coeff;
    for (auto& f : x.tails_)
        f.coeff = -f.coeff;
    return x;
}

Transseries& Transseries::operator+=(const Transseries& other)
{
    *this = add(*this, other);
    return *this;
}

Transseries& Transseries::operator-=(const Transseries& other)
{
    *this = add(*this, -other);
    return *this;
}

bool operator==(const Transseries& a, const Transseries& b)
{
    return a.terms_ == b.terms_ && a.tails_ == b.tails_ && a.marker_ == b.marker_;
}

Transseries Transseries::scaled(const Term& t, const PrecisionContext& ctx) const
{
    if (t.coeff == 0)
        return {};
    if (!t.monomial.is_one()) {
        if (has_tails())
            return mul(*this, term(t), ctx);
        // Exact: distinct monomials stay distinct and keep their order.
        Transseries x = *this;
        for (auto& u : x.terms_)
            u = u * t;
        if (x.marker_)
            x.marker_ = *x.marker_ * t.monomial;
        return x;
    }
    Transseries x = *this;
    for (auto& u : x.terms_)
        u.coeff *= t.coeff;
    for (auto& f : x.tails_)
        f.coeff *= t.coeff;
    return x;
}

void Transseries::check_invariants() const
{
    auto fail = [](const char* what) { throw std::logic_error(what); };
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff == 0)
            fail("zero coefficient stored");
        if (i > 0 && compare(terms_[i - 1].monomial, terms_[i].monomial) <= 0)
            fail("terms not strictly decreasing");
        if (marker_ && compare(terms_[i].monomial, *marker_) <= 0)
            fail("marker above a listed term");
    }
    for (std::size_t k = 0; k < tails_.size(); ++k) {
        const auto& f = tails_[k];
        if (f.coeff == 0 || f.start < 1)
            fail("malformed tail family");
        if (k > 0 && tails_[k - 1].alpha >= f.alpha)
            fail("tails not sorted by alpha or repeated");
        for (const auto& t : terms_) {
            auto ci = chain_index(t.monomial);
            if (ci && ci->first == f.alpha && ci->second >= f.start - 1 &&
                (ci->second >= f.start || t.coeff == f.coeff))
                fail("explicit term overlaps a tail family");
        }
        if (marker_ && chain_cut(f.alpha, *marker_))
            fail("marker above a tail member");
    }
}

// Field operations --------------------------------------------------------------

Transseries add(const Transseries& x, const Transseries& y)
{
    if (y.is_zero())
        return x;
    if (x.is_zero())
        return y;
    std::vector<Term> terms = x.terms();
    terms.insert(terms.end(), y.terms().begin(), y.terms().end());
    std::vector<TailFamily> tails = x.tails();
    tails.insert(tails.end(), y.tails().begin(), y.tails().end());
    std::optional<Monomial> marker = x.marker();
    if (y.marker())
        marker = marker ? max_monomial(*marker, *y.marker()) : *y.marker();
    return Transseries::from_parts(std::move(terms), std::move(tails), std::move(marker));
}

Transseries expand_tails(const Transseries& x, int count)
{
    if (!x.has_tails())
        return x;
    std::vector<Term> terms = x.terms();
    std::optional<Monomial> marker = x.marker();
    for (const auto& f : x.tails()) {
        for (int i = f.start; i < f.start + count; ++i)
            terms.push_back({f.coeff, f.member(i)});
        Monomial omitted = f.member(f.start + count);
        marker = marker ? max_monomial(*marker, omitted) : omitted;
    }
    return Transseries::from_parts(std::move(terms), {}, std::move(marker));
}

Transseries mul(const Transseries& x0, const Transseries& y0, const PrecisionContext& ctx)
{
    if (x0.is_zero() || y0.is_zero())
        return {};
    if (auto t = y0.single_term(); t && t->monomial.is_one())
        return x0.scaled(t->coeff);
    if (auto t = x0.single_term(); t && t->monomial.is_one())
        return y0.scaled(t->coeff);

    Transseries x = expand_tails(x0, ctx.tail_expand);
    Transseries y = expand_tails(y0, ctx.tail_expand);
    std::vector<Term> terms;
    terms.reserve(x.terms().size() * y.terms().size());
    for (const auto& a : x.terms())
        for (const auto& b : y.terms())
            terms.push_back(a * b);
    std::optional<Monomial> marker;
    if (x.marker() || y.marker()) {
        Monomial lx = lead_or_marker(x);
        Monomial ly = lead_or_marker(y);
        if (y.marker())
            marker = lx * *y.marker();
        if (x.marker()) {
            Monomial m = ly * *x.marker();
            marker = marker ? max_monomial(*marker, m) : m;
        }
    }
    return Transseries::from_parts(std::move(terms), {}, std::move(marker));
}

Transseries operator*(const Transseries& x, const Transseries& y)
{
    return mul(x, y);
}

Transseries inverse(const Transseries& x0, const PrecisionContext& ctx)
{
    if (x0.is_zero())
        raise(ErrorKind::zero_division, "inverse of zero");
    Transseries x = expand_tails(x0, ctx.tail_expand);
    if (x.terms().empty())
        raise(ErrorKind::indeterminate_leading, "the remainder dominates every term");
    const Term t = x.terms().front();
    const Term t_inv{1 / t.coeff, t.monomial.inverse()};
    // x = t (1 + eps) with eps < 1
    Transseries eps = (x - Transseries::term(t)).scaled(t_inv, ctx);
    if (eps.is_zero())
        return Transseries::term(t_inv);

    const Monomial cap = lead_or_marker(eps).pow(ctx.series_order);
    const Transseries bound = Transseries::big_o(cap);
    const Transseries neg_eps = -eps;
    Transseries sum = Transseries(1) + bound;
    Transseries power = 1;
    for (int k = 1; k < ctx.series_order; ++k) {
        power = mul(power, neg_eps, ctx) + bound;
        sum += power;
    }
    return sum.scaled(t_inv, ctx);
}

Transseries divide(const Transseries& x, const Transseries& y, const PrecisionContext& ctx)
{
    if (auto t = y.single_term())
        return x.scaled(Term{1 / t->coeff, t->monomial.inverse()}, ctx);
    return mul(x, inverse(y, ctx), ctx);
}

Transseries power(const Transseries& x, unsigned n, const PrecisionContext& ctx)
{
    Transseries result = 1;
    Transseries base = x;
    while (n > 0) {
        if (n & 1U)
            result = mul(result, base, ctx);
        n >>= 1U;
        if (n > 0)
            base = mul(base, base, ctx);
    }
    return result;
}

Transseries truncate_at(const Transseries& x, const Monomial& m)
{
    std::vector<Term> terms;
    for (const auto& t : x.terms())
        if (compare(t.monomial, m) > 0)
            terms.push_back(t);
    std::vector<TailFamily> tails;
    for (const auto& f : x.tails()) {
        auto cut = chain_cut(f.alpha, m);
        if (!cut) {
            tails.push_back(f);
            continue;
        }
        for (int i = f.start; i < *cut; ++i)
            terms.push_back({f.coeff, f.member(i)});
    }
    std::optional<Monomial> marker;
    if (x.marker() && compare(*x.marker(), m) > 0)
        marker = x.marker();
    return Transseries::from_parts(std::move(terms), std::move(tails), std::move(marker));
}

bool is_truncation(const Transseries& x, const Transseries& y)
{
    if (!x.is_exact() || !y.is_exact())
        raise(ErrorKind::not_exact, "truncation test needs exact values");
    const Transseries d = y - x;
    if (d.is_zero())
        return true;
    const Monomial n = leading_monomial(d);
    for (const auto& t : x.terms())
        if (compare(t.monomial, n) <= 0)
            return false;
    for (const auto& f : x.tails())
        if (chain_cut(f.alpha, n))
            return false;
    return true;
}

Decomposition decompose(const Transseries& x)
{
    if (x.marker() && !x.marker()->is_infinitesimal())
        raise(ErrorKind::indeterminate_split, "remainder is not infinitesimal");
    std::vector<Term> infinite, small;
    Coefficient real = 0;
    for (const auto& t : x.terms()) {
        int c = compare(t.monomial, Monomial{});
        if (c > 0)
            infinite.push_back(t);
        else if (c == 0)
            real = t.coeff;
        else
            small.push_back(t);
    }
    return {Transseries::from_parts(std::move(infinite), x.tails(), std::nullopt), real,
            Transseries::from_parts(std::move(small), {}, x.marker())};
}

Term leading_term(const Transseries& x)
{
    if (x.is_zero())
        raise(ErrorKind::zero_value, "leading term of zero");
    if (x.terms().empty() && !x.has_tails())
        raise(ErrorKind::indeterminate_leading, "only a remainder is known");
    std::optional<Term> best;
    if (!x.terms().empty())
        best = x.terms().front();
    for (const auto& f : x.tails())
        if (!best || compare(f.head(), best->monomial) > 0)
            best = f.head_term();
    return *best;
}

Monomial leading_monomial(const Transseries& x)
{
    return leading_term(x).monomial;
}

std::optional<Term> leading_nonconstant_term(const Transseries& x)
{
    std::optional<Term> best;
    for (const auto& t : x.terms())
        if (!t.monomial.is_one()) {
            best = t;
            break;
        }
    for (const auto& f : x.tails())
        if (!best || compare(f.head(), best->monomial) > 0)
            best = f.head_term();
    return best;
}

Monomial level_atom(const Monomial& m)
{
    if (m.is_atom())
        return m;
    if (!m.is_infinite())
        raise(ErrorKind::not_positive_infinite, "level of a non-infinite monomial");
    const Monomial inner = level_atom(leading_monomial(m.exponent()));
    return Monomial::atom(inner.alpha(), inner.tower() + 1);
}

std::optional<int> chain_cut(int alpha, const Monomial& m)
{
    if (!m.is_infinite())
        return std::nullopt;
    const Monomial rep = level_atom(m);
    if (rep.alpha() < alpha)
        return 1;
    if (rep.alpha() > alpha)
        return std::nullopt;
    const int k = rep.tower();
    if (k >= 0)
        return 1;
    int i = compare(Monomial::atom(alpha, k), m) <= 0 ? -k : -k + 1;
    return std::max(i, 1);
}

// Debug output; the canonical text form lives in textio.

std::ostream& operator<<(std::ostream& os, const Monomial& m)
{
    switch (m.kind()) {
    case Monomial::Kind::one: return os << "1";
    case Monomial::Kind::atom: return os << "L(" << m.alpha() << "," << m.tower() << ")";
    case Monomial::Kind::exp: return os << "E(" << m.exponent() << ")";
    }
    return os;
}

std::ostream& operator<<(std::ostream& os, const Transseries& x)
{
    if (x.is_zero())
        return os << "0";
    bool first = true;
    auto sep = [&] {
        if (!first)
            os << " + ";
        first = false;
    };
    for (const auto& t : x.terms()) {
        sep();
        os << t.coeff << "*" << t.monomial;
    }
    for (const auto& f : x.tails()) {
        sep();
        os << f.coeff << "*T(" << f.alpha << "," << f.start << ")";
    }
    if (x.marker()) {
        sep();
        os << "O(" << *x.marker() << ")";
    }
    return os;
}

} // namespace surreal
