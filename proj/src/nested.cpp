#include "surreal/nested.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "surreal/order.hpp"

namespace surreal {

namespace {

void require_rankable(const Transseries& x)
{
    if (!x.is_exact())
        raise(ErrorKind::not_exact, "nested truncations need exact values");
    if (x.has_tails_deep())
        raise(ErrorKind::unsupported_tails, "nested truncations of tail-bearing values");
}

std::string key_of(const Transseries& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

Transseries prefix(const Transseries& x, std::size_t n)
{
    return Transseries::from_parts({x.terms().begin(), x.terms().begin() + n}, {}, std::nullopt);
}

bool le(const Transseries& x, const Transseries& y)
{
    if (is_truncation(x, y))
        return true;
    const auto& xs = x.terms();
    const auto& ys = y.terms();
    const Term& last = xs.back();
    if (abs(last.coeff) != 1 || last.monomial.is_one())
        return false;
    const std::size_t n = xs.size() - 1;
    if (ys.size() <= n || !std::equal(xs.begin(), xs.begin() + n, ys.begin()))
        return false;
    const Term& next = ys[n];
    if (next.monomial.is_one() || sign(next.coeff) != sign(last.coeff))
        return false;
    if (next.monomial == last.monomial)
        return true; // only the coefficient was stripped
    // Atoms have no proper nested truncations, so the log chain stops here.
    if (next.monomial.is_atom())
        return false;
    return le(last.monomial.log(), next.monomial.log());
}

class Ranker {
public:
    const std::vector<Transseries>& preds(const Transseries& x)
    {
        const std::string key = key_of(x);
        if (auto it = preds_.find(key); it != preds_.end())
            return it->second;
        std::vector<Transseries> out = compute_preds(x);
        return preds_.emplace(key, std::move(out)).first->second;
    }

    unsigned rank(const Transseries& x)
    {
        const std::string key = key_of(x);
        if (auto it = ranks_.find(key); it != ranks_.end())
            return it->second;
        unsigned r = 0;
        for (const auto& y : preds(x))
            r = std::max(r, rank(y) + 1);
        ranks_.emplace(key, r);
        return r;
    }

private:
    std::vector<Transseries> compute_preds(const Transseries& x)
    {
        std::vector<Transseries> out;
        if (x.is_zero() || is_signed_atomic_power(x))
            return out;
        auto add = [&](Transseries y) {
            if (y != x && std::find(out.begin(), out.end(), y) == out.end())
                out.push_back(std::move(y));
        };
        const auto& ts = x.terms();
        for (std::size_t k = 0; k < ts.size(); ++k) {
            const Transseries z = prefix(x, k);
            if (k > 0)
                add(z);
            const Term& t = ts[k];
            if (t.monomial.is_one())
                continue;
            const Coefficient s = sign(t.coeff);
            const Transseries delta = t.monomial.log();
            std::vector<Transseries> gammas{delta};
            const auto& below = preds(delta);
            gammas.insert(gammas.end(), below.begin(), below.end());
            for (const auto& g : gammas) {
                const Monomial m = Monomial::from_log(g);
                if (k > 0 && compare(m, ts[k - 1].monomial) >= 0)
                    continue; // not in standard form
                add(z + Transseries::term(s, m));
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const Transseries& a, const Transseries& b) { return sign(a - b) > 0; });
        return out;
    }

    std::map<std::string, std::vector<Transseries>> preds_;
    std::map<std::string, unsigned> ranks_;
};

std::vector<PathSplit> splits_of(const Path& p)
{
    std::vector<PathSplit> out;
    for (std::size_t i = 0; i + 1 < p.entries.size(); ++i) {
        const Transseries g = p.entries[i].monomial.log();
        const Term& e = p.entries[i + 1];
        std::vector<Term> above, below;
        for (const auto& t : g.terms()) {
            if (t.monomial == e.monomial)
                continue;
            (compare(t.monomial, e.monomial) > 0 ? above : below).push_back(t);
        }
        std::vector<TailFamily> tails_above, tails_below;
        for (const auto& f : g.tails()) {
            const bool member = e.monomial.is_atom() && e.monomial.alpha() == f.alpha &&
                                -e.monomial.tower() >= f.start;
            if (!member) {
                (compare(f.head(), e.monomial) > 0 ? tails_above : tails_below).push_back(f);
                continue;
            }
            // e is the member with index j of this family: split around it.
            const int j = -e.monomial.tower();
            for (int i2 = f.start; i2 < j; ++i2)
                above.push_back({f.coeff, f.member(i2)});
            tails_below.push_back({f.alpha, j + 1, f.coeff});
        }
        out.push_back({Transseries::from_parts(std::move(above), std::move(tails_above), std::nullopt), e,
                       Transseries::from_parts(std::move(below), std::move(tails_below), std::nullopt)});
    }
    return out;
}

} // namespace

bool is_signed_atomic_power(const Transseries& x)
{
    auto t = x.single_term();
    if (!t || abs(t->coeff) != 1)
        return false;
    return t->monomial.is_atom() || t->monomial.inverse().is_atom();
}

bool nested_trunc_le(const Transseries& x, const Transseries& y)
{
    require_rankable(x);
    require_rankable(y);
    if (x.is_zero() || y.is_zero())
        return false;
    return le(x, y);
}

std::vector<Transseries> proper_nested_truncations(const Transseries& x)
{
    require_rankable(x);
    Ranker r;
    return r.preds(x);
}

unsigned ntrank(const Transseries& x)
{
    require_rankable(x);
    Ranker r;
    return r.rank(x);
}

std::vector<T4Report> check_t4(const Transseries& x, const PrecisionContext& ctx)
{
    std::vector<T4Report> out;
    for (auto& p : enumerate_paths(x, ctx)) {
        T4Report r;
        r.splits = splits_of(p);
        if (p.terminal == Path::Terminal::truncated) {
            r.verdict = PathVerdict::unexplored;
        } else {
            // Past the last entry the path continues along the log chain of a
            // log-atomic number, where every split is trivial.
            std::size_t k = r.splits.size();
            while (k > 0) {
                const auto& s = r.splits[k - 1];
                if (abs(s.entry.coeff) != 1 || !s.delta.is_zero())
                    break;
                --k;
            }
            r.k = k;
        }
        r.path = std::move(p);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Elt4Report> check_elt4(const Transseries& x, const PrecisionContext& ctx)
{
    std::vector<Elt4Report> out;
    for (auto& p : enumerate_paths(x, ctx)) {
        Elt4Report r;
        if (p.terminal == Path::Terminal::truncated)
            r.verdict = PathVerdict::unexplored;
        else
            r.enters_at = p.log_atomic_index();
        r.path = std::move(p);
        out.push_back(std::move(r));
    }
    return out;
}

const char* to_string(PathVerdict v)
{
    switch (v) {
    case PathVerdict::satisfies: return "satisfies";
    case PathVerdict::refutes: return "refutes";
    case PathVerdict::unexplored: return "unexplored";
    }
    return "?";
}

} // namespace surreal
