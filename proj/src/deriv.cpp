#include "surreal/deriv.hpp"

#include <algorithm>
#include <cassert>
#include <exception>
#include <optional>

#include <omp.h>

namespace surreal {

Monomial pre_derive(const Monomial& lambda, DerivationMode mode)
{
    if (!lambda.is_atom())
        raise(ErrorKind::not_log_atomic, "pre-derivation is defined on log-atomic monomials");
    const int alpha = lambda.alpha();
    const int m = lambda.tower();

    // Σ_{i>=1} log_i(λ): explicit exp_j(κ_{-α}) for 0 <= j < m, then a tail.
    std::vector<Term> terms;
    for (int j = 0; j < m; ++j)
        terms.push_back({1, Monomial::atom(alpha, j)});
    std::vector<TailFamily> tails{{alpha, std::max(1, 1 - m), 1}};
    if (mode == DerivationMode::simplest)
        for (int beta = 0; beta <= alpha; ++beta)
            tails.push_back({beta, 1, -1});
    return Monomial::from_log(Transseries::from_parts(std::move(terms), std::move(tails), std::nullopt));
}

std::size_t Path::log_atomic_index() const
{
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].is_log_atomic())
            return i;
    raise(ErrorKind::not_log_atomic, "path never reaches a log-atomic entry");
}

namespace {

void extend(std::vector<Term>& prefix, Path::Terminal terminal, const PrecisionContext& ctx,
            std::vector<Path>& out);

void branch(const Transseries& g, std::vector<Term>& prefix, Path::Terminal terminal,
            const PrecisionContext& ctx, std::vector<Path>& out)
{
    for (const auto& t : g.terms()) {
        if (t.monomial.is_one())
            continue;
        prefix.push_back(t);
        extend(prefix, terminal, ctx, out);
        prefix.pop_back();
    }
    for (const auto& f : g.tails()) {
        const int omitted = f.start + ctx.tail_expand;
        for (int i = f.start; i <= omitted; ++i) {
            prefix.push_back({f.coeff, f.member(i)});
            extend(prefix, i == omitted ? Path::Terminal::truncated : Path::Terminal::tail_leaf,
                   ctx, out);
            prefix.pop_back();
        }
    }
}

void extend(std::vector<Term>& prefix, Path::Terminal terminal, const PrecisionContext& ctx,
            std::vector<Path>& out)
{
    const Term& last = prefix.back();
    if (last.is_log_atomic()) {
        out.push_back({prefix, terminal});
        return;
    }
    const Transseries g = last.monomial.log();
    branch(g, prefix, terminal, ctx, out);
}

// The path product without the truncation check; for a truncated path it is
// the derivative of the first omitted tail member.
Term raw_path_derivative(const Path& p, std::size_t k, DerivationMode mode)
{
    std::vector<Term> e = p.entries;
    while (e.size() <= k) {
        const Term& last = e.back();
        if (!last.is_log_atomic())
            raise(ErrorKind::not_log_atomic, "cannot extend a path past a non log-atomic entry");
        e.push_back({1, Monomial::atom(last.monomial.alpha(), last.monomial.tower() - 1)});
    }
    if (!e[k].is_log_atomic())
        raise(ErrorKind::not_log_atomic, "path-derivative index is not log-atomic");
    Coefficient c = 1;
    std::vector<Term> logs;
    std::vector<TailFamily> tails;
    auto collect = [&](const Transseries& g) {
        logs.insert(logs.end(), g.terms().begin(), g.terms().end());
        tails.insert(tails.end(), g.tails().begin(), g.tails().end());
    };
    for (std::size_t i = 0; i < k; ++i) {
        c *= e[i].coeff;
        collect(e[i].monomial.log());
    }
    collect(pre_derive(e[k].monomial, mode).log());
    return {c, Monomial::from_log(
                   Transseries::from_parts(std::move(logs), std::move(tails), std::nullopt))};
}

struct Contribution {
    std::optional<Term> term;
    std::optional<Monomial> bound;
};

Contribution contribution(const Path& p, DerivationMode mode)
{
    if (p.terminal == Path::Terminal::truncated)
        return {std::nullopt, raw_path_derivative(p, p.log_atomic_index(), mode).monomial};
    return {path_derivative(p, mode), std::nullopt};
}

std::optional<Monomial> input_marker_bound(const Transseries& x, DerivationMode mode)
{
    if (!x.marker())
        return std::nullopt;
    const Monomial& m = *x.marker();
    if (m.is_one())
        raise(ErrorKind::indeterminate, "derivative of an O(1) remainder is unbounded");
    return dominant_derivative(Transseries::monomial(m), mode).monomial;
}

Transseries assemble(const Transseries& x, const std::vector<Contribution>& parts,
                     DerivationMode mode)
{
    std::vector<Term> terms;
    std::optional<Monomial> marker = input_marker_bound(x, mode);
    for (const auto& c : parts) {
        if (c.term)
            terms.push_back(*c.term);
        if (c.bound && (!marker || compare(*c.bound, *marker) > 0))
            marker = c.bound;
    }
    return Transseries::from_parts(std::move(terms), {}, std::move(marker));
}

} // namespace

std::vector<Path> enumerate_paths(const Transseries& x, const PrecisionContext& ctx)
{
    std::vector<Path> out;
    std::vector<Term> prefix;
    branch(x, prefix, Path::Terminal::log_atomic, ctx, out);
    return out;
}

Term path_derivative(const Path& p, DerivationMode mode)
{
    if (p.terminal == Path::Terminal::truncated)
        raise(ErrorKind::truncated_path, "path stands for an unexpanded tail remainder");
    const std::size_t k = p.log_atomic_index();
    Term d = raw_path_derivative(p, k, mode);
    assert(d == raw_path_derivative(p, k + 1, mode));
    return d;
}

Term path_derivative_at(const Path& p, std::size_t k, DerivationMode mode)
{
    if (p.terminal == Path::Terminal::truncated)
        raise(ErrorKind::truncated_path, "path stands for an unexpanded tail remainder");
    if (k < p.log_atomic_index())
        raise(ErrorKind::not_log_atomic, "index precedes the first log-atomic entry");
    return raw_path_derivative(p, k, mode);
}

Transseries derive(const Transseries& x, const DerivationConfig& cfg)
{
    const std::vector<Path> paths = enumerate_paths(x, cfg.precision);
    const long n = static_cast<long>(paths.size());
    std::vector<Contribution> parts(paths.size());
    std::exception_ptr error;

#pragma omp parallel for schedule(dynamic) if (n >= 4 && !omp_in_parallel())
    for (long i = 0; i < n; ++i) {
        try {
            parts[i] = contribution(paths[i], cfg.mode);
        } catch (...) {
#pragma omp critical(surreal_derive_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    return assemble(x, parts, cfg.mode);
}

Transseries derive_serial(const Transseries& x, const DerivationConfig& cfg)
{
    std::vector<Contribution> parts;
    for (const auto& p : enumerate_paths(x, cfg.precision))
        parts.push_back(contribution(p, cfg.mode));
    return assemble(x, parts, cfg.mode);
}

Path dominant_path(const Transseries& x)
{
    auto first = leading_nonconstant_term(x);
    if (!first) {
        if (x.marker())
            raise(ErrorKind::indeterminate, "leading non-constant term hidden by a remainder");
        raise(ErrorKind::constant_value, "a constant has no dominant path");
    }
    auto is_listed = [](const Transseries& g, const Term& t) {
        return std::find(g.terms().begin(), g.terms().end(), t) != g.terms().end();
    };
    Path p;
    p.entries.push_back(*first);
    if (!is_listed(x, *first))
        p.terminal = Path::Terminal::tail_leaf;
    while (!p.entries.back().is_log_atomic()) {
        const Transseries g = p.entries.back().monomial.log();
        const Term next = leading_term(g);
        if (!is_listed(g, next))
            p.terminal = Path::Terminal::tail_leaf;
        p.entries.push_back(next);
    }
    return p;
}

Term dominant_derivative(const Transseries& x, DerivationMode mode)
{
    return path_derivative(dominant_path(x), mode);
}

Transseries log_derivative(const Transseries& x, const DerivationConfig& cfg)
{
    if (x.is_zero())
        raise(ErrorKind::zero_division, "logarithmic derivative of zero");
    return divide(derive(x, cfg), x, cfg.precision);
}

} // namespace surreal
