#include "surreal/gen.hpp"

#include <array>

namespace surreal {

namespace {

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, int num, int den) { return uniform(rng, 1, den) <= num; }

Coefficient small_exponent(Rng& rng)
{
    static const std::array<Coefficient, 6> qs{Coefficient(1), Coefficient(-1), Coefficient(2),
                                               Coefficient(-2), Coefficient(1, 2), Coefficient(3)};
    return qs[uniform(rng, 0, qs.size() - 1)];
}

Monomial gen_monomial(const GenSpec& spec, int depth, Rng& rng);

Transseries gen_exponent(const GenSpec& spec, int depth, Rng& rng)
{
    Transseries g;
    const int n = uniform(rng, 1, spec.size);
    for (int i = 0; i < n; ++i) {
        Monomial m = gen_monomial(spec, depth, rng);
        if (m.is_one())
            m = Monomial::omega();
        if (m.is_infinitesimal())
            m = m.inverse();
        g += Transseries::term(gen_coefficient(rng), m);
    }
    if (spec.allow_tails && chance(rng, 1, 5))
        g += Transseries::tail(uniform(rng, 0, spec.kappa_depth - 1), uniform(rng, 1, 3),
                               gen_coefficient(rng));
    if (g.is_zero())
        g = Transseries::omega();
    return g;
}

Monomial gen_monomial(const GenSpec& spec, int depth, Rng& rng)
{
    if (depth > 0 && chance(rng, 1, 3)) {
        Monomial m = Monomial::from_log(gen_exponent(spec, depth - 1, rng));
        return chance(rng, 1, 2) ? m : m.inverse();
    }
    Monomial m = gen_atom(spec, rng).pow(small_exponent(rng));
    if (chance(rng, 1, 3))
        m = m * gen_atom(spec, rng).pow(small_exponent(rng));
    return m;
}

} // namespace

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index)
{
    // splitmix64 of the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Coefficient gen_coefficient(Rng& rng)
{
    static const std::array<Coefficient, 10> cs{
        Coefficient(1),     Coefficient(-1),    Coefficient(2),     Coefficient(-2),
        Coefficient(3),     Coefficient(1, 2),  Coefficient(-1, 2), Coefficient(3, 2),
        Coefficient(-5, 3), Coefficient(7)};
    return cs[uniform(rng, 0, cs.size() - 1)];
}

Monomial gen_atom(const GenSpec& spec, Rng& rng)
{
    return Monomial::atom(uniform(rng, 0, spec.kappa_depth - 1), uniform(rng, -2, 1));
}

Monomial gen_infinite_monomial(const GenSpec& spec, Rng& rng)
{
    Monomial m = gen_monomial(spec, spec.max_depth, rng);
    if (m.is_one())
        return gen_atom(spec, rng);
    return m.is_infinite() ? m : m.inverse();
}

Transseries gen_purely_infinite(const GenSpec& spec, Rng& rng)
{
    return gen_exponent(spec, spec.max_depth, rng);
}

Transseries gen_random(const GenSpec& spec, Rng& rng)
{
    Transseries x;
    const int n = uniform(rng, 1, spec.size);
    for (int i = 0; i < n; ++i) {
        const Monomial m = chance(rng, 1, 4) ? Monomial::one() : gen_monomial(spec, spec.max_depth, rng);
        x += Transseries::term(gen_coefficient(rng), m);
    }
    if (spec.allow_tails && chance(rng, 1, 4))
        x += Transseries::tail(uniform(rng, 0, spec.kappa_depth - 1), uniform(rng, 1, 3),
                               gen_coefficient(rng));
    return x;
}

Transseries gen_random(const GenSpec& spec)
{
    Rng rng(spec.seed);
    return gen_random(spec, rng);
}

const std::vector<Transseries>& small_universe()
{
    static const std::vector<Transseries> universe = [] {
        const Monomial w = Monomial::omega();
        const Monomial lw = Monomial::atom(0, -1);
        const Monomial ew = Monomial::atom(0, 1);
        const Monomial k1 = Monomial::atom(1, 0);
        const auto e = [](const Transseries& g) { return Monomial::from_log(g); };
        const Transseries W = Transseries::omega();
        const std::vector<Monomial> monomials{
            w,           w.inverse(),
            w.pow(2),    w.pow(Coefficient(1, 2)),
            lw,          lw.inverse(),
            Monomial::atom(0, -2),
            ew,          ew.inverse(),
            e(W.scaled(2)),
            ew * w,      w * lw,
            k1,          k1.inverse(),
            Monomial::atom(0, 2),
            e(Transseries::monomial(w.pow(2))),
            e(W.scaled(-2) + Transseries::monomial(lw)),
        };
        const std::vector<Coefficient> coeffs{Coefficient(1), Coefficient(-1), Coefficient(2),
                                              Coefficient(-1, 2)};
        std::vector<Transseries> out{Transseries{}};
        for (const auto& c : coeffs)
            out.emplace_back(c);
        for (const auto& m : monomials)
            for (const auto& c : coeffs) {
                out.push_back(Transseries::term(c, m));
                out.push_back(Transseries::term(c, m) + Transseries(1));
            }
        const std::size_t n = monomials.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (const auto& a : coeffs)
                    for (const auto& b : coeffs)
                        out.push_back(Transseries::term(a, monomials[i]) + Transseries::term(b, monomials[j]));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    for (int s = 0; s < 8; ++s)
                        out.push_back(Transseries::term(s & 1 ? -1 : 1, monomials[i]) +
                                      Transseries::term(s & 2 ? -1 : 1, monomials[j]) +
                                      Transseries::term(s & 4 ? -1 : 1, monomials[k]));
        return out;
    }();
    return universe;
}

} // namespace surreal
