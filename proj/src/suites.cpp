#include "surreal/suites.hpp"

#include <exception>
#include <functional>
#include <map>
#include <sstream>

#include <omp.h>

#include "surreal/deriv.hpp"
#include "surreal/explog.hpp"
#include "surreal/integrate.hpp"
#include "surreal/nested.hpp"
#include "surreal/order.hpp"
#include "surreal/textio.hpp"

namespace surreal {

namespace {

struct CheckFailed {
    std::string message;
};

struct Case {
    Rng rng;
    const GenSpec& spec;
    std::uint64_t index;

    Transseries value() { return gen_random(spec, rng); }
    Transseries nonconstant()
    {
        for (;;) {
            Transseries x = value();
            if (!x.is_constant())
                return x;
        }
    }
};

std::string show(const Transseries& x) { return format(x); }

void expect(bool ok, const std::string& what)
{
    if (!ok)
        throw CheckFailed{what};
}

// Exact values must be equal; with a remainder on either side they must agree
// on every term the remainders do not hide.
bool agree(const Transseries& a, const Transseries& b)
{
    if (a.is_exact() && b.is_exact())
        return a == b;
    const Transseries d = a - b;
    return d.terms().empty() && !d.has_tails();
}

void expect_eq(const Transseries& a, const Transseries& b, const std::string& what)
{
    if (!agree(a, b))
        throw CheckFailed{what + ": " + show(a) + " != " + show(b)};
}

// Product by distributing term by term, independent of mul's convolution;
// values with tails or remainders go through mul.
Transseries expand_product(const Transseries& x, const Transseries& y)
{
    if (x.has_tails() || y.has_tails() || !x.is_exact() || !y.is_exact())
        return mul(x, y);
    std::vector<Term> terms;
    for (const auto& a : x.terms())
        for (const auto& b : y.terms())
            terms.push_back(a * b);
    return Transseries::from_parts(std::move(terms), {}, std::nullopt);
}

bool dominated(const Transseries& d, const Monomial& m)
{
    return d.is_zero() || leading_monomial(d) < m;
}

using Check = std::function<void(Case&)>;

void leibniz(Case& c)
{
    const Transseries x = c.value(), y = c.value();
    const Transseries lhs = derive(expand_product(x, y));
    const Transseries rhs = expand_product(derive(x), y) + expand_product(x, derive(y));
    expect_eq(lhs, rhs, "d(xy) vs x'y + xy' for x = " + show(x) + ", y = " + show(y));
}

void ring_laws(Case& c)
{
    const GenSpec spec = [&] {
        GenSpec t = c.spec;
        t.allow_tails = false; // products of tails are only known up to a remainder
        return t;
    }();
    const Transseries x = gen_random(spec, c.rng), y = gen_random(spec, c.rng),
                      z = gen_random(spec, c.rng);
    const std::string at = " for x = " + show(x) + ", y = " + show(y) + ", z = " + show(z);
    expect_eq((x + y) + z, x + (y + z), "additive associativity" + at);
    expect_eq(x + y, y + x, "additive commutativity" + at);
    expect_eq((x * y) * z, x * (y * z), "multiplicative associativity" + at);
    expect_eq(x * y, y * x, "multiplicative commutativity" + at);
    expect_eq(x * (y + z), x * y + x * z, "distributivity" + at);
    expect_eq(x * y, expand_product(x, y), "convolution vs distribution" + at);
    for (const auto& v : {x + y, x * y, x - y})
        v.check_invariants();
}

void additivity(Case& c)
{
    const Transseries x = c.value(), y = c.value(), z = c.value();
    expect_eq(derive(x + y + z), derive(x) + derive(y) + derive(z),
              "d(x+y+z) for x = " + show(x) + ", y = " + show(y) + ", z = " + show(z));
}

void exp_compat(Case& c)
{
    const Transseries g = gen_purely_infinite(c.spec, c.rng);
    const Monomial m = Monomial::from_log(g);
    expect_eq(derive(Transseries::monomial(m)), derive(g).scaled(Term{1, m}),
              "d(exp g) vs exp(g) g' for g = " + show(g));
}

void kernel(Case& c)
{
    Transseries x = c.value();
    if (c.index % 4 == 0)
        x = Transseries(gen_coefficient(c.rng)); // keep constants well represented
    const bool constant = x.is_constant();
    expect(derive(x).is_zero() == constant,
           "kernel mismatch for " + show(x) + ": d = " + show(derive(x)));
}

Transseries positive_infinite(Case& c)
{
    Transseries x = c.value();
    if (!x.is_zero() && leading_monomial(x).is_infinite())
        return sign(leading_term(x).coeff) < 0 ? -x : x;
    return x + Transseries::monomial(gen_infinite_monomial(c.spec, c.rng));
}

void hfield_positivity(Case& c)
{
    const Transseries x = positive_infinite(c);
    expect(is_positive_infinite(x), "generator produced " + show(x));
    const Transseries d = derive(x);
    expect(sign(d) > 0, "d(" + show(x) + ") = " + show(d) + " is not positive");
}

void monotonicity(Case& c)
{
    const Transseries x = c.nonconstant(), y = c.nonconstant();
    const Monomial mx = leading_monomial(x), my = leading_monomial(y);
    const auto [hi, lo] = compare(mx, my) > 0 ? std::pair{x, y} : std::pair{y, x};
    if (compare(mx, my) != 0 && !leading_monomial(hi).is_one()) {
        expect(dominance(derive(hi), derive(lo)).dominance == Dominance::above,
               "d(" + show(hi) + ") not above d(" + show(lo) + ")");
    }
    // x ~ x + z for z below x
    Transseries z;
    for (const auto& t : y.terms())
        if (t.monomial < mx)
            z += Transseries::term(t);
    if (mx.is_one() || z.is_zero())
        return;
    // ∂(x+z) ∼ ∂x iff ∂z ≺ ∂x; comparing leading terms keeps the check
    // determinate when ∂x carries a remainder below ∂z.
    expect(dominance(derive(z), derive(x)).dominance == Dominance::below,
           "d(" + show(x) + ") not asymptotic to d(" + show(x + z) + ")");
}

void log_log(Case& c)
{
    const Monomial a = gen_atom(c.spec, c.rng), b = gen_atom(c.spec, c.rng);
    const Monomial top = a > b ? a : b;
    for (auto mode : {DerivationMode::simplest, DerivationMode::no_kappa_correction}) {
        const Transseries d = pre_derive(a, mode).log() - pre_derive(b, mode).log();
        expect(dominated(d, top), "log-log fails for " + format(a) + ", " + format(b) +
                                      (mode == DerivationMode::simplest ? " (simplest)" : " (nokappa)"));
    }
}

void leading_term_suite(Case& c)
{
    const Transseries x = c.nonconstant();
    const Term lt = leading_term(derive(x));
    const Term dd = dominant_derivative(x);
    expect(lt == dd, "leading term " + format(lt) + " vs dominant path " + format(dd) + " for " + show(x));
}

void integrate_roundtrip(Case& c)
{
    Transseries x = c.value();
    if (x.is_zero())
        x = Transseries(1);
    DerivationConfig cfg;
    cfg.precision.fuel = 6;
    const IntegrationResult r = integrate(x, cfg);
    expect_eq(r.residual, x - derive(r.antiderivative), "residual of " + show(x));
    if (r.status == IntegrationStatus::exact) {
        expect(r.residual.is_zero(), "exact status with nonzero residual for " + show(x));
        return;
    }
    expect(r.reason == ExhaustionReason::fuel || r.reason == ExhaustionReason::precision,
           "integration of " + show(x) + " exhausted: " + std::string(to_string(r.reason)));
    for (std::size_t i = 1; i < r.residuals.size(); ++i)
        expect(r.residuals[i].is_zero() ||
                   leading_monomial(r.residuals[i]) < leading_monomial(r.residuals[i - 1]),
               "residuals of " + show(x) + " do not decrease at step " + std::to_string(i));
}

void smallness(Case& c)
{
    Transseries e = decompose(c.value()).infinitesimal;
    if (e.is_zero())
        e = Transseries::monomial(gen_infinite_monomial(c.spec, c.rng).inverse());
    const Transseries d = derive(e);
    expect(dominated(d, Monomial::one()), "d(" + show(e) + ") = " + show(d) + " is not infinitesimal");
}

// Ranks are only defined on tail-free values, so the rank suites ignore
// allow_tails.
GenSpec tail_free(const GenSpec& spec)
{
    GenSpec s = spec;
    s.allow_tails = false;
    return s;
}

void check_rank_chain(const Transseries& x)
{
    const unsigned r = ntrank(x);
    for (const auto& y : proper_nested_truncations(x)) {
        expect(nested_trunc_le(y, x), show(y) + " listed but not below " + show(x));
        expect(ntrank(y) < r, "rank of " + show(y) + " not below rank of " + show(x));
    }
}

void rank_monotone(Case& c) { check_rank_chain(gen_random(tail_free(c.spec), c.rng)); }

void rank_props(Case& c)
{
    const GenSpec spec = tail_free(c.spec);
    const Monomial m = gen_infinite_monomial(spec, c.rng);
    const Monomial mm = c.index % 2 ? m : m.inverse();
    Coefficient r = gen_coefficient(c.rng);
    if (abs(r) == 1)
        r = 2 * r;
    expect(ntrank(Transseries::term(r, mm)) == ntrank(Transseries::monomial(mm)) + 1,
           "rank(r m) for r = " + r.get_str() + ", m = " + format(mm));
    const Transseries g = gen_purely_infinite(spec, c.rng);
    const Transseries e = Transseries::monomial(Monomial::from_log(g));
    expect(ntrank(e) == ntrank(g) && ntrank(-e) == ntrank(g), "rank(±exp g) for g = " + show(g));
}

void check_paths_t4(const Transseries& x)
{
    for (const auto& rep : check_t4(x)) {
        if (rep.verdict == PathVerdict::unexplored)
            continue;
        expect(rep.verdict == PathVerdict::satisfies && rep.k.has_value(), "T4 refuted for " + show(x));
        for (std::size_t i = 0; i < rep.splits.size(); ++i) {
            const PathSplit& s = rep.splits[i];
            const Transseries g = rep.path.entries[i].monomial.log();
            expect_eq(s.gamma + Transseries::term(s.entry) + s.delta, g, "split reassembly");
            expect(s.gamma.is_zero() || leading_monomial(s.gamma) > s.entry.monomial, "split gamma");
            expect(s.delta.is_zero() || leading_monomial(s.delta) < s.entry.monomial, "split delta");
            if (i >= *rep.k)
                expect(abs(s.entry.coeff) == 1 && s.delta.is_zero(),
                       "split past k not trivial for " + show(x));
        }
        expect(rep.path.entries.back().is_log_atomic(), "path of " + show(x) + " ends off L");
    }
}

void t4(Case& c) { check_paths_t4(c.value()); }

void elt4(Case& c)
{
    const Transseries x = c.value();
    for (const auto& rep : check_elt4(x)) {
        if (rep.verdict == PathVerdict::unexplored)
            continue;
        expect(rep.enters_at.has_value(), "path of " + show(x) + " never enters L");
        for (std::size_t i = *rep.enters_at; i < rep.path.entries.size(); ++i)
            expect(rep.path.entries[i].is_log_atomic(), "path of " + show(x) + " leaves L");
    }
}

void order_suite(Case& c)
{
    const Transseries x = c.value(), y = c.value(), z = c.value();
    const Order xy = compare(x, y), yx = compare(y, x);
    expect((xy == Order::less) == (yx == Order::greater) && (xy == Order::equal) == (x == y),
           "antisymmetry for " + show(x) + ", " + show(y));
    expect(compare(x + z, y + z) == xy, "translation invariance");
    expect(compare(x - y, Transseries{}) == xy, "compare vs sign of difference");
    if (xy != Order::greater && compare(y, z) != Order::greater)
        expect(compare(x, z) != Order::greater, "transitivity for " + show(x) + ", " + show(y) + ", " + show(z));
}

void levels(Case& c)
{
    const Transseries x = positive_infinite(c), y = positive_infinite(c);
    if (level_compare(x, y) == Dominance::same)
        expect(kappa_compare(x, y) == Dominance::same, "same level, different kappa: " + show(x) + ", " + show(y));
    const Monomial rep = level_representative(x);
    expect(is_log_atomic(rep), "representative of " + show(x) + " is not log-atomic");
    if (!x.has_tails_deep())
        expect(nested_trunc_le(Transseries::monomial(rep), x),
               format(rep) + " is not a nested truncation of " + show(x));
    const Monomial a = gen_atom(c.spec, c.rng), b = gen_atom(c.spec, c.rng);
    expect((a == b) == (level_compare(Transseries::monomial(a), Transseries::monomial(b)) == Dominance::same),
           "atoms " + format(a) + ", " + format(b) + " share a level");
}

void atom_derivatives(Case& c)
{
    Monomial a = gen_atom(c.spec, c.rng), b = gen_atom(c.spec, c.rng);
    if (a == b)
        return;
    if (a < b)
        std::swap(a, b);
    const Transseries da = derive(Transseries::monomial(a)), db = derive(Transseries::monomial(b));
    expect(sign(db) > 0 && compare(da, db) == Order::greater,
           "d(" + format(a) + ") > d(" + format(b) + ") > 0 fails");
}

void exp_homomorphism(Case& c)
{
    const Transseries g = gen_purely_infinite(c.spec, c.rng), h = gen_purely_infinite(c.spec, c.rng);
    expect_eq(exp(g + h), exp(g) * exp(h), "exp(g+h) for g = " + show(g) + ", h = " + show(h));
    expect_eq(log(exp(g)), g, "log(exp g)");
    if (compare(g, h) == Order::less)
        expect(compare(exp(g), exp(h)) == Order::less, "exp not increasing at " + show(g) + ", " + show(h));
}

void parse_roundtrip(Case& c)
{
    const Transseries x = c.value();
    const std::string s = format(x);
    expect_eq(parse(s), x, "parse(\"" + s + "\")");
    expect_eq(from_structured(format(x, FormatStyle::structured)), x, "structured round trip");
}

void psi_suite(Case& c)
{
    const int hi = std::max(1, c.spec.kappa_depth);
    const int a = std::uniform_int_distribution<int>(1, hi)(c.rng);
    const int b = std::uniform_int_distribution<int>(0, a - 1)(c.rng);
    expect(is_truncation(psi(b), psi(a)) && psi(b) != psi(a),
           "psi(" + std::to_string(b) + ") is not a proper truncation of psi(" + std::to_string(a) + ")");
    expect(compare(psi(b), psi(a)) == Order::greater, "psi order");
}

// Universe suites: case i checks element i of the small universe.
const Transseries& universe_element(const Case& c)
{
    const auto& u = small_universe();
    return u[c.index % u.size()];
}

void rank_zero_universe(Case& c)
{
    const Transseries& x = universe_element(c);
    bool expected = x.is_constant();
    if (auto t = x.single_term(); t && abs(t->coeff) == 1) {
        const Monomial& m = t->monomial;
        expected = expected || is_log_atomic(m) || (!m.is_one() && is_log_atomic(m.inverse()));
    }
    expect((ntrank(x) == 0) == expected, "rank-zero classification for " + show(x));
}

void rank_chain_universe(Case& c) { check_rank_chain(universe_element(c)); }

void t4_universe(Case& c) { check_paths_t4(universe_element(c)); }

const std::map<std::string, Check>& registry()
{
    static const std::map<std::string, Check> r{
        {"leibniz", leibniz},
        {"additivity", additivity},
        {"ring-laws", ring_laws},
        {"exp-compat", exp_compat},
        {"kernel", kernel},
        {"hfield-positivity", hfield_positivity},
        {"monotonicity", monotonicity},
        {"log-log", log_log},
        {"leading-term", leading_term_suite},
        {"integrate-roundtrip", integrate_roundtrip},
        {"smallness", smallness},
        {"rank-monotone", rank_monotone},
        {"rank-props", rank_props},
        {"rank-zero-universe", rank_zero_universe},
        {"rank-chain-universe", rank_chain_universe},
        {"t4", t4},
        {"t4-universe", t4_universe},
        {"elt4", elt4},
        {"order", order_suite},
        {"exp-homomorphism", exp_homomorphism},
        {"levels", levels},
        {"atom-derivatives", atom_derivatives},
        {"parse-roundtrip", parse_roundtrip},
        {"psi", psi_suite},
    };
    return r;
}

const Check& lookup(const std::string& name)
{
    const auto& r = registry();
    auto it = r.find(name);
    if (it == r.end())
        raise(ErrorKind::unknown_suite, "no suite named '" + name + "'");
    return it->second;
}

std::optional<std::string> run_case(const Check& check, const GenSpec& spec, std::uint64_t index)
{
    Case c{Rng(case_seed(spec.seed, index)), spec, index};
    try {
        check(c);
        return std::nullopt;
    } catch (const CheckFailed& f) {
        return f.message;
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

SuiteReport collect(const std::string& name, const GenSpec& spec,
                    const std::vector<std::optional<std::string>>& outcomes)
{
    SuiteReport r;
    r.suite = name;
    r.spec = spec;
    r.cases = outcomes.size();
    for (std::uint64_t i = 0; i < outcomes.size(); ++i) {
        if (!outcomes[i]) {
            ++r.passed;
            continue;
        }
        ++r.failed;
        if (!r.first_failure)
            r.first_failure = CaseFailure{i, case_seed(spec.seed, i), *outcomes[i]};
    }
    return r;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, check] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t cases, const GenSpec& spec)
{
    const Check& check = lookup(name);
    std::vector<std::optional<std::string>> outcomes(cases);
    const long n = static_cast<long>(cases);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i)
        outcomes[i] = run_case(check, spec, i);
    return collect(name, spec, outcomes);
}

SuiteReport run_suite_serial(const std::string& name, std::uint64_t cases, const GenSpec& spec)
{
    const Check& check = lookup(name);
    std::vector<std::optional<std::string>> outcomes;
    for (std::uint64_t i = 0; i < cases; ++i)
        outcomes.push_back(run_case(check, spec, i));
    return collect(name, spec, outcomes);
}

std::string to_string(const SuiteReport& r)
{
    std::ostringstream os;
    os << r.suite << ": " << r.passed << "/" << r.cases << " passed (seed " << r.spec.seed
       << ", size " << r.spec.size << ", depth " << r.spec.max_depth << ", kappa "
       << r.spec.kappa_depth << (r.spec.allow_tails ? ", tails" : "") << ")";
    if (r.first_failure)
        os << "\n  first failure: case " << r.first_failure->index << " (case seed "
           << r.first_failure->seed << "): " << r.first_failure->message;
    return os.str();
}

} // namespace surreal
