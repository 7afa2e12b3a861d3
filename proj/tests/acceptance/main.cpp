// Acceptance criteria: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Usage: acceptance <golden-dir>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "surreal/deriv.hpp"
#include "surreal/explog.hpp"
#include "surreal/integrate.hpp"
#include "surreal/order.hpp"
#include "surreal/suites.hpp"
#include "surreal/textio.hpp"

using namespace surreal;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
    void suite(const std::string& name, std::uint64_t cases, const GenSpec& spec = {})
    {
        const SuiteReport r = run_suite(name, cases, spec);
        require(r.ok() && r.passed == cases, to_string(r));
    }
};

Transseries M(const Monomial& m) { return Transseries::monomial(m); }

Outcome exact_identities()
{
    Outcome o;
    o.require(derive(Transseries::omega()) == Transseries(1), "d(w) != 1");
    Monomial prod, den;
    for (int n = 1; n <= 4; ++n) {
        prod = prod * Monomial::atom(0, n);
        o.require(derive(exp_n_omega(n)) == M(prod), "d(exp_" + std::to_string(n) + "(w))");
        den = den * Monomial::atom(0, 1 - n);
        o.require(derive(log_n_omega(n)) == M(den.inverse()), "d(log_" + std::to_string(n) + "(w))");
    }
    const Transseries tail = Transseries::tail(0, 1, -1);
    o.require(derive(M(Monomial::atom(1, 0))) == M(Monomial::from_log(tail)), "d(k(-1))");
    return o;
}

Outcome derivation_axioms()
{
    Outcome o;
    for (const char* s : {"leibniz", "additivity", "exp-compat", "kernel", "hfield-positivity"})
        o.suite(s, 1000);
    return o;
}

Outcome log_log()
{
    Outcome o;
    GenSpec spec;
    spec.kappa_depth = 4;
    o.suite("log-log", 500, spec); // checks both derivation modes per pair
    return o;
}

Outcome leading_terms()
{
    Outcome o;
    o.suite("leading-term", 1000);
    return o;
}

Outcome integration()
{
    Outcome o;
    DerivationConfig cfg;
    cfg.precision.fuel = 3;
    struct Case {
        const char* x;
        const char* expected;
    };
    for (auto c : {Case{"1", "w"}, Case{"1/w", "log(w)"}, Case{"log(w)", "w*log(w) - w"},
                   Case{"exp(w)", "exp(w)"}}) {
        const IntegrationResult r = integrate(parse(c.x), cfg);
        o.require(r.status == IntegrationStatus::exact && r.residual.is_zero() &&
                      r.antiderivative == parse(c.expected),
                  std::string("integral of ") + c.x + " = " + format(r.antiderivative));
    }
    o.suite("integrate-roundtrip", 200);
    o.suite("smallness", 50);
    return o;
}

Outcome ranks()
{
    Outcome o;
    const auto n = small_universe().size();
    o.suite("rank-props", 1000);
    o.suite("rank-monotone", 500);
    o.suite("rank-chain-universe", n);
    o.suite("rank-zero-universe", n);
    return o;
}

Outcome t4()
{
    Outcome o;
    o.suite("t4-universe", small_universe().size());
    o.suite("t4", 500);
    return o;
}

Outcome psi_structure()
{
    Outcome o;
    for (int a = 1; a <= 4; ++a)
        for (int b = 0; b < a; ++b) {
            const std::string tag = "psi(" + std::to_string(b) + ") vs psi(" + std::to_string(a) + ")";
            o.require(is_truncation(psi(b), psi(a)) && psi(b) != psi(a), tag + ": not a proper truncation");
            o.require(compare(psi(b), psi(a)) == Order::greater, tag + ": order");
        }
    return o;
}

std::vector<std::string> lines(const std::string& path)
{
    std::ifstream in(path);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

Outcome parser(const std::string& golden)
{
    Outcome o;
    o.suite("parse-roundtrip", 1000);
    const auto inputs = lines(golden + "/inputs.txt");
    o.require(!inputs.empty(), "no golden inputs in " + golden);
    struct Golden {
        const char* file;
        std::function<std::string(const Transseries&)> render;
    };
    const Golden files[] = {
        {"plain.golden", [](const Transseries& x) { return format(x); }},
        {"latex.golden", [](const Transseries& x) { return format(x, FormatStyle::latex); }},
        {"derive.golden", [](const Transseries& x) { return format(derive(x)); }},
    };
    for (const auto& g : files) {
        const auto expected = lines(golden + "/" + g.file);
        o.require(expected.size() == inputs.size(), std::string(g.file) + ": line count");
        for (std::size_t i = 0; i < std::min(expected.size(), inputs.size()); ++i)
            o.require(g.render(parse(inputs[i])) == expected[i],
                      std::string(g.file) + ":" + std::to_string(i + 1) + ": " + inputs[i]);
    }
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    const std::string golden = argc > 1 ? argv[1] : "tests/golden";
    struct Criterion {
        int id;
        const char* name;
        double budget_s; // 0: no time limit
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "exact derivation identities", 1.0, exact_identities},
        {2, "derivation axioms (1000 cases x 5 suites)", 30.0, derivation_axioms},
        {3, "log-log inequality, both pre-derivations", 0, log_log},
        {4, "leading term of the derivative is the dominant path derivative", 0, leading_terms},
        {5, "integration round trip and smallness", 0, integration},
        {6, "nested truncation rank", 0, ranks},
        {7, "T4 on every enumerated path", 0, t4},
        {8, "psi truncation structure", 0, psi_structure},
        {9, "parser round trip and golden files", 0, [&] { return parser(golden); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && secs >= c.budget_s)
            o.require(false, "over the " + std::to_string(c.budget_s) + " s budget");
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << secs;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " ("
                  << time.str() << " s)\n";
        for (const auto& n : o.notes)
            std::cout << "      " << n << '\n';
        failed += !o.ok;
    }
    std::cout << (9 - failed) << "/9 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
