// Command-line calculator over the transseries engine.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "surreal/deriv.hpp"
#include "surreal/explog.hpp"
#include "surreal/integrate.hpp"
#include "surreal/nested.hpp"
#include "surreal/order.hpp"
#include "surreal/suites.hpp"
#include "surreal/textio.hpp"

using namespace surreal;
using nlohmann::json;

namespace {

enum Exit { ok = 0, domain = 1, indeterminate = 2, suite_failure = 3 };

struct Options {
    PrecisionContext ctx;
    std::string format = "plain";
    std::vector<std::string> files;
    std::vector<std::string> exprs;
    std::string mode = "simplest";
};

bool structured(const Options& o) { return o.format == "structured"; }

FormatStyle style(const Options& o)
{
    if (o.format == "latex")
        return FormatStyle::latex;
    return structured(o) ? FormatStyle::structured : FormatStyle::plain;
}

std::string show(const Transseries& x, const Options& o) { return format(x, style(o)); }
std::string show(const Term& t, const Options& o) { return format(t, style(o)); }

json as_json(const Transseries& x) { return json::parse(format(x, FormatStyle::structured)); }
json as_json(const Term& t) { return json::parse(format(t, FormatStyle::structured)); }

// Expressions from arguments, then files, then stdin when neither was given.
std::vector<Transseries> inputs(const Options& o)
{
    std::vector<std::string> sources = o.exprs;
    auto read_lines = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                sources.push_back(line);
    };
    for (const auto& f : o.files) {
        std::ifstream in(f);
        if (!in)
            raise(ErrorKind::domain_error, "cannot read '" + f + "'");
        read_lines(in);
    }
    if (o.exprs.empty() && o.files.empty())
        read_lines(std::cin);
    std::vector<Transseries> out;
    for (const auto& s : sources)
        out.push_back(parse(s, o.ctx));
    return out;
}

std::vector<std::pair<Transseries, Transseries>> pairs(const Options& o)
{
    auto xs = inputs(o);
    if (xs.size() % 2 != 0)
        raise(ErrorKind::domain_error, "expected an even number of expressions");
    std::vector<std::pair<Transseries, Transseries>> out;
    for (std::size_t i = 0; i < xs.size(); i += 2)
        out.emplace_back(xs[i], xs[i + 1]);
    return out;
}

DerivationConfig config(const Options& o)
{
    DerivationConfig cfg;
    cfg.precision = o.ctx;
    if (o.mode == "nokappa")
        cfg.mode = DerivationMode::no_kappa_correction;
    return cfg;
}

void emit(const json& j, const std::string& plain, const Options& o)
{
    std::cout << (structured(o) ? j.dump() : plain) << '\n';
}

int cmd_eval(const Options& o)
{
    for (const auto& x : inputs(o))
        std::cout << show(x, o) << '\n';
    return ok;
}

int cmd_derive(const Options& o)
{
    for (const auto& x : inputs(o))
        std::cout << show(derive(x, config(o)), o) << '\n';
    return ok;
}

int cmd_integrate(const Options& o)
{
    int rc = ok;
    for (const auto& x : inputs(o)) {
        const IntegrationResult r = integrate(x, config(o));
        json j{{"antiderivative", as_json(r.antiderivative)},
               {"residual", as_json(r.residual)},
               {"status", std::string(to_string(r.status))},
               {"steps", r.steps}};
        std::string plain = show(r.antiderivative, o);
        if (r.status == IntegrationStatus::exhausted) {
            j["reason"] = std::string(to_string(r.reason));
            plain += "  [exhausted: " + std::string(to_string(r.reason)) +
                     ", residual " + show(r.residual, o) + "]";
            rc = indeterminate;
        }
        emit(j, plain, o);
    }
    return rc;
}

int cmd_compare(const Options& o)
{
    for (const auto& [x, y] : pairs(o)) {
        const char* s = to_symbol(compare(x, y));
        emit(json{{"order", s}}, s, o);
    }
    return ok;
}

int cmd_dominance(const Options& o)
{
    for (const auto& [x, y] : pairs(o)) {
        const DominanceReport r = dominance(x, y);
        std::string plain = to_symbol(r.dominance);
        if (r.asymptotic)
            plain += " ~";
        emit(json{{"dominance", to_symbol(r.dominance)}, {"asymptotic", r.asymptotic}}, plain, o);
    }
    return ok;
}

int cmd_level(const Options& o)
{
    const auto xs = inputs(o);
    if (xs.size() == 1) {
        const Monomial m = level_representative(xs[0]);
        emit(json{{"representative", json::parse(format(m, FormatStyle::structured))}},
             format(m, style(o)), o);
        return ok;
    }
    for (const auto& [x, y] : pairs(o)) {
        const char* l = to_symbol(level_compare(x, y));
        const char* k = to_symbol(kappa_compare(x, y));
        emit(json{{"level", l}, {"kappa", k}}, std::string("level ") + l + ", kappa " + k, o);
    }
    return ok;
}

int cmd_rank(const Options& o)
{
    for (const auto& x : inputs(o)) {
        const unsigned r = ntrank(x);
        emit(json{{"rank", r}}, std::to_string(r), o);
    }
    return ok;
}

std::string show_path(const Path& p, const Options& o)
{
    std::string s;
    for (const auto& e : p.entries)
        s += (s.empty() ? "" : " -> ") + show(e, o);
    return s;
}

int cmd_paths(const Options& o)
{
    const DerivationConfig cfg = config(o);
    for (const auto& x : inputs(o)) {
        json arr = json::array();
        for (const auto& p : enumerate_paths(x, o.ctx)) {
            json entries = json::array();
            for (const auto& e : p.entries)
                entries.push_back(as_json(e));
            json j{{"entries", entries}};
            std::string plain = show_path(p, o);
            if (p.terminal == Path::Terminal::truncated) {
                j["truncated"] = true;
                plain += "  (tail remainder)";
            } else {
                const Term d = path_derivative(p, cfg.mode);
                j["derivative"] = as_json(d);
                plain += "  : " + show(d, o);
            }
            if (structured(o))
                arr.push_back(j);
            else
                std::cout << plain << '\n';
        }
        if (structured(o))
            std::cout << arr.dump() << '\n';
    }
    return ok;
}

int cmd_t4(const Options& o)
{
    int rc = ok;
    for (const auto& x : inputs(o)) {
        json arr = json::array();
        for (const auto& r : check_t4(x, o.ctx)) {
            if (r.verdict == PathVerdict::refutes)
                rc = suite_failure;
            json j{{"verdict", to_string(r.verdict)}, {"length", r.path.entries.size()}};
            std::string plain = show_path(r.path, o) + "  " + to_string(r.verdict);
            if (r.k) {
                j["k"] = *r.k;
                plain += " (k = " + std::to_string(*r.k) + ")";
            }
            if (structured(o))
                arr.push_back(j);
            else
                std::cout << plain << '\n';
        }
        if (structured(o))
            std::cout << arr.dump() << '\n';
    }
    return rc;
}

int cmd_latex(const Options& o)
{
    for (const auto& x : inputs(o))
        std::cout << format(x, FormatStyle::latex) << '\n';
    return ok;
}

struct SelftestOptions {
    std::vector<std::string> suites;
    std::uint64_t cases = 1000;
    GenSpec spec;
    bool serial = false;
};

int cmd_selftest(const SelftestOptions& s, const Options& o)
{
    std::vector<std::string> names = s.suites;
    if (names.empty() || (names.size() == 1 && names[0] == "all"))
        names = suite_names();
    int rc = ok;
    json arr = json::array();
    for (const auto& n : names) {
        const SuiteReport r =
            s.serial ? run_suite_serial(n, s.cases, s.spec) : run_suite(n, s.cases, s.spec);
        if (!r.ok())
            rc = suite_failure;
        if (structured(o)) {
            json j{{"suite", r.suite}, {"cases", r.cases}, {"passed", r.passed}, {"failed", r.failed},
                   {"seed", r.spec.seed}};
            if (r.first_failure)
                j["first_failure"] = {{"case", r.first_failure->index},
                                      {"case_seed", r.first_failure->seed},
                                      {"message", r.first_failure->message}};
            arr.push_back(j);
        } else {
            std::cout << (r.ok() ? "PASS " : "FAIL ") << to_string(r) << '\n';
        }
    }
    if (structured(o))
        std::cout << arr.dump() << '\n';
    return rc;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact transseries calculator"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Options o;
    app.add_option("--order", o.ctx.series_order, "Series truncation order")->check(CLI::PositiveNumber);
    app.add_option("--tail", o.ctx.tail_expand, "Tail members expanded explicitly")->check(CLI::PositiveNumber);
    app.add_option("--kappa-depth", o.ctx.kappa_depth, "Largest kappa index tried by integration")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--fuel", o.ctx.fuel, "Integration step budget")->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"plain", "latex", "structured"}));
    app.add_option("-f,--file", o.files, "Read expressions from a file, one per line");

    auto with_exprs = [&](CLI::App* sub) {
        sub->add_option("expr", o.exprs, "Expressions (default: read stdin)");
        return sub;
    };
    auto* eval = with_exprs(app.add_subcommand("eval", "Normalize and print"));
    auto* der = with_exprs(app.add_subcommand("derive", "Derivative"));
    der->add_option("--mode", o.mode, "Pre-derivation")->check(CLI::IsMember({"simplest", "nokappa"}));
    auto* integ = with_exprs(app.add_subcommand("integrate", "Antiderivative"));
    integ->add_option("--fuel", o.ctx.fuel, "Integration step budget")->check(CLI::PositiveNumber);
    integ->add_option("--mode", o.mode, "Pre-derivation")->check(CLI::IsMember({"simplest", "nokappa"}));
    auto* cmp = with_exprs(app.add_subcommand("compare", "Order of each pair"));
    auto* dom = with_exprs(app.add_subcommand("dominance", "Dominance of each pair"));
    auto* lvl = with_exprs(app.add_subcommand("level", "Level representative, or level/kappa comparison of a pair"));
    auto* rank = with_exprs(app.add_subcommand("rank", "Nested truncation rank"));
    auto* paths = with_exprs(app.add_subcommand("paths", "Paths and path derivatives"));
    paths->add_option("--mode", o.mode, "Pre-derivation")->check(CLI::IsMember({"simplest", "nokappa"}));
    auto* t4 = with_exprs(app.add_subcommand("t4", "Check axiom T4 on every path"));
    auto* latex = with_exprs(app.add_subcommand("latex", "LaTeX rendering"));

    SelftestOptions st;
    auto* self = app.add_subcommand("selftest", "Run property suites");
    self->add_option("--suite", st.suites, "Suite names, or 'all'");
    self->add_option("--cases", st.cases, "Cases per suite");
    self->add_option("--seed", st.spec.seed, "Run seed");
    self->add_option("--size", st.spec.size, "Terms per level")->check(CLI::PositiveNumber);
    self->add_option("--depth", st.spec.max_depth, "Exponential depth")->check(CLI::NonNegativeNumber);
    self->add_option("--gen-kappa", st.spec.kappa_depth, "Atoms kappa_{-a} with a below this")
        ->check(CLI::PositiveNumber);
    self->add_flag("--tails", st.spec.allow_tails, "Generate tail families");
    self->add_flag("--serial", st.serial, "Run cases without OpenMP");
    self->add_flag("--list", [](std::int64_t) {
        for (const auto& n : suite_names())
            std::cout << n << '\n';
        std::exit(0);
    }, "List suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : domain;
    }

    try {
        o.ctx.validate();
        if (*eval) return cmd_eval(o);
        if (*der) return cmd_derive(o);
        if (*integ) return cmd_integrate(o);
        if (*cmp) return cmd_compare(o);
        if (*dom) return cmd_dominance(o);
        if (*lvl) return cmd_level(o);
        if (*rank) return cmd_rank(o);
        if (*paths) return cmd_paths(o);
        if (*t4) return cmd_t4(o);
        if (*latex) return cmd_latex(o);
        if (*self) return cmd_selftest(st, o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_indeterminate(e.kind()) ? indeterminate : domain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return domain;
    }
    return ok;
}
