#include "surreal/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "surreal/explog.hpp"

namespace surreal {

// Parsing ---------------------------------------------------------------------

namespace {

struct Token {
    enum class Kind { nat, ident, symbol, end } kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    int line = 1, column = 1;
    std::size_t i = 0;
    auto advance = [&] {
        if (src[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++i;
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        Token t{Token::Kind::symbol, {}, line, column};
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::nat;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                t.text += src[i];
                advance();
            }
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::ident;
            while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) {
                t.text += src[i];
                advance();
            }
        } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
            t.text = c;
            advance();
        } else {
            raise(ErrorKind::syntax_error, "line " + std::to_string(line) + ", column " +
                                               std::to_string(column) + ": unexpected character '" +
                                               std::string(1, c) + "'");
        }
        out.push_back(std::move(t));
    }
    out.push_back({Token::Kind::end, {}, line, column});
    return out;
}

class Parser {
public:
    Parser(std::string_view src, const PrecisionContext& ctx) : tokens_(tokenize(src)), ctx_(ctx) {}

    Transseries run()
    {
        Transseries x = expr();
        if (peek().kind != Token::Kind::end)
            fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
        return x;
    }

private:
    const Token& peek(std::size_t ahead = 0) const
    {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }

    bool at_symbol(char c, std::size_t ahead = 0) const
    {
        const Token& t = peek(ahead);
        return t.kind == Token::Kind::symbol && t.text[0] == c;
    }

    [[noreturn]] void fail(std::initializer_list<const char*> expected) const
    {
        const Token& t = peek();
        std::string msg = "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                          ": expected one of {";
        bool first = true;
        for (const char* e : expected) {
            msg += first ? "" : ", ";
            msg += e;
            first = false;
        }
        msg += "}, found ";
        msg += t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
        raise(ErrorKind::syntax_error, msg);
    }

    void expect(char c)
    {
        if (!at_symbol(c)) {
            const std::string s = std::string("'") + c + "'";
            fail({s.c_str()});
        }
        ++pos_;
    }

    std::string nat()
    {
        if (peek().kind != Token::Kind::nat)
            fail({"natural number"});
        return tokens_[pos_++].text;
    }

    int small_nat()
    {
        const std::string s = nat();
        if (s.size() > 6)
            raise(ErrorKind::domain_error, "index " + s + " is too large");
        return std::stoi(s);
    }

    // Evaluation errors keep their position; the indeterminate family keeps
    // its kind so callers can tell "needs more precision" from "invalid".
    template <class F>
    Transseries evaluate(const Token& at, F&& f)
    {
        try {
            return f();
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::syntax_error)
                throw;
            const std::string where =
                "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": ";
            throw Error(is_indeterminate(e.kind()) ? e.kind() : ErrorKind::domain_error,
                        where + e.what());
        }
    }

    Transseries expr()
    {
        Transseries x = term();
        while (at_symbol('+') || at_symbol('-')) {
            const bool minus = at_symbol('-');
            ++pos_;
            Transseries y = term();
            x = minus ? x - y : x + y;
        }
        return x;
    }

    Transseries term()
    {
        Transseries x = unary();
        while (at_symbol('*') || at_symbol('/')) {
            const Token op = peek();
            ++pos_;
            Transseries y = unary();
            x = evaluate(op, [&] {
                if (op.text == "*")
                    return mul(x, y, ctx_);
                if (y.is_zero())
                    raise(ErrorKind::zero_division, "division by zero");
                return divide(x, y, ctx_);
            });
        }
        return x;
    }

    Transseries unary()
    {
        if (at_symbol('-')) {
            ++pos_;
            return -unary();
        }
        return factor();
    }

    Transseries factor()
    {
        Transseries x = atom();
        if (at_symbol('^')) {
            const Token op = peek();
            ++pos_;
            const Coefficient q = rational();
            x = evaluate(op, [&] { return pow(x, q, ctx_); });
        }
        return x;
    }

    Coefficient rational()
    {
        bool paren = false, negative = false;
        if (at_symbol('(')) {
            paren = true;
            ++pos_;
            if (at_symbol('-')) {
                negative = true;
                ++pos_;
            }
        }
        const std::string num = nat();
        std::string den = "1";
        if (at_symbol('/') && peek(1).kind == Token::Kind::nat) {
            ++pos_;
            den = nat();
        }
        if (paren)
            expect(')');
        if (mpz_class(den) == 0)
            raise(ErrorKind::domain_error, "zero denominator in exponent");
        Coefficient q{mpz_class(num), mpz_class(den)};
        q.canonicalize();
        return negative ? Coefficient(-q) : q;
    }

    Transseries atom()
    {
        const Token t = peek();
        if (t.kind == Token::Kind::nat) {
            ++pos_;
            return Transseries(Coefficient(mpz_class(t.text)));
        }
        if (at_symbol('(')) {
            ++pos_;
            Transseries x = expr();
            expect(')');
            return x;
        }
        if (t.kind != Token::Kind::ident)
            fail({"number", "'w'", "'k'", "'tail'", "'exp'", "'log'", "'O'", "'('"});
        ++pos_;
        const std::string& id = t.text;
        if (id == "w")
            return Transseries::omega();
        if (id == "k") {
            expect('(');
            const bool negative = at_symbol('-');
            if (negative)
                ++pos_;
            const int n = small_nat();
            expect(')');
            if (!negative && n != 0)
                raise(ErrorKind::domain_error, "k(n) is only available for n <= 0");
            return Transseries::monomial(Monomial::atom(n, 0));
        }
        if (id == "tail") {
            expect('(');
            const int alpha = small_nat();
            expect(',');
            const int start = small_nat();
            expect(')');
            return evaluate(t, [&] { return Transseries::tail(alpha, start); });
        }
        if (id == "exp" || id == "O" || id.rfind("log", 0) == 0) {
            int logs = 0;
            if (id.rfind("log", 0) == 0) {
                const std::string suffix = id.substr(3);
                if (!suffix.empty() && !std::all_of(suffix.begin(), suffix.end(), ::isdigit))
                    fail({"'w'", "'k'", "'tail'", "'exp'", "'log'", "'O'"});
                logs = suffix.empty() ? 1 : std::stoi(suffix);
                if (logs < 1)
                    raise(ErrorKind::domain_error, "log index must be at least 1");
            }
            expect('(');
            Transseries x = expr();
            expect(')');
            return evaluate(t, [&] {
                if (id == "exp")
                    return exp(x, ctx_);
                if (id == "O") {
                    auto s = x.single_term();
                    if (!s)
                        raise(ErrorKind::domain_error, "O(...) needs a single term");
                    return Transseries::big_o(s->monomial);
                }
                for (int i = 0; i < logs; ++i)
                    x = log(x, ctx_);
                return x;
            });
        }
        fail({"'w'", "'k'", "'tail'", "'exp'", "'log'", "'O'"});
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    PrecisionContext ctx_;
};

} // namespace

Transseries parse(std::string_view src, const PrecisionContext& ctx)
{
    return Parser(src, ctx).run();
}

// Formatting ------------------------------------------------------------------

namespace {

struct Style {
    bool latex;
};

std::string coeff_str(const Coefficient& c, const Style& s)
{
    if (!s.latex || c.get_den() == 1)
        return c.get_str();
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

std::string base_str(int alpha, const Style& s)
{
    if (s.latex)
        return alpha == 0 ? "\\omega" : "\\kappa_{-" + std::to_string(alpha) + "}";
    return alpha == 0 ? "w" : "k(-" + std::to_string(alpha) + ")";
}

std::string atom_str(int alpha, int tower, const Style& s)
{
    const std::string base = base_str(alpha, s);
    if (tower == 0)
        return base;
    const int n = std::abs(tower);
    if (s.latex) {
        const std::string fn = tower < 0 ? "\\log" : "\\exp";
        return fn + (n == 1 ? "" : "_{" + std::to_string(n) + "}") + (alpha == 0 ? base : "(" + base + ")");
    }
    if (tower < 0)
        return (n == 1 ? "log" : "log" + std::to_string(n)) + "(" + base + ")";
    std::string out = base;
    for (int i = 0; i < n; ++i)
        out = "exp(" + out + ")";
    return out;
}

std::string series_str(const Transseries& x, const Style& s);

// A product of powers of log-chain atoms, split into numerator and
// denominator factors, when the exponent has that shape.
struct Fraction {
    std::vector<std::string> num, den;
};

std::optional<Fraction> product_sugar(const Transseries& g, const Style& s)
{
    if (g.has_tails())
        return std::nullopt;
    for (const auto& t : g.terms())
        if (!t.monomial.is_atom() || t.monomial.tower() > -1)
            return std::nullopt;
    Fraction out;
    for (const auto& t : g.terms()) {
        const int tower = t.monomial.tower() + 1;
        std::string f = atom_str(t.monomial.alpha(), tower, s);
        const Coefficient e = abs(t.coeff);
        if (e != 1) {
            if (s.latex)
                f = (tower == 0 ? f : "\\left(" + f + "\\right)") + "^{" + e.get_str() + "}";
            else
                f += e.get_den() == 1 ? "^" + e.get_str() : "^(" + e.get_str() + ")";
        }
        (t.coeff > 0 ? out.num : out.den).push_back(std::move(f));
    }
    return out;
}

// a * num / den with the integer parts of a folded into the fraction.
std::string fraction_str(const Coefficient& a, Fraction f, const Style& s)
{
    if (a.get_num() != 1)
        f.num.insert(f.num.begin(), a.get_num().get_str());
    if (a.get_den() != 1)
        f.den.insert(f.den.begin(), a.get_den().get_str());
    auto join = [&](const std::vector<std::string>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out += (i ? (s.latex ? " " : "*") : "") + v[i];
        return out;
    };
    const std::string num = f.num.empty() ? "1" : join(f.num);
    if (f.den.empty())
        return num;
    if (s.latex)
        return "\\frac{" + num + "}{" + join(f.den) + "}";
    return num + "/" + (f.den.size() == 1 ? f.den[0] : "(" + join(f.den) + ")");
}

std::string monomial_str(const Monomial& m, const Style& s)
{
    switch (m.kind()) {
    case Monomial::Kind::one: return "1";
    case Monomial::Kind::atom: return atom_str(m.alpha(), m.tower(), s);
    case Monomial::Kind::exp:
        if (auto p = product_sugar(m.exponent(), s))
            return fraction_str(1, *p, s);
        if (s.latex)
            return "\\exp\\left(" + series_str(m.exponent(), s) + "\\right)";
        return "exp(" + series_str(m.exponent(), s) + ")";
    }
    return "?";
}

std::string tail_str(const TailFamily& f, const Style& s)
{
    if (s.latex)
        return "\\sum_{i\\ge " + std::to_string(f.start) + "}\\log_i" +
               (f.alpha == 0 ? base_str(0, s) : base_str(f.alpha, s));
    return "tail(" + std::to_string(f.alpha) + "," + std::to_string(f.start) + ")";
}

// |c| * body; the sign of c is handled by the caller.
std::string scaled_str(const Coefficient& c, const std::string& body, const Style& s)
{
    const Coefficient a = abs(c);
    if (a == 1)
        return body;
    if (s.latex)
        return coeff_str(a, s) + body;
    return coeff_str(a, s) + "*" + body;
}

std::string term_str(const Coefficient& c, const Monomial& m, const Style& s)
{
    if (m.is_one())
        return coeff_str(abs(c), s);
    if (m.is_exp())
        if (auto p = product_sugar(m.exponent(), s); p && !p->den.empty())
            return fraction_str(abs(c), *p, s);
    return scaled_str(c, monomial_str(m, s), s);
}

std::string series_str(const Transseries& x, const Style& s)
{
    std::string out;
    auto emit = [&](const Coefficient& c, const std::string& body) {
        const bool negative = c < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += body;
    };
    const auto& terms = x.terms();
    std::vector<TailFamily> tails = x.tails();
    std::size_t i = 0, j = 0;
    while (i < terms.size() || j < tails.size()) {
        const bool take_tail =
            j < tails.size() && (i == terms.size() || compare(tails[j].head(), terms[i].monomial) > 0);
        if (take_tail) {
            const auto& f = tails[j++];
            emit(f.coeff, scaled_str(f.coeff, tail_str(f, s), s));
        } else {
            const auto& t = terms[i++];
            emit(t.coeff, term_str(t.coeff, t.monomial, s));
        }
    }
    if (x.marker()) {
        const std::string m = monomial_str(*x.marker(), s);
        const std::string o = s.latex ? "O\\left(" + m + "\\right)" : "O(" + m + ")";
        out += out.empty() ? o : " + " + o;
    }
    return out.empty() ? "0" : out;
}

using nlohmann::json;

std::string rational_json(const Coefficient& c)
{
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

json series_json(const Transseries& x);

json monomial_json(const Monomial& m)
{
    switch (m.kind()) {
    case Monomial::Kind::one: return {{"kind", "num"}, {"value", "1/1"}};
    case Monomial::Kind::atom: return {{"kind", "atom"}, {"alpha", m.alpha()}, {"tower", m.tower()}};
    case Monomial::Kind::exp: return {{"kind", "exp"}, {"arg", series_json(m.exponent())}};
    }
    return nullptr;
}

json series_json(const Transseries& x)
{
    json terms = json::array();
    for (const auto& t : x.terms())
        terms.push_back({{"kind", "mul"}, {"coeff", rational_json(t.coeff)}, {"monomial", monomial_json(t.monomial)}});
    for (const auto& f : x.tails())
        terms.push_back({{"kind", "tail"}, {"alpha", f.alpha}, {"start", f.start}, {"coeff", rational_json(f.coeff)}});
    json out = {{"kind", "add"}, {"terms", terms}};
    if (x.marker())
        out["marker"] = {{"kind", "marker"}, {"monomial", monomial_json(*x.marker())}};
    return out;
}

Coefficient rational_from(const json& j)
{
    Coefficient c(j.get<std::string>());
    c.canonicalize();
    return c;
}

Transseries series_from(const json& j);

Monomial monomial_from(const json& j)
{
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "num")
        return Monomial::one();
    if (kind == "atom")
        return Monomial::atom(j.at("alpha").get<int>(), j.at("tower").get<int>());
    if (kind == "exp")
        return Monomial::from_log(series_from(j.at("arg")));
    raise(ErrorKind::syntax_error, "unknown monomial node '" + kind + "'");
}

Transseries series_from(const json& j)
{
    if (j.at("kind") != "add")
        raise(ErrorKind::syntax_error, "expected an 'add' node");
    std::vector<Term> terms;
    std::vector<TailFamily> tails;
    for (const auto& t : j.at("terms")) {
        if (t.at("kind") == "mul")
            terms.push_back({rational_from(t.at("coeff")), monomial_from(t.at("monomial"))});
        else if (t.at("kind") == "tail")
            tails.push_back({t.at("alpha").get<int>(), t.at("start").get<int>(), rational_from(t.at("coeff"))});
        else
            raise(ErrorKind::syntax_error, "unexpected node inside 'add'");
    }
    std::optional<Monomial> marker;
    if (j.contains("marker"))
        marker = monomial_from(j.at("marker").at("monomial"));
    return Transseries::from_parts(std::move(terms), std::move(tails), std::move(marker));
}

} // namespace

std::string format(const Transseries& x, FormatStyle style)
{
    switch (style) {
    case FormatStyle::plain: return series_str(x, Style{false});
    case FormatStyle::latex: return series_str(x, Style{true});
    case FormatStyle::structured: return series_json(x).dump();
    }
    return {};
}

std::string format(const Monomial& m, FormatStyle style)
{
    if (style == FormatStyle::structured)
        return monomial_json(m).dump();
    return monomial_str(m, Style{style == FormatStyle::latex});
}

std::string format(const Term& t, FormatStyle style)
{
    return format(Transseries::term(t), style);
}

Transseries from_structured(std::string_view text)
{
    try {
        return series_from(json::parse(text));
    } catch (const json::exception& e) {
        raise(ErrorKind::syntax_error, std::string("malformed structured value: ") + e.what());
    }
}

} // namespace surreal
