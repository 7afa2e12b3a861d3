#include <doctest.h>

#include "surreal/explog.hpp"
#include "surreal/textio.hpp"

using namespace surreal;

namespace {
Transseries P(const char* s) { return parse(s); }
} // namespace

TEST_CASE("parse")
{
    CHECK(P("w + 3/2") == Transseries::omega() + Transseries(Coefficient(3, 2)));
    CHECK(P("k(-1) + tail(0,2)") ==
          Transseries::monomial(Monomial::atom(1, 0)) + Transseries::tail(0, 2));
    CHECK(P("k(0)") == P("w"));
    CHECK(P("-w^2") == -P("w^2"));
    CHECK(P("w^2/3") == P("w^(2/3)"));
    CHECK(P("w^(-1)") == P("1/w"));
    CHECK(P("log3(w)") == P("log(log(log(w)))"));
    CHECK(P("2 -\n 3") == Transseries(-1));
}

TEST_CASE("parse errors")
{
    try {
        P("w +\n  * 2");
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::syntax_error);
        CHECK(std::string(e.what()).find("line 2, column 3") != std::string::npos);
    }
    CHECK_THROWS_AS(P("w)"), Error);
    CHECK_THROWS_AS(P("k(2)"), Error);
    CHECK_THROWS_AS(P("foo(w)"), Error);
    try {
        P("exp(1)");
        FAIL("expected a domain error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::domain_error);
    }
}

TEST_CASE("plain format")
{
    CHECK(format(P("1/(w*log(w))")) == "1/(w*log(w))");
    CHECK(format(P("w + O(1/w)")) == "w + O(1/w)");
    CHECK(format(P("exp(2*w + 3*log(w))")) == "exp(2*w + 3*log(w))");
    CHECK(format(P("w^2/log(w)")) == "w^2/log(w)");
    CHECK(format(P("w^(1/2)")) == "w^(1/2)");
    CHECK(format(P("-3/2*w + 1 - 1/w")) == "-3/2*w + 1 - 1/w");
    CHECK(format(P("k(-1) + tail(0,2)")) == "tail(0,2) + k(-1)");
    CHECK(format(P("2/(w*log(w))")) == "2/(w*log(w))");
    CHECK(format(Transseries{}) == "0");
    CHECK(format(P("exp(exp(w))")) == "exp(exp(w))");
    CHECK(format(P("log2(k(-3))")) == "log2(k(-3))");
}

TEST_CASE("latex format")
{
    auto x = Transseries::monomial(Monomial::from_log(Transseries::tail(0, 1, -1)));
    CHECK(format(x, FormatStyle::latex) == "\\exp\\left(-\\sum_{i\\ge 1}\\log_i\\omega\\right)");
    CHECK(format(P("1/(w*log(w))"), FormatStyle::latex) == "\\frac{1}{\\omega \\log\\omega}");
    CHECK(format(P("3/2*k(-1)"), FormatStyle::latex) == "\\frac{3}{2}\\kappa_{-1}");
}

TEST_CASE("round trips")
{
    for (const char* s : {"w + 3/2", "exp(2*w + 3*log(w)) - 7/3*w^(2/5)", "k(-1) + tail(0,2)",
                          "w + O(1/w)", "exp(-tail(0,1))", "-exp(exp(w) - 2*log2(k(-2)))/w^3",
                          "1/(w*log(w)) + O(1/(w^2*log(w)))", "exp(w*log(w)^(1/3))"}) {
        auto x = P(s);
        CHECK_MESSAGE(parse(format(x)) == x, s);
        CHECK(format(parse(format(x))) == format(x));
        CHECK(from_structured(format(x, FormatStyle::structured)) == x);
    }
    CHECK(format(P("3"), FormatStyle::structured) ==
          R"({"kind":"add","terms":[{"coeff":"3/1","kind":"mul","monomial":{"kind":"num","value":"1/1"}}]})");
}
