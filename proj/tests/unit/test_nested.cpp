#include <doctest.h>

#include <algorithm>

#include "surreal/gen.hpp"
#include "surreal/nested.hpp"
#include "surreal/order.hpp"
#include "surreal/textio.hpp"

using namespace surreal;

namespace {

Transseries P(const char* s) { return parse(s); }

bool contains(const std::vector<Transseries>& v, const Transseries& x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

} // namespace

TEST_CASE("nested truncation relation")
{
    CHECK(nested_trunc_le(P("w"), P("w + 1")));
    CHECK(nested_trunc_le(P("exp(w)"), P("exp(w + log(w))")));
    CHECK(!nested_trunc_le(P("w"), P("exp(w)")));
    CHECK(nested_trunc_le(P("w"), P("2*w")));
    CHECK(!nested_trunc_le(P("2*w"), P("w")));
    CHECK(nested_trunc_le(P("-w"), P("-3*w + 1")));
    CHECK(!nested_trunc_le(P("w"), P("-3*w")));
    CHECK(nested_trunc_le(P("exp(exp(w))"), P("exp(exp(w + log(w)) + w)")));
    CHECK(nested_trunc_le(P("w + exp(log(w)^(1/2))"), P("w + 2*exp(log(w)^(1/2) + log2(w))")));
    CHECK_THROWS_AS(nested_trunc_le(P("w"), P("w + tail(0,1)")), Error);
    CHECK(!nested_trunc_le(Transseries{}, P("w")));
}

TEST_CASE("proper nested truncations")
{
    CHECK(proper_nested_truncations(P("2*w")) == std::vector<Transseries>{P("w")});
    CHECK(proper_nested_truncations(P("w + log(w)")) == std::vector<Transseries>{P("w")});
    CHECK(proper_nested_truncations(P("exp(w + log(w))")) == std::vector<Transseries>{P("exp(w)")});
    CHECK(proper_nested_truncations(P("w")).empty());
    CHECK(proper_nested_truncations(P("-1/log(w)")).empty());
    auto preds = proper_nested_truncations(P("3*w^2 + w"));
    CHECK(contains(preds, P("3*w^2")));
    CHECK(contains(preds, P("w^2")));
    CHECK(contains(preds, P("w"))); // log w is a nested truncation of 2 log w
    for (const auto& y : preds)
        CHECK(nested_trunc_le(y, P("3*w^2 + w")));
}

TEST_CASE("rank")
{
    CHECK(ntrank(P("w")) == 0);
    CHECK(ntrank(P("2*w")) == 1);
    CHECK(ntrank(P("exp(w + log(w))")) == 1);
    CHECK(ntrank(P("7")) == 0);
    CHECK(ntrank(Transseries{}) == 0);
    CHECK(ntrank(P("w^2")) == 1);
    CHECK(ntrank(P("exp(2*w)")) == ntrank(P("2*w")));
    CHECK(ntrank(P("-exp(w^2 + w)")) == ntrank(P("w^2 + w")));
}

TEST_CASE("T4 reports")
{
    auto r = check_t4(P("exp(2*w + 3*log(w))"));
    REQUIRE(r.size() == 2);
    for (const auto& p : r) {
        CHECK(p.verdict == PathVerdict::satisfies);
        CHECK(p.k == 1u);
    }
    CHECK(r[0].splits[0].delta == P("3*log(w)"));
    CHECK(r[1].splits[0].gamma == P("2*w"));
    auto w = check_t4(P("w"));
    REQUIRE(w.size() == 1);
    CHECK(w[0].k == 0u);
    CHECK(check_t4(P("k(-1)"))[0].verdict == PathVerdict::satisfies);
    auto t = check_t4(Transseries::tail(0, 1));
    CHECK(t.back().verdict == PathVerdict::unexplored);
}

TEST_CASE("ELT4 reports")
{
    for (const auto& p : check_elt4(P("exp(w + log(w))"))) {
        CHECK(p.verdict == PathVerdict::satisfies);
        CHECK(*p.enters_at <= 2u);
    }
    auto t = check_elt4(Transseries::tail(0, 1));
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        CHECK(t[i].enters_at == 0u);
    CHECK(check_elt4(P("7")).empty());
}

TEST_CASE("partial order and convexity on a universe sample")
{
    std::vector<Transseries> s;
    const auto& u = small_universe();
    for (std::size_t i = 1; i < u.size(); i += 23)
        s.push_back(u[i]);
    s.push_back(P("exp(w)"));
    s.push_back(P("exp(w + log(w))"));
    s.push_back(P("2*w"));
    const std::size_t n = s.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            le[i][j] = !s[i].is_zero() && !s[j].is_zero() && nested_trunc_le(s[i], s[j]);
    for (std::size_t i = 0; i < n; ++i) {
        if (!s[i].is_zero())
            CHECK(le[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && le[i][j])
                CHECK_MESSAGE(!le[j][i], s[i], " and ", s[j]);
            if (!le[i][j])
                continue;
            for (std::size_t k = 0; k < n; ++k)
                if (le[j][k])
                    CHECK(le[i][k]);
        }
        // {y : x ⊴ y} is convex: everything between its extremes is in it
        std::optional<std::size_t> lo, hi;
        for (std::size_t j = 0; j < n; ++j) {
            if (!le[i][j])
                continue;
            if (!lo || compare(s[j], s[*lo]) == Order::less)
                lo = j;
            if (!hi || compare(s[j], s[*hi]) == Order::greater)
                hi = j;
        }
        if (!lo)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (compare(s[*lo], s[j]) != Order::greater && compare(s[j], s[*hi]) != Order::greater)
                CHECK_MESSAGE(le[i][j], s[i], " below ", s[*lo], " and ", s[*hi], " but not ", s[j]);
    }
}
