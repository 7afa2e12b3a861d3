#include <doctest.h>

#include "surreal/nested.hpp"
#include "surreal/suites.hpp"

using namespace surreal;

TEST_CASE("generation is deterministic and normalized")
{
    GenSpec spec;
    for (std::uint64_t s = 1; s <= 50; ++s) {
        spec.seed = s;
        const Transseries x = gen_random(spec);
        CHECK(x == gen_random(spec));
        x.check_invariants();
        CHECK(x.is_exact());
        CHECK(!x.has_tails_deep());
        CHECK(x.terms().size() <= static_cast<std::size_t>(spec.size));
        CHECK_NOTHROW(ntrank(x));
    }
    spec.size = 1;
    spec.max_depth = 0;
    for (std::uint64_t s = 1; s <= 50; ++s) {
        spec.seed = s;
        const Transseries x = gen_random(spec);
        CHECK(x.terms().size() <= 1u);
        CHECK(x.depth() <= 1); // atom powers are exp of a combination of logs
    }
    CHECK(case_seed(1, 0) != case_seed(1, 1));
    CHECK(case_seed(1, 0) != case_seed(2, 0));
}

TEST_CASE("small universe")
{
    const auto& u = small_universe();
    CHECK(u.size() <= 10000u);
    CHECK(u.size() > 1000u);
    for (std::size_t i = 0; i < u.size(); i += 97) {
        u[i].check_invariants();
        CHECK(!u[i].has_tails_deep());
    }
}

TEST_CASE("suite runner")
{
    CHECK_THROWS_AS(run_suite("no-such-suite", 1), Error);
    GenSpec spec;
    spec.seed = 42;
    const SuiteReport a = run_suite("order", 40, spec);
    const SuiteReport b = run_suite_serial("order", 40, spec);
    CHECK(a.ok());
    CHECK(a.passed == 40u);
    CHECK(a.passed == b.passed);
    CHECK(to_string(a) == to_string(b));
    for (const auto& name : suite_names())
        CHECK_MESSAGE(run_suite(name, 3, spec).ok(), name);
}
