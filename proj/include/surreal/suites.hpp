#pragma once

// Property suites: each case draws fresh values from a per-case seed, so a
// failure is replayable from (suite, seed, spec, case index).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surreal/gen.hpp"

namespace surreal {

struct CaseFailure {
    std::uint64_t index;
    std::uint64_t seed; // per-case seed
    std::string message;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t cases = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    GenSpec spec;
    std::optional<CaseFailure> first_failure;

    bool ok() const { return failed == 0; }
};

const std::vector<std::string>& suite_names();

// Raises UnknownSuite for an unregistered name.
SuiteReport run_suite(const std::string& name, std::uint64_t cases, const GenSpec& spec = {});
SuiteReport run_suite_serial(const std::string& name, std::uint64_t cases,
                             const GenSpec& spec = {});

std::string to_string(const SuiteReport& r);

} // namespace surreal
