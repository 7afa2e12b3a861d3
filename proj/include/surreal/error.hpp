#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surreal {

enum class ErrorKind {
    zero_division,
    zero_value,
    indeterminate,
    indeterminate_leading,
    indeterminate_split,
    not_positive_infinite,
    real_part_not_zero,
    nonpositive_argument,
    nonunital_leading_coefficient,
    unsupported_tails,
    not_exact,
    not_log_atomic,
    truncated_path,
    constant_value,
    needs_deeper_kappa,
    syntax_error,
    domain_error,
    unknown_suite,
};

std::string_view to_string(ErrorKind kind) noexcept;

// True for the kinds that mean "the answer is hidden by a remainder marker at
// the current precision" rather than "the input is outside the domain".
bool is_indeterminate(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

} // namespace surreal
