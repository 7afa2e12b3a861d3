#pragma once

// exp, log and real powers on the fragment.  Constants other than 0 have
// irrational exp/log, so exp needs a zero real part and log a unit leading
// coefficient.

#include "surreal/transseries.hpp"

namespace surreal {

Transseries exp(const Transseries& x, const PrecisionContext& ctx = {});
Transseries log(const Transseries& x, const PrecisionContext& ctx = {});
Transseries pow(const Transseries& x, const Coefficient& q, const PrecisionContext& ctx = {});

// exp_n / log_n of omega as values, for convenience.
Transseries exp_n_omega(int n);
Transseries log_n_omega(int n);

} // namespace surreal
