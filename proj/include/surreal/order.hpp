#pragma once

// Order, dominance and the level / kappa hierarchies.

#include "surreal/transseries.hpp"

namespace surreal {

enum class Order { less, equal, greater };
// x below y (x ≺ y), same class (x ≍ y), above (x ≻ y)
enum class Dominance { below, same, above };

struct DominanceReport {
    Order strict_order;
    Dominance dominance;
    bool asymptotic; // x ∼ y
};

// Sign of x - y; raises Indeterminate when a remainder hides it.
Order compare(const Transseries& x, const Transseries& y);
int sign(const Transseries& x);
DominanceReport dominance(const Transseries& x, const Transseries& y);

// x ≻_K y iff exp_h(y) < x for every h.  Both arguments must be > N.
Dominance kappa_compare(const Transseries& x, const Transseries& y);
// x ≍_L y iff log_h(x) ≍ log_h(y) for some h.
Dominance level_compare(const Transseries& x, const Transseries& y);
// The unique log-atomic λ with λ ⊴ x, for x > N.
Monomial level_representative(const Transseries& x);

bool is_log_atomic(const Monomial& m);
bool is_log_atomic(const Transseries& x);
// Positive and larger than every integer.
bool is_positive_infinite(const Transseries& x);

const char* to_symbol(Order o);
const char* to_symbol(Dominance d);

} // namespace surreal
