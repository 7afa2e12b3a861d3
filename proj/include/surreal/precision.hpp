#pragma once

namespace surreal {

// Truncation knobs shared by every operation that may have to cut an
// inherently infinite expansion.
struct PrecisionContext {
    int series_order = 12; // terms kept for Taylor, Mercator and geometric series
    int tail_expand = 12;  // tail-schema members expanded when a tail is used multiplicatively
    int kappa_depth = 4;   // largest alpha tried for u = kappa_{-alpha}
    int fuel = 64;         // antidifferentiation iterations

    // Throws Error(domain_error) when a knob is out of range.
    void validate() const;
};

} // namespace surreal
