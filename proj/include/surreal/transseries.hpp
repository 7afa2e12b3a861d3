#pragma once

// Exact values of the finitely representable transseries fragment.
//
// A value is a finite, strictly decreasing list of terms c*m, a set of tail
// schemas c * sum_{i>=s} log_i(kappa_{-alpha}), and optionally a remainder
// marker O(m) standing for an unknown quantity dominated by m.  Monomials are
// either 1, an atom exp_m(kappa_{-alpha}) (log for negative m), or exp(gamma)
// for an exact purely infinite gamma.  Every constructor normalizes, so
// structural equality is value equality.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "surreal/error.hpp"
#include "surreal/precision.hpp"

namespace surreal {

using Coefficient = mpq_class;

int sign(const Coefficient& c);

class Transseries;

class Monomial {
public:
    enum class Kind : std::uint8_t { one, atom, exp };

    Monomial() = default; // the monomial 1

    static Monomial one() { return {}; }
    // exp_tower(kappa_{-alpha}); a negative tower is an iterated log.
    static Monomial atom(int alpha, int tower);
    static Monomial omega() { return atom(0, 0); }
    // exp(gamma) for an exact purely infinite gamma.  Returns 1 for gamma = 0
    // and the atom exp_{m+1}(kappa_{-alpha}) when gamma is the single term
    // 1*exp_m(kappa_{-alpha}).
    static Monomial from_log(const Transseries& gamma);

    Kind kind() const noexcept { return kind_; }
    bool is_one() const noexcept { return kind_ == Kind::one; }
    bool is_atom() const noexcept { return kind_ == Kind::atom; }
    bool is_exp() const noexcept { return kind_ == Kind::exp; }
    int alpha() const noexcept { return alpha_; }
    int tower() const noexcept { return tower_; }
    // Only valid for Kind::exp.
    const Transseries& exponent() const { return *exponent_; }

    // The l-value: the purely infinite gamma with this = exp(gamma).
    Transseries log() const;

    // Monomials are totally ordered; 1 < m iff m is infinite.
    bool is_infinite() const;  // > 1
    bool is_infinitesimal() const; // < 1
    bool has_tails() const;    // anywhere inside the exponent tree
    int depth() const;         // exponential nesting depth, atoms have depth 0

    Monomial inverse() const;
    Monomial pow(const Coefficient& q) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b);

private:
    Kind kind_ = Kind::one;
    int alpha_ = 0;
    int tower_ = 0;
    std::shared_ptr<const Transseries> exponent_;
};

// Three-way comparison of monomials as surreal numbers: -1, 0 or 1.
int compare(const Monomial& a, const Monomial& b);
inline bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }
inline bool operator>(const Monomial& a, const Monomial& b) { return compare(a, b) > 0; }
inline bool operator<=(const Monomial& a, const Monomial& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Monomial& a, const Monomial& b) { return compare(a, b) >= 0; }

struct Term {
    Coefficient coeff;
    Monomial monomial;

    bool is_log_atomic() const { return coeff == 1 && monomial.is_atom(); }
    friend bool operator==(const Term& a, const Term& b)
    {
        return a.coeff == b.coeff && a.monomial == b.monomial;
    }
};

Term operator*(const Term& a, const Term& b);
Term operator/(const Term& a, const Term& b);

// coeff * sum_{i >= start} log_i(kappa_{-alpha})
struct TailFamily {
    int alpha = 0;
    int start = 1;
    Coefficient coeff = 1;

    Monomial member(int i) const { return Monomial::atom(alpha, -i); }
    Monomial head() const { return member(start); }
    Term head_term() const { return {coeff, head()}; }
    friend bool operator==(const TailFamily& a, const TailFamily& b)
    {
        return a.alpha == b.alpha && a.start == b.start && a.coeff == b.coeff;
    }
};

class Transseries {
public:
    Transseries() = default; // exact zero
    Transseries(const Coefficient& c);
    Transseries(long c) : Transseries(Coefficient(c)) {}

    static Transseries term(const Coefficient& c, const Monomial& m);
    static Transseries term(const Term& t) { return term(t.coeff, t.monomial); }
    static Transseries monomial(const Monomial& m) { return term(1, m); }
    static Transseries omega() { return monomial(Monomial::omega()); }
    static Transseries tail(int alpha, int start, const Coefficient& c = 1);
    static Transseries big_o(const Monomial& m);
    // Normalizing constructor from arbitrary parts (unsorted, repeated
    // monomials, overlapping tails are all fine).
    static Transseries from_parts(std::vector<Term> terms, std::vector<TailFamily> tails,
                                  std::optional<Monomial> marker);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    const std::vector<TailFamily>& tails() const noexcept { return tails_; }
    const std::optional<Monomial>& marker() const noexcept { return marker_; }

    bool is_zero() const noexcept { return terms_.empty() && tails_.empty() && !marker_; }
    bool is_exact() const noexcept { return !marker_; }
    bool has_tails() const noexcept { return !tails_.empty(); }
    // Tails anywhere, including inside monomial exponents.
    bool has_tails_deep() const;
    // Exact rational constant (including zero).
    bool is_constant() const;
    bool is_purely_infinite() const;
    std::optional<Term> single_term() const;

    Coefficient coefficient(const Monomial& m) const;
    int depth() const;

    Transseries operator-() const;
    Transseries& operator+=(const Transseries& other);
    Transseries& operator-=(const Transseries& other);
    friend Transseries operator+(Transseries a, const Transseries& b) { return a += b; }
    friend Transseries operator-(Transseries a, const Transseries& b) { return a -= b; }
    friend bool operator==(const Transseries& a, const Transseries& b);

    // Multiplication by a single term; exact unless a top-level tail has to
    // be expanded (only when the monomial is not 1).
    Transseries scaled(const Term& t, const PrecisionContext& ctx = {}) const;
    Transseries scaled(const Coefficient& c) const { return scaled(Term{c, Monomial::one()}); }

    // Structural invariants of the normal form; throws std::logic_error.
    void check_invariants() const;

private:
    std::vector<Term> terms_;
    std::vector<TailFamily> tails_;
    std::optional<Monomial> marker_;
};

// Field operations ----------------------------------------------------------

Transseries add(const Transseries& x, const Transseries& y);
// Exact convolution when neither factor carries a top-level tail; tails are
// otherwise expanded to ctx.tail_expand members plus a marker.
Transseries mul(const Transseries& x, const Transseries& y, const PrecisionContext& ctx = {});
Transseries operator*(const Transseries& x, const Transseries& y);
Transseries inverse(const Transseries& x, const PrecisionContext& ctx = {});
Transseries divide(const Transseries& x, const Transseries& y, const PrecisionContext& ctx = {});
Transseries power(const Transseries& x, unsigned n, const PrecisionContext& ctx = {});

// Replace every top-level tail by its first `count` members plus a marker at
// the first omitted member.
Transseries expand_tails(const Transseries& x, int count);

// x|m: the monomials strictly greater than m.
Transseries truncate_at(const Transseries& x, const Monomial& m);
// True iff x is a truncation of y (x = y|m for some m, or x = y).
bool is_truncation(const Transseries& x, const Transseries& y);

struct Decomposition {
    Transseries purely_infinite;
    Coefficient real;
    Transseries infinitesimal;
};
Decomposition decompose(const Transseries& x);

// The maximal term, tail heads included.
Term leading_term(const Transseries& x);
Monomial leading_monomial(const Transseries& x);
// Largest term with monomial != 1, or nullopt for constants.
std::optional<Term> leading_nonconstant_term(const Transseries& x);

// Smallest i >= 1 with log_i(kappa_{-alpha}) <= m, if any.
std::optional<int> chain_cut(int alpha, const Monomial& m);

// The log-atomic monomial of the same level as an infinite monomial m.
Monomial level_atom(const Monomial& m);

std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Transseries& x);

} // namespace surreal
