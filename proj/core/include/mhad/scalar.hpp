// Exact scalars: rationals and Gaussian rationals Q(i).
//
// All arithmetic in the library is exact; there is no floating point
// anywhere on a decision path. Rationals are kept in lowest terms with a
// positive denominator by the underlying representation.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace mhad {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Parse "p/q" or "p" (q > 0 after normalization). Returns nullopt on bad
// syntax or a zero denominator.
std::optional<Rat> parse_rat(const std::string& s);

// Render in lowest terms, "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

// Element of Q(i) = Q + Qi.
struct GRat {
    Rat re;
    Rat im;

    GRat() = default;
    GRat(Rat r) : re(std::move(r)) {}
    GRat(long r) : re(r) {}
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GRat conj() const { return GRat(re, -im); }

    // Squared modulus re^2 + im^2; rational and nonnegative.
    Rat norm2() const { return re * re + im * im; }

    GRat operator-() const { return GRat(-re, -im); }
    GRat operator+(const GRat& o) const { return GRat(re + o.re, im + o.im); }
    GRat operator-(const GRat& o) const { return GRat(re - o.re, im - o.im); }
    GRat operator*(const GRat& o) const {
        return GRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GRat inv() const;  // throws std::domain_error on zero
    GRat operator/(const GRat& o) const { return *this * o.inv(); }

    GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
    GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }
    GRat& operator*=(const GRat& o) { *this = *this * o; return *this; }

    bool operator==(const GRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GRat& o) const { return !(*this == o); }
};

inline GRat operator*(long c, const GRat& g) { return GRat(Rat(c)) * g; }

// The imaginary unit.
GRat grat_i();

// Render as "p/q" for real values, "p/q+r/si" in general.
std::string grat_to_string(const GRat& g);

// Parse the formats produced by grat_to_string plus plain "p/q".
std::optional<GRat> parse_grat(const std::string& s);

}  // namespace mhad
