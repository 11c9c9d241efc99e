#pragma once

#include "cyloops/rational.hpp"

namespace cyloops {

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned n);

/// Gamma(a + shift) / Gamma(a) as an exact rational:
/// (a)_shift for shift >= 0 and 1/(a+shift)_{-shift} otherwise.
/// Throws PoleError when a or a + shift is a nonpositive integer.
Rational gamma_ratio(const Rational& a, int shift);

/// True for 0, -1, -2, ...
bool is_nonpositive_integer(const Rational& x);

}  // namespace cyloops
