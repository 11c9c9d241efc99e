#include "cyloops/pochhammer.hpp"

#include "cyloops/errors.hpp"

namespace cyloops {

Rational pochhammer(const Rational& a, unsigned n) {
  Rational r(1);
  Rational term = a;
  for (unsigned k = 0; k < n; ++k) {
    r *= term;
    term += Rational(1);
  }
  return r;
}

bool is_nonpositive_integer(const Rational& x) { return x.is_integer() && x.sign() <= 0; }

Rational gamma_ratio(const Rational& a, int shift) {
  const Rational shifted = a + Rational(shift);
  if (is_nonpositive_integer(a) || is_nonpositive_integer(shifted)) {
    throw PoleError("gamma_ratio: pole at Gamma(" + shifted.str() + ")/Gamma(" + a.str() + ")");
  }
  if (shift >= 0) return pochhammer(a, static_cast<unsigned>(shift));
  return Rational(1) / pochhammer(shifted, static_cast<unsigned>(-shift));
}

}  // namespace cyloops
