#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace csf {

using Integer = mpz_class;
using Rational = mpq_class;

// Exceptions carry the CLI exit-code semantics: usage errors (64),
// resource caps (2), failed mathematical assertions (1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// mpq_class(num, den) does not reduce; this does.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer pow2(long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

// 2^e as a rational, e may be negative.
inline Rational pow2_rational(long e) {
  if (e >= 0) return Rational(pow2(e));
  return Rational(1, pow2(-e));
}

// Canonical text form: "n" when the denominator is 1, else "n/d".
inline std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& text) {
  try {
    Rational q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational: '" + text + "'");
  }
}

}  // namespace csf
