#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gpc {

using Integer = mpz_class;
using Rational = mpq_class;

// Malformed or out-of-domain input. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size cap was hit. The CLI maps it to exit code 3.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// num/den in lowest terms.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace gpc
