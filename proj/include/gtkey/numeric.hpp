#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gtkey {

using Integer = mpz_class;
using Rational = mpq_class;

// Coordinates of lattice points. Dilations are overflow-checked, see checked_mul.
using Entry = std::int64_t;

// Malformed or out-of-range user input.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Entry checked_mul(Entry a, Entry b);
Entry checked_add(Entry a, Entry b);

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Canonical "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text);

}  // namespace gtkey
