#pragma once

#include <gmpxx.h>

#include <string>

namespace cdga {

// exact rational arithmetic; mpq_class arithmetic keeps values canonical
// (reduced, positive denominator), but the raw (num, den) constructor does
// not reduce, so call canonicalize() after using it
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// accepts "p", "-p", "p/q"; throws std::invalid_argument on anything else
Rational rational_from_string(const std::string& s);

}  // namespace cdga
