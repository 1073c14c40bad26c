#pragma once

#include <gmpxx.h>

#include <string>

namespace threshspec {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(10); }

}  // namespace threshspec
