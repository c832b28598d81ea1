#pragma once

#include <gmpxx.h>

#include <string>

namespace deligne {

/// Arbitrary-precision integer used for every coefficient.
using Integer = mpz_class;

inline std::string to_decimal(const Integer& value) { return value.get_str(10); }

}  // namespace deligne
