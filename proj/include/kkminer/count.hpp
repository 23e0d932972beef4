#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kkminer {

// Pattern counts and bound values. These grow exponentially in the number
// of items (e.g. 2^|L| at level 1), so we keep everything in exact
// arbitrary-precision integers and never touch floating point.
using Count = mpz_class;

inline std::string to_string(const Count& c) { return c.get_str(); }

inline bool fits_u64(const Count& c) { return c.fits_ulong_p(); }

inline std::uint64_t to_u64(const Count& c) { return c.get_ui(); }

}  // namespace kkminer
