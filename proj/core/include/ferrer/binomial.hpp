#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace ferrer {

/// C(n, k) as a checked 64-bit integer; zero when k < 0, n < 0 or k > n.
/// Throws Error(SizeLimitExceeded) on overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// C(n, k) as an arbitrary-precision integer, same conventions.
mpz_class binomial_big(std::int64_t n, std::int64_t k);

}  // namespace ferrer
