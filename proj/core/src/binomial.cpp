#include "ferrer/binomial.hpp"

#include <numeric>

#include "ferrer/error.hpp"

namespace ferrer {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is integral; i / g divides n - k + i.
    const std::int64_t g = std::gcd(result, i);
    if (__builtin_mul_overflow(result / g, (n - k + i) / (i / g), &result)) {
      throw Error(ErrorCode::SizeLimitExceeded, "binomial coefficient overflows 64 bits");
    }
  }
  return result;
}

mpz_class binomial_big(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace ferrer
