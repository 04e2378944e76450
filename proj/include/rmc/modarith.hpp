#pragma once

// Modular arithmetic helpers and the prime-dependent constants shared by the
// group families (fifth roots of unity, golden-ratio roots, inverses of 2).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rmc {

/// Raised for malformed user input (bad prime, inadmissible family, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed object violates an invariant that should hold by
/// construction. Always a bug or a wrong mathematical claim, never bad input.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least nonnegative residue of x mod m.
constexpr int64_t mod(int64_t x, int64_t m) {
  int64_t r = x % m;
  return r < 0 ? r + m : r;
}

int64_t mul_mod(int64_t x, int64_t y, int64_t m);
int64_t pow_mod(int64_t base, int64_t exp, int64_t m);

/// Inverse of x modulo m, or nullopt when gcd(x, m) != 1.
std::optional<int64_t> inv_mod(int64_t x, int64_t m);

bool is_prime(int64_t n);

/// All x with x^5 = 1 (mod m) and x != 1 (mod p), where m is p or p^2.
/// Sorted ascending. Empty unless p = 1 (mod 5).
std::vector<int64_t> primitive_fifth_roots(int64_t m);

/// Roots of y^2 + y - 1 mod p, ascending, when p = +-1 (mod 5).
std::optional<std::pair<int64_t, int64_t>> golden_roots(int64_t p);

struct PrimeParams {
  int64_t p = 0;
  int residue = 0;                 // p mod 5
  std::optional<int64_t> k;        // primitive fifth root of unity mod p^2
  std::optional<int64_t> s;        // primitive fifth root of unity mod p
  std::optional<int64_t> t1, t2;   // roots of y^2 + y - 1 mod p, t1 < t2
  int64_t delta = 0;               // 2^{-1} mod p
  std::optional<int64_t> delta_sq; // 2^{-1} mod p^2

  int64_t p2() const { return p * p; }
  bool operator==(const PrimeParams&) const = default;
};

/// Derives every constant for the prime p. The smallest primitive fifth root
/// mod p is taken as s, and k is its unique lift to a fifth root mod p^2.
/// Throws InputError unless p is a prime >= 7.
PrimeParams derive_params(int64_t p);

}  // namespace rmc
