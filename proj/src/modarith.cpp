#include "rmc/modarith.hpp"

#include <numeric>

namespace rmc {

int64_t mul_mod(int64_t x, int64_t y, int64_t m) {
  return static_cast<int64_t>((static_cast<__int128>(mod(x, m)) * mod(y, m)) % m);
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t m) {
  int64_t result = 1 % m;
  int64_t b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1;
  }
  return result;
}

std::optional<int64_t> inv_mod(int64_t x, int64_t m) {
  // extended Euclid on (x mod m, m)
  int64_t a = mod(x, m), b = m;
  int64_t u = 1, v = 0;
  while (b != 0) {
    int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1) return std::nullopt;
  return mod(u, m);
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

int64_t prime_of_modulus(int64_t m) {
  if (is_prime(m)) return m;
  int64_t r = 1;
  while ((r + 1) * (r + 1) <= m) ++r;
  if (r * r == m && is_prime(r)) return r;
  throw InputError("modulus " + std::to_string(m) + " is neither a prime nor a prime square");
}

}  // namespace

std::vector<int64_t> primitive_fifth_roots(int64_t m) {
  const int64_t p = prime_of_modulus(m);
  std::vector<int64_t> roots;
  for (int64_t x = 0; x < m; ++x)
    if (pow_mod(x, 5, m) == 1 % m && x % p != 1 % p) roots.push_back(x);
  return roots;
}

std::optional<std::pair<int64_t, int64_t>> golden_roots(int64_t p) {
  std::vector<int64_t> roots;
  for (int64_t y = 0; y < p; ++y)
    if (mod(y * y + y - 1, p) == 0) roots.push_back(y);
  if (roots.size() != 2) return std::nullopt;
  return std::make_pair(roots[0], roots[1]);
}

PrimeParams derive_params(int64_t p) {
  if (p < 7 || !is_prime(p))
    throw InputError("p must be a prime >= 7, got " + std::to_string(p));
  PrimeParams params;
  params.p = p;
  params.residue = static_cast<int>(p % 5);
  params.delta = *inv_mod(2, p);
  if (params.residue == 1) {
    const auto roots = primitive_fifth_roots(p);
    params.s = roots.front();
    for (int64_t k : primitive_fifth_roots(p * p)) {
      if (k % p == *params.s) {
        params.k = k;
        break;
      }
    }
    params.delta_sq = *inv_mod(2, p * p);
  }
  if (params.residue == 1 || params.residue == 4) {
    const auto t = golden_roots(p);
    params.t1 = t->first;
    params.t2 = t->second;
  }
  return params;
}

}  // namespace rmc
