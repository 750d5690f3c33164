#include "ybe/base.hpp"

#include <numeric>

namespace ybe {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int euler_phi(int n) {
  int result = n;
  for (int p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

int mod_pow(int base, int exp, int mod) {
  long long r = 1, b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<int>(r);
}

int multiplicative_order(int a, int mod) {
  a = ((a % mod) + mod) % mod;
  if (std::gcd(a, mod) != 1)
    throw std::domain_error("multiplicative_order: argument not a unit");
  long long x = a;
  int k = 1;
  while (x != 1) {
    x = x * a % mod;
    ++k;
  }
  return k;
}

int smallest_of_order(int order, int mod) {
  for (int a = 1; a < mod; ++a) {
    if (std::gcd(a, mod) != 1) continue;
    if (multiplicative_order(a, mod) == order) return a;
  }
  return -1;
}

}  // namespace ybe
