#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

/// Input exceeds a configured enumeration bound.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A constructed object fails its own defining laws.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree do not.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input outside the implemented classification families.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumeration limits. Defaults keep every exhaustive search at desk scale.
struct Bounds {
  int subgroup_order = 400;   // largest group whose subgroup lattice is enumerated
  int holomorph_order = 5000; // largest holomorph that may be materialized
};

bool is_prime(int n);
std::vector<int> prime_factors(int n); // distinct primes, ascending
int euler_phi(int n);
int mod_pow(int base, int exp, int mod);
// Order of a in (Z/mod)^x; a must be coprime to mod.
int multiplicative_order(int a, int mod);
// Least a in [1, mod) with multiplicative_order(a, mod) == order; -1 if none.
int smallest_of_order(int order, int mod);

}  // namespace ybe
