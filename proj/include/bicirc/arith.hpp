#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bicirc {

// Representative of x in [0, m).
inline int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

int gcd(int x, int y);

// gcd of m together with every value in the lists.
int gcd_with(int m, std::initializer_list<std::span<const int>> lists);

std::optional<int> inverse_mod(int r, int m);

std::vector<std::pair<long long, int>> factorize(long long n);

int distinct_prime_count(long long n);

}  // namespace bicirc
