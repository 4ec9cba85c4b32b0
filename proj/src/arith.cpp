#include "bicirc/arith.hpp"

#include <numeric>
#include <utility>

namespace bicirc {

int gcd(int x, int y) { return std::gcd(x, y); }

int gcd_with(int m, std::initializer_list<std::span<const int>> lists) {
  int g = m;
  for (auto list : lists) {
    for (int x : list) g = std::gcd(g, x);
  }
  return g;
}

std::optional<int> inverse_mod(int r, int m) {
  if (m == 1) return 0;
  long long t = 0, new_t = 1;
  long long rr = m, new_r = mod(r, m);
  while (new_r != 0) {
    long long q = rr / new_r;
    t = std::exchange(new_t, t - q * new_t);
    rr = std::exchange(new_r, rr - q * new_r);
  }
  if (rr != 1) return std::nullopt;
  return mod(t, m);
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int distinct_prime_count(long long n) { return static_cast<int>(factorize(n).size()); }

}  // namespace bicirc
