#pragma once

// Closed-form descent counts over the symmetric group:
//
//   beta(n, I)   permutations with descent set contained in I; the
//                multinomial coefficient of the composition of I
//   alpha(n, I)  permutations with descent set exactly I, by
//                inclusion-exclusion over subsets of I
//
// Values grow past 64 bits quickly, so both return exact big integers.

#include <bit>

#include <boost/multiprecision/cpp_int.hpp>

#include "families.hpp"
#include "permutation.hpp"

namespace cycdesc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial_big(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt multinomial(int n, const std::vector<int>& parts) {
  int total = 0;
  BigInt denom = 1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial parts must be >= 0");
    total += p;
    denom *= factorial_big(p);
  }
  if (total != n) throw std::invalid_argument("multinomial parts must sum to n");
  return factorial_big(n) / denom;
}

inline BigInt beta_count(int n, const DescentSet& I) {
  if (I.ambient() != n) throw std::invalid_argument("descent set has wrong ambient size");
  return multinomial(n, composition_of(I).parts);
}

inline BigInt alpha_count(int n, const DescentSet& I) {
  if (I.ambient() != n) throw std::invalid_argument("descent set has wrong ambient size");
  const std::vector<int>& elems = I.elements();
  if (elems.size() > 62)
    throw std::domain_error("inclusion-exclusion over more than 62 positions");
  BigInt total = 0;
  for (std::uint64_t pick = 0; pick < (1ull << elems.size()); ++pick) {
    std::vector<int> chosen;
    for (std::size_t b = 0; b < elems.size(); ++b)
      if (pick & (1ull << b)) chosen.push_back(elems[b]);
    const int sign_bits = static_cast<int>(elems.size()) - std::popcount(pick);
    const BigInt term = beta_count(n, DescentSet(n, std::move(chosen)));
    total += (sign_bits % 2 == 0) ? term : -term;
  }
  return total;
}

// All 2^(n-1) values at once; cheaper than repeated calls when a sweep
// touches every subset.
inline std::vector<BigInt> beta_table(int n) {
  const std::uint32_t count = 1u << (n - 1);
  std::vector<BigInt> table(count);
  for (std::uint32_t m = 0; m < count; ++m)
    table[m] = beta_count(n, DescentSet::from_mask(m, n));
  return table;
}

inline std::vector<BigInt> alpha_table(int n) {
  const std::uint32_t count = 1u << (n - 1);
  const std::vector<BigInt> beta = beta_table(n);
  std::vector<BigInt> table(count);
  for (std::uint32_t m = 0; m < count; ++m) {
    BigInt total = 0;
    const int bits = std::popcount(m);
    std::uint32_t sub = m;
    while (true) {
      const BigInt& term = beta[sub];
      total += ((bits - std::popcount(sub)) % 2 == 0) ? term : -term;
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
    table[m] = total;
  }
  return table;
}

}  // namespace cycdesc
