#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sigmagrp {

/// A positive integer kept in factored form. Group orders here are products of
/// basic orbit lengths (each at most the degree), so they factor cheaply while
/// the product itself can exceed 64 bits; keeping the exponent vector makes
/// prime sets, p-parts, divisibility and exact division trivial.
class Factored {
public:
  Factored() = default;  // one

  static Factored from_u64(std::uint64_t n);  // trial division; n >= 1
  static Factored from_prime_power(std::uint64_t p, unsigned e);

  Factored times(const Factored& o) const;
  /// Exact division; throws if `o` does not divide this value.
  Factored divided_by(const Factored& o) const;
  bool divides(const Factored& o) const;  // this | o

  std::vector<std::uint64_t> primes() const;
  unsigned exponent(std::uint64_t p) const;
  /// Product of p^e over the listed primes (the pi-part).
  Factored part(const std::vector<std::uint64_t>& keep) const;

  bool is_one() const { return f_.empty(); }
  bool fits_u64() const;
  /// Numeric value; throws cap_error when it does not fit in 64 bits.
  std::uint64_t to_u64() const;
  /// Exact decimal rendering at any size.
  std::string to_decimal() const;

  /// Exact magnitude comparison: -1, 0, or +1.
  int compare(const Factored& o) const;

  friend bool operator==(const Factored&, const Factored&) = default;

  const std::vector<std::pair<std::uint64_t, unsigned>>& factors() const { return f_; }

private:
  // sorted by prime, exponents >= 1
  std::vector<std::pair<std::uint64_t, unsigned>> f_;
};

/// lcm of factored values (max exponents).
Factored factored_lcm(const Factored& a, const Factored& b);

bool is_prime_u64(std::uint64_t v);

}  // namespace sigmagrp
