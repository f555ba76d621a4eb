#include "sigmagrp/factored.hpp"

#include <algorithm>

#include "sigmagrp/errors.hpp"

namespace sigmagrp {

namespace {

// Minimal big unsigned integer, base 2^32, little-endian. Only what exact
// magnitude comparison and decimal printing of factored values need.
struct BigU {
  std::vector<std::uint32_t> limbs{1};  // value 1

  void mul_small(std::uint64_t m) {
    std::uint64_t carry = 0;
    for (auto& l : limbs) {
      const unsigned __int128 cur = static_cast<unsigned __int128>(l) * m + carry;
      l = static_cast<std::uint32_t>(cur & 0xffffffffULL);
      carry = static_cast<std::uint64_t>(cur >> 32);
    }
    while (carry) {
      limbs.push_back(static_cast<std::uint32_t>(carry & 0xffffffffULL));
      carry >>= 32;
    }
  }

  int compare(const BigU& o) const {
    if (limbs.size() != o.limbs.size())
      return limbs.size() < o.limbs.size() ? -1 : 1;
    for (std::size_t i = limbs.size(); i-- > 0;)
      if (limbs[i] != o.limbs[i]) return limbs[i] < o.limbs[i] ? -1 : 1;
    return 0;
  }

  // Divide in place by 10^9, returning the remainder.
  std::uint32_t div_chunk() {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | limbs[i];
      limbs[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
      rem = cur % 1000000000ULL;
    }
    while (limbs.size() > 1 && limbs.back() == 0) limbs.pop_back();
    return static_cast<std::uint32_t>(rem);
  }

  bool is_zero() const { return limbs.size() == 1 && limbs[0] == 0; }

  std::string to_string() const {
    BigU t = *this;
    std::string out;
    while (!t.is_zero()) {
      const std::uint32_t chunk = t.div_chunk();
      std::string part = std::to_string(chunk);
      if (!t.is_zero()) part.insert(0, 9 - part.size(), '0');
      out.insert(0, part);
    }
    return out.empty() ? "0" : out;
  }
};

BigU to_big(const std::vector<std::pair<std::uint64_t, unsigned>>& f) {
  BigU b;
  for (const auto& [p, e] : f)
    for (unsigned i = 0; i < e; ++i) b.mul_small(p);
  return b;
}

}  // namespace

Factored Factored::from_u64(std::uint64_t n) {
  if (n == 0) throw input_error("factored values are positive");
  Factored out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.f_.emplace_back(p, e);
  }
  if (n > 1) out.f_.emplace_back(n, 1);
  return out;
}

Factored Factored::from_prime_power(std::uint64_t p, unsigned e) {
  internal_check(p >= 2, "prime power base must be at least 2");
  Factored out;
  if (e > 0) out.f_.emplace_back(p, e);
  return out;
}

Factored Factored::times(const Factored& o) const {
  Factored out;
  std::size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    if (j >= o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
      out.f_.push_back(f_[i++]);
    } else if (i >= f_.size() || o.f_[j].first < f_[i].first) {
      out.f_.push_back(o.f_[j++]);
    } else {
      out.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

Factored Factored::divided_by(const Factored& o) const {
  Factored out;
  std::size_t i = 0;
  for (const auto& [p, e] : o.f_) {
    while (i < f_.size() && f_[i].first < p) out.f_.push_back(f_[i++]);
    internal_check(i < f_.size() && f_[i].first == p && f_[i].second >= e,
                   "factored division is not exact");
    if (f_[i].second > e) out.f_.emplace_back(p, f_[i].second - e);
    ++i;
  }
  while (i < f_.size()) out.f_.push_back(f_[i++]);
  return out;
}

bool Factored::divides(const Factored& o) const {
  for (const auto& [p, e] : f_)
    if (o.exponent(p) < e) return false;
  return true;
}

std::vector<std::uint64_t> Factored::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(f_.size());
  for (const auto& [p, e] : f_) out.push_back(p);
  return out;
}

unsigned Factored::exponent(std::uint64_t p) const {
  for (const auto& [q, e] : f_)
    if (q == p) return e;
  return 0;
}

Factored Factored::part(const std::vector<std::uint64_t>& keep) const {
  Factored out;
  for (const auto& [p, e] : f_)
    if (std::find(keep.begin(), keep.end(), p) != keep.end()) out.f_.emplace_back(p, e);
  return out;
}

bool Factored::fits_u64() const {
  unsigned __int128 acc = 1;
  for (const auto& [p, e] : f_)
    for (unsigned i = 0; i < e; ++i) {
      acc *= p;
      if (acc > UINT64_MAX) return false;
    }
  return true;
}

std::uint64_t Factored::to_u64() const {
  unsigned __int128 acc = 1;
  for (const auto& [p, e] : f_)
    for (unsigned i = 0; i < e; ++i) {
      acc *= p;
      if (acc > UINT64_MAX) throw cap_error("value exceeds 64 bits");
    }
  return static_cast<std::uint64_t>(acc);
}

std::string Factored::to_decimal() const {
  if (fits_u64()) return std::to_string(to_u64());
  return to_big(f_).to_string();
}

int Factored::compare(const Factored& o) const {
  if (f_ == o.f_) return 0;
  if (fits_u64() && o.fits_u64()) {
    const std::uint64_t a = to_u64(), b = o.to_u64();
    return a < b ? -1 : (a > b ? 1 : 0);
  }
  // Strip common factors first so the big path multiplies as little as possible.
  Factored a = *this, b = o;
  std::vector<std::pair<std::uint64_t, unsigned>> ra, rb;
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    if (j >= b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
      ra.push_back(a.f_[i++]);
    } else if (i >= a.f_.size() || b.f_[j].first < a.f_[i].first) {
      rb.push_back(b.f_[j++]);
    } else {
      const unsigned m = std::min(a.f_[i].second, b.f_[j].second);
      if (a.f_[i].second > m) ra.emplace_back(a.f_[i].first, a.f_[i].second - m);
      if (b.f_[j].second > m) rb.emplace_back(b.f_[j].first, b.f_[j].second - m);
      ++i;
      ++j;
    }
  }
  return to_big(ra).compare(to_big(rb));
}

Factored factored_lcm(const Factored& a, const Factored& b) {
  Factored out = a;
  for (const auto& [p, e] : b.factors()) {
    const unsigned have = a.exponent(p);
    if (e > have) out = out.times(Factored::from_prime_power(p, e - have));
  }
  return out;
}

bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
    if (v % d == 0) return false;
  }
  return true;
}

}  // namespace sigmagrp
