#include "sigmagrp/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sigmagrp/errors.hpp"

namespace sigmagrp {

Permutation::Permutation(int degree) {
  if (degree < 1) throw input_error("permutation degree must be positive");
  img_.resize(static_cast<std::size_t>(degree));
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw input_error("permutation degree must be positive");
  std::vector<bool> hit(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)])
      throw input_error("image table is not a bijection");
    hit[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw input_error("compose: degree mismatch");
  std::vector<int> out(static_cast<std::size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i) out[static_cast<std::size_t>(i)] = b.apply(a.apply(i));
  return Permutation::from_images(std::move(out));
}

Permutation inverse(const Permutation& a) {
  std::vector<int> out(static_cast<std::size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i) out[static_cast<std::size_t>(a.apply(i))] = i;
  return Permutation::from_images(std::move(out));
}

Permutation power(const Permutation& a, std::int64_t e) {
  Permutation base = a;
  std::uint64_t k;
  if (e < 0) {
    base = inverse(a);
    k = static_cast<std::uint64_t>(-(e + 1)) + 1;  // avoids overflow at INT64_MIN
  } else {
    k = static_cast<std::uint64_t>(e);
  }
  Permutation acc(a.degree());
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return acc;
}

Permutation conjugate(const Permutation& h, const Permutation& g) {
  return compose(compose(inverse(g), h), g);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

std::vector<std::vector<int>> cycles(const Permutation& a) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(a.degree()), false);
  for (int start = 0; start < a.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || a.apply(start) == start) continue;
    std::vector<int> cyc;
    int p = start;
    do {
      seen[static_cast<std::size_t>(p)] = true;
      cyc.push_back(p);
      p = a.apply(p);
    } while (p != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::uint64_t element_order(const Permutation& a) {
  std::uint64_t l = 1;
  for (const auto& cyc : cycles(a)) {
    const std::uint64_t len = cyc.size();
    const std::uint64_t g = std::gcd(l, len);
    const unsigned __int128 next = static_cast<unsigned __int128>(l / g) * len;
    if (next > UINT64_MAX) throw cap_error("element order exceeds 64 bits");
    l = static_cast<std::uint64_t>(next);
  }
  return l;
}

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 1) throw input_error("permutation degree must be positive");
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  while (i < n) {
    if (text[i] != '(') throw input_error("cycle notation: expected '('");
    ++i;
    std::vector<int> pts;
    while (true) {
      skip_ws();
      if (i >= n) throw input_error("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw input_error("cycle notation: expected a point or ')'");
      long v = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw input_error("cycle notation: point out of range");
        ++i;
      }
      if (v < 1) throw input_error("cycle notation: points are 1-indexed");
      const int p = static_cast<int>(v) - 1;
      if (used[static_cast<std::size_t>(p)])
        throw input_error("cycle notation: repeated point " + std::to_string(v));
      used[static_cast<std::size_t>(p)] = true;
      pts.push_back(p);
    }
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
      img[static_cast<std::size_t>(pts[k])] = pts[k + 1];
    if (pts.size() >= 2) img[static_cast<std::size_t>(pts.back())] = pts.front();
    skip_ws();
  }
  return Permutation::from_images(std::move(img));
}

std::string format_cycles(const Permutation& p) {
  const auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cs) {
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cyc[k] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation embed(const Permutation& p, int degree) {
  if (degree < p.degree()) throw input_error("embed: target degree too small");
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < p.degree(); ++i) img[static_cast<std::size_t>(i)] = p.apply(i);
  return Permutation::from_images(std::move(img));
}

std::size_t PermHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.img()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sigmagrp
