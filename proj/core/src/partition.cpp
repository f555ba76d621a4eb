#include "sigmagrp/partition.hpp"

#include <algorithm>
#include <iterator>

#include "sigmagrp/errors.hpp"
#include "sigmagrp/factored.hpp"

namespace sigmagrp {

namespace {

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Partition::Partition(std::vector<std::vector<std::uint64_t>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw input_error("partition block may not be empty");
    std::sort(b.begin(), b.end());
    for (std::uint64_t p : b) {
      if (!is_prime_u64(p)) {
        throw input_error("partition entry is not prime: " + std::to_string(p));
      }
    }
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<std::uint64_t> all;
  for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i] == all[i - 1]) {
      throw input_error("prime appears in more than one place: " + std::to_string(all[i]));
    }
  }
}

Partition Partition::parse(const std::string& text, const std::vector<std::uint64_t>& ground) {
  std::vector<std::vector<std::uint64_t>> blocks;
  std::vector<std::uint64_t> block;
  std::uint64_t value = 0;
  bool in_number = false;
  auto end_number = [&](char where) {
    if (!in_number) {
      throw input_error(std::string("expected a prime before '") + where + "' in partition");
    }
    block.push_back(value);
    value = 0;
    in_number = false;
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      in_number = true;
    } else if (c == ',') {
      end_number(',');
    } else if (c == '|') {
      end_number('|');
      blocks.push_back(std::move(block));
      block.clear();
    } else if (c == ' ' || c == '\t') {
      if (in_number) end_number(' ');
    } else {
      throw input_error(std::string("unexpected character in partition: '") + c + "'");
    }
  }
  if (in_number) {
    block.push_back(value);
  } else if (!block.empty() || !blocks.empty()) {
    throw input_error("partition may not end with a separator");
  }
  if (!block.empty()) blocks.push_back(std::move(block));

  Partition out(std::move(blocks));
  const auto want = sorted_unique(ground);
  const auto have = out.ground();
  for (std::uint64_t p : have) {
    if (!std::binary_search(want.begin(), want.end(), p)) {
      throw input_error("partition mentions a prime outside the expected set: " +
                        std::to_string(p));
    }
  }
  for (std::uint64_t p : want) {
    if (!out.contains(p)) {
      throw input_error("partition leaves a prime uncovered: " + std::to_string(p));
    }
  }
  return out;
}

Partition Partition::singletons(const std::vector<std::uint64_t>& primes) {
  std::vector<std::vector<std::uint64_t>> blocks;
  for (std::uint64_t p : sorted_unique(primes)) blocks.push_back({p});
  return Partition(std::move(blocks));
}

Partition Partition::single_block(const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) return Partition();
  return Partition({sorted_unique(primes)});
}

std::vector<std::uint64_t> Partition::ground() const {
  std::vector<std::uint64_t> all;
  for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

int Partition::block_of(std::uint64_t p) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), p)) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

bool Partition::same_block(std::uint64_t p, std::uint64_t q) const {
  const int i = block_of(p);
  return i >= 0 && i == block_of(q);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks_[i][j]);
    }
  }
  return out;
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.ground() != b.ground()) {
    throw input_error("meet needs partitions of the same prime set");
  }
  std::vector<std::vector<std::uint64_t>> blocks;
  for (const auto& ba : a.blocks()) {
    for (const auto& bb : b.blocks()) {
      std::vector<std::uint64_t> cut;
      std::set_intersection(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(cut));
      if (!cut.empty()) blocks.push_back(std::move(cut));
    }
  }
  return Partition(std::move(blocks));
}

bool leq(const Partition& a, const Partition& b) {
  if (a.ground() != b.ground()) {
    throw input_error("refinement test needs partitions of the same prime set");
  }
  for (const auto& ba : a.blocks()) {
    const int home = b.block_of(ba.front());
    for (std::uint64_t p : ba) {
      if (b.block_of(p) != home) return false;
    }
  }
  return true;
}

Partition restrict_to(const Partition& sigma, const std::vector<std::uint64_t>& primes) {
  const auto keep = sorted_unique(primes);
  for (std::uint64_t p : keep) {
    if (!sigma.contains(p)) {
      throw input_error("cannot restrict to a prime outside the partition: " +
                        std::to_string(p));
    }
  }
  std::vector<std::vector<std::uint64_t>> blocks;
  for (const auto& b : sigma.blocks()) {
    std::vector<std::uint64_t> cut;
    std::set_intersection(b.begin(), b.end(), keep.begin(), keep.end(), std::back_inserter(cut));
    if (!cut.empty()) blocks.push_back(std::move(cut));
  }
  return Partition(std::move(blocks));
}

Partition extend_by_singletons(const Partition& sigma, const std::vector<std::uint64_t>& primes) {
  auto blocks = sigma.blocks();
  for (std::uint64_t p : sorted_unique(primes)) {
    if (!sigma.contains(p)) blocks.push_back({p});
  }
  return Partition(std::move(blocks));
}

std::vector<Partition> all_partitions(const std::vector<std::uint64_t>& primes) {
  const auto ps = sorted_unique(primes);
  const std::size_t m = ps.size();
  std::vector<Partition> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings: code[0] = 0 and code[i] <= 1 + max(code[<i]).
  std::vector<std::size_t> code(m, 0);
  while (true) {
    std::size_t nblocks = 0;
    for (std::size_t c : code) nblocks = std::max(nblocks, c + 1);
    std::vector<std::vector<std::uint64_t>> blocks(nblocks);
    for (std::size_t i = 0; i < m; ++i) blocks[code[i]].push_back(ps[i]);
    out.emplace_back(std::move(blocks));

    bool advanced = false;
    for (std::size_t i = m; i-- > 1;) {
      std::size_t cap = 0;
      for (std::size_t j = 0; j < i; ++j) cap = std::max(cap, code[j] + 1);
      if (code[i] < cap) {
        ++code[i];
        std::fill(code.begin() + static_cast<std::ptrdiff_t>(i) + 1, code.end(), 0);
        advanced = true;
        break;
      }
      code[i] = 0;
    }
    if (!advanced) break;
  }
  return out;
}

}  // namespace sigmagrp
