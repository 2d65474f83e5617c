#include "epiconj/semigroup.hpp"

#include <random>

#include "semigroup_caches.hpp"

namespace epiconj {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 300;
constexpr std::size_t kRandomTripleCount = 1'000'000;
constexpr std::uint64_t kAssociativitySeed = 0x5e151c0de5ULL;

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::vector<std::string> encodings,
                                 std::vector<ElementIndex> table)
    : encodings_(std::move(encodings)),
      table_(std::move(table)),
      size_(encodings_.size()),
      caches_(std::make_shared<Caches>()) {
  if (size_ == 0) {
    throw Error("empty semigroup");
  }
  if (table_.size() != size_ * size_) {
    throw Error("multiplication table has wrong shape");
  }
  for (ElementIndex v : table_) {
    if (v >= size_) {
      throw Error("multiplication table entry out of range");
    }
  }
  index_.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    auto [it, inserted] = index_.emplace(encodings_[i], static_cast<ElementIndex>(i));
    (void)it;
    if (!inserted) {
      throw Error("duplicate element encoding at index " + std::to_string(i));
    }
  }
  verify_associativity();
  detect_identity_and_zero();
}

void FiniteSemigroup::verify_associativity() const {
  const std::size_t n = size_;
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    const ElementIndex left = product(product(static_cast<ElementIndex>(i),
                                              static_cast<ElementIndex>(j)),
                                      static_cast<ElementIndex>(k));
    const ElementIndex right = product(static_cast<ElementIndex>(i),
                                       product(static_cast<ElementIndex>(j),
                                               static_cast<ElementIndex>(k)));
    if (left != right) {
      throw NonAssociative("(a b) c != a (b c) at indices " + std::to_string(i) + ", " +
                           std::to_string(j) + ", " + std::to_string(k));
    }
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          check(i, j, k);
        }
      }
    }
    return;
  }
  std::mt19937_64 rng(kAssociativitySeed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t t = 0; t < kRandomTripleCount; ++t) {
    check(pick(rng), pick(rng), pick(rng));
  }
}

void FiniteSemigroup::detect_identity_and_zero() {
  for (std::size_t e = 0; e < size_; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < size_ && ok; ++i) {
      ok = product(static_cast<ElementIndex>(e), static_cast<ElementIndex>(i)) == i &&
           product(static_cast<ElementIndex>(i), static_cast<ElementIndex>(e)) == i;
    }
    if (ok) {
      identity_ = static_cast<ElementIndex>(e);
      break;
    }
  }
  for (std::size_t z = 0; z < size_; ++z) {
    bool ok = true;
    for (std::size_t i = 0; i < size_ && ok; ++i) {
      ok = product(static_cast<ElementIndex>(z), static_cast<ElementIndex>(i)) == z &&
           product(static_cast<ElementIndex>(i), static_cast<ElementIndex>(z)) == z;
    }
    if (ok) {
      zero_ = static_cast<ElementIndex>(z);
      break;
    }
  }
}

ElementIndex FiniteSemigroup::power(ElementIndex a, std::uint64_t k) const {
  if (k == 0) {
    throw Error("power: exponent must be positive");
  }
  ElementIndex acc = a;
  for (std::uint64_t i = 1; i < k; ++i) {
    acc = product(acc, a);
  }
  return acc;
}

std::optional<ElementIndex> FiniteSemigroup::index_of(std::string_view encoding) const {
  auto it = index_.find(encoding);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

}  // namespace epiconj
