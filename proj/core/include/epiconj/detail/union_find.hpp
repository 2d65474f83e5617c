#ifndef EPICONJ_DETAIL_UNION_FIND_HPP
#define EPICONJ_DETAIL_UNION_FIND_HPP

#include <cstddef>
#include <numeric>
#include <vector>

namespace epiconj::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    // smaller root wins so that class representatives are index-minimal
    if (b < a) {
      std::swap(a, b);
    }
    parent_[b] = a;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace epiconj::detail

#endif  // EPICONJ_DETAIL_UNION_FIND_HPP
