#include <algorithm>
#include <unordered_map>

#include "epiconj/detail/union_find.hpp"
#include "epiconj/semigroup.hpp"
#include "semigroup_caches.hpp"

namespace epiconj {

namespace {

// Groups elements by a key, assigning dense ids by first occurrence.
template <typename Key>
std::pair<std::vector<ElementIndex>, std::size_t> classify(const std::vector<Key>& keys) {
  std::unordered_map<Key, ElementIndex> ids;
  std::vector<ElementIndex> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] = ids.emplace(keys[i], static_cast<ElementIndex>(ids.size()));
    (void)inserted;
    out[i] = it->second;
  }
  return {std::move(out), ids.size()};
}

// Principal ideal of a (one side), as a bitset serialized to a string key.
std::string ideal_key(const FiniteSemigroup& s, ElementIndex a, bool right) {
  const std::size_t n = s.size();
  std::string bits((n + 7) / 8, '\0');
  auto set = [&bits](ElementIndex x) {
    bits[x >> 3] |= static_cast<char>(1u << (x & 7u));
  };
  set(a);  // aS^1 includes a itself
  for (std::size_t x = 0; x < n; ++x) {
    set(right ? s.product(a, static_cast<ElementIndex>(x))
              : s.product(static_cast<ElementIndex>(x), a));
  }
  return bits;
}

}  // namespace

const GreenStructure& FiniteSemigroup::green() const {
  std::call_once(caches_->green_once, [this] {
    GreenStructure g;
    const std::size_t n = size_;

    std::vector<std::string> rkeys(n), lkeys(n);
    for (std::size_t a = 0; a < n; ++a) {
      rkeys[a] = ideal_key(*this, static_cast<ElementIndex>(a), true);
      lkeys[a] = ideal_key(*this, static_cast<ElementIndex>(a), false);
    }
    std::tie(g.r_class, g.r_count) = classify(rkeys);
    std::tie(g.l_class, g.l_count) = classify(lkeys);

    std::vector<std::pair<ElementIndex, ElementIndex>> hkeys(n);
    for (std::size_t a = 0; a < n; ++a) {
      hkeys[a] = {g.r_class[a], g.l_class[a]};
    }
    {
      std::unordered_map<std::uint64_t, ElementIndex> ids;
      g.h_class.resize(n);
      for (std::size_t a = 0; a < n; ++a) {
        const std::uint64_t key =
            (static_cast<std::uint64_t>(hkeys[a].first) << 32) | hkeys[a].second;
        auto [it, inserted] = ids.emplace(key, static_cast<ElementIndex>(ids.size()));
        (void)inserted;
        g.h_class[a] = it->second;
      }
      g.h_count = ids.size();
    }

    // D is the join of R and L; on a finite semigroup it equals R o L.
    detail::UnionFind uf(n);
    {
      std::vector<ElementIndex> first_r(g.r_count, static_cast<ElementIndex>(n));
      std::vector<ElementIndex> first_l(g.l_count, static_cast<ElementIndex>(n));
      for (std::size_t a = 0; a < n; ++a) {
        ElementIndex& fr = first_r[g.r_class[a]];
        if (fr == n) {
          fr = static_cast<ElementIndex>(a);
        } else {
          uf.unite(fr, a);
        }
        ElementIndex& fl = first_l[g.l_class[a]];
        if (fl == n) {
          fl = static_cast<ElementIndex>(a);
        } else {
          uf.unite(fl, a);
        }
      }
    }
    {
      std::unordered_map<std::size_t, ElementIndex> ids;
      g.d_class.resize(n);
      for (std::size_t a = 0; a < n; ++a) {
        auto [it, inserted] = ids.emplace(uf.find(a), static_cast<ElementIndex>(ids.size()));
        (void)inserted;
        g.d_class[a] = it->second;
      }
      g.d_count = ids.size();
    }

    for (std::size_t a = 0; a < n; ++a) {
      if (is_idempotent(static_cast<ElementIndex>(a))) {
        g.idempotents.push_back(static_cast<ElementIndex>(a));
      }
    }
    caches_->green = std::move(g);
  });
  return caches_->green;
}

bool FiniteSemigroup::is_group_element(ElementIndex a) const {
  const GreenStructure& g = green();
  return g.h_class[a] == g.h_class[product(a, a)];
}

const EpigroupProfile& FiniteSemigroup::epigroup_profile() const {
  std::call_once(caches_->profile_once, [this] {
    green();  // force H-classes
    EpigroupProfile p;
    const std::size_t n = size_;
    p.height.resize(n);
    p.idempotent_power.resize(n);
    p.regular_part.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const ElementIndex a = static_cast<ElementIndex>(i);

      // group powers form an up-set, so the least one is found by scanning
      ElementIndex x = a;
      std::uint32_t t = 1;
      while (!is_group_element(x)) {
        x = product(x, a);
        ++t;
      }
      p.height[i] = t;

      // walk <a> to its cycle and pick out the unique idempotent there
      std::vector<ElementIndex> powers{a};
      std::vector<std::uint32_t> seen_at(n, 0);
      seen_at[a] = 1;
      ElementIndex cur = a;
      ElementIndex e = a;
      for (;;) {
        cur = product(cur, a);
        if (seen_at[cur] != 0) {
          bool found = false;
          for (std::size_t j = seen_at[cur] - 1; j < powers.size(); ++j) {
            if (is_idempotent(powers[j])) {
              e = powers[j];
              found = true;
              break;
            }
          }
          if (!found) {
            throw Error("cyclic subsemigroup without idempotent");  // unreachable
          }
          break;
        }
        powers.push_back(cur);
        seen_at[cur] = static_cast<std::uint32_t>(powers.size());
      }
      p.idempotent_power[i] = e;
      p.regular_part[i] = product(a, e);
    }
    caches_->profile = std::move(p);
  });
  return caches_->profile;
}

}  // namespace epiconj
