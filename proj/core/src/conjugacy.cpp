#include <algorithm>

#include "epiconj/detail/parallel.hpp"
#include "epiconj/detail/union_find.hpp"
#include "epiconj/semigroup.hpp"
#include "semigroup_caches.hpp"

namespace epiconj {

namespace {

Partition partition_from(detail::UnionFind& uf, std::size_t n) {
  Partition p;
  p.class_id.resize(n);
  std::vector<ElementIndex> id_of_root(n, static_cast<ElementIndex>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t root = uf.find(a);
    if (id_of_root[root] == n) {
      id_of_root[root] = static_cast<ElementIndex>(p.classes.size());
      p.classes.emplace_back();
    }
    p.class_id[a] = id_of_root[root];
    p.classes[id_of_root[root]].push_back(static_cast<ElementIndex>(a));
  }
  return p;
}

}  // namespace

const std::vector<IndexPair>& FiniteSemigroup::primary_edges() const {
  std::call_once(caches_->edges_once, [this] {
    const std::size_t n = size_;
    const std::size_t workers = std::min(detail::thread_budget(), n);
    std::vector<std::vector<IndexPair>> buffers(std::max<std::size_t>(workers, 1));
    detail::parallel_chunks(n, [&](std::size_t w, std::size_t begin, std::size_t end) {
      auto& buf = buffers[w];
      for (std::size_t x = begin; x < end; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          ElementIndex p = product(static_cast<ElementIndex>(x), static_cast<ElementIndex>(y));
          ElementIndex q = product(static_cast<ElementIndex>(y), static_cast<ElementIndex>(x));
          if (q < p) {
            std::swap(p, q);
          }
          buf.emplace_back(p, q);
        }
      }
    });
    std::vector<IndexPair> edges;
    edges.reserve(n * n + n);
    for (std::size_t a = 0; a < n; ++a) {
      edges.emplace_back(static_cast<ElementIndex>(a), static_cast<ElementIndex>(a));
    }
    for (auto& buf : buffers) {
      edges.insert(edges.end(), buf.begin(), buf.end());
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    caches_->edges = std::move(edges);
  });
  return caches_->edges;
}

const ConjugacyRelations& FiniteSemigroup::conjugacy() const {
  std::call_once(caches_->conjugacy_once, [this] {
    const std::size_t n = size_;
    ConjugacyRelations rel;
    rel.primary_pairs = primary_edges();

    detail::UnionFind uf(n);
    for (const auto& [a, b] : rel.primary_pairs) {
      uf.unite(a, b);
    }
    rel.classes = partition_from(uf, n);

    if (identity_) {
      detail::UnionFind guf(n);
      const auto& units = unit_group();
      for (std::size_t a = 0; a < n; ++a) {
        for (ElementIndex g : units) {
          const ElementIndex conj =
              product(product(unit_inverse(g), static_cast<ElementIndex>(a)), g);
          guf.unite(a, conj);
        }
      }
      rel.g_classes = partition_from(guf, n);
    }
    caches_->conjugacy = std::move(rel);
  });
  return caches_->conjugacy;
}

const std::vector<ElementIndex>& FiniteSemigroup::unit_group() const {
  std::call_once(caches_->units_once, [this] {
    if (!identity_) {
      caches_->has_identity = false;
      return;
    }
    caches_->has_identity = true;
    const GreenStructure& g = green();
    const ElementIndex e = *identity_;
    std::vector<ElementIndex> units;
    for (std::size_t a = 0; a < size_; ++a) {
      if (g.h_class[a] == g.h_class[e]) {
        units.push_back(static_cast<ElementIndex>(a));
      }
    }
    caches_->unit_inverse_of.assign(size_, 0);
    for (ElementIndex u : units) {
      for (ElementIndex v : units) {
        if (product(u, v) == e && product(v, u) == e) {
          caches_->unit_inverse_of[u] = v;
          break;
        }
      }
    }
    caches_->units = std::move(units);
  });
  if (!caches_->has_identity) {
    throw NoIdentity("semigroup has no identity element");
  }
  return caches_->units;
}

ElementIndex FiniteSemigroup::unit_inverse(ElementIndex g) const {
  unit_group();
  return caches_->unit_inverse_of[g];
}

bool FiniteSemigroup::g_conjugate(ElementIndex a, ElementIndex b) const {
  for (ElementIndex g : unit_group()) {
    if (product(product(unit_inverse(g), b), g) == a) {
      return true;
    }
  }
  return false;
}

std::optional<Witness> FiniteSemigroup::witness_search(ElementIndex a, ElementIndex b) const {
  if (!is_group_element(a) || !is_group_element(b)) {
    throw NotGroupElement("witness_search requires group elements");
  }
  const std::size_t n = size_;
  for (std::size_t u = 0; u < n; ++u) {
    const ElementIndex ui = static_cast<ElementIndex>(u);
    const ElementIndex ua = product(ui, a);
    for (std::size_t v = 0; v < n; ++v) {
      const ElementIndex vi = static_cast<ElementIndex>(v);
      const ElementIndex uv = product(ui, vi);
      if (product(uv, ui) != ui || product(product(vi, ui), vi) != vi) {
        continue;  // not mutually inverse
      }
      if (product(ua, vi) == b && product(product(vi, b), ui) == a) {
        return Witness{ui, vi};
      }
    }
  }
  return std::nullopt;
}

bool FiniteSemigroup::witness_verifies(ElementIndex a, ElementIndex b, Witness w) const {
  return product(product(w.u, w.v), w.u) == w.u && product(product(w.v, w.u), w.v) == w.v &&
         product(product(w.u, a), w.v) == b && product(product(w.v, b), w.u) == a;
}

bool FiniteSemigroup::conjugate_by_criterion(ElementIndex a, ElementIndex b) const {
  if (!structural_checks().regular) {
    throw NotRegular("conjugate_by_criterion requires a regular semigroup");
  }
  const EpigroupProfile& p = epigroup_profile();
  return witness_search(p.regular_part[a], p.regular_part[b]).has_value();
}

bool FiniteSemigroup::conjugate_by_g_criterion(ElementIndex a, ElementIndex b) const {
  const StructuralChecks& checks = structural_checks();
  if (!identity_ || !checks.inverse) {
    throw NotInverse("conjugate_by_g_criterion requires an inverse monoid");
  }
  if (!checks.factorizable) {
    throw NotFactorizable("conjugate_by_g_criterion requires a factorizable inverse monoid");
  }
  const EpigroupProfile& p = epigroup_profile();
  return g_conjugate(p.regular_part[a], p.regular_part[b]);
}

const StructuralChecks& FiniteSemigroup::structural_checks() const {
  std::call_once(caches_->structural_once, [this] {
    const std::size_t n = size_;
    StructuralChecks c;

    // regular: every a has some x with axa = a; remember one inverse of each
    // element (x with axa = a and xax = x) for the factorizability scan
    c.regular = true;
    std::vector<ElementIndex> inverse_of(n, 0);
    std::vector<bool> unique_inverse(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      const ElementIndex ai = static_cast<ElementIndex>(a);
      bool regular = false;
      std::size_t inverse_count = 0;
      for (std::size_t x = 0; x < n; ++x) {
        const ElementIndex xi = static_cast<ElementIndex>(x);
        if (product(product(ai, xi), ai) == ai) {
          regular = true;
          if (product(product(xi, ai), xi) == xi) {
            if (inverse_count == 0) {
              inverse_of[a] = xi;
            }
            ++inverse_count;
          }
        }
      }
      c.regular = c.regular && regular;
      unique_inverse[a] = inverse_count == 1;
    }

    bool idempotents_commute = true;
    const auto& idems = green().idempotents;
    for (std::size_t i = 0; i < idems.size() && idempotents_commute; ++i) {
      for (std::size_t j = i + 1; j < idems.size(); ++j) {
        if (product(idems[i], idems[j]) != product(idems[j], idems[i])) {
          idempotents_commute = false;
          break;
        }
      }
    }
    bool all_unique = c.regular;
    for (std::size_t a = 0; a < n && all_unique; ++a) {
      all_unique = unique_inverse[a];
    }
    c.inverse = c.regular && idempotents_commute && all_unique;

    c.completely_regular = true;
    for (std::size_t a = 0; a < n && c.completely_regular; ++a) {
      c.completely_regular = is_group_element(static_cast<ElementIndex>(a));
    }

    c.band = true;
    for (std::size_t a = 0; a < n && c.band; ++a) {
      c.band = is_idempotent(static_cast<ElementIndex>(a));
    }

    // factorizable: inverse monoid where every s lies below a unit in the
    // natural partial order, i.e. s s^{-1} = s g^{-1} for some unit g
    c.factorizable = false;
    if (c.inverse && identity_) {
      c.factorizable = true;
      const auto& units = unit_group();
      for (std::size_t a = 0; a < n && c.factorizable; ++a) {
        const ElementIndex ai = static_cast<ElementIndex>(a);
        const ElementIndex ss = product(ai, inverse_of[a]);
        bool below_unit = false;
        for (ElementIndex g : units) {
          if (product(ai, unit_inverse(g)) == ss) {
            below_unit = true;
            break;
          }
        }
        c.factorizable = below_unit;
      }
    }
    caches_->structural = c;
  });
  return caches_->structural;
}

}  // namespace epiconj
