#ifndef EPICONJ_SEMIGROUP_HPP
#define EPICONJ_SEMIGROUP_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epiconj/errors.hpp"

namespace epiconj {

using ElementIndex = std::uint32_t;
using IndexPair = std::pair<ElementIndex, ElementIndex>;

/// Green's relations of a finite semigroup, as dense class-id maps.
/// Class ids are assigned by first occurrence in element-index order, so the
/// representative of class c is its minimal element.
struct GreenStructure {
  std::vector<ElementIndex> r_class;
  std::vector<ElementIndex> l_class;
  std::vector<ElementIndex> h_class;
  std::vector<ElementIndex> d_class;
  std::size_t r_count = 0;
  std::size_t l_count = 0;
  std::size_t h_count = 0;
  std::size_t d_count = 0;
  std::vector<ElementIndex> idempotents;  // sorted
};

/// Per-element group-bound data: the least power that lies in a subgroup,
/// the idempotent of the cyclic subsemigroup, and the regular part a*e_a.
struct EpigroupProfile {
  std::vector<std::uint32_t> height;
  std::vector<ElementIndex> idempotent_power;
  std::vector<ElementIndex> regular_part;
};

/// A partition of the element set into dense classes, ordered so that class
/// ids increase with their minimal members.
struct Partition {
  std::vector<ElementIndex> class_id;
  std::vector<std::vector<ElementIndex>> classes;

  std::size_t count() const { return classes.size(); }
  bool same_class(ElementIndex a, ElementIndex b) const {
    return class_id[a] == class_id[b];
  }
};

/// Conjugacy data: the primary pairs {xy, yx}, their reflexive-transitive
/// closure, and (for monoids) the partition under unit conjugation.
struct ConjugacyRelations {
  std::vector<IndexPair> primary_pairs;  // unordered pairs, sorted, reflexive included
  Partition classes;
  std::optional<Partition> g_classes;
};

/// A pair u, v with uvu = u and vuv = v exhibiting b = uav, a = vbu.
struct Witness {
  ElementIndex u;
  ElementIndex v;
};

struct StructuralChecks {
  bool regular = false;
  bool inverse = false;
  bool factorizable = false;
  bool completely_regular = false;
  bool band = false;
};

/// A finite semigroup given by a complete multiplication table over opaque,
/// canonically encoded elements. Immutable after construction; all derived
/// structure (Green's relations, conjugacy classes, ...) is computed lazily
/// and cached, and instances are safe to share across threads.
///
/// The constructor validates associativity: exhaustively for tables with at
/// most 300 elements, by a fixed-seed random sample of one million triples
/// above that.
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::vector<std::string> encodings,
                  std::vector<ElementIndex> table);

  std::size_t size() const { return size_; }

  ElementIndex product(ElementIndex a, ElementIndex b) const {
    return table_[a * size_ + b];
  }

  /// a^k for k >= 1.
  ElementIndex power(ElementIndex a, std::uint64_t k) const;

  const std::string& encoding(ElementIndex a) const { return encodings_[a]; }
  std::optional<ElementIndex> index_of(std::string_view encoding) const;

  std::optional<ElementIndex> identity() const { return identity_; }
  std::optional<ElementIndex> zero() const { return zero_; }

  bool is_idempotent(ElementIndex a) const { return product(a, a) == a; }

  /// True iff a lies in a subgroup, i.e. a and a^2 share an H-class.
  bool is_group_element(ElementIndex a) const;

  const GreenStructure& green() const;
  const EpigroupProfile& epigroup_profile() const;

  /// All unordered pairs {xy, yx} from one sweep over S x S, plus the
  /// reflexive pairs.
  const std::vector<IndexPair>& primary_edges() const;

  /// The brute-force oracle: reflexive-transitive closure of the primary
  /// pairs (plus, on monoids, the unit-conjugation partition).
  const ConjugacyRelations& conjugacy() const;

  bool oracle_conjugate(ElementIndex a, ElementIndex b) const {
    return conjugacy().classes.same_class(a, b);
  }

  /// Unit group (H-class of the identity), ascending. Throws NoIdentity.
  const std::vector<ElementIndex>& unit_group() const;
  ElementIndex unit_inverse(ElementIndex g) const;

  /// True iff a = g^{-1} b g for some unit g. Throws NoIdentity.
  bool g_conjugate(ElementIndex a, ElementIndex b) const;

  /// Lexicographically first (u, v) with uvu = u, vuv = v, b = uav, a = vbu,
  /// or nullopt. Both a and b must be group elements (NotGroupElement).
  std::optional<Witness> witness_search(ElementIndex a, ElementIndex b) const;

  /// Checks the four witness identities by table lookup.
  bool witness_verifies(ElementIndex a, ElementIndex b, Witness w) const;

  /// Conjugacy via regular parts and a mutually-inverse witness pair.
  /// Requires a regular semigroup (NotRegular).
  bool conjugate_by_criterion(ElementIndex a, ElementIndex b) const;

  /// Conjugacy via unit conjugation of regular parts. Requires a
  /// factorizable inverse monoid (NotInverse / NotFactorizable).
  bool conjugate_by_g_criterion(ElementIndex a, ElementIndex b) const;

  const StructuralChecks& structural_checks() const;

 private:
  struct Caches;

  void verify_associativity() const;
  void detect_identity_and_zero();

  std::vector<std::string> encodings_;
  std::vector<ElementIndex> table_;
  std::size_t size_ = 0;
  std::optional<ElementIndex> identity_;
  std::optional<ElementIndex> zero_;

  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_map<std::string, ElementIndex, StringHash, std::equal_to<>> index_;

  // lazily filled, shared between copies of the same table
  std::shared_ptr<Caches> caches_;
};

struct BuildOptions {
  std::size_t max_elements = 20000;
};

/// A semigroup together with the payloads its element indices stand for.
template <typename Payload>
struct EnumeratedSemigroup {
  FiniteSemigroup semigroup;
  std::vector<Payload> elements;

  ElementIndex index_of(const Payload& p) const {
    auto idx = semigroup.index_of(p.encode());
    if (!idx) {
      throw Error("element is not a member of this semigroup: " + p.to_notation());
    }
    return *idx;
  }
};

/// Closes the generators under `mul`, assigns indices in discovery order
/// (generators first), and fills the complete multiplication table.
///
/// Payload equality is equality of the canonical byte encodings produced by
/// `enc`. Throws ClosureCapExceeded when the closure grows past
/// opts.max_elements; the finished table is associativity-checked
/// (NonAssociative).
template <typename Payload, typename Multiply, typename Encode>
EnumeratedSemigroup<Payload> build_semigroup(const std::vector<Payload>& generators,
                                             Multiply&& mul, Encode&& enc,
                                             BuildOptions opts = {}) {
  if (generators.empty()) {
    throw Error("build_semigroup: no generators");
  }
  std::vector<Payload> elements;
  std::unordered_map<std::string, ElementIndex> seen;
  auto add = [&](const Payload& p) -> bool {
    std::string key = enc(p);
    auto [it, inserted] = seen.emplace(std::move(key), static_cast<ElementIndex>(elements.size()));
    (void)it;
    if (inserted) {
      if (elements.size() >= opts.max_elements) {
        throw ClosureCapExceeded("closure exceeds cap of " + std::to_string(opts.max_elements) +
                                 " elements");
      }
      elements.push_back(p);
    }
    return inserted;
  };
  for (const auto& g : generators) {
    add(g);
  }
  // breadth-first closure: multiply every known element with each frontier
  // element on both sides
  std::size_t frontier_begin = 0;
  while (frontier_begin < elements.size()) {
    const std::size_t frontier_end = elements.size();
    for (std::size_t i = 0; i < frontier_end; ++i) {
      for (std::size_t j = frontier_begin; j < frontier_end; ++j) {
        add(mul(elements[i], elements[j]));
        add(mul(elements[j], elements[i]));
      }
    }
    frontier_begin = frontier_end;
  }

  const std::size_t n = elements.size();
  std::vector<ElementIndex> table(n * n);
  std::vector<std::string> encodings(n);
  for (std::size_t i = 0; i < n; ++i) {
    encodings[i] = enc(elements[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string key = enc(mul(elements[i], elements[j]));
      auto it = seen.find(key);
      if (it == seen.end()) {
        throw Error("build_semigroup: closure invariant violated");
      }
      table[i * n + j] = it->second;
    }
  }
  return EnumeratedSemigroup<Payload>{FiniteSemigroup(std::move(encodings), std::move(table)),
                                      std::move(elements)};
}

}  // namespace epiconj

#endif  // EPICONJ_SEMIGROUP_HPP
