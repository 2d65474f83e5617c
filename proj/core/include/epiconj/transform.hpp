#ifndef EPICONJ_TRANSFORM_HPP
#define EPICONJ_TRANSFORM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epiconj/errors.hpp"
#include "epiconj/semigroup.hpp"

namespace epiconj::transform {

enum class Family { IS, T, PT };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// A partial map on {1..n}, stored as an image array with 0 for "undefined".
/// Composition acts left to right: (p * q)(x) = q(p(x)).
class PartialTransformation {
 public:
  /// The empty map on {1..n}.
  explicit PartialTransformation(std::size_t n);
  PartialTransformation(std::size_t n, std::vector<std::uint8_t> image);

  static PartialTransformation identity(std::size_t n);
  /// Text form used by the CLI: `[2,0,1]` is 1 -> 2, 2 undefined, 3 -> 1.
  static PartialTransformation parse(std::string_view notation);

  std::size_t degree() const { return image_.size(); }
  /// Image of the 1-based point x; 0 when undefined.
  std::uint8_t image(std::size_t x) const { return image_[x - 1]; }
  bool defined(std::size_t x) const { return image_[x - 1] != 0; }

  bool injective() const;
  bool total() const;
  std::size_t rank() const;
  bool in_family(Family f) const;

  std::string encode() const;
  std::string to_notation() const;

  friend PartialTransformation operator*(const PartialTransformation& p,
                                         const PartialTransformation& q);
  bool operator==(const PartialTransformation&) const = default;

 private:
  std::vector<std::uint8_t> image_;
};

/// Decomposition of the graph of action on the vertex set {1..n}: directed
/// edges x -> p(x). Cycle lengths are always reported; chain vertex counts
/// only for injective maps (isolated points count as chains of one vertex).
struct ActionGraph {
  struct Component {
    std::vector<std::size_t> vertices;  // ascending
    std::size_t cycle_length = 0;       // 0 when the component has no cycle
  };
  std::vector<std::size_t> cycles;                 // sorted multiset
  std::optional<std::vector<std::size_t>> chains;  // sorted multiset, injective only
  std::vector<Component> components;
};

ActionGraph action_graph(const PartialTransformation& p);

/// Multiset of cycle lengths of the graph of action.
std::vector<std::size_t> cyclic_type(const PartialTransformation& p);

/// Table-free group-element test: trivial chains for partial permutations,
/// "range is a transversal of the kernel" for T / PT.
bool is_group_element_direct(const PartialTransformation& p, Family f);

/// Points lying on cycles; equals the intersection of the ranges of all
/// powers.
std::vector<std::size_t> stable_range(const PartialTransformation& p);

/// Restriction of a group element to its range, as a partial permutation of
/// {1..n}. Throws NotGroupElement.
PartialTransformation restrict_to_range(const PartialTransformation& p, Family f);

/// Conjugacy criterion for IS / T / PT: equality of cyclic types.
bool conjugate_by_type(const PartialTransformation& p, const PartialTransformation& q, Family f);

/// Unit-conjugacy criterion for partial permutations: cyclic and chain types
/// both coincide. Throws NotInjective.
bool g_conjugate_by_type(const PartialTransformation& p, const PartialTransformation& q);

struct RegularPartTypes {
  std::vector<std::size_t> cycles;
  std::optional<std::vector<std::size_t>> chains;  // injective input only
};

/// Predicted cycle/chain types of p * e_p without building any table: cycles
/// are kept, chains collapse to one vertex each.
RegularPartTypes regular_part_types(const PartialTransformation& p);

/// Materializes the whole family and builds its multiplication table.
EnumeratedSemigroup<PartialTransformation> enumerate(Family f, std::size_t n,
                                                     BuildOptions opts = {});

}  // namespace epiconj::transform

#endif  // EPICONJ_TRANSFORM_HPP
