#ifndef EPICONJ_SRC_SEMIGROUP_CACHES_HPP
#define EPICONJ_SRC_SEMIGROUP_CACHES_HPP

#include <mutex>
#include <optional>
#include <vector>

#include "epiconj/semigroup.hpp"

namespace epiconj {

// One lazily filled slot per derived structure. The once flags make the
// fills race-free; the filled data is immutable afterwards.
struct FiniteSemigroup::Caches {
  std::once_flag green_once;
  GreenStructure green;

  std::once_flag profile_once;
  EpigroupProfile profile;

  std::once_flag edges_once;
  std::vector<IndexPair> edges;

  std::once_flag conjugacy_once;
  ConjugacyRelations conjugacy;

  std::once_flag units_once;
  bool has_identity = false;
  std::vector<ElementIndex> units;                 // ascending
  std::vector<ElementIndex> unit_inverse_of;       // indexed by element, valid on units

  std::once_flag structural_once;
  StructuralChecks structural;
};

}  // namespace epiconj

#endif  // EPICONJ_SRC_SEMIGROUP_CACHES_HPP
