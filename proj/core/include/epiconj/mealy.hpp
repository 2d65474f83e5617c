#ifndef EPICONJ_MEALY_HPP
#define EPICONJ_MEALY_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epiconj/errors.hpp"

namespace epiconj::mealy {

/// An initial partial Mealy machine over a single-character alphabet. A move
/// (state, letter) either exists with both a successor state and an output
/// letter, or is undefined.
///
/// The induced word map runs letter by letter from the initial state and is
/// undefined as soon as the run hits a missing move; it is length-preserving
/// and prefix-compatible by construction.
class MealyMachine {
 public:
  struct MoveSpec {
    std::string from;
    char input;
    std::string to;
    char output;
  };

  MealyMachine(std::string alphabet, std::vector<std::string> states, std::string initial,
               const std::vector<MoveSpec>& moves);

  const std::string& alphabet() const { return alphabet_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& initial_state() const { return states_[initial_]; }
  std::size_t initial_index() const { return initial_; }

  bool has_move(std::size_t state, std::size_t letter) const {
    return moves_[state * alphabet_.size() + letter].next >= 0;
  }
  std::size_t next_state(std::size_t state, std::size_t letter) const {
    return static_cast<std::size_t>(moves_[state * alphabet_.size() + letter].next);
  }
  std::size_t output_letter(std::size_t state, std::size_t letter) const {
    return static_cast<std::size_t>(moves_[state * alphabet_.size() + letter].out);
  }

  std::optional<std::size_t> letter_index(char c) const;

  /// The induced map on words. Throws BadAlphabet on foreign letters.
  std::optional<std::string> apply(std::string_view word) const;

  /// Text format: header lines `alphabet: 0 1` and `initial: A`, then one
  /// line `state,input -> nextstate,output` per existing move.
  static MealyMachine parse(std::string_view text);
  std::string to_text() const;

 private:
  struct Move {
    std::int32_t next = -1;
    std::int32_t out = -1;
  };

  std::string alphabet_;
  std::vector<std::string> states_;
  std::size_t initial_ = 0;
  std::vector<Move> moves_;
};

/// The bundled four-state machine over {0,1} whose induced partial
/// permutation has chains of unbounded length (so it lies in no subgroup
/// power); ships as data/appendix_a.machine in the same text format.
MealyMachine appendix_a_machine();

/// Thin view of the word map induced by a machine.
class WordMap {
 public:
  explicit WordMap(const MealyMachine& m) : machine_(&m) {}
  std::optional<std::string> operator()(std::string_view word) const {
    return machine_->apply(word);
  }
  const MealyMachine& machine() const { return *machine_; }

 private:
  const MealyMachine* machine_;
};

/// Exact cycle/chain decomposition of the restriction of the word map to
/// X^m. Every word of length m is a vertex; chains count vertices, isolated
/// words count as chains of one vertex.
class OrbitReport {
 public:
  std::size_t word_length() const { return word_length_; }
  const std::vector<std::size_t>& cycles() const { return cycles_; }
  const std::vector<std::size_t>& chains() const { return chains_; }
  std::size_t max_chain() const { return chains_.empty() ? 0 : chains_.back(); }

  struct ComponentInfo {
    bool on_cycle;
    std::size_t length;  // cycle length or chain vertex count
  };
  ComponentInfo component_of(std::string_view word) const;

 private:
  friend OrbitReport orbit_report(const MealyMachine&, std::size_t, std::size_t);
  std::string alphabet_;
  std::size_t word_length_ = 0;
  std::vector<std::size_t> cycles_;  // sorted
  std::vector<std::size_t> chains_;  // sorted
  std::vector<std::uint8_t> on_cycle_;
  std::vector<std::uint32_t> component_length_;
};

/// Throws NotInjectiveAtLength when the restriction is not injective and
/// LengthCapExceeded when |X|^m exceeds the cap.
OrbitReport orbit_report(const MealyMachine& m, std::size_t word_length,
                         std::size_t cap = std::size_t{1} << 22);

/// Chain growth probe. Boundedness over all lengths cannot be decided by a
/// finite sweep, so the verdict is evidence: the probe reports the maximal
/// chain per word length and flags the machine as unbounded when new maxima
/// keep appearing in the second half of the probed range.
struct GroupBoundProbe {
  bool bounded;
  std::size_t bounded_by;                          // max(1, largest chain seen)
  std::vector<std::size_t> max_chain_per_length;   // index 0 = word length 1
};

GroupBoundProbe group_bound_probe(const MealyMachine& m, std::size_t max_length,
                                  std::size_t cap = std::size_t{1} << 22);

/// Product machine on the reachable part of Q1 x Q2 realizing "m1 then m2".
/// Verified extensionally in the tests. Throws AlphabetMismatch.
MealyMachine compose_machines(const MealyMachine& m1, const MealyMachine& m2);

/// Swaps input and output letters on every move. Requires the defined
/// outputs at each state to be distinct letters (NotLocallyInjective);
/// realizes the inverse partial permutation.
MealyMachine invert_machine(const MealyMachine& m);

/// Least l such that every state reachable by words of length l acts as the
/// identity from then on, or nullopt when the level sets start repeating
/// without reaching the identity-state set.
std::optional<std::size_t> finitary_bound(const MealyMachine& m);

/// Level-wise restriction of a word map to words of length <= depth: one
/// partial injective map per level, prefix-compatible across levels with a
/// prefix-closed domain.
class Portrait {
 public:
  Portrait(std::string alphabet, std::vector<std::vector<std::int32_t>> levels);

  static Portrait from_machine(const MealyMachine& m, std::size_t depth);
  static Portrait identity(std::string alphabet, std::size_t depth);

  const std::string& alphabet() const { return alphabet_; }
  std::size_t depth() const { return levels_.size() - 1; }
  /// Image index of word #w at level m, or -1.
  std::int32_t level_image(std::size_t m, std::size_t w) const { return levels_[m][w]; }
  const std::vector<std::int32_t>& level(std::size_t m) const { return levels_[m]; }

  std::optional<std::string> apply(std::string_view word) const;

  /// Deepens by copying suffix letters below defined depth-l words.
  Portrait extend(std::size_t new_depth) const;
  Portrait inverse() const;
  bool total() const;

  friend Portrait operator*(const Portrait& f, const Portrait& g);
  bool operator==(const Portrait&) const = default;

  std::string encode() const;
  std::string to_notation() const;

 private:
  std::string alphabet_;
  std::vector<std::vector<std::int32_t>> levels_;  // levels_[m] has |X|^m entries
};

/// Every portrait of the given depth (the full inverse monoid of partial
/// tree isomorphisms truncated at that depth). Deterministic order. Throws
/// DepthCapExceeded when the count would exceed the cap.
std::vector<Portrait> all_portraits(const std::string& alphabet, std::size_t depth,
                                    std::size_t cap = 200000);

/// All everywhere-defined portraits: the automorphism group of the truncated
/// tree, enumerated by per-node letter permutations.
std::vector<Portrait> tree_automorphisms(const std::string& alphabet, std::size_t depth,
                                         std::size_t cap = 200000);

/// Conjugacy criterion for finitary elements given as portraits: the regular
/// parts (computed inside the portrait monoid of the search depth) must be
/// conjugate under some automorphism of the depth-truncated tree.
bool conjugate_finitary(const Portrait& f, const Portrait& g, std::size_t search_depth);

}  // namespace epiconj::mealy

#endif  // EPICONJ_MEALY_HPP
