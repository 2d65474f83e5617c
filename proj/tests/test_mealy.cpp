#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "epiconj/mealy.hpp"
#include "epiconj/semigroup.hpp"

using namespace epiconj;
using namespace epiconj::mealy;

namespace {

// swaps the first letter, then copies
MealyMachine swap_first_machine() {
  return MealyMachine("01", {"S", "I"}, "S",
                      {{"S", '0', "I", '1'},
                       {"S", '1', "I", '0'},
                       {"I", '0', "I", '0'},
                       {"I", '1', "I", '1'}});
}

MealyMachine identity_machine() {
  return MealyMachine("01", {"I"}, "I", {{"I", '0', "I", '0'}, {"I", '1', "I", '1'}});
}

// identity on words starting with 0, undefined elsewhere
MealyMachine half_identity_machine() {
  return MealyMachine("01", {"S", "I"}, "S",
                      {{"S", '0', "I", '0'}, {"I", '0', "I", '0'}, {"I", '1', "I", '1'}});
}

std::string ones(std::size_t n) { return std::string(n, '1'); }

}  // namespace

TEST_CASE("machine construction and the induced word map", "[mealy]") {
  const auto m = appendix_a_machine();
  SECTION("the bundled tables") {
    REQUIRE(m.states() == std::vector<std::string>{"A", "B", "C", "D"});
    REQUIRE(m.initial_state() == "A");
    REQUIRE(m.has_move(0, 0));
    REQUIRE(m.next_state(0, 0) == 3);      // A --0--> D
    REQUIRE(m.output_letter(0, 0) == 1);   // emitting 1
    REQUIRE(m.next_state(2, 0) == 2);      // C --0--> C
    REQUIRE(m.output_letter(2, 0) == 0);   // emitting 0
    REQUIRE_FALSE(m.has_move(1, 0));       // (B,0) missing
    REQUIRE_FALSE(m.has_move(3, 1));       // (D,1) missing
  }
  SECTION("runs die exactly on missing moves") {
    REQUIRE(m.apply("11") == "00");
    REQUIRE(m.apply("00") == "11");
    REQUIRE_FALSE(m.apply("0001").has_value());
    REQUIRE_FALSE(m.apply("01").has_value());
    REQUIRE_FALSE(m.apply("10").has_value());
    REQUIRE(m.apply("") == "");
    REQUIRE_THROWS_AS(m.apply("012"), BadAlphabet);
  }
  SECTION("the word map view is length preserving and prefix compatible") {
    const WordMap f(m);
    for (std::size_t len = 0; len <= 8; ++len) {
      for (std::size_t w = 0; w < (std::size_t{1} << len); ++w) {
        std::string word;
        for (std::size_t i = len; i-- > 0;) {
          word += (w >> i) & 1 ? '1' : '0';
        }
        const auto image = f(word);
        if (image) {
          REQUIRE(image->size() == word.size());
          if (!word.empty()) {
            const auto prefix = f(word.substr(0, word.size() - 1));
            REQUIRE(prefix.has_value());
            REQUIRE(*prefix == image->substr(0, word.size() - 1));
          }
        }
      }
    }
  }
  SECTION("validation") {
    REQUIRE_THROWS_AS(MealyMachine("00", {"A"}, "A", {}), BadAlphabet);
    REQUIRE_THROWS_AS(MealyMachine("01", {"A"}, "B", {}), Error);
    REQUIRE_THROWS_AS(MealyMachine("01", {"A"}, "A",
                                   {{"A", '0', "A", '0'}, {"A", '0', "A", '1'}}),
                      Error);
  }
}

TEST_CASE("machine text format", "[mealy]") {
  const auto m = appendix_a_machine();
  SECTION("round trip through the text form") {
    const auto reparsed = MealyMachine::parse(m.to_text());
    REQUIRE(reparsed.to_text() == m.to_text());
    REQUIRE(reparsed.apply("1111") == m.apply("1111"));
  }
  SECTION("the bundled asset file describes the same machine") {
    std::ifstream in(std::string(EPICONJ_DATA_DIR) + "/appendix_a.machine");
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto parsed = MealyMachine::parse(buffer.str());
    REQUIRE(parsed.to_text() == m.to_text());
  }
  SECTION("missing headers are rejected") {
    REQUIRE_THROWS_AS(MealyMachine::parse("initial: A\nA,0 -> A,0\n"), BadAlphabet);
    REQUIRE_THROWS_AS(MealyMachine::parse("alphabet: 0 1\nA,0 -> A,0\n"), Error);
  }
}

TEST_CASE("orbit decomposition per word length", "[mealy]") {
  const auto m = appendix_a_machine();
  SECTION("doubling cycles through the all-ones words") {
    for (std::size_t k = 1; k <= 8; ++k) {
      const auto rep = orbit_report(m, 2 * k);
      const auto info = rep.component_of(ones(2 * k));
      REQUIRE(info.on_cycle);
      REQUIRE(info.length == (std::size_t{1} << k));
    }
  }
  SECTION("the marked words sit on long chains") {
    for (std::size_t k = 1; k <= 6; ++k) {
      const auto rep = orbit_report(m, 2 * k + 2);
      const auto info = rep.component_of(ones(2 * k) + "01");
      REQUIRE_FALSE(info.on_cycle);
      REQUIRE(info.length >= (std::size_t{1} << k));
    }
  }
  SECTION("isolated words count as one-vertex chains") {
    const auto rep = orbit_report(m, 2);
    REQUIRE(rep.cycles() == std::vector<std::size_t>{2});
    REQUIRE(rep.chains() == std::vector<std::size_t>{1, 1});
    REQUIRE(rep.component_of("01").length == 1);
  }
  SECTION("caps and injectivity are enforced") {
    REQUIRE_THROWS_AS(orbit_report(m, 30, 1 << 10), LengthCapExceeded);
    const MealyMachine squash("01", {"S"}, "S",
                              {{"S", '0', "S", '0'}, {"S", '1', "S", '0'}});
    REQUIRE_THROWS_AS(orbit_report(squash, 1), NotInjectiveAtLength);
  }
}

TEST_CASE("chain growth probe", "[mealy]") {
  SECTION("the identity machine is flat") {
    const auto probe = group_bound_probe(identity_machine(), 8);
    REQUIRE(probe.bounded);
    REQUIRE(probe.bounded_by == 1);
  }
  SECTION("the bundled machine keeps setting records") {
    const auto probe = group_bound_probe(appendix_a_machine(), 12);
    REQUIRE_FALSE(probe.bounded);
    REQUIRE(probe.max_chain_per_length ==
            std::vector<std::size_t>{0, 1, 1, 2, 2, 4, 4, 8, 8, 16, 16, 32});
  }
  SECTION("a finitary machine stays bounded") {
    const auto probe = group_bound_probe(swap_first_machine(), 8);
    REQUIRE(probe.bounded);
    REQUIRE(probe.bounded_by == 1);
  }
}

TEST_CASE("machine composition and inversion", "[mealy]") {
  const auto m = appendix_a_machine();
  const auto id = identity_machine();

  const auto words_up_to = [](std::size_t max_len) {
    std::vector<std::string> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (std::size_t w = 0; w < (std::size_t{1} << len); ++w) {
        std::string word;
        for (std::size_t i = len; i-- > 0;) {
          word += (w >> i) & 1 ? '1' : '0';
        }
        out.push_back(word);
      }
    }
    return out;
  };

  SECTION("composing with the identity changes nothing, extensionally") {
    const auto comp = compose_machines(m, id);
    for (const auto& w : words_up_to(8)) {
      REQUIRE(comp.apply(w) == m.apply(w));
    }
  }
  SECTION("the product machine realizes first-then-second") {
    const auto mm = compose_machines(m, m);
    for (const auto& w : words_up_to(8)) {
      const auto mid = m.apply(w);
      REQUIRE(mm.apply(w) == (mid ? m.apply(*mid) : std::nullopt));
    }
    REQUIRE(mm.apply("11") == "11");
  }
  SECTION("alphabets must match") {
    const MealyMachine other("ab", {"S"}, "S", {});
    REQUIRE_THROWS_AS(compose_machines(m, other), AlphabetMismatch);
  }
  SECTION("inversion swaps the letters on every edge") {
    const auto inv = invert_machine(m);
    REQUIRE(inv.apply("00") == "11");
    for (const auto& w : words_up_to(8)) {
      const auto image = m.apply(w);
      if (image) {
        REQUIRE(inv.apply(*image) == w);
      }
    }
    const auto double_inv = invert_machine(inv);
    for (const auto& w : words_up_to(8)) {
      REQUIRE(double_inv.apply(w) == m.apply(w));
    }
  }
  SECTION("inverting the identity machine gives it back") {
    const auto inv = invert_machine(id);
    REQUIRE(inv.to_text() == id.to_text());
  }
  SECTION("composition with the inverse is a partial identity") {
    const auto round = compose_machines(m, invert_machine(m));
    for (const auto& w : words_up_to(8)) {
      const auto image = round.apply(w);
      if (image) {
        REQUIRE(*image == w);
      }
    }
  }
  SECTION("locally non-injective outputs refuse inversion") {
    const MealyMachine squash("01", {"S"}, "S",
                              {{"S", '0', "S", '0'}, {"S", '1', "S", '0'}});
    REQUIRE_THROWS_AS(invert_machine(squash), NotLocallyInjective);
  }
}

TEST_CASE("finitary bounds", "[mealy]") {
  REQUIRE(finitary_bound(identity_machine()) == 0);
  REQUIRE(finitary_bound(half_identity_machine()) == 0);
  REQUIRE(finitary_bound(swap_first_machine()) == 1);
  REQUIRE_FALSE(finitary_bound(appendix_a_machine()).has_value());

  SECTION("swapping the second letter needs depth two") {
    const MealyMachine swap2("01", {"S", "T", "I"}, "S",
                             {{"S", '0', "T", '0'},
                              {"S", '1', "T", '1'},
                              {"T", '0', "I", '1'},
                              {"T", '1', "I", '0'},
                              {"I", '0', "I", '0'},
                              {"I", '1', "I", '1'}});
    REQUIRE(finitary_bound(swap2) == 2);
  }
}

TEST_CASE("portraits", "[mealy]") {
  const auto m = appendix_a_machine();
  SECTION("levels of the bundled machine at depth two") {
    const auto p = Portrait::from_machine(m, 2);
    REQUIRE(p.apply("0") == "1");
    REQUIRE(p.apply("1") == "0");
    REQUIRE(p.apply("00") == "11");
    REQUIRE(p.apply("11") == "00");
    REQUIRE_FALSE(p.apply("01").has_value());
    REQUIRE_FALSE(p.apply("10").has_value());
    REQUIRE(p.to_notation() == "1,0|3,.,.,0");
  }
  SECTION("identity portraits and extension by identity") {
    const auto id = Portrait::identity("01", 3);
    REQUIRE(id.total());
    REQUIRE(id.apply("101") == "101");
    const auto sw = Portrait::from_machine(swap_first_machine(), 1);
    const auto extended = sw.extend(4);
    REQUIRE(extended.apply("0110") == "1110");
    // a finitary machine's portrait at its bound determines it below that
    for (std::size_t w = 0; w < 16; ++w) {
      std::string word;
      for (std::size_t i = 4; i-- > 0;) {
        word += (w >> i) & 1 ? '1' : '0';
      }
      REQUIRE(extended.apply(word) == swap_first_machine().apply(word));
    }
  }
  SECTION("portrait validation") {
    REQUIRE_THROWS_AS(Portrait("01", {{0}, {1, 1}}), NotInjectiveAtLength);
    REQUIRE_THROWS_AS(Portrait("01", {{0}, {5, 0}}), Error);
    // image of a defined word must extend the image of its prefix
    REQUIRE_THROWS_AS(Portrait("01", {{0}, {0, 1}, {3, -1, -1, 0}}), Error);
  }
  SECTION("composition and inversion act level-wise") {
    const auto p = Portrait::from_machine(m, 2);
    const auto q = p * p;
    REQUIRE(q.apply("11") == "11");
    REQUIRE_FALSE(q.apply("01").has_value());
    const auto inv = p.inverse();
    REQUIRE(inv.apply("00") == "11");
    REQUIRE((p * inv).apply("11") == "11");
    REQUIRE_THROWS_AS(p * Portrait::identity("01", 3), Error);
    REQUIRE_THROWS_AS(p * Portrait::identity("ab", 2), AlphabetMismatch);
  }
  SECTION("machines not injective at a level refuse a portrait") {
    const MealyMachine squash("01", {"S"}, "S",
                              {{"S", '0', "S", '0'}, {"S", '1', "S", '0'}});
    REQUIRE_THROWS_AS(Portrait::from_machine(squash, 1), NotInjectiveAtLength);
  }
}

TEST_CASE("portrait enumeration", "[mealy]") {
  REQUIRE(all_portraits("01", 1).size() == 7);
  REQUIRE(all_portraits("01", 2).size() == 127);
  REQUIRE(tree_automorphisms("01", 1).size() == 2);
  REQUIRE(tree_automorphisms("01", 2).size() == 8);
  REQUIRE(tree_automorphisms("01", 3).size() == 128);
  REQUIRE_THROWS_AS(all_portraits("01", 3, 1000), DepthCapExceeded);

  SECTION("automorphisms are exactly the total portraits") {
    const auto autos = tree_automorphisms("01", 2);
    std::size_t total_count = 0;
    for (const auto& p : all_portraits("01", 2)) {
      total_count += p.total();
    }
    REQUIRE(autos.size() == total_count);
  }
}

TEST_CASE("finitary conjugacy through portraits", "[mealy]") {
  const auto id2 = Portrait::identity("01", 2);
  const auto swap2 = Portrait::from_machine(swap_first_machine(), 2);
  SECTION("examples") {
    REQUIRE(conjugate_finitary(swap2, swap2, 2));
    REQUIRE_FALSE(conjugate_finitary(swap2, id2, 2));
    // both defined only at the root: equal regular parts
    const Portrait empty1("01", {{0}, {-1, -1}});
    const Portrait empty2("01", {{0}, {-1, -1}});
    REQUIRE(conjugate_finitary(empty1, empty2, 2));
    REQUIRE_THROWS_AS(conjugate_finitary(Portrait::identity("01", 3), id2, 2),
                      DepthCapExceeded);
  }
  SECTION("agreement with the oracle on the whole depth-2 portrait monoid") {
    const auto portraits = all_portraits("01", 2);
    auto es = build_semigroup(
        portraits, [](const Portrait& a, const Portrait& b) { return a * b; },
        [](const Portrait& a) { return a.encode(); });
    REQUIRE(es.semigroup.size() == 127);
    REQUIRE(es.semigroup.conjugacy().classes.count() == 19);
    const auto checks = es.semigroup.structural_checks();
    REQUIRE(checks.inverse);
    REQUIRE(checks.factorizable);
    for (ElementIndex a = 0; a < es.semigroup.size(); ++a) {
      for (ElementIndex b = 0; b < es.semigroup.size(); ++b) {
        REQUIRE(conjugate_finitary(es.elements[a], es.elements[b], 2) ==
                es.semigroup.oracle_conjugate(a, b));
      }
    }
  }
}
