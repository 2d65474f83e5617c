// Acceptance suite: every criterion is exact (no tolerances) and prints one
// PASS/FAIL line. Exit status 0 only if all criteria hold.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../corpus.hpp"
#include "epiconj/linear.hpp"
#include "epiconj/mealy.hpp"
#include "epiconj/semigroup.hpp"
#include "epiconj/transform.hpp"

using namespace epiconj;

namespace {

struct NamedSemigroup {
  std::string name;
  const FiniteSemigroup* s;
};

struct Corpus {
  EnumeratedSemigroup<transform::PartialTransformation> is2, is3, t2, t3, pt2, pt3;
  EnumeratedSemigroup<linear::PartialLinearMap> paut2, end2, pend2;
  EnumeratedSemigroup<std::pair<int, int>> band;
  EnumeratedSemigroup<transform::PartialTransformation> s3;
  EnumeratedSemigroup<mealy::Portrait> portraits2;

  std::vector<NamedSemigroup> all() const {
    return {{"IS_2", &is2.semigroup},        {"IS_3", &is3.semigroup},
            {"T_2", &t2.semigroup},          {"T_3", &t3.semigroup},
            {"PT_2", &pt2.semigroup},        {"PT_3", &pt3.semigroup},
            {"PAut(F_2^2)", &paut2.semigroup}, {"End(F_2^2)", &end2.semigroup},
            {"PEnd(F_2^2)", &pend2.semigroup}, {"band 2x2", &band.semigroup},
            {"S_3", &s3.semigroup},          {"portraits depth 2", &portraits2.semigroup}};
  }
};

Corpus build_corpus() {
  using transform::Family;
  Corpus c{
      transform::enumerate(Family::IS, 2), transform::enumerate(Family::IS, 3),
      transform::enumerate(Family::T, 2),  transform::enumerate(Family::T, 3),
      transform::enumerate(Family::PT, 2), transform::enumerate(Family::PT, 3),
      linear::enumerate_linear(linear::Family::PAut, 2, 2),
      linear::enumerate_linear(linear::Family::End, 2, 2),
      linear::enumerate_linear(linear::Family::PEnd, 2, 2),
      corpus::rectangular_band(2, 2),
      corpus::symmetric_group_3(),
      build_semigroup(
          mealy::all_portraits("01", 2),
          [](const mealy::Portrait& a, const mealy::Portrait& b) { return a * b; },
          [](const mealy::Portrait& a) { return a.encode(); }),
  };
  return c;
}

// ---- criterion bodies; empty string = pass, otherwise failure detail ----

std::string class_counts(const Corpus& c) {
  const std::vector<std::pair<const FiniteSemigroup*, std::size_t>> expect = {
      {&c.is2.semigroup, 4}, {&c.is3.semigroup, 7}, {&c.t2.semigroup, 3},
      {&c.t3.semigroup, 6},  {&c.pt2.semigroup, 4}, {&c.pt3.semigroup, 7}};
  for (const auto& [s, want] : expect) {
    if (s->conjugacy().classes.count() != want) {
      return "expected " + std::to_string(want) + " classes, oracle found " +
             std::to_string(s->conjugacy().classes.count());
    }
  }
  return {};
}

template <typename Payload, typename Criterion>
std::string audit_pairs(const std::string& name,
                        const EnumeratedSemigroup<Payload>& es, Criterion crit) {
  const auto& s = es.semigroup;
  for (ElementIndex a = 0; a < s.size(); ++a) {
    for (ElementIndex b = 0; b < s.size(); ++b) {
      if (crit(a, b) != s.oracle_conjugate(a, b)) {
        return name + " disagrees with the oracle at " + es.elements[a].to_notation() +
               " vs " + es.elements[b].to_notation();
      }
    }
  }
  return {};
}

std::string criteria_vs_oracle(const Corpus& c) {
  using transform::conjugate_by_type;
  using transform::Family;
  for (const auto* es : {&c.is2, &c.is3}) {
    if (auto err = audit_pairs("cyclic-type IS", *es, [&](ElementIndex a, ElementIndex b) {
          return conjugate_by_type(es->elements[a], es->elements[b], Family::IS);
        });
        !err.empty()) {
      return err;
    }
    if (auto err = audit_pairs("unit-conjugacy IS", *es, [&](ElementIndex a, ElementIndex b) {
          return es->semigroup.conjugate_by_g_criterion(a, b);
        });
        !err.empty()) {
      return err;
    }
  }
  for (const auto& [es, fam] : {std::pair{&c.t2, Family::T}, {&c.t3, Family::T},
                                {&c.pt2, Family::PT}, {&c.pt3, Family::PT}}) {
    if (auto err = audit_pairs("cyclic-type", *es, [&, fam = fam](ElementIndex a, ElementIndex b) {
          return conjugate_by_type(es->elements[a], es->elements[b], fam);
        });
        !err.empty()) {
      return err;
    }
  }
  if (auto err = audit_pairs("gl-regular-part PAut", c.paut2,
                             [&](ElementIndex a, ElementIndex b) {
                               return linear::conjugate_paut(c.paut2.elements[a],
                                                             c.paut2.elements[b]);
                             });
      !err.empty()) {
    return err;
  }
  if (auto err = audit_pairs("unit-conjugacy PAut", c.paut2,
                             [&](ElementIndex a, ElementIndex b) {
                               return c.paut2.semigroup.conjugate_by_g_criterion(a, b);
                             });
      !err.empty()) {
    return err;
  }
  if (auto err = audit_pairs("gl-range-restriction End", c.end2,
                             [&](ElementIndex a, ElementIndex b) {
                               return linear::conjugate_end(c.end2.elements[a],
                                                            c.end2.elements[b],
                                                            linear::Family::End);
                             });
      !err.empty()) {
    return err;
  }
  return {};
}

std::string witness_equivalence(const Corpus& c) {
  for (const auto& [name, s] : c.all()) {
    std::vector<ElementIndex> group;
    for (ElementIndex a = 0; a < s->size(); ++a) {
      if (s->is_group_element(a)) {
        group.push_back(a);
      }
    }
    for (ElementIndex a : group) {
      for (ElementIndex b : group) {
        const auto w = s->witness_search(a, b);
        if (w.has_value() != s->oracle_conjugate(a, b)) {
          return name + ": witness existence differs from the oracle at indices " +
                 std::to_string(a) + ", " + std::to_string(b);
        }
        if (w && !s->witness_verifies(a, b, *w)) {
          return name + ": returned witness fails its identities at indices " +
                 std::to_string(a) + ", " + std::to_string(b);
        }
      }
    }
  }
  return {};
}

std::string regular_part_conjugacy(const Corpus& c) {
  for (const auto& [name, s] : c.all()) {
    if (!s->structural_checks().regular) {
      return name + " unexpectedly not regular";
    }
    const auto& p = s->epigroup_profile();
    for (ElementIndex a = 0; a < s->size(); ++a) {
      if (!s->oracle_conjugate(a, p.regular_part[a])) {
        return name + ": element " + std::to_string(a) +
               " is not oracle-conjugate to its regular part";
      }
    }
  }
  return {};
}

std::string idempotent_power_laws(const Corpus& c) {
  for (const auto& [name, s] : c.all()) {
    const auto& p = s->epigroup_profile();
    const auto& g = s->green();
    for (ElementIndex a = 0; a < s->size(); ++a) {
      const ElementIndex e = p.idempotent_power[a];
      if (!s->is_idempotent(e)) {
        return name + ": e_a is not idempotent at " + std::to_string(a);
      }
      if (s->product(e, a) != s->product(a, e)) {
        return name + ": e_a does not commute with a at " + std::to_string(a);
      }
      if (g.h_class[p.regular_part[a]] != g.h_class[e]) {
        return name + ": a e_a is not H-related to e_a at " + std::to_string(a);
      }
      if (!s->is_group_element(s->power(a, p.height[a]))) {
        return name + ": a^height is not a group element at " + std::to_string(a);
      }
    }
  }
  return {};
}

std::string nilpotent_class(const Corpus& c) {
  for (const auto* es : {&c.is3, &c.pt3}) {
    const auto& s = es->semigroup;
    if (!s.zero()) {
      return "family lacks a zero element";
    }
    const ElementIndex zero = *s.zero();
    std::size_t nilpotents = 0;
    for (ElementIndex a = 0; a < s.size(); ++a) {
      const bool nilpotent = s.power(a, s.size()) == zero;
      nilpotents += nilpotent;
      if (s.oracle_conjugate(a, zero) != nilpotent) {
        return "class of the zero differs from the nilpotent set at index " +
               std::to_string(a);
      }
    }
    if (nilpotents == 0) {
      return "no nilpotents found";
    }
  }
  return {};
}

std::string orbit_growth() {
  const auto start = std::chrono::steady_clock::now();
  const auto m = mealy::appendix_a_machine();
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto cycle_rep = mealy::orbit_report(m, 2 * k);
    const auto cycle = cycle_rep.component_of(std::string(2 * k, '1'));
    if (!cycle.on_cycle || cycle.length != (std::size_t{1} << k)) {
      return "all-ones word of length " + std::to_string(2 * k) +
             " is not on a cycle of length 2^" + std::to_string(k);
    }
    const auto chain_rep = mealy::orbit_report(m, 2 * k + 2);
    const auto chain = chain_rep.component_of(std::string(2 * k, '1') + "01");
    if (chain.on_cycle || chain.length < (std::size_t{1} << k)) {
      return "marked word at length " + std::to_string(2 * k + 2) +
             " is not on a chain of length at least 2^" + std::to_string(k);
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 10.0) {
    std::ostringstream os;
    os << "orbit sweep took " << secs << "s, budget is 10s";
    return os.str();
  }
  return {};
}

std::string group_elements_share_d(const Corpus& c) {
  for (const auto& [name, s] : c.all()) {
    const auto& g = s->green();
    for (const auto& members : s->conjugacy().classes.classes) {
      ElementIndex first = static_cast<ElementIndex>(s->size());
      for (ElementIndex m : members) {
        if (!s->is_group_element(m)) {
          continue;
        }
        if (first == s->size()) {
          first = m;
        } else if (g.d_class[m] != g.d_class[first]) {
          return name + ": group elements " + std::to_string(first) + " and " +
                 std::to_string(m) + " share a class but not a D-class";
        }
      }
    }
  }
  return {};
}

std::string property_suite(const Corpus& c) {
  // R_a meet L_b holds ab iff R_b meet L_a holds an idempotent
  for (const auto& [name, s] : c.all()) {
    const auto& g = s->green();
    std::vector<std::vector<bool>> starred(g.r_count, std::vector<bool>(g.l_count, false));
    for (ElementIndex e : g.idempotents) {
      starred[g.r_class[e]][g.l_class[e]] = true;
    }
    for (ElementIndex a = 0; a < s->size(); ++a) {
      for (ElementIndex b = 0; b < s->size(); ++b) {
        const ElementIndex ab = s->product(a, b);
        const bool in_cell = g.r_class[ab] == g.r_class[a] && g.l_class[ab] == g.l_class[b];
        if (in_cell != starred[g.r_class[b]][g.l_class[a]]) {
          return name + ": product cell rule fails at " + std::to_string(a) + ", " +
                 std::to_string(b);
        }
      }
    }
  }
  // powers of primary pairs stay primarily conjugate via the shifted witness
  for (const auto* es : {&c.t3.semigroup, &c.is3.semigroup}) {
    const auto& s = *es;
    for (ElementIndex x = 0; x < s.size(); ++x) {
      for (ElementIndex y = 0; y < s.size(); ++y) {
        const ElementIndex a = s.product(x, y);
        const ElementIndex b = s.product(y, x);
        ElementIndex shifted = x;
        for (std::uint64_t n = 2; n <= 5; ++n) {
          shifted = s.product(s.product(shifted, y), x);
          if (s.product(shifted, y) != s.power(a, n) ||
              s.product(y, shifted) != s.power(b, n)) {
            return "power witness fails at x=" + std::to_string(x) +
                   " y=" + std::to_string(y) + " n=" + std::to_string(n);
          }
        }
      }
    }
  }
  // a primary edge into a group element puts the square into a group
  for (const auto& [name, s] : c.all()) {
    for (const auto& [a, b] : s->primary_edges()) {
      if ((s->is_group_element(b) && !s->is_group_element(s->product(a, a))) ||
          (s->is_group_element(a) && !s->is_group_element(s->product(b, b)))) {
        return name + ": square of a primary neighbour of a group element escapes";
      }
    }
  }
  // every conjugacy class is uniformly group-bound (trivial in finite tables)
  for (const auto& [name, s] : c.all()) {
    const auto& p = s->epigroup_profile();
    for (ElementIndex a = 0; a < s->size(); ++a) {
      if (p.height[a] < 1) {
        return name + ": missing height";
      }
    }
  }
  // band consequences: on a rectangular band conjugacy is the D-relation
  {
    const auto band23 = corpus::rectangular_band(2, 3);
    for (const auto* s : {&c.band.semigroup, &band23.semigroup}) {
      if (s->conjugacy().classes.count() != 1 || s->green().d_count != 1) {
        return "rectangular band is not a single class";
      }
      const auto checks = s->structural_checks();
      if (!checks.band || !checks.completely_regular || checks.inverse) {
        return "rectangular band structural flags are wrong";
      }
    }
  }
  // completely regular: the primary relation is already transitive
  {
    const auto& edges = c.s3.semigroup.primary_edges();
    for (const auto& members : c.s3.semigroup.conjugacy().classes.classes) {
      for (ElementIndex a : members) {
        for (ElementIndex b : members) {
          const IndexPair pair{std::min(a, b), std::max(a, b)};
          if (!std::binary_search(edges.begin(), edges.end(), pair)) {
            return "S_3: conjugate pair without a primary edge";
          }
        }
      }
    }
  }
  // unit conjugation refines conjugacy on every monoid in the corpus
  for (const auto& [name, s] : c.all()) {
    const auto& rel = s->conjugacy();
    if (!rel.g_classes) {
      continue;
    }
    for (const auto& g_class : rel.g_classes->classes) {
      for (ElementIndex m : g_class) {
        if (rel.classes.class_id[m] != rel.classes.class_id[g_class.front()]) {
          return name + ": a unit-conjugacy class crosses oracle classes";
        }
      }
    }
  }
  // machine composition and inversion are extensionally correct to length 8
  {
    const auto m = mealy::appendix_a_machine();
    const auto inv = mealy::invert_machine(m);
    const auto mm = mealy::compose_machines(m, m);
    for (std::size_t len = 0; len <= 8; ++len) {
      for (std::size_t w = 0; w < (std::size_t{1} << len); ++w) {
        std::string word;
        for (std::size_t i = len; i-- > 0;) {
          word += (w >> i) & 1 ? '1' : '0';
        }
        const auto once = m.apply(word);
        const auto twice = once ? m.apply(*once) : std::nullopt;
        if (mm.apply(word) != twice) {
          return "product machine differs from applying the map twice at " + word;
        }
        if (once && inv.apply(*once) != word) {
          return "inverse machine fails to undo the map at " + word;
        }
      }
    }
  }
  return {};
}

}  // namespace

int main() {
  const auto corpus_start = std::chrono::steady_clock::now();
  const Corpus corpus = build_corpus();
  const double build_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - corpus_start).count();
  std::cout << "corpus: 12 semigroups built in " << build_secs << "s\n";

  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"1. oracle class counts (IS_2=4 IS_3=7 T_2=3 T_3=6 PT_2=4 PT_3=7)",
       [&] { return class_counts(corpus); }},
      {"2. family criteria agree with the oracle on all pairs",
       [&] { return criteria_vs_oracle(corpus); }},
      {"3. witness existence equals oracle conjugacy for group elements",
       [&] { return witness_equivalence(corpus); }},
      {"4. every element is conjugate to its regular part",
       [&] { return regular_part_conjugacy(corpus); }},
      {"5. idempotent powers: e_a idempotent, central on <a>, a e_a H e_a",
       [&] { return idempotent_power_laws(corpus); }},
      {"6. nilpotents of IS_3 and PT_3 form exactly the class of the zero",
       [&] { return nilpotent_class(corpus); }},
      {"7. orbit growth of the bundled machine: cycles 2^k, chains >= 2^k, under 10s",
       [] { return orbit_growth(); }},
      {"8. group elements of one class share a D-class",
       [&] { return group_elements_share_d(corpus); }},
      {"9. property suite (cell rule, power witnesses, squares, bands, refinement, machines)",
       [&] { return property_suite(corpus); }},
  };

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty()) {
      std::cout << "[PASS] " << name << " (" << secs << "s)\n";
    } else {
      std::cout << "[FAIL] " << name << ": " << detail << "\n";
      ++failures;
    }
  }
  if (failures == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria hold\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
