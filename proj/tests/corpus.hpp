#ifndef EPICONJ_TESTS_CORPUS_HPP
#define EPICONJ_TESTS_CORPUS_HPP

// Small semigroups and independent counting oracles shared by the unit and
// acceptance suites. The counting formulas here are the second route that
// enumeration results are checked against.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "epiconj/semigroup.hpp"
#include "epiconj/transform.hpp"

namespace corpus {

using epiconj::EnumeratedSemigroup;
using epiconj::transform::PartialTransformation;

// |IS_n| = sum over k of C(n,k)^2 k!
inline std::uint64_t is_size_formula(std::uint64_t n) {
  auto binom = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
      r = r * (a - i) / (i + 1);
    }
    return r;
  };
  std::uint64_t total = 0;
  std::uint64_t fact = 1;
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (k > 0) {
      fact *= k;
    }
    total += binom(n, k) * binom(n, k) * fact;
  }
  return total;
}

// number of k-dimensional subspaces of F_p^n
inline std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  auto pow = [](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) {
      r *= b;
    }
    return r;
  };
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= pow(p, n - i) - 1;
    den *= pow(p, k - i) - 1;
  }
  return num / den;
}

inline std::uint64_t gl_order_formula(std::uint64_t n, std::uint64_t p) {
  std::uint64_t pn = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    pn *= p;
  }
  std::uint64_t order = 1, pi = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= p;
  }
  return order;
}

// |PAut(F_p^n)| = sum over k of (number of k-subspaces)^2 |GL(k,p)|
inline std::uint64_t paut_size_formula(std::uint64_t n, std::uint64_t p) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const std::uint64_t nk = gaussian_binomial(n, k, p);
    total += nk * nk * gl_order_formula(k, p);
  }
  return total;
}

// |PEnd(F_p^n)| = sum over k of (number of k-subspaces) p^{kn}
inline std::uint64_t pend_size_formula(std::uint64_t n, std::uint64_t p) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    std::uint64_t maps = 1;
    for (std::uint64_t i = 0; i < k * n; ++i) {
      maps *= p;
    }
    total += gaussian_binomial(n, k, p) * maps;
  }
  return total;
}

// independent route to the class count of a transformation family
inline std::size_t distinct_cyclic_type_count(
    const EnumeratedSemigroup<PartialTransformation>& es) {
  std::set<std::vector<std::size_t>> types;
  for (const auto& p : es.elements) {
    types.insert(epiconj::transform::cyclic_type(p));
  }
  return types.size();
}

inline EnumeratedSemigroup<std::pair<int, int>> rectangular_band(int rows, int cols) {
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      gens.emplace_back(i, j);
    }
  }
  return epiconj::build_semigroup(
      gens, [](const auto& a, const auto& b) { return std::make_pair(a.first, b.second); },
      [](const auto& a) {
        return std::string{static_cast<char>(a.first), static_cast<char>(a.second)};
      });
}

inline EnumeratedSemigroup<int> cyclic_group(int order) {
  return epiconj::build_semigroup(
      std::vector<int>{1 % order},
      [order](int a, int b) { return (a + b) % order; },
      [](int a) { return std::string{static_cast<char>(a)}; });
}

// <a | a^3 = a^2>: two elements, not regular
inline EnumeratedSemigroup<int> monogenic_nonregular() {
  return epiconj::build_semigroup(
      std::vector<int>{1}, [](int a, int b) { return std::min(a + b, 2); },
      [](int a) { return std::string{static_cast<char>(a)}; });
}

// the two-element chain semilattice {e, f} with ef = f
inline EnumeratedSemigroup<int> chain_semilattice() {
  return epiconj::build_semigroup(
      std::vector<int>{0, 1}, [](int a, int b) { return std::max(a, b); },
      [](int a) { return std::string{static_cast<char>(a)}; });
}

inline EnumeratedSemigroup<PartialTransformation> transform_closure(
    const std::vector<const char*>& notations) {
  std::vector<PartialTransformation> gens;
  for (const char* t : notations) {
    gens.push_back(PartialTransformation::parse(t));
  }
  return epiconj::build_semigroup(
      gens, [](const auto& a, const auto& b) { return a * b; },
      [](const auto& a) { return a.encode(); });
}

// S_3 as an abstract table, generated inside IS_3
inline EnumeratedSemigroup<PartialTransformation> symmetric_group_3() {
  return transform_closure({"[2,1,3]", "[2,3,1]"});
}

// six-element inverse monoid {1, t, t^-1, tt^-1, t^-1 t, 0} with trivial
// unit group; t = [2,0] lies below no unit, so it is not factorizable
inline EnumeratedSemigroup<PartialTransformation> nonfactorizable_inverse_monoid() {
  return transform_closure({"[1,2]", "[2,0]", "[0,1]"});
}

}  // namespace corpus

#endif  // EPICONJ_TESTS_CORPUS_HPP
