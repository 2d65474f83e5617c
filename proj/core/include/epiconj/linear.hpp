#ifndef EPICONJ_LINEAR_HPP
#define EPICONJ_LINEAR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epiconj/errors.hpp"
#include "epiconj/semigroup.hpp"

namespace epiconj::linear {

enum class Family { PAut, End, PEnd };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

bool is_prime(std::uint32_t p);

/// Dense matrix over the prime field Z_p, entries reduced mod p.
class Mat {
 public:
  Mat(std::uint32_t p, std::size_t rows, std::size_t cols);
  static Mat identity(std::uint32_t p, std::size_t n);
  /// Rows separated by ';', entries by ',': `1,0;1,1`.
  static Mat parse(std::uint32_t p, std::string_view notation);

  std::uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v) {
    data_[r * cols_ + c] = static_cast<std::uint8_t>(v % p_);
  }

  Mat operator*(const Mat& rhs) const;
  bool operator==(const Mat&) const = default;

  std::string encode() const;
  std::string to_notation() const;

  std::span<const std::uint8_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

 private:
  std::uint32_t p_;
  std::size_t rows_, cols_;
  std::vector<std::uint8_t> data_;
};

/// Reduced row echelon form with zero rows dropped.
Mat rref(const Mat& m);
std::size_t rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

/// Subspace of Z_p^n in canonical form: the unique RREF basis.
class Subspace {
 public:
  /// The zero subspace.
  Subspace(std::uint32_t p, std::size_t ambient);
  /// Canonicalizes the row space of the given vectors.
  static Subspace row_space(const Mat& vectors);

  std::uint32_t modulus() const { return p_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }

  bool contains(std::span<const std::uint8_t> vec) const;

  static Subspace sum(const Subspace& a, const Subspace& b);
  static Subspace intersect(const Subspace& a, const Subspace& b);

  bool operator==(const Subspace&) const = default;

 private:
  std::uint32_t p_;
  std::size_t n_;
  Mat basis_;
};

std::vector<Subspace> all_subspaces(std::size_t n, std::uint32_t p);

/// A linear map from a subspace of Z_p^n into Z_p^n, held canonically as the
/// RREF basis of its graph inside Z_p^{2n} (all pivots in the first n
/// columns, which is exactly single-valuedness). Composition acts left to
/// right: (f * g)(x) = g(f(x)).
class PartialLinearMap {
 public:
  /// The map defined only on the zero vector.
  static PartialLinearMap zero_map(std::uint32_t p, std::size_t n);
  static PartialLinearMap identity(std::uint32_t p, std::size_t n);
  /// Total map given by a square matrix (row-vector convention: x -> x M).
  static PartialLinearMap from_matrix(const Mat& m);
  /// Map sending the i-th basis row of dom to the i-th row of action.
  static PartialLinearMap from_dom_action(const Subspace& dom, const Mat& action);
  /// CLI text form `dom=<rref>;act=<matrix>` or a bare matrix for total maps.
  static PartialLinearMap parse(std::uint32_t p, std::size_t n, std::string_view notation);

  std::uint32_t modulus() const { return p_; }
  std::size_t ambient() const { return n_; }

  Subspace domain() const;
  Subspace range() const;
  Subspace kernel() const;
  std::size_t domain_dim() const { return graph_.rows(); }
  bool injective() const;

  std::optional<std::vector<std::uint8_t>> apply(std::span<const std::uint8_t> vec) const;

  friend PartialLinearMap operator*(const PartialLinearMap& f, const PartialLinearMap& g);
  bool operator==(const PartialLinearMap&) const = default;

  std::string encode() const;
  std::string to_notation() const;

  const Mat& graph() const { return graph_; }

 private:
  PartialLinearMap(std::uint32_t p, std::size_t n, Mat graph);

  std::uint32_t p_;
  std::size_t n_;
  Mat graph_;  // k x 2n, RREF, pivots in the left half
};

/// Least t with dom f^t = dom f^{t+1} (then all later domains agree), and
/// that stable domain. t <= ambient dimension + 1.
std::pair<std::size_t, Subspace> stabilization(const PartialLinearMap& f);

/// f * e_f computed directly from the map: walk the powers of f to the
/// unique idempotent of the cyclic subsemigroup and multiply once. For
/// injective f this equals the restriction of f to its stable domain.
PartialLinearMap regular_part_linear(const PartialLinearMap& f);

/// Table-free group-element test: dom = ran for partial automorphisms,
/// dom = ran (+) ker for endomorphism families.
bool is_group_element_linear(const PartialLinearMap& f, Family fam);

std::uint64_t gl_order(std::size_t n, std::uint32_t p);

/// All invertible n x n matrices, in lexicographic byte order. Throws
/// GroupTooLarge when the group order exceeds the cap.
std::vector<Mat> enumerate_gl(std::size_t n, std::uint32_t p, std::uint64_t cap = 1000000);

/// u^{-1} f u with the domain transported through u.
PartialLinearMap conjugate_by_unit(const PartialLinearMap& f, const Mat& u);

/// First conjugator in GL enumeration order, if any.
std::optional<Mat> gl_conjugator(const PartialLinearMap& f, const PartialLinearMap& g,
                                 std::uint64_t cap = 1000000);
bool gl_conjugate(const PartialLinearMap& f, const PartialLinearMap& g,
                  std::uint64_t cap = 1000000);

/// Restriction of a group element to its range (an automorphism of ran f).
PartialLinearMap restrict_to_range(const PartialLinearMap& f);

/// Conjugacy criterion for injective partial maps: GL-conjugacy of the
/// regular parts. Throws NotInjective.
bool conjugate_paut(const PartialLinearMap& f, const PartialLinearMap& g,
                    std::uint64_t cap = 1000000);

/// Conjugacy criterion for End / PEnd: GL-conjugacy of the range
/// restrictions of the regular parts.
bool conjugate_end(const PartialLinearMap& f, const PartialLinearMap& g, Family fam,
                   std::uint64_t cap = 1000000);

EnumeratedSemigroup<PartialLinearMap> enumerate_linear(Family f, std::size_t n, std::uint32_t p,
                                                       BuildOptions opts = {});

}  // namespace epiconj::linear

#endif  // EPICONJ_LINEAR_HPP
