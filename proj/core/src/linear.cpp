#include "epiconj/linear.hpp"

#include <algorithm>
#include <unordered_map>

namespace epiconj::linear {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::PAut:
      return "PAut";
    case Family::End:
      return "End";
    case Family::PEnd:
      return "PEnd";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "PAut") return Family::PAut;
  if (name == "End") return Family::End;
  if (name == "PEnd") return Family::PEnd;
  return std::nullopt;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) {
    return false;
  }
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and a != 0 mod p
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) {
      result = result * base % p;
    }
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Mat::Mat(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!is_prime(p)) {
    throw Error("field modulus must be prime, got " + std::to_string(p));
  }
  if (p > 251) {
    throw Error("field modulus must fit a byte");
  }
}

Mat Mat::identity(std::uint32_t p, std::size_t n) {
  Mat m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, 1);
  }
  return m;
}

Mat Mat::parse(std::uint32_t p, std::string_view notation) {
  std::vector<std::vector<std::uint8_t>> rows;
  std::size_t pos = 0;
  while (pos <= notation.size()) {
    const std::size_t semi = notation.find(';', pos);
    std::string_view row_text = notation.substr(
        pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
    std::vector<std::uint8_t> row;
    std::size_t rp = 0;
    while (rp <= row_text.size()) {
      const std::size_t comma = row_text.find(',', rp);
      std::string_view tok = row_text.substr(
          rp, comma == std::string_view::npos ? std::string_view::npos : comma - rp);
      if (tok.empty()) {
        throw Error("empty matrix entry");
      }
      std::uint32_t v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') {
          throw Error("matrix entries must be decimal numbers");
        }
        v = v * 10 + static_cast<std::uint32_t>(c - '0');
      }
      row.push_back(static_cast<std::uint8_t>(v % p));
      if (comma == std::string_view::npos) {
        break;
      }
      rp = comma + 1;
    }
    if (!rows.empty() && rows.front().size() != row.size()) {
      throw Error("ragged matrix rows");
    }
    rows.push_back(std::move(row));
    if (semi == std::string_view::npos) {
      break;
    }
    pos = semi + 1;
  }
  Mat m(p, rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m.set(r, c, rows[r][c]);
    }
  }
  return m;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) {
    throw Error("matrix shape mismatch in multiplication");
  }
  Mat out(p_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = at(i, k);
      if (a == 0) {
        continue;
      }
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.set(i, j, out.at(i, j) + a * rhs.at(k, j));
      }
    }
  }
  return out;
}

std::string Mat::encode() const {
  std::string out;
  out.reserve(3 + data_.size());
  out.push_back(static_cast<char>(p_));
  out.push_back(static_cast<char>(rows_));
  out.push_back(static_cast<char>(cols_));
  out.append(reinterpret_cast<const char*>(data_.data()), data_.size());
  return out;
}

std::string Mat::to_notation() const {
  if (rows_ == 0) {
    return "0";
  }
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) {
      out += ';';
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) {
        out += ',';
      }
      out += std::to_string(static_cast<int>(at(r, c)));
    }
  }
  return out;
}

Mat rref(const Mat& m) {
  const std::uint32_t p = m.modulus();
  std::vector<std::vector<std::uint32_t>> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    a[r].assign(m.row(r).begin(), m.row(r).end());
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < a.size(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < a.size() && a[sel][c] == 0) {
      ++sel;
    }
    if (sel == a.size()) {
      continue;
    }
    std::swap(a[pivot_row], a[sel]);
    const std::uint32_t inv = mod_inverse(a[pivot_row][c], p);
    for (auto& v : a[pivot_row]) {
      v = v * inv % p;
    }
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r != pivot_row && a[r][c] != 0) {
        const std::uint32_t factor = a[r][c];
        for (std::size_t j = 0; j < m.cols(); ++j) {
          a[r][j] = (a[r][j] + (p - factor) * a[pivot_row][j]) % p;
        }
      }
    }
    ++pivot_row;
  }
  Mat out(p, pivot_row, m.cols());
  for (std::size_t r = 0; r < pivot_row; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.set(r, c, a[r][c]);
    }
  }
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rows(); }

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) {
    return std::nullopt;
  }
  const std::size_t n = m.rows();
  Mat aug(m.modulus(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      aug.set(r, c, m.at(r, c));
    }
    aug.set(r, n + r, 1);
  }
  const Mat reduced = rref(aug);
  if (reduced.rows() < n) {
    return std::nullopt;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (reduced.at(r, c) != (r == c ? 1 : 0)) {
        return std::nullopt;  // left block did not reduce to the identity
      }
    }
  }
  Mat inv(m.modulus(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      inv.set(r, c, reduced.at(r, n + c));
    }
  }
  return inv;
}

namespace {

// Rows spanning the solution set of A x^T = 0 (each row of A one equation).
Mat null_space(const Mat& a) {
  const Mat r = rref(a);
  const std::size_t n = a.cols();
  std::vector<std::size_t> pivot_col_of_row(r.rows());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (c < n && r.at(i, c) == 0) {
      ++c;
    }
    pivot_col_of_row[i] = c;
    is_pivot[c] = true;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) {
      free_cols.push_back(c);
    }
  }
  Mat out(a.modulus(), free_cols.size(), n);
  const std::uint32_t p = a.modulus();
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    out.set(k, fc, 1);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      out.set(k, pivot_col_of_row[i], (p - r.at(i, fc)) % p);
    }
  }
  return out;
}

Mat transpose(const Mat& m) {
  Mat out(m.modulus(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.set(c, r, m.at(r, c));
    }
  }
  return out;
}

// Rows v with v M = 0.
Mat left_null_space(const Mat& m) { return null_space(transpose(m)); }

}  // namespace

Subspace::Subspace(std::uint32_t p, std::size_t ambient)
    : p_(p), n_(ambient), basis_(p, 0, ambient) {}

Subspace Subspace::row_space(const Mat& vectors) {
  Subspace s(vectors.modulus(), vectors.cols());
  s.basis_ = rref(vectors);
  return s;
}

bool Subspace::contains(std::span<const std::uint8_t> vec) const {
  // reduce vec against the RREF basis
  std::vector<std::uint32_t> v(vec.begin(), vec.end());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t c = 0;
    while (c < n_ && basis_.at(r, c) == 0) {
      ++c;
    }
    if (c == n_) {
      continue;
    }
    const std::uint32_t factor = v[c] % p_;
    if (factor != 0) {
      for (std::size_t j = 0; j < n_; ++j) {
        v[j] = (v[j] + (p_ - factor) * basis_.at(r, j)) % p_;
      }
    }
  }
  return std::all_of(v.begin(), v.end(), [this](std::uint32_t x) { return x % p_ == 0; });
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  if (a.p_ != b.p_ || a.n_ != b.n_) {
    throw AmbientMismatch("subspace sum across different ambient spaces");
  }
  Mat stacked(a.p_, a.dim() + b.dim(), a.n_);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.n_; ++c) {
      stacked.set(r, c, a.basis_.at(r, c));
    }
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    for (std::size_t c = 0; c < a.n_; ++c) {
      stacked.set(a.dim() + r, c, b.basis_.at(r, c));
    }
  }
  return row_space(stacked);
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  if (a.p_ != b.p_ || a.n_ != b.n_) {
    throw AmbientMismatch("subspace intersection across different ambient spaces");
  }
  // (c, d) with c A = d B give the common vectors c A
  Mat stacked(a.p_, a.dim() + b.dim(), a.n_);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.n_; ++c) {
      stacked.set(r, c, a.basis_.at(r, c));
    }
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    for (std::size_t c = 0; c < a.n_; ++c) {
      stacked.set(a.dim() + r, c, b.basis_.at(r, c));
    }
  }
  const Mat solutions = left_null_space(stacked);
  Mat vectors(a.p_, solutions.rows(), a.n_);
  for (std::size_t k = 0; k < solutions.rows(); ++k) {
    for (std::size_t c = 0; c < a.n_; ++c) {
      std::uint32_t acc = 0;
      for (std::size_t r = 0; r < a.dim(); ++r) {
        acc += solutions.at(k, r) * a.basis_.at(r, c);
      }
      vectors.set(k, c, acc);
    }
  }
  return row_space(vectors);
}

std::vector<Subspace> all_subspaces(std::size_t n, std::uint32_t p) {
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= n; ++k) {
    // enumerate RREF matrices: pick pivot columns, fill the free entries
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) {
      pivots[i] = i;
    }
    const auto emit_for_pivots = [&](const std::vector<std::size_t>& piv) {
      std::vector<bool> is_pivot(n, false);
      for (std::size_t c : piv) {
        is_pivot[c] = true;
      }
      std::vector<std::pair<std::size_t, std::size_t>> free_cells;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = piv[i] + 1; c < n; ++c) {
          if (!is_pivot[c]) {
            free_cells.emplace_back(i, c);
          }
        }
      }
      std::vector<std::uint8_t> values(free_cells.size(), 0);
      for (;;) {
        Mat basis(p, k, n);
        for (std::size_t i = 0; i < k; ++i) {
          basis.set(i, piv[i], 1);
        }
        for (std::size_t t = 0; t < free_cells.size(); ++t) {
          basis.set(free_cells[t].first, free_cells[t].second, values[t]);
        }
        out.push_back(Subspace::row_space(basis));
        std::size_t pos = free_cells.size();
        while (pos > 0 && values[pos - 1] == p - 1) {
          values[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) {
          break;
        }
        ++values[pos - 1];
      }
    };
    if (k == 0) {
      out.emplace_back(p, n);
      continue;
    }
    // iterate k-combinations of columns in lexicographic order
    for (;;) {
      emit_for_pivots(pivots);
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == n - k + i - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        pivots[j] = pivots[j - 1] + 1;
      }
    }
  }
  return out;
}

PartialLinearMap::PartialLinearMap(std::uint32_t p, std::size_t n, Mat graph)
    : p_(p), n_(n), graph_(rref(graph)) {
  if (graph_.cols() != 2 * n) {
    throw Error("graph matrix must have 2n columns");
  }
  for (std::size_t r = 0; r < graph_.rows(); ++r) {
    std::size_t c = 0;
    while (c < 2 * n && graph_.at(r, c) == 0) {
      ++c;
    }
    if (c >= n) {
      throw Error("relation is not single-valued");
    }
  }
}

PartialLinearMap PartialLinearMap::zero_map(std::uint32_t p, std::size_t n) {
  return PartialLinearMap(p, n, Mat(p, 0, 2 * n));
}

PartialLinearMap PartialLinearMap::identity(std::uint32_t p, std::size_t n) {
  Mat g(p, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g.set(i, i, 1);
    g.set(i, n + i, 1);
  }
  return PartialLinearMap(p, n, std::move(g));
}

PartialLinearMap PartialLinearMap::from_matrix(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw Error("total map requires a square matrix");
  }
  const std::size_t n = m.rows();
  Mat g(m.modulus(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g.set(i, i, 1);
    for (std::size_t c = 0; c < n; ++c) {
      g.set(i, n + c, m.at(i, c));
    }
  }
  return PartialLinearMap(m.modulus(), n, std::move(g));
}

PartialLinearMap PartialLinearMap::from_dom_action(const Subspace& dom, const Mat& action) {
  if (action.rows() != dom.dim() || action.cols() != dom.ambient()) {
    throw Error("action matrix shape does not match the domain basis");
  }
  const std::size_t n = dom.ambient();
  Mat g(dom.modulus(), dom.dim(), 2 * n);
  for (std::size_t r = 0; r < dom.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      g.set(r, c, dom.basis().at(r, c));
      g.set(r, n + c, action.at(r, c));
    }
  }
  return PartialLinearMap(dom.modulus(), n, std::move(g));
}

Subspace PartialLinearMap::domain() const {
  Mat left(p_, graph_.rows(), n_);
  for (std::size_t r = 0; r < graph_.rows(); ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      left.set(r, c, graph_.at(r, c));
    }
  }
  return Subspace::row_space(left);
}

Subspace PartialLinearMap::range() const {
  Mat right(p_, graph_.rows(), n_);
  for (std::size_t r = 0; r < graph_.rows(); ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      right.set(r, c, graph_.at(r, n_ + c));
    }
  }
  return Subspace::row_space(right);
}

Subspace PartialLinearMap::kernel() const {
  Mat right(p_, graph_.rows(), n_);
  for (std::size_t r = 0; r < graph_.rows(); ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      right.set(r, c, graph_.at(r, n_ + c));
    }
  }
  const Mat coeffs = left_null_space(right);  // c with c * actions = 0
  Mat vectors(p_, coeffs.rows(), n_);
  for (std::size_t k = 0; k < coeffs.rows(); ++k) {
    for (std::size_t c = 0; c < n_; ++c) {
      std::uint32_t acc = 0;
      for (std::size_t r = 0; r < graph_.rows(); ++r) {
        acc += coeffs.at(k, r) * graph_.at(r, c);
      }
      vectors.set(k, c, acc);
    }
  }
  return Subspace::row_space(vectors);
}

bool PartialLinearMap::injective() const { return kernel().dim() == 0; }

std::optional<std::vector<std::uint8_t>> PartialLinearMap::apply(
    std::span<const std::uint8_t> vec) const {
  if (vec.size() != n_) {
    throw AmbientMismatch("vector length does not match the ambient dimension");
  }
  // pivot columns of the left half give the coefficients directly
  std::vector<std::uint32_t> coeff(graph_.rows());
  for (std::size_t r = 0; r < graph_.rows(); ++r) {
    std::size_t c = 0;
    while (graph_.at(r, c) == 0) {
      ++c;
    }
    coeff[r] = vec[c] % p_;
  }
  std::vector<std::uint8_t> image(n_, 0);
  for (std::size_t c = 0; c < n_; ++c) {
    std::uint32_t dom_acc = 0, ran_acc = 0;
    for (std::size_t r = 0; r < graph_.rows(); ++r) {
      dom_acc += coeff[r] * graph_.at(r, c);
      ran_acc += coeff[r] * graph_.at(r, n_ + c);
    }
    if (dom_acc % p_ != vec[c] % p_) {
      return std::nullopt;  // vec is outside the domain
    }
    image[c] = static_cast<std::uint8_t>(ran_acc % p_);
  }
  return image;
}

PartialLinearMap operator*(const PartialLinearMap& f, const PartialLinearMap& g) {
  if (f.p_ != g.p_ || f.n_ != g.n_) {
    throw AmbientMismatch("cannot compose maps over different ambient spaces");
  }
  const std::size_t n = f.n_;
  const std::uint32_t p = f.p_;
  const std::size_t kf = f.graph_.rows();
  const std::size_t kg = g.graph_.rows();

  // solutions (c, d) of c * ran_f + d * dom_g = 0 parameterize pairs with
  // f(x) = -d * dom_g inside dom g
  Mat stacked(p, kf + kg, n);
  for (std::size_t r = 0; r < kf; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      stacked.set(r, c, f.graph_.at(r, n + c));
    }
  }
  for (std::size_t r = 0; r < kg; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      stacked.set(kf + r, c, g.graph_.at(r, c));
    }
  }
  const Mat solutions = left_null_space(stacked);

  Mat pairs(p, solutions.rows(), 2 * n);
  for (std::size_t s = 0; s < solutions.rows(); ++s) {
    for (std::size_t c = 0; c < n; ++c) {
      std::uint32_t x = 0, z = 0;
      for (std::size_t r = 0; r < kf; ++r) {
        x += solutions.at(s, r) * f.graph_.at(r, c);
      }
      for (std::size_t r = 0; r < kg; ++r) {
        z += (p - solutions.at(s, kf + r)) % p * g.graph_.at(r, n + c);
      }
      pairs.set(s, c, x);
      pairs.set(s, n + c, z);
    }
  }
  return PartialLinearMap(p, n, std::move(pairs));
}

std::string PartialLinearMap::encode() const {
  std::string out;
  out.reserve(3 + graph_.rows() * 2 * n_);
  out.push_back(static_cast<char>(p_));
  out.push_back(static_cast<char>(n_));
  out.push_back(static_cast<char>(graph_.rows()));
  for (std::size_t r = 0; r < graph_.rows(); ++r) {
    for (std::size_t c = 0; c < 2 * n_; ++c) {
      out.push_back(static_cast<char>(graph_.at(r, c)));
    }
  }
  return out;
}

std::string PartialLinearMap::to_notation() const {
  if (graph_.rows() == 0) {
    return "dom=0;act=0";
  }
  Mat dom(p_, graph_.rows(), n_), act(p_, graph_.rows(), n_);
  for (std::size_t r = 0; r < graph_.rows(); ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      dom.set(r, c, graph_.at(r, c));
      act.set(r, c, graph_.at(r, n_ + c));
    }
  }
  return "dom=" + dom.to_notation() + ";act=" + act.to_notation();
}

PartialLinearMap PartialLinearMap::parse(std::uint32_t p, std::size_t n,
                                         std::string_view notation) {
  if (notation.rfind("dom=", 0) != 0) {
    return from_matrix(Mat::parse(p, notation));  // bare matrix: a total map
  }
  const std::size_t sep = notation.find(";act=");
  if (sep == std::string_view::npos) {
    throw Error("expected `dom=<rref>;act=<matrix>`");
  }
  const std::string_view dom_text = notation.substr(4, sep - 4);
  const std::string_view act_text = notation.substr(sep + 5);
  if (dom_text == "0") {
    return zero_map(p, n);
  }
  const Mat dom_rows = Mat::parse(p, dom_text);
  const Mat act_rows = Mat::parse(p, act_text);
  if (dom_rows.cols() != n || act_rows.cols() != n) {
    throw AmbientMismatch("matrix width does not match the ambient dimension");
  }
  const Subspace dom = Subspace::row_space(dom_rows);
  if (dom.dim() != dom_rows.rows() || !(dom.basis() == dom_rows)) {
    throw Error("domain basis must be in reduced row echelon form");
  }
  return from_dom_action(dom, act_rows);
}

std::pair<std::size_t, Subspace> stabilization(const PartialLinearMap& f) {
  PartialLinearMap power = f;
  Subspace dom = power.domain();
  for (std::size_t t = 1; t <= f.ambient() + 2; ++t) {
    const PartialLinearMap next = power * f;
    const Subspace next_dom = next.domain();
    if (next_dom == dom) {
      return {t, dom};
    }
    power = next;
    dom = next_dom;
  }
  throw Error("domain chain failed to stabilize");  // unreachable
}

PartialLinearMap regular_part_linear(const PartialLinearMap& f) {
  // walk the cyclic subsemigroup <f> to its cycle and find the idempotent
  std::vector<PartialLinearMap> powers{f};
  std::unordered_map<std::string, std::size_t> seen{{f.encode(), 0}};
  for (;;) {
    PartialLinearMap next = powers.back() * f;
    const std::string key = next.encode();
    auto it = seen.find(key);
    if (it != seen.end()) {
      for (std::size_t j = it->second; j < powers.size(); ++j) {
        if (powers[j] * powers[j] == powers[j]) {
          return f * powers[j];
        }
      }
      throw Error("cyclic subsemigroup without idempotent");  // unreachable
    }
    seen.emplace(key, powers.size());
    powers.push_back(std::move(next));
  }
}

bool is_group_element_linear(const PartialLinearMap& f, Family fam) {
  if (fam == Family::PAut) {
    return f.domain() == f.range();
  }
  const Subspace dom = f.domain();
  const Subspace ran = f.range();
  const Subspace ker = f.kernel();
  return Subspace::intersect(ran, ker).dim() == 0 && Subspace::sum(ran, ker) == dom;
}

std::uint64_t gl_order(std::size_t n, std::uint32_t p) {
  std::uint64_t order = 1;
  std::uint64_t pn = 1;
  for (std::size_t i = 0; i < n; ++i) {
    pn *= p;
  }
  std::uint64_t pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= p;
  }
  return order;
}

std::vector<Mat> enumerate_gl(std::size_t n, std::uint32_t p, std::uint64_t cap) {
  if (gl_order(n, p) > cap) {
    throw GroupTooLarge("|GL(" + std::to_string(n) + "," + std::to_string(p) +
                        ")| = " + std::to_string(gl_order(n, p)) + " exceeds cap " +
                        std::to_string(cap));
  }
  std::vector<Mat> out;
  Mat m(p, n, n);
  std::vector<std::uint8_t> entries(n * n, 0);
  for (;;) {
    for (std::size_t i = 0; i < n * n; ++i) {
      m.set(i / n, i % n, entries[i]);
    }
    if (rank(m) == n) {
      out.push_back(m);
    }
    std::size_t pos = n * n;
    while (pos > 0 && entries[pos - 1] == p - 1) {
      entries[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) {
      break;
    }
    ++entries[pos - 1];
  }
  return out;
}

PartialLinearMap conjugate_by_unit(const PartialLinearMap& f, const Mat& u) {
  auto u_inv = inverse(u);
  if (!u_inv) {
    throw Error("conjugator is not invertible");
  }
  return PartialLinearMap::from_matrix(*u_inv) * f * PartialLinearMap::from_matrix(u);
}

std::optional<Mat> gl_conjugator(const PartialLinearMap& f, const PartialLinearMap& g,
                                 std::uint64_t cap) {
  if (f.modulus() != g.modulus() || f.ambient() != g.ambient()) {
    throw AmbientMismatch("conjugacy across different ambient spaces");
  }
  if (f.domain_dim() != g.domain_dim()) {
    return std::nullopt;  // conjugation preserves the domain dimension
  }
  for (const Mat& u : enumerate_gl(f.ambient(), f.modulus(), cap)) {
    if (conjugate_by_unit(f, u) == g) {
      return u;
    }
  }
  return std::nullopt;
}

bool gl_conjugate(const PartialLinearMap& f, const PartialLinearMap& g, std::uint64_t cap) {
  return gl_conjugator(f, g, cap).has_value();
}

PartialLinearMap restrict_to_range(const PartialLinearMap& f) {
  const Subspace ran = f.range();
  Mat action(f.modulus(), ran.dim(), f.ambient());
  for (std::size_t r = 0; r < ran.dim(); ++r) {
    const auto image = f.apply(ran.basis().row(r));
    if (!image) {
      throw NotGroupElement("range is not contained in the domain");
    }
    for (std::size_t c = 0; c < f.ambient(); ++c) {
      action.set(r, c, (*image)[c]);
    }
  }
  return PartialLinearMap::from_dom_action(ran, action);
}

bool conjugate_paut(const PartialLinearMap& f, const PartialLinearMap& g, std::uint64_t cap) {
  if (!f.injective() || !g.injective()) {
    throw NotInjective("the criterion applies to injective partial maps");
  }
  return gl_conjugate(regular_part_linear(f), regular_part_linear(g), cap);
}

bool conjugate_end(const PartialLinearMap& f, const PartialLinearMap& g, Family fam,
                   std::uint64_t cap) {
  (void)fam;
  return gl_conjugate(restrict_to_range(regular_part_linear(f)),
                      restrict_to_range(regular_part_linear(g)), cap);
}

EnumeratedSemigroup<PartialLinearMap> enumerate_linear(Family f, std::size_t n, std::uint32_t p,
                                                       BuildOptions opts) {
  if (n == 0 || n > 6) {
    throw Error("linear family enumeration supports ambient dimension 1..6");
  }
  std::vector<PartialLinearMap> all;
  const auto push = [&](PartialLinearMap m) {
    if (all.size() >= opts.max_elements) {
      throw ClosureCapExceeded("family size exceeds cap of " + std::to_string(opts.max_elements));
    }
    all.push_back(std::move(m));
  };
  for (const Subspace& dom : all_subspaces(n, p)) {
    if (f == Family::End && dom.dim() != n) {
      continue;
    }
    const std::size_t k = dom.dim();
    if (k == 0) {
      push(PartialLinearMap::zero_map(p, n));
      continue;
    }
    std::vector<std::uint8_t> entries(k * n, 0);
    for (;;) {
      Mat action(p, k, n);
      for (std::size_t i = 0; i < k * n; ++i) {
        action.set(i / n, i % n, entries[i]);
      }
      if (f != Family::PAut || rank(action) == k) {
        push(PartialLinearMap::from_dom_action(dom, action));
      }
      std::size_t pos = k * n;
      while (pos > 0 && entries[pos - 1] == p - 1) {
        entries[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) {
        break;
      }
      ++entries[pos - 1];
    }
  }
  return build_semigroup(
      all, [](const PartialLinearMap& a, const PartialLinearMap& b) { return a * b; },
      [](const PartialLinearMap& a) { return a.encode(); }, opts);
}

}  // namespace epiconj::linear
