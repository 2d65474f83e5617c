#include "epiconj/transform.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "epiconj/detail/union_find.hpp"

namespace epiconj::transform {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::IS:
      return "IS";
    case Family::T:
      return "T";
    case Family::PT:
      return "PT";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "IS") return Family::IS;
  if (name == "T") return Family::T;
  if (name == "PT") return Family::PT;
  return std::nullopt;
}

PartialTransformation::PartialTransformation(std::size_t n) : image_(n, 0) {
  if (n == 0 || n > 255) {
    throw Error("ground set size must be in 1..255");
  }
}

PartialTransformation::PartialTransformation(std::size_t n, std::vector<std::uint8_t> image)
    : image_(std::move(image)) {
  if (n == 0 || n > 255 || image_.size() != n) {
    throw Error("image array does not match the ground set size");
  }
  for (std::uint8_t v : image_) {
    if (v > n) {
      throw Error("image value out of range");
    }
  }
}

PartialTransformation PartialTransformation::identity(std::size_t n) {
  std::vector<std::uint8_t> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    img[i] = static_cast<std::uint8_t>(i + 1);
  }
  return PartialTransformation(n, std::move(img));
}

PartialTransformation PartialTransformation::parse(std::string_view notation) {
  std::string_view s = notation;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw Error("expected a bracketed image list like [2,0,1]");
  }
  s.remove_prefix(1);
  s.remove_suffix(1);
  std::vector<std::uint8_t> img;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - pos);
    if (tok.empty()) {
      throw Error("empty entry in image list");
    }
    std::size_t value = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') {
        throw Error("image entries must be decimal numbers");
      }
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    if (value > 255) {
      throw Error("image value out of range");
    }
    img.push_back(static_cast<std::uint8_t>(value));
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  const std::size_t n = img.size();
  return PartialTransformation(n, std::move(img));
}

bool PartialTransformation::injective() const {
  std::vector<bool> hit(degree() + 1, false);
  for (std::uint8_t v : image_) {
    if (v != 0) {
      if (hit[v]) {
        return false;
      }
      hit[v] = true;
    }
  }
  return true;
}

bool PartialTransformation::total() const {
  return std::find(image_.begin(), image_.end(), 0) == image_.end();
}

std::size_t PartialTransformation::rank() const {
  std::set<std::uint8_t> ran(image_.begin(), image_.end());
  ran.erase(0);
  return ran.size();
}

bool PartialTransformation::in_family(Family f) const {
  switch (f) {
    case Family::IS:
      return injective();
    case Family::T:
      return total();
    case Family::PT:
      return true;
  }
  return false;
}

std::string PartialTransformation::encode() const {
  std::string out;
  out.reserve(degree() + 1);
  out.push_back(static_cast<char>(degree()));
  out.append(reinterpret_cast<const char*>(image_.data()), image_.size());
  return out;
}

std::string PartialTransformation::to_notation() const {
  std::string out = "[";
  for (std::size_t i = 0; i < degree(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(static_cast<int>(image_[i]));
  }
  out += ']';
  return out;
}

PartialTransformation operator*(const PartialTransformation& p, const PartialTransformation& q) {
  if (p.degree() != q.degree()) {
    throw SizeMismatch("cannot compose maps on ground sets of different size");
  }
  std::vector<std::uint8_t> img(p.degree(), 0);
  for (std::size_t x = 1; x <= p.degree(); ++x) {
    const std::uint8_t mid = p.image(x);
    if (mid != 0) {
      img[x - 1] = q.image(mid);
    }
  }
  return PartialTransformation(p.degree(), std::move(img));
}

namespace {

// x is on a cycle iff iterating p from x returns to x.
std::vector<std::size_t> cycle_length_at(const PartialTransformation& p) {
  const std::size_t n = p.degree();
  std::vector<std::size_t> len(n + 1, 0);
  for (std::size_t x = 1; x <= n; ++x) {
    std::size_t cur = x;
    for (std::size_t steps = 1; steps <= n; ++steps) {
      const std::uint8_t next = p.image(cur);
      if (next == 0) {
        break;
      }
      cur = next;
      if (cur == x) {
        len[x] = steps;
        break;
      }
    }
  }
  return len;
}

}  // namespace

ActionGraph action_graph(const PartialTransformation& p) {
  const std::size_t n = p.degree();
  ActionGraph g;

  const std::vector<std::size_t> on_cycle = cycle_length_at(p);

  // weakly connected components of the functional graph
  detail::UnionFind uf(n + 1);
  for (std::size_t x = 1; x <= n; ++x) {
    if (p.defined(x)) {
      uf.unite(x, p.image(x));
    }
  }
  std::map<std::size_t, ActionGraph::Component> comps;
  for (std::size_t x = 1; x <= n; ++x) {
    comps[uf.find(x)].vertices.push_back(x);
  }

  std::vector<bool> counted(n + 1, false);
  for (auto& [root, comp] : comps) {
    for (std::size_t v : comp.vertices) {
      if (on_cycle[v] != 0 && !counted[v]) {
        comp.cycle_length = on_cycle[v];
        g.cycles.push_back(on_cycle[v]);
        // mark the whole cycle so a component contributes it once
        std::size_t cur = v;
        do {
          counted[cur] = true;
          cur = p.image(cur);
        } while (cur != v);
      }
    }
  }
  std::sort(g.cycles.begin(), g.cycles.end());

  if (p.injective()) {
    std::vector<std::size_t> chains;
    for (const auto& [root, comp] : comps) {
      if (comp.cycle_length == 0) {
        chains.push_back(comp.vertices.size());
      }
    }
    std::sort(chains.begin(), chains.end());
    g.chains = std::move(chains);
  }

  g.components.reserve(comps.size());
  for (auto& [root, comp] : comps) {
    g.components.push_back(std::move(comp));
  }
  return g;
}

std::vector<std::size_t> cyclic_type(const PartialTransformation& p) {
  return action_graph(p).cycles;
}

bool is_group_element_direct(const PartialTransformation& p, Family f) {
  if (f == Family::IS) {
    const ActionGraph g = action_graph(p);
    for (std::size_t len : *g.chains) {
      if (len != 1) {
        return false;
      }
    }
    return true;
  }
  // T / PT: the range must pick exactly one point from every kernel block,
  // and lie inside the domain
  const std::size_t n = p.degree();
  std::vector<bool> in_ran(n + 1, false);
  for (std::size_t x = 1; x <= n; ++x) {
    if (p.defined(x)) {
      in_ran[p.image(x)] = true;
    }
  }
  for (std::size_t y = 1; y <= n; ++y) {
    if (in_ran[y] && !p.defined(y)) {
      return false;  // range point outside the domain
    }
  }
  // kernel blocks are the fibres p^{-1}(v); count range points per block
  std::vector<std::size_t> ran_hits(n + 1, 0);
  for (std::size_t x = 1; x <= n; ++x) {
    if (p.defined(x) && in_ran[x]) {
      ++ran_hits[p.image(x)];
    }
  }
  for (std::size_t v = 1; v <= n; ++v) {
    bool block_nonempty = false;
    for (std::size_t x = 1; x <= n; ++x) {
      if (p.defined(x) && p.image(x) == v) {
        block_nonempty = true;
        break;
      }
    }
    if (block_nonempty && ran_hits[v] != 1) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> stable_range(const PartialTransformation& p) {
  const std::size_t n = p.degree();
  std::vector<bool> cur(n + 1, false);
  for (std::size_t x = 1; x <= n; ++x) {
    if (p.defined(x)) {
      cur[p.image(x)] = true;
    }
  }
  for (;;) {
    std::vector<bool> next(n + 1, false);
    for (std::size_t x = 1; x <= n; ++x) {
      if (cur[x] && p.defined(x)) {
        next[p.image(x)] = true;
      }
    }
    if (next == cur) {
      break;
    }
    cur = std::move(next);
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 1; x <= n; ++x) {
    if (cur[x]) {
      out.push_back(x);
    }
  }
  return out;
}

PartialTransformation restrict_to_range(const PartialTransformation& p, Family f) {
  if (!is_group_element_direct(p, f)) {
    throw NotGroupElement("restriction to the range requires a group element");
  }
  const std::size_t n = p.degree();
  std::vector<bool> in_ran(n + 1, false);
  for (std::size_t x = 1; x <= n; ++x) {
    if (p.defined(x)) {
      in_ran[p.image(x)] = true;
    }
  }
  std::vector<std::uint8_t> img(n, 0);
  for (std::size_t x = 1; x <= n; ++x) {
    if (in_ran[x]) {
      img[x - 1] = p.image(x);
    }
  }
  return PartialTransformation(n, std::move(img));
}

bool conjugate_by_type(const PartialTransformation& p, const PartialTransformation& q,
                       Family f) {
  (void)f;
  return cyclic_type(p) == cyclic_type(q);
}

bool g_conjugate_by_type(const PartialTransformation& p, const PartialTransformation& q) {
  if (!p.injective() || !q.injective()) {
    throw NotInjective("the cyclic/chain type criterion applies to partial permutations");
  }
  const ActionGraph gp = action_graph(p);
  const ActionGraph gq = action_graph(q);
  return gp.cycles == gq.cycles && *gp.chains == *gq.chains;
}

RegularPartTypes regular_part_types(const PartialTransformation& p) {
  RegularPartTypes out;
  out.cycles = cyclic_type(p);
  if (p.injective()) {
    std::size_t on_cycles = 0;
    for (std::size_t len : out.cycles) {
      on_cycles += len;
    }
    out.chains = std::vector<std::size_t>(p.degree() - on_cycles, 1);
  }
  return out;
}

EnumeratedSemigroup<PartialTransformation> enumerate(Family f, std::size_t n,
                                                     BuildOptions opts) {
  if (n == 0 || n > 8) {
    throw Error("family enumeration supports ground sets of size 1..8");
  }
  std::vector<PartialTransformation> all;
  std::vector<std::uint8_t> img(n, f == Family::T ? 1 : 0);
  const std::uint8_t lo = f == Family::T ? 1 : 0;
  for (;;) {
    PartialTransformation cand(n, img);
    if (cand.in_family(f)) {
      if (all.size() >= opts.max_elements) {
        throw ClosureCapExceeded("family size exceeds cap of " +
                                 std::to_string(opts.max_elements));
      }
      all.push_back(std::move(cand));
    }
    // odometer over image arrays
    std::size_t pos = 0;
    while (pos < n && img[pos] == n) {
      img[pos] = lo;
      ++pos;
    }
    if (pos == n) {
      break;
    }
    ++img[pos];
  }
  return build_semigroup(
      all, [](const PartialTransformation& a, const PartialTransformation& b) { return a * b; },
      [](const PartialTransformation& a) { return a.encode(); }, opts);
}

}  // namespace epiconj::transform
