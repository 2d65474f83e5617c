#include "epiconj/mealy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace epiconj::mealy {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) {
    ++b;
  }
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) {
    --e;
  }
  return std::string(s.substr(b, e - b));
}

}  // namespace

MealyMachine::MealyMachine(std::string alphabet, std::vector<std::string> states,
                           std::string initial, const std::vector<MoveSpec>& moves)
    : alphabet_(std::move(alphabet)), states_(std::move(states)) {
  if (alphabet_.empty()) {
    throw BadAlphabet("alphabet must be nonempty");
  }
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    for (std::size_t j = i + 1; j < alphabet_.size(); ++j) {
      if (alphabet_[i] == alphabet_[j]) {
        throw BadAlphabet("alphabet letters must be distinct");
      }
    }
  }
  if (states_.empty()) {
    throw Error("machine needs at least one state");
  }
  std::unordered_map<std::string, std::size_t> state_index;
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].empty() || !state_index.emplace(states_[i], i).second) {
      throw Error("state names must be nonempty and distinct");
    }
  }
  auto init_it = state_index.find(initial);
  if (init_it == state_index.end()) {
    throw Error("initial state " + initial + " is not a state");
  }
  initial_ = init_it->second;

  moves_.assign(states_.size() * alphabet_.size(), Move{});
  for (const MoveSpec& mv : moves) {
    auto from = state_index.find(mv.from);
    auto to = state_index.find(mv.to);
    const auto in = letter_index(mv.input);
    const auto out = letter_index(mv.output);
    if (from == state_index.end() || to == state_index.end()) {
      throw Error("move refers to an unknown state");
    }
    if (!in || !out) {
      throw BadAlphabet("move letter outside the alphabet");
    }
    Move& slot = moves_[from->second * alphabet_.size() + *in];
    if (slot.next >= 0) {
      throw Error("duplicate move for (" + mv.from + "," + mv.input + ")");
    }
    slot.next = static_cast<std::int32_t>(to->second);
    slot.out = static_cast<std::int32_t>(*out);
  }
}

std::optional<std::size_t> MealyMachine::letter_index(char c) const {
  const std::size_t pos = alphabet_.find(c);
  if (pos == std::string::npos) {
    return std::nullopt;
  }
  return pos;
}

std::optional<std::string> MealyMachine::apply(std::string_view word) const {
  for (char c : word) {
    if (!letter_index(c)) {
      throw BadAlphabet(std::string("letter '") + c + "' outside the alphabet");
    }
  }
  std::size_t q = initial_;
  std::string out;
  out.reserve(word.size());
  for (char c : word) {
    const std::size_t x = *letter_index(c);
    if (!has_move(q, x)) {
      return std::nullopt;
    }
    out.push_back(alphabet_[output_letter(q, x)]);
    q = next_state(q, x);
  }
  return out;
}

MealyMachine MealyMachine::parse(std::string_view text) {
  std::string alphabet;
  std::string initial;
  std::vector<std::string> states;
  std::set<std::string> state_set;
  std::vector<MoveSpec> moves;
  const auto note_state = [&](const std::string& name) {
    if (state_set.insert(name).second) {
      states.push_back(name);
    }
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string line = trim(text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (line.empty() || line[0] == '#') {
      continue;
    }
    if (line.rfind("alphabet:", 0) == 0) {
      for (char c : line.substr(9)) {
        if (c != ' ' && c != '\t') {
          alphabet.push_back(c);
        }
      }
      continue;
    }
    if (line.rfind("initial:", 0) == 0) {
      initial = trim(line.substr(8));
      note_state(initial);
      continue;
    }
    if (line.rfind("states:", 0) == 0) {
      std::istringstream ss(line.substr(7));
      std::string name;
      while (ss >> name) {
        note_state(name);
      }
      continue;
    }
    const std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw Error("unrecognized machine line: " + line);
    }
    const std::string lhs = trim(line.substr(0, arrow));
    const std::string rhs = trim(line.substr(arrow + 2));
    const std::size_t lc = lhs.rfind(',');
    const std::size_t rc = rhs.rfind(',');
    if (lc == std::string::npos || rc == std::string::npos || lc + 2 != lhs.size() ||
        rc + 2 != rhs.size()) {
      throw Error("move lines look like `state,input -> nextstate,output`: " + line);
    }
    MoveSpec mv;
    mv.from = trim(lhs.substr(0, lc));
    mv.input = lhs[lc + 1];
    mv.to = trim(rhs.substr(0, rc));
    mv.output = rhs[rc + 1];
    note_state(mv.from);
    note_state(mv.to);
    moves.push_back(std::move(mv));
  }
  if (alphabet.empty()) {
    throw BadAlphabet("machine file lacks an `alphabet:` line");
  }
  if (initial.empty()) {
    throw Error("machine file lacks an `initial:` line");
  }
  return MealyMachine(alphabet, states, initial, moves);
}

std::string MealyMachine::to_text() const {
  std::string out = "alphabet:";
  for (char c : alphabet_) {
    out += ' ';
    out += c;
  }
  out += "\ninitial: " + states_[initial_] + "\n";
  // move lines ordered by state name so the text form is canonical
  std::vector<std::size_t> order(states_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [this](std::size_t a, std::size_t b) { return states_[a] < states_[b]; });
  for (std::size_t q : order) {
    for (std::size_t x = 0; x < alphabet_.size(); ++x) {
      if (has_move(q, x)) {
        out += states_[q];
        out += ',';
        out += alphabet_[x];
        out += " -> ";
        out += states_[next_state(q, x)];
        out += ',';
        out += alphabet_[output_letter(q, x)];
        out += '\n';
      }
    }
  }
  return out;
}

MealyMachine appendix_a_machine() {
  using MS = MealyMachine::MoveSpec;
  const std::vector<MS> moves = {
      {"A", '0', "D", '1'}, {"A", '1', "B", '0'}, {"B", '1', "C", '0'},
      {"C", '0', "C", '0'}, {"C", '1', "C", '1'}, {"D", '0', "A", '1'},
  };
  return MealyMachine("01", {"A", "B", "C", "D"}, "A", moves);
}

namespace {

struct LevelRun {
  std::vector<std::int32_t> state;  // -1 once the run has died
  std::vector<std::int64_t> out;    // output word index
};

// Runs the machine over all words of the given length, level by level.
LevelRun run_level(const MealyMachine& m, std::size_t length) {
  const std::size_t k = m.alphabet().size();
  LevelRun cur{{static_cast<std::int32_t>(m.initial_index())}, {0}};
  for (std::size_t level = 1; level <= length; ++level) {
    LevelRun next;
    next.state.assign(cur.state.size() * k, -1);
    next.out.assign(cur.state.size() * k, -1);
    for (std::size_t w = 0; w < cur.state.size(); ++w) {
      if (cur.state[w] < 0) {
        continue;
      }
      const std::size_t q = static_cast<std::size_t>(cur.state[w]);
      for (std::size_t x = 0; x < k; ++x) {
        if (m.has_move(q, x)) {
          next.state[w * k + x] = static_cast<std::int32_t>(m.next_state(q, x));
          next.out[w * k + x] =
              cur.out[w] * static_cast<std::int64_t>(k) +
              static_cast<std::int64_t>(m.output_letter(q, x));
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::size_t checked_word_count(std::size_t k, std::size_t length, std::size_t cap) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (count > cap / k) {
      throw LengthCapExceeded("word count " + std::to_string(k) + "^" + std::to_string(length) +
                              " exceeds cap " + std::to_string(cap));
    }
    count *= k;
  }
  return count;
}

}  // namespace

OrbitReport::ComponentInfo OrbitReport::component_of(std::string_view word) const {
  if (word.size() != word_length_) {
    throw Error("word length does not match this report");
  }
  std::size_t idx = 0;
  for (char c : word) {
    const std::size_t pos = alphabet_.find(c);
    if (pos == std::string::npos) {
      throw BadAlphabet(std::string("letter '") + c + "' outside the alphabet");
    }
    idx = idx * alphabet_.size() + pos;
  }
  return {on_cycle_[idx] != 0, component_length_[idx]};
}

OrbitReport orbit_report(const MealyMachine& m, std::size_t word_length, std::size_t cap) {
  const std::size_t k = m.alphabet().size();
  const std::size_t count = checked_word_count(k, word_length, cap);
  const LevelRun run = run_level(m, word_length);

  std::vector<std::int64_t> img(count, -1);
  for (std::size_t w = 0; w < count; ++w) {
    if (run.state[w] >= 0) {
      img[w] = run.out[w];
    }
  }
  std::vector<std::uint8_t> has_pre(count, 0);
  for (std::size_t w = 0; w < count; ++w) {
    if (img[w] >= 0) {
      if (has_pre[img[w]]) {
        throw NotInjectiveAtLength("induced map is not injective on words of length " +
                                   std::to_string(word_length));
      }
      has_pre[img[w]] = 1;
    }
  }

  OrbitReport rep;
  rep.alphabet_ = m.alphabet();
  rep.word_length_ = word_length;
  rep.on_cycle_.assign(count, 0);
  rep.component_length_.assign(count, 0);

  std::vector<std::uint8_t> visited(count, 0);
  // chains start at words without a preimage and end where the map dies;
  // injectivity keeps them from running into a cycle
  for (std::size_t v = 0; v < count; ++v) {
    if (has_pre[v] || visited[v]) {
      continue;
    }
    std::vector<std::size_t> path;
    std::size_t cur = v;
    for (;;) {
      visited[cur] = 1;
      path.push_back(cur);
      if (img[cur] < 0) {
        break;
      }
      cur = static_cast<std::size_t>(img[cur]);
    }
    for (std::size_t w : path) {
      rep.component_length_[w] = static_cast<std::uint32_t>(path.size());
    }
    rep.chains_.push_back(path.size());
  }
  // everything left lies on cycles
  for (std::size_t v = 0; v < count; ++v) {
    if (visited[v]) {
      continue;
    }
    std::vector<std::size_t> cyc;
    std::size_t cur = v;
    while (!visited[cur]) {
      visited[cur] = 1;
      cyc.push_back(cur);
      cur = static_cast<std::size_t>(img[cur]);
    }
    for (std::size_t w : cyc) {
      rep.on_cycle_[w] = 1;
      rep.component_length_[w] = static_cast<std::uint32_t>(cyc.size());
    }
    rep.cycles_.push_back(cyc.size());
  }
  std::sort(rep.cycles_.begin(), rep.cycles_.end());
  std::sort(rep.chains_.begin(), rep.chains_.end());
  return rep;
}

GroupBoundProbe group_bound_probe(const MealyMachine& m, std::size_t max_length,
                                  std::size_t cap) {
  GroupBoundProbe probe;
  probe.max_chain_per_length.reserve(max_length);
  std::size_t best = 0;
  std::size_t last_record = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const OrbitReport rep = orbit_report(m, len, cap);
    const std::size_t mc = rep.max_chain();
    probe.max_chain_per_length.push_back(mc);
    if (mc > best) {
      best = mc;
      last_record = len;
    }
  }
  probe.bounded = last_record <= max_length / 2;
  probe.bounded_by = std::max<std::size_t>(1, best);
  return probe;
}

MealyMachine compose_machines(const MealyMachine& m1, const MealyMachine& m2) {
  if (m1.alphabet() != m2.alphabet()) {
    throw AlphabetMismatch("machines must share an alphabet");
  }
  const std::size_t k = m1.alphabet().size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  const auto intern = [&](std::size_t a, std::size_t b) {
    auto [it, inserted] = index.emplace(std::make_pair(a, b), order.size());
    if (inserted) {
      order.emplace_back(a, b);
    }
    return it->second;
  };
  intern(m1.initial_index(), m2.initial_index());
  std::vector<MealyMachine::MoveSpec> moves;
  const auto name = [&](std::size_t a, std::size_t b) {
    return m1.states()[a] + "|" + m2.states()[b];
  };
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [q1, q2] = order[i];
    for (std::size_t x = 0; x < k; ++x) {
      if (!m1.has_move(q1, x)) {
        continue;
      }
      const std::size_t y = m1.output_letter(q1, x);
      if (!m2.has_move(q2, y)) {
        continue;
      }
      const std::size_t p1 = m1.next_state(q1, x);
      const std::size_t p2 = m2.next_state(q2, y);
      intern(p1, p2);
      moves.push_back({name(q1, q2), m1.alphabet()[x], name(p1, p2),
                       m2.alphabet()[m2.output_letter(q2, y)]});
    }
  }
  std::vector<std::string> states;
  states.reserve(order.size());
  for (const auto& [a, b] : order) {
    states.push_back(name(a, b));
  }
  return MealyMachine(m1.alphabet(), states,
                      name(m1.initial_index(), m2.initial_index()), moves);
}

MealyMachine invert_machine(const MealyMachine& m) {
  const std::size_t k = m.alphabet().size();
  std::vector<MealyMachine::MoveSpec> moves;
  for (std::size_t q = 0; q < m.states().size(); ++q) {
    std::vector<bool> used(k, false);
    for (std::size_t x = 0; x < k; ++x) {
      if (!m.has_move(q, x)) {
        continue;
      }
      const std::size_t y = m.output_letter(q, x);
      if (used[y]) {
        throw NotLocallyInjective("state " + m.states()[q] +
                                  " outputs the same letter on two inputs");
      }
      used[y] = true;
      moves.push_back({m.states()[q], m.alphabet()[y], m.states()[m.next_state(q, x)],
                       m.alphabet()[x]});
    }
  }
  return MealyMachine(m.alphabet(), m.states(), m.initial_state(), moves);
}

std::optional<std::size_t> finitary_bound(const MealyMachine& m) {
  const std::size_t nq = m.states().size();
  const std::size_t k = m.alphabet().size();
  if (nq > 64) {
    throw Error("finitary_bound supports at most 64 states");
  }
  // greatest set of states whose whole future copies input to output
  std::vector<bool> in_identity(nq, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < nq; ++q) {
      if (!in_identity[q]) {
        continue;
      }
      for (std::size_t x = 0; x < k; ++x) {
        if (m.has_move(q, x) &&
            (m.output_letter(q, x) != x || !in_identity[m.next_state(q, x)])) {
          in_identity[q] = false;
          changed = true;
          break;
        }
      }
    }
  }
  std::uint64_t identity_mask = 0;
  for (std::size_t q = 0; q < nq; ++q) {
    if (in_identity[q]) {
      identity_mask |= std::uint64_t{1} << q;
    }
  }
  std::uint64_t level = std::uint64_t{1} << m.initial_index();
  std::set<std::uint64_t> seen;
  for (std::size_t l = 0;; ++l) {
    if ((level & ~identity_mask) == 0) {
      return l;
    }
    if (!seen.insert(level).second) {
      return std::nullopt;
    }
    std::uint64_t next = 0;
    for (std::size_t q = 0; q < nq; ++q) {
      if ((level >> q) & 1) {
        for (std::size_t x = 0; x < k; ++x) {
          if (m.has_move(q, x)) {
            next |= std::uint64_t{1} << m.next_state(q, x);
          }
        }
      }
    }
    level = next;
  }
}

Portrait::Portrait(std::string alphabet, std::vector<std::vector<std::int32_t>> levels)
    : alphabet_(std::move(alphabet)), levels_(std::move(levels)) {
  const std::size_t k = alphabet_.size();
  if (k == 0) {
    throw BadAlphabet("alphabet must be nonempty");
  }
  if (levels_.empty() || levels_[0] != std::vector<std::int32_t>{0}) {
    throw Error("level 0 must be the defined root");
  }
  std::size_t expect = 1;
  for (std::size_t m = 1; m < levels_.size(); ++m) {
    expect *= k;
    if (levels_[m].size() != expect) {
      throw Error("level " + std::to_string(m) + " has the wrong number of words");
    }
    std::vector<bool> hit(expect, false);
    for (std::size_t w = 0; w < expect; ++w) {
      const std::int32_t y = levels_[m][w];
      if (y < 0) {
        continue;
      }
      if (static_cast<std::size_t>(y) >= expect) {
        throw Error("image index out of range");
      }
      if (hit[y]) {
        throw NotInjectiveAtLength("level " + std::to_string(m) + " is not injective");
      }
      hit[y] = true;
      const std::int32_t parent = levels_[m - 1][w / k];
      if (parent < 0 || levels_[m][w] / static_cast<std::int32_t>(k) != parent) {
        throw Error("levels are not prefix-compatible");
      }
    }
  }
}

Portrait Portrait::from_machine(const MealyMachine& m, std::size_t depth) {
  const std::size_t k = m.alphabet().size();
  std::vector<std::vector<std::int32_t>> levels;
  levels.push_back({0});
  LevelRun cur{{static_cast<std::int32_t>(m.initial_index())}, {0}};
  for (std::size_t level = 1; level <= depth; ++level) {
    LevelRun next;
    next.state.assign(cur.state.size() * k, -1);
    next.out.assign(cur.state.size() * k, -1);
    for (std::size_t w = 0; w < cur.state.size(); ++w) {
      if (cur.state[w] < 0) {
        continue;
      }
      const std::size_t q = static_cast<std::size_t>(cur.state[w]);
      for (std::size_t x = 0; x < k; ++x) {
        if (m.has_move(q, x)) {
          next.state[w * k + x] = static_cast<std::int32_t>(m.next_state(q, x));
          next.out[w * k + x] = cur.out[w] * static_cast<std::int64_t>(k) +
                                static_cast<std::int64_t>(m.output_letter(q, x));
        }
      }
    }
    std::vector<std::int32_t> lv(next.out.size());
    for (std::size_t w = 0; w < next.out.size(); ++w) {
      lv[w] = next.state[w] < 0 ? -1 : static_cast<std::int32_t>(next.out[w]);
    }
    levels.push_back(std::move(lv));
    cur = std::move(next);
  }
  return Portrait(m.alphabet(), std::move(levels));
}

Portrait Portrait::identity(std::string alphabet, std::size_t depth) {
  std::vector<std::vector<std::int32_t>> levels;
  std::size_t count = 1;
  for (std::size_t m = 0; m <= depth; ++m) {
    std::vector<std::int32_t> lv(count);
    for (std::size_t w = 0; w < count; ++w) {
      lv[w] = static_cast<std::int32_t>(w);
    }
    levels.push_back(std::move(lv));
    count *= alphabet.size();
  }
  return Portrait(std::move(alphabet), std::move(levels));
}

std::optional<std::string> Portrait::apply(std::string_view word) const {
  if (word.size() > depth()) {
    throw Error("word longer than the portrait depth");
  }
  const std::size_t k = alphabet_.size();
  std::size_t idx = 0;
  for (char c : word) {
    const std::size_t pos = alphabet_.find(c);
    if (pos == std::string::npos) {
      throw BadAlphabet(std::string("letter '") + c + "' outside the alphabet");
    }
    idx = idx * k + pos;
  }
  const std::int32_t img = levels_[word.size()][idx];
  if (img < 0) {
    return std::nullopt;
  }
  std::string out(word.size(), alphabet_[0]);
  std::size_t v = static_cast<std::size_t>(img);
  for (std::size_t i = word.size(); i-- > 0;) {
    out[i] = alphabet_[v % k];
    v /= k;
  }
  return out;
}

Portrait Portrait::extend(std::size_t new_depth) const {
  if (new_depth < depth()) {
    throw Error("extend cannot shrink a portrait");
  }
  std::vector<std::vector<std::int32_t>> levels = levels_;
  const std::size_t k = alphabet_.size();
  while (levels.size() <= new_depth) {
    const auto& prev = levels.back();
    std::vector<std::int32_t> lv(prev.size() * k, -1);
    for (std::size_t w = 0; w < prev.size(); ++w) {
      if (prev[w] >= 0) {
        for (std::size_t x = 0; x < k; ++x) {
          lv[w * k + x] = prev[w] * static_cast<std::int32_t>(k) + static_cast<std::int32_t>(x);
        }
      }
    }
    levels.push_back(std::move(lv));
  }
  return Portrait(alphabet_, std::move(levels));
}

Portrait Portrait::inverse() const {
  std::vector<std::vector<std::int32_t>> levels(levels_.size());
  levels[0] = {0};
  for (std::size_t m = 1; m < levels_.size(); ++m) {
    levels[m].assign(levels_[m].size(), -1);
    for (std::size_t w = 0; w < levels_[m].size(); ++w) {
      if (levels_[m][w] >= 0) {
        levels[m][levels_[m][w]] = static_cast<std::int32_t>(w);
      }
    }
  }
  return Portrait(alphabet_, std::move(levels));
}

bool Portrait::total() const {
  for (const auto& lv : levels_) {
    for (std::int32_t v : lv) {
      if (v < 0) {
        return false;
      }
    }
  }
  return true;
}

Portrait operator*(const Portrait& f, const Portrait& g) {
  if (f.alphabet_ != g.alphabet_) {
    throw AlphabetMismatch("portraits must share an alphabet");
  }
  if (f.depth() != g.depth()) {
    throw Error("portraits must share a depth (extend first)");
  }
  std::vector<std::vector<std::int32_t>> levels(f.levels_.size());
  for (std::size_t m = 0; m < f.levels_.size(); ++m) {
    levels[m].assign(f.levels_[m].size(), -1);
    for (std::size_t w = 0; w < f.levels_[m].size(); ++w) {
      const std::int32_t mid = f.levels_[m][w];
      if (mid >= 0) {
        levels[m][w] = g.levels_[m][mid];
      }
    }
  }
  return Portrait(f.alphabet_, std::move(levels));
}

std::string Portrait::encode() const {
  std::string out;
  out.push_back(static_cast<char>(alphabet_.size()));
  out.push_back(static_cast<char>(levels_.size()));
  for (const auto& lv : levels_) {
    for (std::int32_t v : lv) {
      const std::uint32_t u = static_cast<std::uint32_t>(v);
      out.push_back(static_cast<char>(u & 0xff));
      out.push_back(static_cast<char>((u >> 8) & 0xff));
      out.push_back(static_cast<char>((u >> 16) & 0xff));
      out.push_back(static_cast<char>((u >> 24) & 0xff));
    }
  }
  return out;
}

std::string Portrait::to_notation() const {
  std::string out;
  for (std::size_t m = 1; m < levels_.size(); ++m) {
    if (m > 1) {
      out += '|';
    }
    for (std::size_t w = 0; w < levels_[m].size(); ++w) {
      if (w > 0) {
        out += ',';
      }
      out += levels_[m][w] < 0 ? "." : std::to_string(levels_[m][w]);
    }
  }
  return out.empty() ? "." : out;
}

namespace {

// image arrays of partial injective maps on {0..k-1}, odometer order
std::vector<std::vector<std::int8_t>> partial_injections(std::size_t k) {
  std::vector<std::vector<std::int8_t>> out;
  std::vector<std::int8_t> img(k, -1);
  for (;;) {
    bool ok = true;
    std::vector<bool> used(k, false);
    for (std::int8_t v : img) {
      if (v >= 0) {
        if (used[static_cast<std::size_t>(v)]) {
          ok = false;
          break;
        }
        used[static_cast<std::size_t>(v)] = true;
      }
    }
    if (ok) {
      out.push_back(img);
    }
    std::size_t pos = k;
    while (pos > 0 && img[pos - 1] == static_cast<std::int8_t>(k - 1)) {
      img[pos - 1] = -1;
      --pos;
    }
    if (pos == 0) {
      break;
    }
    ++img[pos - 1];
  }
  return out;
}

std::vector<Portrait> portraits_from_choices(const std::string& alphabet, std::size_t depth,
                                             const std::vector<std::vector<std::int8_t>>& menu,
                                             std::size_t cap) {
  const std::size_t k = alphabet.size();
  std::vector<std::vector<std::vector<std::int32_t>>> current;
  current.push_back({{0}});
  for (std::size_t m = 1; m <= depth; ++m) {
    std::vector<std::vector<std::vector<std::int32_t>>> grown;
    for (const auto& levels : current) {
      const auto& prev = levels.back();
      std::vector<std::size_t> nodes;  // defined words of the previous level
      for (std::size_t w = 0; w < prev.size(); ++w) {
        if (prev[w] >= 0) {
          nodes.push_back(w);
        }
      }
      std::vector<std::size_t> choice(nodes.size(), 0);
      for (;;) {
        std::vector<std::int32_t> lv(prev.size() * k, -1);
        for (std::size_t t = 0; t < nodes.size(); ++t) {
          const std::size_t w = nodes[t];
          const auto& pmap = menu[choice[t]];
          for (std::size_t x = 0; x < k; ++x) {
            if (pmap[x] >= 0) {
              lv[w * k + x] = prev[w] * static_cast<std::int32_t>(k) + pmap[x];
            }
          }
        }
        auto next_levels = levels;
        next_levels.push_back(std::move(lv));
        if (grown.size() >= cap) {
          throw DepthCapExceeded("portrait enumeration exceeds cap of " + std::to_string(cap));
        }
        grown.push_back(std::move(next_levels));
        std::size_t pos = choice.size();
        while (pos > 0 && choice[pos - 1] == menu.size() - 1) {
          choice[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) {
          break;
        }
        ++choice[pos - 1];
      }
    }
    current = std::move(grown);
  }
  std::vector<Portrait> out;
  out.reserve(current.size());
  for (auto& levels : current) {
    out.emplace_back(alphabet, std::move(levels));
  }
  return out;
}

Portrait portrait_regular_part(const Portrait& f) {
  std::vector<Portrait> powers{f};
  std::unordered_map<std::string, std::size_t> seen{{f.encode(), 0}};
  for (;;) {
    Portrait next = powers.back() * f;
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

}  // namespace

std::vector<Portrait> all_portraits(const std::string& alphabet, std::size_t depth,
                                    std::size_t cap) {
  return portraits_from_choices(alphabet, depth, partial_injections(alphabet.size()), cap);
}

std::vector<Portrait> tree_automorphisms(const std::string& alphabet, std::size_t depth,
                                         std::size_t cap) {
  std::vector<std::vector<std::int8_t>> perms;
  for (const auto& pmap : partial_injections(alphabet.size())) {
    if (std::none_of(pmap.begin(), pmap.end(), [](std::int8_t v) { return v < 0; })) {
      perms.push_back(pmap);
    }
  }
  return portraits_from_choices(alphabet, depth, perms, cap);
}

bool conjugate_finitary(const Portrait& f, const Portrait& g, std::size_t search_depth) {
  if (f.alphabet() != g.alphabet()) {
    throw AlphabetMismatch("portraits must share an alphabet");
  }
  if (f.depth() > search_depth || g.depth() > search_depth) {
    throw DepthCapExceeded("portrait bound exceeds the search depth");
  }
  const Portrait fe = portrait_regular_part(f.extend(search_depth));
  const Portrait ge = portrait_regular_part(g.extend(search_depth));
  for (const Portrait& u : tree_automorphisms(f.alphabet(), search_depth)) {
    if ((u.inverse() * fe) * u == ge) {
      return true;
    }
  }
  return false;
}

}  // namespace epiconj::mealy
