#include "bcnid/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "bcnid/error.hpp"

namespace bcnid {

namespace {

void require_bn(const Bcn& sys, const char* what) {
  if (!sys.is_bn()) throw NetworkKindError(std::string(what) + " needs a Boolean network (m = 0)");
}

void require_bcn(const Bcn& sys, const char* what) {
  if (sys.is_bn()) throw NetworkKindError(std::string(what) + " needs a control network (m >= 1)");
}

void require_state(const Bcn& sys, Index i) {
  if (i < 1 || i > sys.state_count()) {
    throw DimensionError("state " + std::to_string(i) + " outside [1, " +
                         std::to_string(sys.state_count()) + "]");
  }
}

}  // namespace

ObservabilityMatrix::ObservabilityMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

OutputSequence ObservabilityMatrix::column(Index i) const {
  OutputSequence c(rows_);
  for (std::size_t t = 0; t < rows_; ++t) c[t] = at(t, i);
  return c;
}

std::vector<std::vector<Index>> ObservabilityMatrix::as_rows() const {
  std::vector<std::vector<Index>> out(rows_);
  for (std::size_t t = 0; t < rows_; ++t)
    out[t].assign(entries_.begin() + static_cast<std::ptrdiff_t>(t * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((t + 1) * cols_));
  return out;
}

std::size_t pair_count(std::size_t state_count) {
  return state_count * (state_count - (state_count > 0 ? 1 : 0)) / 2;
}

std::size_t pair_index(Index i, Index i2, std::size_t size) {
  if (i >= i2) throw DimensionError("pair_index needs i < i'");
  if (i < 1 || i2 > size) throw DimensionError("pair_index state outside [1, size]");
  std::size_t s = i2 - i;
  for (std::size_t j = 1; j < i; ++j) s += size - j;
  return s;
}

std::pair<Index, Index> pair_at(std::size_t s, std::size_t size) {
  if (s < 1 || s > pair_count(size)) throw DimensionError("pair slot out of range");
  Index i = 1;
  while (s > size - i) {
    s -= size - i;
    ++i;
  }
  return {i, i + s};
}

void O1Test::check_shape() const {
  if (tests.empty()) throw DimensionError("test family is empty");
  const std::size_t len = tests.front().size();
  if (len == 0) throw DimensionError("test sequences must hold at least one input");
  const std::size_t nu = std::size_t{1} << m;
  for (const auto& t : tests) {
    if (t.size() != len) throw DimensionError("test sequences differ in length");
    for (Index u : t)
      if (u < 1 || u > nu) throw DimensionError("test input " + std::to_string(u) + " outside [1, 2^m]");
  }
}

bool O1Test::has_pair_slots() const {
  check_shape();
  return tests.size() == pair_count(std::size_t{1} << n);
}

ObservabilityMatrix observability_matrix_bn(const Bcn& sys, std::size_t window) {
  require_bn(sys, "observability_matrix_bn");
  if (window == 0) throw DimensionError("observability window must be positive");
  const std::size_t ns = sys.state_count();
  ObservabilityMatrix o(window, ns);
  for (Index i = 1; i <= ns; ++i) {
    Index x = i;
    for (std::size_t t = 0; t < window; ++t) {
      o.at(t, i) = sys.output(x);
      x = sys.next(1, x);
    }
  }
  return o;
}

bool is_observable_bn(const Bcn& sys) {
  require_bn(sys, "is_observable_bn");
  const std::size_t ns = sys.state_count();
  if (ns == 1) return true;
  const auto o = observability_matrix_bn(sys, ns - 1);
  std::set<OutputSequence> cols;
  for (Index i = 1; i <= ns; ++i)
    if (!cols.insert(o.column(i)).second) return false;
  return true;
}

OutputSequence effective_output_sequence(const Bcn& sys, Index i) {
  require_bn(sys, "effective_output_sequence");
  require_state(sys, i);
  return observability_matrix_bn(sys, sys.state_count()).column(i);
}

bool is_controllable(const Bcn& sys) {
  require_bcn(sys, "is_controllable");
  const std::size_t ns = sys.state_count();
  if (reachable_set(sys, {1}).size() != ns) return false;
  // Reverse reachability of state 1.
  std::vector<std::vector<Index>> rev(ns + 1);
  for (Index x = 1; x <= ns; ++x)
    for (Index u = 1; u <= sys.input_count(); ++u) rev[sys.next(u, x)].push_back(x);
  std::vector<bool> seen(ns + 1, false);
  std::deque<Index> queue{1};
  seen[1] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const Index y = queue.front();
    queue.pop_front();
    for (Index x : rev[y])
      if (!seen[x]) {
        seen[x] = true;
        ++count;
        queue.push_back(x);
      }
  }
  return count == ns;
}

std::vector<Index> reachable_set(const Bcn& sys, const std::vector<Index>& p0) {
  require_bcn(sys, "reachable_set");
  if (p0.empty()) throw DimensionError("reachable_set needs a nonempty initial set");
  const std::size_t ns = sys.state_count();
  std::vector<bool> seen(ns + 1, false);
  std::deque<Index> queue;
  for (Index x : p0) {
    require_state(sys, x);
    if (!seen[x]) {
      seen[x] = true;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    const Index x = queue.front();
    queue.pop_front();
    for (Index u = 1; u <= sys.input_count(); ++u) {
      const Index y = sys.next(u, x);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Index> out;
  for (Index x = 1; x <= ns; ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

namespace {

constexpr std::size_t kUnresolved = std::numeric_limits<std::size_t>::max();

// Resolution depth of every unordered state pair: 0 when the outputs differ,
// otherwise 1 + the smallest depth reachable in one step. Computed by a
// backward breadth-first search over the pair graph.
class PairDepths {
 public:
  explicit PairDepths(const Bcn& sys) : sys_(sys), ns_(sys.state_count()), depth_(ns_ * ns_, kUnresolved) {
    std::vector<std::vector<std::size_t>> rev(ns_ * ns_);
    std::deque<std::size_t> queue;
    for (Index i = 1; i <= ns_; ++i)
      for (Index j = i + 1; j <= ns_; ++j) {
        const auto k = key(i, j);
        if (sys.output(i) != sys.output(j)) {
          depth_[k] = 0;
          queue.push_back(k);
        }
        for (Index u = 1; u <= sys.input_count(); ++u) {
          const Index a = sys.next(u, i), b = sys.next(u, j);
          if (a != b) rev[key(a, b)].push_back(k);
        }
      }
    while (!queue.empty()) {
      const auto k = queue.front();
      queue.pop_front();
      for (auto p : rev[k])
        if (depth_[p] == kUnresolved) {
          depth_[p] = depth_[k] + 1;
          queue.push_back(p);
        }
    }
  }

  std::size_t depth(Index i, Index j) const { return depth_[key(i, j)]; }

  // Smallest input at each step that keeps the depth decreasing.
  InputSequence sequence(Index i, Index j) const {
    InputSequence seq;
    std::size_t d = depth(i, j);
    while (d > 0) {
      for (Index u = 1; u <= sys_.input_count(); ++u) {
        const Index a = sys_.next(u, i), b = sys_.next(u, j);
        if (a != b && depth(a, b) == d - 1) {
          seq.push_back(u);
          i = a;
          j = b;
          break;
        }
      }
      --d;
    }
    return seq;
  }

 private:
  std::size_t key(Index i, Index j) const {
    if (i > j) std::swap(i, j);
    return (i - 1) * ns_ + (j - 1);
  }

  const Bcn& sys_;
  std::size_t ns_;
  std::vector<std::size_t> depth_;
};

}  // namespace

std::optional<InputSequence> distinguishing_sequence(const Bcn& sys, Index i, Index i2,
                                                     std::size_t max_len) {
  require_state(sys, i);
  require_state(sys, i2);
  if (i == i2) throw DimensionError("distinguishing_sequence needs two distinct states");
  PairDepths depths(sys);
  const auto d = depths.depth(i, i2);
  if (d == kUnresolved || d > max_len) return std::nullopt;
  return depths.sequence(i, i2);
}

O1TestSearch build_o1_test(const Bcn& sys) {
  const std::size_t ns = sys.state_count();
  PairDepths depths(sys);
  O1Test test{sys.n(), sys.m(), {}};
  std::size_t len = 1;
  for (Index i = 1; i <= ns; ++i)
    for (Index j = i + 1; j <= ns; ++j) {
      if (depths.depth(i, j) == kUnresolved) return {std::nullopt, std::make_pair(i, j)};
      test.tests.push_back(depths.sequence(i, j));
      len = std::max(len, test.tests.back().size());
    }
  for (auto& t : test.tests) t.resize(len, 1);
  return {std::move(test), std::nullopt};
}

std::vector<DataArray> data_arrays(const Bcn& sys, const O1Test& test) {
  test.check_shape();
  if (test.m != sys.m()) throw DimensionError("test input dimension does not match the network");
  std::vector<DataArray> out(sys.state_count());
  for (Index i = 1; i <= sys.state_count(); ++i) {
    out[i - 1].reserve(test.tests.size());
    for (const auto& t : test.tests) out[i - 1].push_back(run_outputs(sys, i, t));
  }
  return out;
}

bool validate_o1_test(const Bcn& sys, const O1Test& test) {
  if (test.n != sys.n()) throw DimensionError("test state dimension does not match the network");
  auto arrays = data_arrays(sys, test);
  std::sort(arrays.begin(), arrays.end());
  return std::adjacent_find(arrays.begin(), arrays.end()) == arrays.end();
}

namespace {

// Depth-first search over input sequences of a fixed length, carrying the
// current state of every run and the partition of initial states by output
// history so far.
class O3Search {
 public:
  O3Search(const Bcn& sys, std::size_t length) : sys_(sys), length_(length) {}

  std::optional<InputSequence> run() {
    const std::size_t ns = sys_.state_count();
    std::vector<Index> cur(ns);
    std::vector<std::size_t> cls(ns);
    for (Index x = 1; x <= ns; ++x) {
      cur[x - 1] = x;
      cls[x - 1] = sys_.output(x);
    }
    if (dfs(cur, cls)) return prefix_;
    return std::nullopt;
  }

 private:
  bool dfs(const std::vector<Index>& cur, const std::vector<std::size_t>& cls) {
    const std::size_t ns = cur.size();
    if (prefix_.size() == length_) {
      std::set<std::size_t> distinct(cls.begin(), cls.end());
      return distinct.size() == ns;
    }
    std::vector<Index> next(ns);
    std::vector<std::size_t> ncls(ns);
    for (Index u = 1; u <= sys_.input_count(); ++u) {
      std::map<std::pair<std::size_t, Index>, std::size_t> ids;
      std::set<std::pair<std::size_t, Index>> occupied;
      bool dead = false;
      for (std::size_t k = 0; k < ns; ++k) {
        next[k] = sys_.next(u, cur[k]);
        ncls[k] = ids.try_emplace({cls[k], sys_.output(next[k])}, ids.size()).first->second;
      }
      // Two runs still in one class and now in the same state never separate.
      for (std::size_t k = 0; k < ns && !dead; ++k) dead = !occupied.insert({ncls[k], next[k]}).second;
      if (dead) continue;
      prefix_.push_back(u);
      if (dfs(next, ncls)) return true;
      prefix_.pop_back();
    }
    return false;
  }

  const Bcn& sys_;
  std::size_t length_;
  InputSequence prefix_;
};

}  // namespace

std::optional<InputSequence> find_o3_test(const Bcn& sys, std::size_t max_len) {
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (auto found = O3Search(sys, len).run()) return found;
  }
  return std::nullopt;
}

ObservabilityMatrix observability_matrix_bcn(const Bcn& sys, const InputSequence& test_inputs) {
  const std::size_t ns = sys.state_count();
  ObservabilityMatrix o(test_inputs.size() + 1, ns);
  for (Index i = 1; i <= ns; ++i) {
    const auto ys = run_outputs(sys, i, test_inputs);
    for (std::size_t t = 0; t < ys.size(); ++t) o.at(t, i) = ys[t];
  }
  return o;
}

CoverWalk build_cover_sequence(const Bcn& sys, Index x0) {
  require_state(sys, x0);
  const std::size_t ns = sys.state_count();
  const std::size_t nu = sys.input_count();
  std::vector<std::vector<bool>> used(nu + 1, std::vector<bool>(ns + 1, false));
  std::vector<std::size_t> unused_left(ns + 1, nu);

  CoverWalk walk;
  Index cur = x0;
  walk.states.push_back(cur);
  auto take = [&](Index u) {
    if (!used[u][cur]) {
      used[u][cur] = true;
      --unused_left[cur];
    }
    walk.inputs.push_back(u);
    cur = sys.next(u, cur);
    walk.states.push_back(cur);
  };

  for (;;) {
    if (unused_left[cur] > 0) {
      Index u = 1;
      while (used[u][cur]) ++u;
      take(u);
      continue;
    }
    // Shortest path to the nearest state with an unused input.
    std::vector<std::pair<Index, Index>> parent(ns + 1, {0, 0});  // (prev state, input)
    std::vector<bool> seen(ns + 1, false);
    std::deque<Index> queue{cur};
    seen[cur] = true;
    Index target = 0;
    while (!queue.empty() && target == 0) {
      const Index x = queue.front();
      queue.pop_front();
      for (Index u = 1; u <= nu; ++u) {
        const Index y = sys.next(u, x);
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = {x, u};
        if (unused_left[y] > 0) {
          target = y;
          break;
        }
        queue.push_back(y);
      }
    }
    if (target == 0) break;
    InputSequence path;
    for (Index y = target; y != cur; y = parent[y].first) path.push_back(parent[y].second);
    std::reverse(path.begin(), path.end());
    for (Index u : path) take(u);
  }

  for (Index u = 1; u <= nu; ++u)
    for (Index x = 1; x <= ns; ++x)
      if (!used[u][x]) walk.uncovered.emplace_back(u, x);
  return walk;
}

std::vector<std::pair<Index, Index>> visited_pairs(const Bcn& sys, Index x0,
                                                   const InputSequence& inputs) {
  const auto tr = simulate(sys, x0, inputs);
  std::set<std::pair<Index, Index>> seen;
  for (std::size_t t = 0; t < inputs.size(); ++t) seen.emplace(inputs[t], tr.states[t]);
  return {seen.begin(), seen.end()};
}

}  // namespace bcnid
