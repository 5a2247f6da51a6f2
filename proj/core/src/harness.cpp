#include "bcnid/harness.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "bcnid/error.hpp"

namespace bcnid {

void Plant::register_group(const std::string& id, Index x0) {
  if (x0 < 1 || x0 > hidden_.state_count()) throw DimensionError("initial state out of range");
  auto [it, fresh] = registry_.try_emplace(id, x0);
  if (!fresh && it->second != x0) throw Error("group '" + id + "' is already registered with another state");
}

Index Plant::initial_state(const std::string& id) const {
  auto it = registry_.find(id);
  if (it == registry_.end()) throw Error("unregistered group '" + id + "'");
  return it->second;
}

OutputSequence Plant::query(const std::string& id, const InputSequence& inputs) const {
  return run_outputs(hidden_, initial_state(id), inputs);
}

OutputSequence Plant::observe(const std::string& id, std::size_t steps) const {
  if (!hidden_.is_bn()) throw NetworkKindError("free runs need a network without inputs");
  return query(id, InputSequence(steps, 1));
}

namespace {

InputSequence concat(const InputSequence& a, const InputSequence& b) {
  InputSequence out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<Index> default_states(const Plant& plant, const CaseParams& params, bool all) {
  if (!params.initial_states.empty()) return params.initial_states;
  const std::size_t ns = plant.hidden_system().state_count();
  if (all) {
    std::vector<Index> xs(ns);
    for (Index x = 1; x <= ns; ++x) xs[x - 1] = x;
    return xs;
  }
  std::mt19937_64 rng(params.seed);
  return {std::uniform_int_distribution<Index>(1, ns)(rng)};
}

std::string group_id(std::size_t k) { return "g" + std::to_string(k); }

O1Test default_test(const Bcn& sys, bool prefer_o3) {
  if (prefer_o3) {
    if (auto t = find_o3_test(sys, sys.state_count())) return O1Test{sys.n(), sys.m(), {*t}};
  }
  auto built = build_o1_test(sys);
  if (!built.test) {
    const auto [i, j] = *built.indistinguishable;
    throw Error("no test exists: states " + std::to_string(i) + " and " + std::to_string(j) +
                " are indistinguishable");
  }
  return *built.test;
}

void add_probe(SampleGroup& group, const Plant& plant, const InputSequence& prefix, const O1Test& test) {
  for (const auto& t : test.tests) {
    SampleMember mem{concat(prefix, t), {}};
    mem.outputs = plant.query(group.id, mem.inputs);
    group.members.push_back(std::move(mem));
  }
}

// Shortest input paths from a to every reachable state, in BFS order.
std::vector<std::pair<Index, InputSequence>> reach_walks(const Bcn& sys, Index a) {
  std::vector<std::pair<Index, InputSequence>> out;
  std::vector<bool> seen(sys.state_count() + 1, false);
  std::deque<std::pair<Index, InputSequence>> queue{{a, {}}};
  seen[a] = true;
  while (!queue.empty()) {
    auto [x, path] = queue.front();
    queue.pop_front();
    for (Index u = 1; u <= sys.input_count(); ++u) {
      const Index y = sys.next(u, x);
      if (seen[y]) continue;
      seen[y] = true;
      InputSequence longer = path;
      longer.push_back(u);
      queue.emplace_back(y, std::move(longer));
    }
    out.emplace_back(x, std::move(path));
  }
  return out;
}

}  // namespace

ExperimentLog gen_case(Plant& plant, const CaseParams& params) {
  const Bcn& sys = plant.hidden_system();
  ExperimentLog log;
  SampleSet& data = log.data;
  data.case_tag = params.case_tag;
  if (params.record_n) data.n = sys.n();
  data.m = sys.m();
  data.l = sys.l();

  switch (params.case_tag) {
    case CaseTag::Case1:
    case CaseTag::Case2: {
      if (!sys.is_bn()) throw NetworkKindError("Cases 1 and 2 sample networks without inputs");
      const bool single = params.case_tag == CaseTag::Case1;
      const auto xs = default_states(plant, params, !single);
      if (single && xs.size() != 1) throw Error("Case 1 takes exactly one initial state");
      const std::size_t steps = params.length.value_or(2 * sys.state_count());
      for (std::size_t k = 0; k < xs.size(); ++k) {
        SampleGroup g{group_id(k + 1), {}};
        plant.register_group(g.id, xs[k]);
        g.members.push_back({{}, plant.observe(g.id, steps)});
        data.groups.push_back(std::move(g));
      }
      log.protocol = single ? "case1-single-trajectory" : "case2-trajectories";
      break;
    }
    case CaseTag::Case3: {
      if (sys.is_bn()) throw NetworkKindError("Case 3 probes a network with inputs");
      const auto xs = default_states(plant, params, false);
      if (xs.size() != 1) throw Error("Case 3 takes exactly one initial state");
      const O1Test test = params.test ? *params.test : default_test(sys, true);
      test.check_shape();
      if (test.m != sys.m()) throw DimensionError("test input dimension does not match the plant");
      const InputSequence cover = params.cover ? *params.cover : build_cover_sequence(sys, xs.front()).inputs;
      SampleGroup g{group_id(1), {}};
      plant.register_group(g.id, xs.front());
      for (std::size_t j = 0; j <= cover.size(); ++j)
        add_probe(g, plant, InputSequence(cover.begin(), cover.begin() + static_cast<std::ptrdiff_t>(j)), test);
      data.groups.push_back(std::move(g));
      log.protocol = test.tests.size() == 1 ? "case3-o3-test" : "case3-o1-test";
      log.test = test;
      log.cover = cover;
      break;
    }
    case CaseTag::Case4: {
      if (sys.is_bn()) throw NetworkKindError("Case 4 probes a network with inputs");
      const auto xs = default_states(plant, params, true);
      const O1Test test = params.test ? *params.test : default_test(sys, false);
      test.check_shape();
      if (test.m != sys.m()) throw DimensionError("test input dimension does not match the plant");
      std::set<Index> covered;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        SampleGroup g{group_id(k + 1), {}};
        plant.register_group(g.id, xs[k]);
        if (!params.reach_walks) {
          add_probe(g, plant, {}, test);
          for (Index u = 1; u <= sys.input_count(); ++u) add_probe(g, plant, {u}, test);
        } else {
          for (const auto& [x, walk] : reach_walks(sys, xs[k])) {
            if (!covered.insert(x).second) continue;
            add_probe(g, plant, walk, test);
            for (Index u = 1; u <= sys.input_count(); ++u) add_probe(g, plant, concat(walk, {u}), test);
          }
        }
        data.groups.push_back(std::move(g));
      }
      log.protocol = params.reach_walks ? "case4-reach-walks" : "case4-initial-probes";
      log.test = test;
      break;
    }
  }
  return log;
}

namespace {

void visit_member(const Bcn& sys, Index x0, const SampleMember& mem, std::set<std::pair<Index, Index>>& out) {
  const std::size_t steps = mem.inputs.empty() ? mem.outputs.size() - 1 : mem.inputs.size();
  Index x = x0;
  for (std::size_t t = 0; t < steps; ++t) {
    const Index u = mem.inputs.empty() ? 1 : mem.inputs[t];
    out.emplace(u, x);
    x = sys.next(u, x);
  }
}

bool replays(const Bcn& sys, Index x0, const SampleMember& mem) {
  const InputSequence inputs = mem.inputs.empty() ? InputSequence(mem.outputs.size() - 1, 1) : mem.inputs;
  return run_outputs(sys, x0, inputs) == mem.outputs;
}

SufficiencyReport finish(const Bcn& sys, std::set<std::pair<Index, Index>> seen, std::vector<std::string> ambiguous) {
  SufficiencyReport rep;
  rep.visited.assign(seen.begin(), seen.end());
  for (Index u = 1; u <= sys.input_count(); ++u)
    for (Index x = 1; x <= sys.state_count(); ++x)
      if (!seen.count({u, x})) rep.missing.emplace_back(u, x);
  rep.ambiguous_groups = std::move(ambiguous);
  return rep;
}

}  // namespace

SufficiencyReport check_sufficiency(const SampleSet& data, const Plant& plant) {
  const Bcn& sys = plant.hidden_system();
  std::set<std::pair<Index, Index>> seen;
  for (const auto& g : data.groups) {
    const Index x0 = plant.initial_state(g.id);
    for (const auto& mem : g.members) visit_member(sys, x0, mem, seen);
  }
  return finish(sys, std::move(seen), {});
}

SufficiencyReport check_sufficiency(const SampleSet& data, const Bcn& sys) {
  std::set<std::pair<Index, Index>> seen;
  std::vector<std::string> ambiguous;
  for (const auto& g : data.groups) {
    std::vector<Index> candidates;
    for (Index x = 1; x <= sys.state_count(); ++x) {
      if (std::all_of(g.members.begin(), g.members.end(),
                      [&](const SampleMember& mem) { return replays(sys, x, mem); }))
        candidates.push_back(x);
    }
    if (candidates.size() != 1) {
      ambiguous.push_back(g.id);
      continue;
    }
    for (const auto& mem : g.members) visit_member(sys, candidates.front(), mem, seen);
  }
  return finish(sys, std::move(seen), std::move(ambiguous));
}

Bcn random_plant(std::size_t n, std::size_t m, std::size_t l, PlantProperty property, std::uint64_t seed,
                 std::size_t max_tries) {
  if (property == PlantProperty::ObservableBn && m != 0) throw NetworkKindError("observable BN plants have m = 0");
  if ((property == PlantProperty::ControllableO1 || property == PlantProperty::ControllableO3) && m == 0)
    throw NetworkKindError("controllable plants need m >= 1");
  std::mt19937_64 rng(seed);
  const std::size_t ns = std::size_t{1} << n, nu = std::size_t{1} << m, ny = std::size_t{1} << l;
  std::uniform_int_distribution<Index> state(1, ns), output(1, ny);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Index> f(nu * ns), h(ns);
    for (auto& v : f) v = state(rng);
    for (auto& v : h) v = output(rng);
    Bcn sys(n, m, l, LogicalMatrix(ns, std::move(f)), LogicalMatrix(ny, std::move(h)));
    bool ok = true;
    switch (property) {
      case PlantProperty::Any: break;
      case PlantProperty::ObservableBn: ok = is_observable_bn(sys); break;
      case PlantProperty::ControllableO1: ok = is_controllable(sys) && build_o1_test(sys).test.has_value(); break;
      case PlantProperty::ControllableO3: ok = is_controllable(sys) && find_o3_test(sys, ns).has_value(); break;
    }
    if (ok) return sys;
  }
  throw LimitExceeded("no plant with the requested property after " + std::to_string(max_tries) + " tries");
}

PermutationMap random_permutation(std::size_t size, std::uint64_t seed) {
  std::vector<Index> img(size);
  for (Index i = 1; i <= size; ++i) img[i - 1] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(img.begin(), img.end(), rng);
  return PermutationMap(std::move(img));
}

}  // namespace bcnid
