#pragma once

/// @file harness.hpp
/// The experimenter's side: a hidden plant answering queries, generators for
/// the four sampling regimes, data-sufficiency checks and random plants.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcnid/analysis.hpp"
#include "bcnid/dynamics.hpp"
#include "bcnid/ident.hpp"

namespace bcnid {

/// A hidden network plus the hidden initial state of every registered group.
class Plant {
 public:
  explicit Plant(Bcn hidden) : hidden_(std::move(hidden)) {}

  std::size_t n() const noexcept { return hidden_.n(); }
  std::size_t m() const noexcept { return hidden_.m(); }
  std::size_t l() const noexcept { return hidden_.l(); }

  /// Re-registering an id is allowed only with the same state.
  void register_group(const std::string& id, Index x0);
  bool has_group(const std::string& id) const { return registry_.count(id) != 0; }

  /// Outputs of the group's run under inputs (|inputs| + 1 entries).
  OutputSequence query(const std::string& id, const InputSequence& inputs) const;
  /// Free run of a network without inputs, steps + 1 outputs.
  OutputSequence observe(const std::string& id, std::size_t steps) const;

  // Harness-side only; the identifiers never see these.
  const Bcn& hidden_system() const noexcept { return hidden_; }
  Index initial_state(const std::string& id) const;

 private:
  Bcn hidden_;
  std::map<std::string, Index> registry_;
};

struct ExperimentLog {
  SampleSet data;
  std::string protocol;
  std::optional<O1Test> test;
  std::optional<InputSequence> cover;
};

struct CaseParams {
  CaseTag case_tag = CaseTag::Case1;
  /// Hidden initial states, one group each (Case 2, 4) or the single group's
  /// state (Case 1, 3). Empty: all states for Case 2/4, a seeded random state
  /// for Case 1/3.
  std::vector<Index> initial_states;
  /// Steps per trajectory for Case 1/2; default 2 * 2^n.
  std::optional<std::size_t> length;
  /// Case 3/4 test family; a single member is used as an O3-test. Default:
  /// an O3-test when one exists within 2^n steps (Case 3), else build_o1_test.
  std::optional<O1Test> test;
  /// Case 3 walk; default build_cover_sequence from the initial state.
  std::optional<InputSequence> cover;
  /// Case 4: probe states along shortest walks from the initial states
  /// instead of probing every initial state directly.
  bool reach_walks = false;
  std::uint64_t seed = 0;
  /// Record n in the sample set.
  bool record_n = true;
};

/// Registers groups "g1", "g2", ... on the plant and logs the protocol runs.
ExperimentLog gen_case(Plant& plant, const CaseParams& params);

struct SufficiencyReport {
  std::vector<std::pair<Index, Index>> visited;  // (u, x), sorted
  std::vector<std::pair<Index, Index>> missing;
  /// Groups whose initial state the logged outputs do not pin down.
  std::vector<std::string> ambiguous_groups;

  bool sufficient() const { return missing.empty() && ambiguous_groups.empty(); }
};

/// Initial states are read from the plant registry.
SufficiencyReport check_sufficiency(const SampleSet& data, const Plant& plant);
/// Initial states are inferred: the unique state whose runs replay the group.
SufficiencyReport check_sufficiency(const SampleSet& data, const Bcn& sys);

// ---- random plants ------------------------------------------------------------

enum class PlantProperty {
  Any,
  ObservableBn,    // m = 0, is_observable_bn
  ControllableO1,  // is_controllable and build_o1_test succeeds
  ControllableO3,  // is_controllable and find_o3_test within 2^n
};

/// Uniform random structure matrices, resampled until the property holds.
Bcn random_plant(std::size_t n, std::size_t m, std::size_t l, PlantProperty property,
                 std::uint64_t seed, std::size_t max_tries = 100000);

/// Uniform random permutation of [1, size].
PermutationMap random_permutation(std::size_t size, std::uint64_t seed);

}  // namespace bcnid
