#pragma once

/// @file analysis.hpp
/// Observability and controllability machinery: observability matrices,
/// effective output sequences, pairwise distinguishing sequences, O1-tests
/// with their data arrays, bounded O3-test search, reachability and
/// input/state covering walks.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bcnid/dynamics.hpp"

namespace bcnid {

/// Output indices arranged with one column per initial state:
/// at(t, i) is the output at time t of the run started from δ^i.
class ObservabilityMatrix {
 public:
  ObservabilityMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  /// t is 0-based, i is the 1-based state index.
  Index at(std::size_t t, Index i) const { return entries_[t * cols_ + (i - 1)]; }
  Index& at(std::size_t t, Index i) { return entries_[t * cols_ + (i - 1)]; }

  OutputSequence column(Index i) const;
  std::vector<std::vector<Index>> as_rows() const;

  friend bool operator==(const ObservabilityMatrix&, const ObservabilityMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Index> entries_;
};

/// Number of unordered state pairs, C(state_count, 2).
std::size_t pair_count(std::size_t state_count);

/// Slot s(i, i') of the pair (i, i'), 1 <= i < i' <= size, numbering pairs
/// row by row: (1,2) -> 1, ..., (1,size) -> size-1, (2,3) -> size, ...
std::size_t pair_index(Index i, Index i2, std::size_t size);

/// Inverse of pair_index.
std::pair<Index, Index> pair_at(std::size_t s, std::size_t size);

/// A family of input sequences sharing a common length; slot s-1 holds the
/// sequence meant to separate the pair pair_at(s). A family with a single
/// member doubles as an O3-test.
struct O1Test {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<InputSequence> tests;

  /// Common length minus one.
  std::size_t p() const { return tests.empty() ? 0 : tests.front().size() - 1; }
  std::size_t length() const { return tests.empty() ? 0 : tests.front().size(); }

  /// Non-empty, equal-length members with inputs in [1, 2^m].
  void check_shape() const;
  /// check_shape() plus |tests| == C(2^n, 2).
  bool has_pair_slots() const;
};

/// Per-test output sequences of one initial state (each of length p+2).
using DataArray = std::vector<OutputSequence>;

/// Row t, column i = index of H F^t δ^i. BN only.
ObservabilityMatrix observability_matrix_bn(const Bcn& sys, std::size_t window);

/// All columns of the (2^n - 1)-row observability matrix pairwise distinct.
bool is_observable_bn(const Bcn& sys);

/// The 2^n-long output sequence from δ^i. BN only.
OutputSequence effective_output_sequence(const Bcn& sys, Index i);

/// Every state reaches every state. Needs m >= 1.
bool is_controllable(const Bcn& sys);

/// p0 together with every state reachable from it, sorted. Needs m >= 1.
std::vector<Index> reachable_set(const Bcn& sys, const std::vector<Index>& p0);

/// Shortest input sequence under which the runs from δ^i and δ^{i2} produce
/// different outputs, if one of length <= max_len exists. Ties are broken by
/// the smallest input index at each step.
std::optional<InputSequence> distinguishing_sequence(const Bcn& sys, Index i, Index i2,
                                                     std::size_t max_len);

/// Result of build_o1_test: a test, or the first pair no input separates.
struct O1TestSearch {
  std::optional<O1Test> test;
  std::optional<std::pair<Index, Index>> indistinguishable;
};

/// One shortest distinguishing sequence per pair, in pair_index order,
/// right-padded with input 1 to a common length of at least one.
O1TestSearch build_o1_test(const Bcn& sys);

/// The data array of every state i (index i-1).
std::vector<DataArray> data_arrays(const Bcn& sys, const O1Test& test);

/// True iff the data arrays of all states are pairwise distinct.
bool validate_o1_test(const Bcn& sys, const O1Test& test);

/// First input sequence of length 1..max_len (length-lexicographic order)
/// under which all 2^n output sequences are pairwise distinct.
std::optional<InputSequence> find_o3_test(const Bcn& sys, std::size_t max_len);

/// (p+2) x 2^n matrix of output runs under test_inputs.
ObservabilityMatrix observability_matrix_bcn(const Bcn& sys, const InputSequence& test_inputs);

/// A walk from x0 visiting input/state pairs.
struct CoverWalk {
  InputSequence inputs;          // u_0 .. u_T
  IndexSequence states;          // x_0 .. x_{T+1}
  std::vector<std::pair<Index, Index>> uncovered;  // (u, x) pairs never visited

  bool complete() const { return uncovered.empty(); }
};

/// Greedy walk: take the smallest unused input at the current state, else
/// move along a shortest path to the nearest state that still has one.
CoverWalk build_cover_sequence(const Bcn& sys, Index x0);

/// (u, x) pairs visited by the walk under inputs from x0.
std::vector<std::pair<Index, Index>> visited_pairs(const Bcn& sys, Index x0,
                                                   const InputSequence& inputs);

}  // namespace bcnid
