#pragma once

/// @file dynamics.hpp
/// Networks in algebraic form x(t+1) = F u(t) x(t), y(t) = H x(t), their
/// simulation, coordinate changes and equivalence.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bcnid/stp.hpp"

namespace bcnid {

/// 1-based delta indices in time order.
using IndexSequence = std::vector<Index>;
using InputSequence = IndexSequence;
using OutputSequence = IndexSequence;

/// A Boolean control network with n state, m input and l output nodes.
/// A Boolean network is the m = 0 case.
class Bcn {
 public:
  Bcn(std::size_t n, std::size_t m, std::size_t l, LogicalMatrix f, LogicalMatrix h);

  static Bcn network(std::size_t n, std::size_t l, LogicalMatrix f, LogicalMatrix h) {
    return Bcn(n, 0, l, std::move(f), std::move(h));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t l() const noexcept { return l_; }
  std::size_t state_count() const noexcept { return std::size_t{1} << n_; }
  std::size_t input_count() const noexcept { return std::size_t{1} << m_; }
  std::size_t output_count() const noexcept { return std::size_t{1} << l_; }
  bool is_bn() const noexcept { return m_ == 0; }

  const LogicalMatrix& F() const noexcept { return f_; }
  const LogicalMatrix& H() const noexcept { return h_; }

  /// Successor of state x under input u (both 1-based). Unchecked.
  Index next(Index u, Index x) const { return f_[(u - 1) * state_count() + (x - 1)]; }
  /// Output index of state x. Unchecked.
  Index output(Index x) const { return h_[x - 1]; }

  friend bool operator==(const Bcn&, const Bcn&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::size_t l_;
  LogicalMatrix f_;
  LogicalMatrix h_;
};

/// States, inputs and outputs of one run. inputs[t] drives states[t] to
/// states[t+1]; outputs[t] = H states[t].
struct Trajectory {
  IndexSequence inputs;
  IndexSequence states;
  IndexSequence outputs;
};

/// A coordinate change ω = G x on Δ_{2^n}, stored as the image of each state:
/// G δ^i = δ^{image(i)}.
class PermutationMap {
 public:
  explicit PermutationMap(std::vector<Index> images);
  static PermutationMap identity(std::size_t size);

  std::size_t size() const noexcept { return images_.size(); }
  Index operator()(Index i) const { return images_[i - 1]; }
  std::span<const Index> images() const noexcept { return images_; }

  PermutationMap inverse() const;
  LogicalMatrix matrix() const { return LogicalMatrix(size(), images_); }

  friend bool operator==(const PermutationMap&, const PermutationMap&) = default;

 private:
  std::vector<Index> images_;
};

/// x(t+1) = F u x. For a BN pass u = δ_1^1.
DeltaVector step(const Bcn& sys, const DeltaVector& u, const DeltaVector& x);
/// BN step.
DeltaVector step(const Bcn& sys, const DeltaVector& x);

/// Runs from x0 under the given inputs (1-based indices); for a BN pass as
/// many 1s as steps wanted.
Trajectory simulate(const Bcn& sys, Index x0, std::span<const Index> inputs);

/// Output sequence only; length inputs.size() + 1.
OutputSequence run_outputs(const Bcn& sys, Index x0, std::span<const Index> inputs);

/// (G F (I ⊗ G^T), H G^T).
Bcn transform(const Bcn& sys, const PermutationMap& g);

/// Some G with transform(a, G) == b, or nullopt when a and b are not in the
/// same equivalence class.
std::optional<PermutationMap> equivalent(const Bcn& a, const Bcn& b);

}  // namespace bcnid
