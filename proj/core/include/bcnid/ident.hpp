#pragma once

/// @file ident.hpp
/// Identification of (F, H) from logged input/output samples.
///
/// Two decoders do all the work. Boolean networks are decoded by sliding a
/// window over each output sequence: every distinct window content is one
/// state. Control networks are decoded from probe experiments: a member whose
/// inputs are a prefix followed by a test sequence reveals, through the
/// outputs after the prefix, the signature of the state the prefix reached.
/// Signatures are labeled in order of first appearance.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcnid/analysis.hpp"
#include "bcnid/dynamics.hpp"

namespace bcnid {

enum class CaseTag { Case1, Case2, Case3, Case4 };

std::string to_string(CaseTag tag);
CaseTag case_from_string(const std::string& text);

struct SampleMember {
  InputSequence inputs;
  OutputSequence outputs;

  friend bool operator==(const SampleMember&, const SampleMember&) = default;
};

/// Members sharing one hidden initial state.
struct SampleGroup {
  std::string id;
  std::vector<SampleMember> members;

  friend bool operator==(const SampleGroup&, const SampleGroup&) = default;
};

struct SampleSet {
  CaseTag case_tag = CaseTag::Case1;
  std::optional<std::size_t> n;  // the identifier need not know it
  std::size_t m = 0;
  std::size_t l = 0;
  std::vector<SampleGroup> groups;

  /// Shapes and index ranges. Members of a network without inputs may leave
  /// inputs empty and log any number of outputs.
  void validate() const;

  const SampleGroup* find_group(const std::string& id) const;

  friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

enum class SignatureKind { EffectiveBN, O3Window, O1DataArray };

std::string to_string(SignatureKind kind);

/// Distinct state signatures, label i+1 for position i. Data arrays are
/// stored flattened (their windows have a common length).
class SignatureTable {
 public:
  explicit SignatureTable(SignatureKind kind) : kind_(kind) {}

  SignatureKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return signatures_.size(); }
  const std::vector<OutputSequence>& signatures() const noexcept { return signatures_; }
  const OutputSequence& operator[](Index label) const { return signatures_[label - 1]; }

  /// Label of sig, or 0.
  Index find(const OutputSequence& sig) const;
  /// Label of sig, appending it when unseen.
  Index insert(const OutputSequence& sig);

  friend bool operator==(const SignatureTable& a, const SignatureTable& b) {
    return a.kind_ == b.kind_ && a.signatures_ == b.signatures_;
  }

 private:
  SignatureKind kind_;
  std::vector<OutputSequence> signatures_;
  std::map<OutputSequence, Index> labels_;
};

/// A reconstructed network whose columns may be unknown (stored as 0).
struct IdentResult {
  std::size_t m = 0;
  std::size_t l = 0;
  std::size_t state_count = 0;
  std::vector<Index> F;  // column (u-1)*state_count + (x-1)
  std::vector<Index> H;
  SignatureTable table{SignatureKind::EffectiveBN};
  bool complete = false;
  /// Decoded initial state per group (0 when the data does not reveal it).
  std::vector<Index> group_initial;
  /// Decoded state sequence per member (BN) or along the probed walk of each
  /// group (control networks); 0 marks positions that were not decoded.
  std::vector<IndexSequence> state_sequences;

  std::size_t input_count() const noexcept { return std::size_t{1} << m; }
  Index f(Index u, Index x) const { return F[(u - 1) * state_count + (x - 1)]; }

  /// log2(state_count) when it is a power of two.
  std::optional<std::size_t> n() const;

  /// Requires a complete result with a power-of-two state count.
  Bcn to_bcn() const;

  /// (u, x) pairs whose successor is unknown.
  std::vector<std::pair<Index, Index>> unknown_f_columns() const;
  std::vector<Index> unknown_h_columns() const;
};

/// Positions where re-running a member from its group's decoded initial
/// state disagrees with the logged outputs. Runs stop at the first unknown
/// column; groups without a decoded initial state are skipped.
std::size_t replay_mismatches(const IdentResult& result, const SampleSet& data);

// ---- Boolean networks -------------------------------------------------------

struct BnOptions {
  /// Window length; 2^n when omitted and n is known.
  std::optional<std::size_t> window;
  /// Extra states appended after the signatures, each a copy of the F and H
  /// columns of the given label. Lets a caller reinstate states that share
  /// a signature with another one (unobservable but identifiable systems).
  std::vector<Index> aliases;
};

SignatureTable retrieve_effective_sequences(const SampleSet& data, std::size_t window);

IdentResult identify_bn(const SampleSet& data, const BnOptions& options = {});

/// Outputs are the states themselves (H = I).
IdentResult identify_bn_state_observed(const SampleSet& data);

/// F read off from overlaps of full-length signatures: x_i -> x_j when the
/// last 2^n - 1 outputs of Y_i equal the first 2^n - 1 outputs of Y_j.
IdentResult identify_bn_overlap(const SignatureTable& table, std::size_t l);

// ---- Control networks -------------------------------------------------------

SignatureTable retrieve_o3_signatures(const SampleSet& data, std::size_t test_len);

/// cover is the walk the prefixes follow; the decoded state sequence is
/// reported along it.
IdentResult identify_bcn_o3(const SampleSet& data, const InputSequence& cover,
                            std::size_t test_len);

SignatureTable retrieve_o1_arrays(const SampleSet& data, const O1Test& test);

IdentResult identify_bcn_o1_single(const SampleSet& data, const InputSequence& cover,
                                   const O1Test& test);

/// seed fixes the labels of known data arrays; unseen arrays are appended.
IdentResult identify_bcn_o1_multi(const SampleSet& data, const O1Test& test,
                                  const std::optional<SignatureTable>& seed = std::nullopt);

/// Restricted to the given groups (the initial set P0).
IdentResult identify_from_p0(const SampleSet& data, const O1Test& test,
                             const std::vector<std::string>& p0_groups);

}  // namespace bcnid
