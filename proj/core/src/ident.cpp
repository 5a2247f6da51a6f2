#include "bcnid/ident.hpp"

#include <algorithm>
#include <set>

#include "bcnid/error.hpp"

namespace bcnid {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
    case CaseTag::Case4: return "Case4";
  }
  return "Case1";
}

CaseTag case_from_string(const std::string& text) {
  if (text == "Case1" || text == "1") return CaseTag::Case1;
  if (text == "Case2" || text == "2") return CaseTag::Case2;
  if (text == "Case3" || text == "3") return CaseTag::Case3;
  if (text == "Case4" || text == "4") return CaseTag::Case4;
  throw Error("unknown case tag '" + text + "'");
}

std::string to_string(SignatureKind kind) {
  switch (kind) {
    case SignatureKind::EffectiveBN: return "EffectiveBN";
    case SignatureKind::O3Window: return "O3Window";
    case SignatureKind::O1DataArray: return "O1DataArray";
  }
  return "EffectiveBN";
}

void SampleSet::validate() const {
  constexpr std::size_t kMaxArity = 20;
  if (m > kMaxArity || l > kMaxArity || (n && *n > kMaxArity)) throw LimitExceeded("sample dimensions too large");
  const bool bn_case = case_tag == CaseTag::Case1 || case_tag == CaseTag::Case2;
  if (bn_case && m != 0) throw DataInconsistency(to_string(case_tag) + " data must come from a network without inputs");
  if ((case_tag == CaseTag::Case1 || case_tag == CaseTag::Case3) && groups.size() != 1)
    throw DataInconsistency(to_string(case_tag) + " data must hold exactly one group");
  if (groups.empty()) throw DataInconsistency("sample set has no groups");
  const std::size_t nu = std::size_t{1} << m, ny = std::size_t{1} << l;
  std::set<std::string> ids;
  for (const auto& g : groups) {
    if (!ids.insert(g.id).second) throw DataInconsistency("duplicate group id '" + g.id + "'");
    for (const auto& mem : g.members) {
      if (mem.outputs.empty()) throw DataInconsistency("member of group '" + g.id + "' has no outputs");
      const bool free_length = m == 0 && mem.inputs.empty();
      if (!free_length && mem.outputs.size() != mem.inputs.size() + 1)
        throw DataInconsistency("member of group '" + g.id + "' needs one more output than inputs");
      for (Index u : mem.inputs)
        if (u < 1 || u > nu) throw DataInconsistency("input index " + std::to_string(u) + " out of range");
      for (Index y : mem.outputs)
        if (y < 1 || y > ny) throw DataInconsistency("output index " + std::to_string(y) + " out of range");
    }
  }
}

const SampleGroup* SampleSet::find_group(const std::string& id) const {
  for (const auto& g : groups)
    if (g.id == id) return &g;
  return nullptr;
}

Index SignatureTable::find(const OutputSequence& sig) const {
  auto it = labels_.find(sig);
  return it == labels_.end() ? 0 : it->second;
}

Index SignatureTable::insert(const OutputSequence& sig) {
  auto [it, fresh] = labels_.try_emplace(sig, signatures_.size() + 1);
  if (fresh) signatures_.push_back(sig);
  return it->second;
}

std::optional<std::size_t> IdentResult::n() const {
  if (state_count == 0 || (state_count & (state_count - 1)) != 0) return std::nullopt;
  std::size_t k = 0;
  while ((std::size_t{1} << k) < state_count) ++k;
  return k;
}

Bcn IdentResult::to_bcn() const {
  if (!complete) throw DataInconsistency("identification is partial; unknown columns remain");
  const auto k = n();
  if (!k) throw DimensionError(std::to_string(state_count) + " identified states is not a power of two");
  return Bcn(*k, m, l, LogicalMatrix(state_count, F), LogicalMatrix(std::size_t{1} << l, H));
}

std::vector<std::pair<Index, Index>> IdentResult::unknown_f_columns() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index u = 1; u <= input_count(); ++u)
    for (Index x = 1; x <= state_count; ++x)
      if (f(u, x) == 0) out.emplace_back(u, x);
  return out;
}

std::vector<Index> IdentResult::unknown_h_columns() const {
  std::vector<Index> out;
  for (Index x = 1; x <= state_count; ++x)
    if (H[x - 1] == 0) out.push_back(x);
  return out;
}

std::size_t replay_mismatches(const IdentResult& result, const SampleSet& data) {
  std::size_t bad = 0;
  for (std::size_t g = 0; g < data.groups.size() && g < result.group_initial.size(); ++g) {
    if (result.group_initial[g] == 0) continue;
    for (const auto& mem : data.groups[g].members) {
      const std::size_t steps = mem.inputs.empty() ? mem.outputs.size() - 1 : mem.inputs.size();
      Index x = result.group_initial[g];
      for (std::size_t t = 0;; ++t) {
        const Index y = result.H[x - 1];
        if (y != 0 && y != mem.outputs[t]) ++bad;
        if (t == steps) break;
        const Index u = mem.inputs.empty() ? 1 : mem.inputs[t];
        x = result.f(u, x);
        if (x == 0) break;
      }
    }
  }
  return bad;
}

namespace {

void assign(std::vector<Index>& column, std::size_t k, Index value, const char* what) {
  if (column[k] != 0 && column[k] != value) {
    throw DataInconsistency(std::string(what) + " column " + std::to_string(k + 1) +
                            " witnessed with two values (" + std::to_string(column[k]) + " and " +
                            std::to_string(value) + ")");
  }
  column[k] = value;
}

std::size_t expected_states(const SampleSet& data, std::size_t found) {
  if (!data.n) return found;
  const std::size_t full = std::size_t{1} << *data.n;
  if (found > full) {
    throw DataInconsistency(std::to_string(found) + " distinct signatures exceed 2^n = " +
                            std::to_string(full));
  }
  return full;
}

bool all_known(const IdentResult& r) {
  return std::find(r.F.begin(), r.F.end(), Index{0}) == r.F.end() &&
         std::find(r.H.begin(), r.H.end(), Index{0}) == r.H.end();
}

// ---- window decoding for networks without inputs ---------------------------

std::size_t bn_window(const SampleSet& data, const std::optional<std::size_t>& window) {
  if (window) {
    if (*window == 0) throw DimensionError("window must be positive");
    return *window;
  }
  if (!data.n) throw Error("window length is required when n is not given");
  return std::size_t{1} << *data.n;
}

void require_bn_data(const SampleSet& data) {
  data.validate();
  if (data.m != 0) throw NetworkKindError("window decoding needs data from a network without inputs");
}

// Labels of the windows starting at t = 0 .. |outputs| - window.
IndexSequence decode_windows(const OutputSequence& ys, std::size_t window, SignatureTable& table) {
  if (ys.size() < window) {
    throw DataInconsistency("output sequence of length " + std::to_string(ys.size()) +
                            " is shorter than the window " + std::to_string(window));
  }
  IndexSequence labels;
  for (std::size_t t = 0; t + window <= ys.size(); ++t)
    labels.push_back(table.insert(OutputSequence(ys.begin() + static_cast<std::ptrdiff_t>(t),
                                                 ys.begin() + static_cast<std::ptrdiff_t>(t + window))));
  return labels;
}

// ---- probe decoding for control networks ------------------------------------

// A member whose inputs end in test s reveals the signature of the state
// reached by the remaining prefix: the outputs from the end of the prefix on.
// The signature of a prefix concatenates these windows over all tests.
class ProbeDecoder {
 public:
  ProbeDecoder(const SampleSet& data, std::vector<InputSequence> tests, SignatureKind kind,
               std::optional<SignatureTable> seed)
      : data_(data), tests_(std::move(tests)), table_(seed ? std::move(*seed) : SignatureTable(kind)) {
    if (table_.kind() != kind) throw Error("seed table holds signatures of another kind");
    if (tests_.empty() || tests_.front().empty()) throw DimensionError("test sequences must be nonempty");
    for (const auto& t : tests_)
      if (t.size() != tests_.front().size()) throw DimensionError("test sequences differ in length");
    groups_.resize(data_.groups.size());
  }

  void decode_group(std::size_t g) {
    auto& gs = groups_[g];
    gs.selected = true;
    const std::size_t len = tests_.front().size();
    std::set<InputSequence> test_set(tests_.begin(), tests_.end());
    std::set<InputSequence> seen_prefix;
    std::vector<InputSequence> prefixes;
    for (const auto& mem : data_.groups[g].members) {
      auto [it, fresh] = gs.by_inputs.try_emplace(mem.inputs, &mem);
      if (!fresh && it->second->outputs != mem.outputs)
        throw DataInconsistency("group '" + data_.groups[g].id + "' logs one input sequence with two outputs");
      if (mem.inputs.size() < len) continue;
      const auto cut = mem.inputs.end() - static_cast<std::ptrdiff_t>(len);
      if (!test_set.count(InputSequence(cut, mem.inputs.end()))) continue;
      InputSequence prefix(mem.inputs.begin(), cut);
      if (seen_prefix.insert(prefix).second) prefixes.push_back(std::move(prefix));
    }
    for (const auto& prefix : prefixes) {
      OutputSequence sig;
      bool whole = true;
      for (const auto& t : tests_) {
        InputSequence key = prefix;
        key.insert(key.end(), t.begin(), t.end());
        auto it = gs.by_inputs.find(key);
        if (it == gs.by_inputs.end()) {
          whole = false;
          break;
        }
        const auto& ys = it->second->outputs;
        sig.insert(sig.end(), ys.begin() + static_cast<std::ptrdiff_t>(prefix.size()), ys.end());
      }
      if (!whole) continue;
      gs.labels.emplace(prefix, table_.insert(sig));
      gs.order.push_back(prefix);
    }
  }

  const SignatureTable& table() const { return table_; }

  IdentResult result(const std::optional<InputSequence>& walk) const {
    IdentResult r;
    r.m = data_.m;
    r.l = data_.l;
    r.table = table_;
    r.state_count = expected_states(data_, table_.size());
    r.F.assign(r.input_count() * r.state_count, 0);
    r.H.assign(r.state_count, 0);
    r.group_initial.assign(data_.groups.size(), 0);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      const auto& gs = groups_[g];
      if (!gs.selected) continue;
      for (const auto& prefix : gs.order) {
        const Index x = gs.labels.at(prefix);
        assign(r.H, x - 1, table_[x].front(), "H");
        InputSequence next = prefix;
        next.push_back(0);
        for (Index u = 1; u <= r.input_count(); ++u) {
          next.back() = u;
          auto it = gs.labels.find(next);
          if (it != gs.labels.end()) assign(r.F, (u - 1) * r.state_count + (x - 1), it->second, "F");
        }
      }
      if (auto it = gs.labels.find({}); it != gs.labels.end()) r.group_initial[g] = it->second;

      InputSequence path;
      if (walk && g == first_selected()) {
        path = *walk;
      } else {
        for (const auto& prefix : gs.order)
          if (prefix.size() > path.size()) path = prefix;
      }
      IndexSequence seq;
      for (std::size_t t = 0; t <= path.size(); ++t) {
        auto it = gs.labels.find(InputSequence(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(t)));
        seq.push_back(it == gs.labels.end() ? 0 : it->second);
      }
      if (walk && g == first_selected() && std::find(seq.begin(), seq.end(), Index{0}) != seq.end()) {
        const auto t = static_cast<std::size_t>(std::find(seq.begin(), seq.end(), Index{0}) - seq.begin());
        throw DataInconsistency("no signature for the walk position t = " + std::to_string(t));
      }
      r.state_sequences.push_back(std::move(seq));
    }
    r.complete = all_known(r) && r.state_count == table_.size();
    return r;
  }

 private:
  struct GroupState {
    bool selected = false;
    std::map<InputSequence, const SampleMember*> by_inputs;
    std::map<InputSequence, Index> labels;
    std::vector<InputSequence> order;
  };

  std::size_t first_selected() const {
    for (std::size_t g = 0; g < groups_.size(); ++g)
      if (groups_[g].selected) return g;
    return groups_.size();
  }

  const SampleSet& data_;
  std::vector<InputSequence> tests_;
  SignatureTable table_;
  std::vector<GroupState> groups_;
};

// The common test suffix of a one-test protocol, read from the data.
InputSequence infer_test(const SampleSet& data, std::size_t test_len) {
  if (test_len == 0) throw DimensionError("test length must be positive");
  std::optional<InputSequence> test;
  for (const auto& g : data.groups)
    for (const auto& mem : g.members) {
      if (mem.inputs.size() < test_len)
        throw DataInconsistency("member with " + std::to_string(mem.inputs.size()) +
                                " inputs is shorter than the test");
      InputSequence suffix(mem.inputs.end() - static_cast<std::ptrdiff_t>(test_len), mem.inputs.end());
      if (!test) test = suffix;
      else if (*test != suffix) throw DataInconsistency("members do not end in a common test sequence");
    }
  if (!test) throw DataInconsistency("sample set has no members");
  return *test;
}

void require_single_group(const SampleSet& data) {
  data.validate();
  if (data.groups.size() != 1) throw DataInconsistency("single-sample identification needs exactly one group");
}

void check_test_dims(const SampleSet& data, const O1Test& test) {
  test.check_shape();
  if (test.m != data.m) throw DimensionError("test input dimension does not match the data");
  if (data.n && test.n != *data.n) throw DimensionError("test state dimension does not match the data");
}

}  // namespace

SignatureTable retrieve_effective_sequences(const SampleSet& data, std::size_t window) {
  require_bn_data(data);
  if (window == 0) throw DimensionError("window must be positive");
  SignatureTable table(SignatureKind::EffectiveBN);
  for (const auto& g : data.groups)
    for (const auto& mem : g.members) decode_windows(mem.outputs, window, table);
  return table;
}

IdentResult identify_bn(const SampleSet& data, const BnOptions& options) {
  require_bn_data(data);
  const std::size_t window = bn_window(data, options.window);
  SignatureTable table(SignatureKind::EffectiveBN);
  std::vector<IndexSequence> sequences;
  for (const auto& g : data.groups)
    for (const auto& mem : g.members) sequences.push_back(decode_windows(mem.outputs, window, table));

  IdentResult r;
  r.m = 0;
  r.l = data.l;
  const std::size_t found = table.size();
  for (Index a : options.aliases)
    if (a < 1 || a > found) throw DimensionError("alias of unknown label " + std::to_string(a));
  r.state_count = expected_states(data, found + options.aliases.size());
  r.F.assign(r.state_count, 0);
  r.H.assign(r.state_count, 0);
  for (Index x = 1; x <= found; ++x) r.H[x - 1] = table[x].front();
  for (const auto& seq : sequences)
    for (std::size_t t = 0; t + 1 < seq.size(); ++t) assign(r.F, seq[t] - 1, seq[t + 1], "F");
  for (std::size_t k = 0; k < options.aliases.size(); ++k) {
    r.F[found + k] = r.F[options.aliases[k] - 1];
    r.H[found + k] = r.H[options.aliases[k] - 1];
  }
  std::size_t member = 0;
  for (const auto& g : data.groups) {
    r.group_initial.push_back(g.members.empty() ? 0 : sequences[member].front());
    member += g.members.size();
  }
  r.state_sequences = std::move(sequences);
  r.table = std::move(table);
  r.complete = all_known(r) && r.state_count == found + options.aliases.size();
  return r;
}

IdentResult identify_bn_state_observed(const SampleSet& data) {
  require_bn_data(data);
  if (data.n && *data.n != data.l) throw DimensionError("state-observed data needs l = n");
  IdentResult r;
  r.m = 0;
  r.l = data.l;
  r.state_count = std::size_t{1} << data.l;
  r.F.assign(r.state_count, 0);
  r.H.resize(r.state_count);
  for (Index x = 1; x <= r.state_count; ++x) {
    r.H[x - 1] = x;
    r.table.insert({x});
  }
  for (const auto& g : data.groups) {
    r.group_initial.push_back(g.members.empty() ? 0 : g.members.front().outputs.front());
    for (const auto& mem : g.members) {
      for (std::size_t t = 0; t + 1 < mem.outputs.size(); ++t)
        assign(r.F, mem.outputs[t] - 1, mem.outputs[t + 1], "F");
      r.state_sequences.push_back(mem.outputs);
    }
  }
  r.complete = all_known(r);
  return r;
}

IdentResult identify_bn_overlap(const SignatureTable& table, std::size_t l) {
  if (table.kind() != SignatureKind::EffectiveBN) throw Error("overlap identification needs effective output sequences");
  if (table.size() == 0) throw DataInconsistency("empty signature table");
  const std::size_t len = table[1].size();
  if (len < 2) throw DimensionError("overlap identification needs signatures of length >= 2");
  for (const auto& sig : table.signatures())
    if (sig.size() != len) throw DimensionError("signatures differ in length");

  IdentResult r;
  r.m = 0;
  r.l = l;
  r.state_count = table.size();
  r.F.assign(r.state_count, 0);
  r.H.assign(r.state_count, 0);
  r.table = table;
  for (Index i = 1; i <= r.state_count; ++i) {
    const auto& yi = table[i];
    r.H[i - 1] = yi.front();
    for (Index j = 1; j <= r.state_count; ++j) {
      if (!std::equal(yi.begin() + 1, yi.end(), table[j].begin())) continue;
      if (r.F[i - 1] != 0) {
        throw DataInconsistency("signature " + std::to_string(i) + " overlaps both " +
                                std::to_string(r.F[i - 1]) + " and " + std::to_string(j));
      }
      r.F[i - 1] = j;
    }
    if (r.F[i - 1] == 0) throw DataInconsistency("signature " + std::to_string(i) + " has no successor");
  }
  r.complete = true;
  return r;
}

SignatureTable retrieve_o3_signatures(const SampleSet& data, std::size_t test_len) {
  require_single_group(data);
  ProbeDecoder dec(data, {infer_test(data, test_len)}, SignatureKind::O3Window, std::nullopt);
  dec.decode_group(0);
  return dec.table();
}

IdentResult identify_bcn_o3(const SampleSet& data, const InputSequence& cover, std::size_t test_len) {
  require_single_group(data);
  ProbeDecoder dec(data, {infer_test(data, test_len)}, SignatureKind::O3Window, std::nullopt);
  dec.decode_group(0);
  return dec.result(cover);
}

SignatureTable retrieve_o1_arrays(const SampleSet& data, const O1Test& test) {
  require_single_group(data);
  check_test_dims(data, test);
  ProbeDecoder dec(data, test.tests, SignatureKind::O1DataArray, std::nullopt);
  dec.decode_group(0);
  return dec.table();
}

IdentResult identify_bcn_o1_single(const SampleSet& data, const InputSequence& cover, const O1Test& test) {
  require_single_group(data);
  check_test_dims(data, test);
  ProbeDecoder dec(data, test.tests, SignatureKind::O1DataArray, std::nullopt);
  dec.decode_group(0);
  return dec.result(cover);
}

IdentResult identify_bcn_o1_multi(const SampleSet& data, const O1Test& test,
                                  const std::optional<SignatureTable>& seed) {
  data.validate();
  check_test_dims(data, test);
  ProbeDecoder dec(data, test.tests, SignatureKind::O1DataArray, seed);
  for (std::size_t g = 0; g < data.groups.size(); ++g) dec.decode_group(g);
  return dec.result(std::nullopt);
}

IdentResult identify_from_p0(const SampleSet& data, const O1Test& test,
                             const std::vector<std::string>& p0_groups) {
  data.validate();
  check_test_dims(data, test);
  if (p0_groups.empty()) throw DataInconsistency("initial set is empty");
  ProbeDecoder dec(data, test.tests, SignatureKind::O1DataArray, std::nullopt);
  for (std::size_t g = 0; g < data.groups.size(); ++g)
    if (std::find(p0_groups.begin(), p0_groups.end(), data.groups[g].id) != p0_groups.end())
      dec.decode_group(g);
  for (const auto& id : p0_groups)
    if (!data.find_group(id)) throw DataInconsistency("no group '" + id + "' in the data");
  return dec.result(std::nullopt);
}

}  // namespace bcnid
