#include "bcnid/dynamics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "bcnid/error.hpp"

namespace bcnid {

Bcn::Bcn(std::size_t n, std::size_t m, std::size_t l, LogicalMatrix f, LogicalMatrix h)
    : n_(n), m_(m), l_(l), f_(std::move(f)), h_(std::move(h)) {
  if (n_ + m_ >= 8 * sizeof(std::size_t) - 1 || l_ >= 8 * sizeof(std::size_t) - 1) {
    throw LimitExceeded("network dimensions too large");
  }
  if (f_.rows() != state_count() || f_.cols() != input_count() * state_count()) {
    throw DimensionError("F must be 2^n x 2^(m+n), got " + std::to_string(f_.rows()) + "x" +
                         std::to_string(f_.cols()));
  }
  if (h_.rows() != output_count() || h_.cols() != state_count()) {
    throw DimensionError("H must be 2^l x 2^n, got " + std::to_string(h_.rows()) + "x" +
                         std::to_string(h_.cols()));
  }
}

PermutationMap::PermutationMap(std::vector<Index> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (Index i : images_) {
    if (i < 1 || i > images_.size() || seen[i]) throw DimensionError("not a permutation");
    seen[i] = true;
  }
}

PermutationMap PermutationMap::identity(std::size_t size) {
  std::vector<Index> img(size);
  std::iota(img.begin(), img.end(), Index{1});
  return PermutationMap(std::move(img));
}

PermutationMap PermutationMap::inverse() const {
  std::vector<Index> inv(size());
  for (std::size_t i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return PermutationMap(std::move(inv));
}

DeltaVector step(const Bcn& sys, const DeltaVector& u, const DeltaVector& x) {
  if (u.dim() != sys.input_count() || x.dim() != sys.state_count()) {
    throw DimensionError("step: expected u in Delta_" + std::to_string(sys.input_count()) +
                         " and x in Delta_" + std::to_string(sys.state_count()));
  }
  return DeltaVector(sys.state_count(), sys.next(u.index(), x.index()));
}

DeltaVector step(const Bcn& sys, const DeltaVector& x) {
  if (!sys.is_bn()) throw NetworkKindError("step without input on a network with inputs");
  return step(sys, DeltaVector(1, 1), x);
}

namespace {

void check_run(const Bcn& sys, Index x0, std::span<const Index> inputs) {
  if (x0 < 1 || x0 > sys.state_count()) {
    throw DimensionError("initial state " + std::to_string(x0) + " outside [1, " +
                         std::to_string(sys.state_count()) + "]");
  }
  for (Index u : inputs) {
    if (u < 1 || u > sys.input_count()) {
      throw DimensionError("input " + std::to_string(u) + " outside [1, " +
                           std::to_string(sys.input_count()) + "]");
    }
  }
}

}  // namespace

Trajectory simulate(const Bcn& sys, Index x0, std::span<const Index> inputs) {
  check_run(sys, x0, inputs);
  Trajectory tr;
  tr.inputs.assign(inputs.begin(), inputs.end());
  tr.states.reserve(inputs.size() + 1);
  tr.outputs.reserve(inputs.size() + 1);
  Index x = x0;
  tr.states.push_back(x);
  tr.outputs.push_back(sys.output(x));
  for (Index u : inputs) {
    x = sys.next(u, x);
    tr.states.push_back(x);
    tr.outputs.push_back(sys.output(x));
  }
  return tr;
}

OutputSequence run_outputs(const Bcn& sys, Index x0, std::span<const Index> inputs) {
  check_run(sys, x0, inputs);
  OutputSequence out;
  out.reserve(inputs.size() + 1);
  Index x = x0;
  out.push_back(sys.output(x));
  for (Index u : inputs) {
    x = sys.next(u, x);
    out.push_back(sys.output(x));
  }
  return out;
}

Bcn transform(const Bcn& sys, const PermutationMap& g) {
  const std::size_t ns = sys.state_count();
  if (g.size() != ns) {
    throw DimensionError("coordinate change of size " + std::to_string(g.size()) +
                         " on a network with " + std::to_string(ns) + " states");
  }
  std::vector<Index> f(sys.F().cols());
  std::vector<Index> h(ns);
  for (Index u = 1; u <= sys.input_count(); ++u) {
    for (Index x = 1; x <= ns; ++x) f[(u - 1) * ns + g(x) - 1] = g(sys.next(u, x));
  }
  for (Index x = 1; x <= ns; ++x) h[g(x) - 1] = sys.output(x);
  return Bcn(sys.n(), sys.m(), sys.l(), LogicalMatrix(ns, std::move(f)),
             LogicalMatrix(sys.output_count(), std::move(h)));
}

namespace {

// Joint colour refinement of the two state sets: a colour is the output
// index, refined by the colours of the successors under every input.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(const Bcn& a,
                                                                             const Bcn& b) {
  const std::size_t ns = a.state_count();
  const std::size_t nu = a.input_count();
  std::vector<std::size_t> ca(ns), cb(ns);
  for (Index x = 1; x <= ns; ++x) {
    ca[x - 1] = a.output(x);
    cb[x - 1] = b.output(x);
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    auto key = [&](const Bcn& s, const std::vector<std::size_t>& c, Index x) {
      std::vector<std::size_t> k{c[x - 1]};
      for (Index u = 1; u <= nu; ++u) k.push_back(c[s.next(u, x) - 1]);
      return k;
    };
    std::vector<std::size_t> na(ns), nb(ns);
    for (Index x = 1; x <= ns; ++x) na[x - 1] = ids.try_emplace(key(a, ca, x), ids.size()).first->second;
    for (Index x = 1; x <= ns; ++x) nb[x - 1] = ids.try_emplace(key(b, cb, x), ids.size()).first->second;
    ca.swap(na);
    cb.swap(nb);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {ca, cb};
}

class IsoSearch {
 public:
  IsoSearch(const Bcn& a, const Bcn& b, std::vector<std::size_t> ca, std::vector<std::size_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        image_(a.state_count() + 1, 0), preimage_(a.state_count() + 1, 0) {}

  bool solve() {
    const std::size_t ns = a_.state_count();
    Index pick = 0;
    std::size_t best = ns + 1;
    for (Index x = 1; x <= ns; ++x) {
      if (image_[x] != 0) continue;
      std::size_t cand = 0;
      for (Index y = 1; y <= ns; ++y)
        if (preimage_[y] == 0 && cb_[y - 1] == ca_[x - 1]) ++cand;
      if (cand < best) {
        best = cand;
        pick = x;
      }
    }
    if (pick == 0) return true;
    for (Index y = 1; y <= ns; ++y) {
      if (preimage_[y] != 0 || cb_[y - 1] != ca_[pick - 1]) continue;
      const std::size_t mark = trail_.size();
      if (propagate(pick, y) && solve()) return true;
      undo(mark);
    }
    return false;
  }

  std::vector<Index> images() const { return {image_.begin() + 1, image_.end()}; }

 private:
  bool propagate(Index x, Index y) {
    std::vector<std::pair<Index, Index>> work{{x, y}};
    while (!work.empty()) {
      auto [p, q] = work.back();
      work.pop_back();
      if (image_[p] == q) continue;
      if (image_[p] != 0 || preimage_[q] != 0) return false;
      if (ca_[p - 1] != cb_[q - 1] || a_.output(p) != b_.output(q)) return false;
      image_[p] = q;
      preimage_[q] = p;
      trail_.push_back(p);
      for (Index u = 1; u <= a_.input_count(); ++u) work.emplace_back(a_.next(u, p), b_.next(u, q));
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Index p = trail_.back();
      trail_.pop_back();
      preimage_[image_[p]] = 0;
      image_[p] = 0;
    }
  }

  const Bcn& a_;
  const Bcn& b_;
  std::vector<std::size_t> ca_;
  std::vector<std::size_t> cb_;
  std::vector<Index> image_;
  std::vector<Index> preimage_;
  std::vector<Index> trail_;
};

}  // namespace

std::optional<PermutationMap> equivalent(const Bcn& a, const Bcn& b) {
  if (a.n() != b.n() || a.m() != b.m() || a.l() != b.l()) {
    throw DimensionError("equivalence needs networks of equal (n, m, l)");
  }
  auto [ca, cb] = refine_colours(a, b);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  IsoSearch search(a, b, std::move(ca), std::move(cb));
  if (!search.solve()) return std::nullopt;
  PermutationMap g(search.images());
  if (transform(a, g) != b) return std::nullopt;  // unreachable when the search is sound
  return g;
}

}  // namespace bcnid
