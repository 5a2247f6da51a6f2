// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any fails.

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"

using namespace bcnid;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
};

std::string seq(std::span<const Index> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s + "]";
}

// ---- 1 ----------------------------------------------------------------------

void compile_exactness(Outcome& o) {
  const Bcn sys = assemble(parse_network(read_text_file(fixtures::lac_source_path())));
  const Bcn ref = fixtures::lac();
  const bool f_ok = sys.F() == ref.F();
  const bool h_ok = sys.H() == ref.H();
  o.notes << "F " << (f_ok ? "matches" : "differs") << ", H " << (h_ok ? "matches" : "differs");
  if (!h_ok) o.notes << " (compiled H = " << seq(sys.H().indices()) << ", expected " << seq(ref.H().indices()) << ")";
  o.require(f_ok, "F");
  o.require(h_ok, "H");
}

// ---- 2 ----------------------------------------------------------------------

void bn8_case(Outcome& o) {
  const auto data = fixtures::bn8_data();
  const auto table = retrieve_effective_sequences(data, 8);
  o.require(table.signatures() == fixtures::bn8_signatures(), "eight signatures in order");
  const auto r = identify_bn(data);
  o.require(r.complete, "complete");
  o.require(r.complete && r.to_bcn() == fixtures::bn8(), "identified system");
  const Bcn relabeled = transform(fixtures::bn8(), PermutationMap(fixtures::bn8_relabeling()));
  o.require(relabeled == fixtures::bn8_relabeled(), "relabeled system");
  o.require(equivalent(fixtures::bn8(), fixtures::bn8_relabeled()).has_value(), "equivalence");
  o.notes << "8 signatures, F = " << seq(r.F) << ", H = " << seq(r.H);
}

// ---- 3 ----------------------------------------------------------------------

void bcn4_case(Outcome& o) {
  const Bcn plant_sys = fixtures::bcn4();
  const auto test = find_o3_test(plant_sys, 2);
  o.require(test && *test == fixtures::bcn4_test(), "O3-test (1,1)");

  const std::vector<std::vector<Index>> expected_o{{2, 1, 2, 1}, {1, 2, 2, 2}, {2, 2, 1, 1}};
  o.require(observability_matrix_bcn(fixtures::bcn4_identified(), fixtures::bcn4_test()).as_rows() == expected_o,
            "observability matrix of the identified system");

  Plant plant(plant_sys);
  CaseParams p;
  p.case_tag = CaseTag::Case3;
  p.initial_states = {1};
  p.test = O1Test{2, 1, {fixtures::bcn4_test()}};
  p.cover = fixtures::bcn4_cover();
  const auto log = gen_case(plant, p);
  std::vector<OutputSequence> outs;
  for (const auto& mem : log.data.groups.at(0).members) outs.push_back(mem.outputs);
  o.require(outs == fixtures::bcn4_members(), "twelve logged members");

  const auto r = identify_bcn_o3(log.data, fixtures::bcn4_cover(), 2);
  o.require(r.complete && r.to_bcn() == fixtures::bcn4_identified(), "identified system");
  o.require(r.complete && equivalent(r.to_bcn(), plant_sys).has_value(), "equivalence to the plant");
  const IndexSequence states{1, 2, 3, 1, 2, 4, 1, 2, 3, 2, 4, 2};
  o.require(!r.state_sequences.empty() && r.state_sequences.front() == states, "decoded state sequence");
  o.notes << "12 members, F = " << seq(r.F) << ", states = "
          << (r.state_sequences.empty() ? "-" : seq(r.state_sequences.front()));
}

// ---- 4 ----------------------------------------------------------------------

void twin_bn(Outcome& o) {
  const Bcn sys = fixtures::twin_bn();
  o.require(!is_observable_bn(sys), "unobservable");
  BnOptions opts;
  opts.window = 4;
  opts.aliases = {1};  // the run wraps back to a state with signature Y_1
  const auto r = identify_bn(fixtures::twin_bn_data(), opts);
  o.require(r.table.size() == 3, "three signatures");
  o.require(r.F == std::vector<Index>{2, 3, 3, 2} && r.H == std::vector<Index>{1, 2, 1, 1}, "identified system");
  o.require(r.complete && equivalent(r.to_bcn(), sys).has_value(), "equivalence");
  o.notes << r.table.size() << " signatures, F = " << seq(r.F) << ", H = " << seq(r.H);
}

// ---- 5 ----------------------------------------------------------------------

// Flattened data array of member block j (0 = bare) in group g.
OutputSequence lac_array(const SampleSet& data, std::size_t g, std::size_t j) {
  OutputSequence sig;
  const auto& members = data.groups.at(g).members;
  for (std::size_t s = 1; s <= 28; ++s) {
    const auto& ys = members.at(28 * j + s - 1).outputs;
    sig.insert(sig.end(), ys.begin() + (j == 0 ? 0 : 1), ys.end());
  }
  return sig;
}

void lac_case(Outcome& o) {
  const Bcn sys = fixtures::lac();
  const O1Test test = fixtures::lac_test();
  o.require(validate_o1_test(sys, test), "O1-test accepted");

  Plant plant(sys);
  CaseParams p;
  p.case_tag = CaseTag::Case4;
  p.test = test;
  const auto log = gen_case(plant, p);

  // (group, block j, outputs for s outside S, outputs for s in S)
  struct Line {
    std::size_t group, j;
    OutputSequence sc, s;
  };
  const std::vector<Line> lines{
      {1, 0, {8, 6}, {8, 8}},       {1, 1, {8, 6, 6}, {8, 6, 7}}, {1, 4, {8, 6, 6}, {8, 6, 7}},
      {1, 5, {8, 8, 6}, {8, 8, 8}}, {1, 7, {8, 3, 6}, {8, 3, 8}}, {1, 8, {8, 6, 6}, {8, 6, 5}},
      {2, 0, {6, 6}, {6, 8}},       {2, 6, {6, 8, 6}, {6, 8, 8}}, {3, 0, {3, 6}, {3, 8}},
      {3, 7, {3, 3, 6}, {3, 3, 8}}, {4, 0, {6, 6}, {6, 5}},       {4, 5, {6, 5, 6}, {6, 5, 3}},
      {4, 7, {6, 7, 6}, {6, 7, 3}}, {4, 8, {6, 6, 6}, {6, 6, 7}}, {5, 0, {5, 6}, {5, 3}},
      {5, 5, {5, 3, 6}, {5, 3, 8}}, {5, 7, {5, 6, 6}, {5, 6, 5}}, {6, 0, {6, 6}, {6, 3}},
      {6, 6, {6, 3, 6}, {6, 3, 8}}, {7, 0, {7, 6}, {7, 3}},       {7, 1, {7, 6, 6}, {7, 6, 7}},
      {7, 8, {7, 6, 6}, {7, 6, 5}}, {8, 0, {6, 6}, {6, 7}},       {8, 2, {6, 6, 6}, {6, 6, 7}},
      {8, 5, {6, 7, 6}, {6, 7, 3}}};
  std::size_t matched = 0;
  for (const auto& line : lines) {
    bool ok = true;
    for (std::size_t s = 1; s <= 28; ++s) {
      const auto& got = log.data.groups.at(line.group - 1).members.at(28 * line.j + s - 1).outputs;
      ok = ok && got == (fixtures::in_s(s) ? line.s : line.sc);
    }
    if (ok) ++matched;
    else o.notes << " [line g" << line.group << " j" << line.j << " differs]";
  }
  o.require(matched == lines.size(), "logged-data spot checks");

  const auto r = identify_bcn_o1_multi(log.data, test);
  o.require(r.complete && equivalent(r.to_bcn(), sys).has_value(), "equivalence to the plant");

  // Labels in the order of the true states that produced each data array.
  SignatureTable seed(SignatureKind::O1DataArray);
  for (auto [g, j] : std::vector<std::pair<std::size_t, std::size_t>>{
           {0, 0}, {0, 1}, {0, 7}, {0, 8}, {1, 0}, {3, 7}, {4, 0}, {5, 0}})
    seed.insert(lac_array(log.data, g, j));
  const auto rs = identify_bcn_o1_multi(log.data, test, seed);
  o.require(rs.complete && rs.to_bcn() == fixtures::lac_identified(), "state-order labeling reproduces the identified system");
  o.notes << matched << "/" << lines.size() << " spot-check lines (" << 28 * lines.size()
          << " sequences), first-appearance H = " << seq(r.H) << ", seeded H = " << seq(rs.H);
}

// ---- 6 ----------------------------------------------------------------------

void partial(Outcome& o) {
  const Bcn sys = fixtures::lac();
  const O1Test test = fixtures::lac_test();
  Plant plant(sys);
  CaseParams p;
  p.case_tag = CaseTag::Case4;
  p.test = test;
  p.initial_states = {8};
  p.reach_walks = true;
  const auto log = gen_case(plant, p);
  const auto r = identify_from_p0(log.data, test, {"g1"});

  // Independent reachability: breadth-first search over F from state 8.
  std::set<Index> reach{8};
  std::deque<Index> queue{8};
  while (!queue.empty()) {
    const Index x = queue.front();
    queue.pop_front();
    for (Index u = 1; u <= 8; ++u) {
      const Index y = sys.F()[(u - 1) * 8 + x - 1];
      if (reach.insert(y).second) queue.push_back(y);
    }
  }

  // Map labels to plant states through the data arrays.
  const auto arrays = data_arrays(sys, test);
  std::vector<Index> state_of(r.state_count + 1, 0);
  for (Index label = 1; label <= r.table.size(); ++label) {
    for (Index x = 1; x <= 8; ++x) {
      OutputSequence flat;
      for (const auto& w : arrays[x - 1]) flat.insert(flat.end(), w.begin(), w.end());
      if (flat == r.table[label]) state_of[label] = x;
    }
  }

  std::set<std::pair<Index, Index>> known_true, expected;
  bool values_ok = true;
  for (Index label = 1; label <= r.state_count; ++label)
    for (Index u = 1; u <= 8; ++u) {
      const Index y = r.f(u, label);
      if (y == 0) continue;
      if (state_of[label] == 0 || state_of[y] == 0) {
        values_ok = false;
        continue;
      }
      known_true.emplace(u, state_of[label]);
      values_ok = values_ok && sys.next(u, state_of[label]) == state_of[y];
    }
  for (Index x : reach)
    for (Index u = 1; u <= 8; ++u) expected.emplace(u, x);
  const std::size_t unknown = r.unknown_f_columns().size();
  o.require(known_true == expected, "known columns are exactly the reachable ones");
  o.require(unknown == 64 - expected.size(), "unknown column count");
  o.require(values_ok, "known columns agree with the plant");
  o.require(!r.complete, "reported as partial");
  const std::vector<Index> reach_v(reach.begin(), reach.end());
  o.require(reach_v == reachable_set(sys, {8}), "library reachable set agrees with the oracle");
  o.notes << "reachable " << seq(reach_v) << ", " << unknown << " unknown F columns";
}

// ---- 7 ----------------------------------------------------------------------

using Dense = std::vector<std::vector<std::int64_t>>;

Dense naive_mul(const Dense& a, const Dense& b) {
  Dense c(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Dense naive_kron_identity(const Dense& a, std::size_t k) {
  Dense c(a.size() * k, std::vector<std::int64_t>(a[0].size() * k, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j)
      for (std::size_t d = 0; d < k; ++d) c[i * k + d][j * k + d] = a[i][j];
  return c;
}

Dense naive_stp(const Dense& a, const Dense& b) {
  const std::size_t t = std::lcm(a[0].size(), b.size());
  return naive_mul(naive_kron_identity(a, t / a[0].size()), naive_kron_identity(b, t / b.size()));
}

Dense to_rows(const DenseMatrix& m) {
  Dense d(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

DenseMatrix from_rows(const Dense& d) {
  std::vector<std::int64_t> e;
  for (const auto& r : d) e.insert(e.end(), r.begin(), r.end());
  return DenseMatrix(d.size(), d[0].size(), std::move(e));
}

void properties(Outcome& o) {
  // (a) window identification of observable networks
  std::size_t ok_a = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const std::size_t n = 2 + k % 3;
    Plant plant(random_plant(n, 0, n - 1, PlantProperty::ObservableBn, 1000 + k));
    CaseParams p;
    p.case_tag = CaseTag::Case2;
    const auto log = gen_case(plant, p);
    const auto r = identify_bn(log.data);
    if (r.complete && equivalent(r.to_bcn(), plant.hidden_system())) ++ok_a;
  }
  o.require(ok_a == 100, "(a) " + std::to_string(ok_a) + "/100");

  // (b) single-sample and multi-sample probing of controllable networks
  std::size_t ok_b3 = 0, ok_b4 = 0;
  for (std::uint64_t k = 0; k < 50; ++k) {
    const std::size_t n = 2 + k % 2, m = 1 + (k / 2) % 2;
    const Bcn sys = random_plant(n, m, 1, PlantProperty::ControllableO1, 2000 + k);
    const O1Test test = *build_o1_test(sys).test;
    {
      Plant plant(sys);
      CaseParams p;
      p.case_tag = CaseTag::Case3;
      p.test = test;
      p.seed = k;
      const auto log = gen_case(plant, p);
      const auto r = identify_bcn_o1_single(log.data, *log.cover, test);
      if (r.complete && equivalent(r.to_bcn(), sys)) ++ok_b3;
    }
    {
      Plant plant(sys);
      CaseParams p;
      p.case_tag = CaseTag::Case4;
      p.test = test;
      const auto log = gen_case(plant, p);
      const auto r = identify_bcn_o1_multi(log.data, test);
      if (r.complete && equivalent(r.to_bcn(), sys)) ++ok_b4;
    }
  }
  o.require(ok_b3 == 50 && ok_b4 == 50, "(b) " + std::to_string(ok_b3) + "/50, " + std::to_string(ok_b4) + "/50");

  // (c) an O3-test is in particular an O1-test
  std::size_t o3_found = 0, violations_c = 0;
  for (std::uint64_t k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 3, m = 1 + (k / 3) % 2;
    const Bcn sys = random_plant(n, m, 1, PlantProperty::Any, 3000 + k);
    if (!find_o3_test(sys, sys.state_count())) continue;
    ++o3_found;
    if (!build_o1_test(sys).test) ++violations_c;
  }
  o.require(violations_c == 0, "(c) " + std::to_string(violations_c) + " violations");

  // (d) coordinate changes
  std::size_t violations_d = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 4, m = k % 2 == 0 ? 0 : 1;
    const Bcn sys = random_plant(n, m, 1, PlantProperty::Any, 4000 + k);
    const PermutationMap g = random_permutation(sys.state_count(), 5000 + k);
    const Bcn moved = transform(sys, g);
    const auto w = equivalent(sys, moved);
    if (!w || transform(sys, *w) != moved) ++violations_d;
    if (transform(moved, g.inverse()) != sys) ++violations_d;
    const InputSequence probe(sys.state_count(), m == 0 ? 1 : 1 + k % 2);
    const auto oa = observability_matrix_bcn(sys, probe);
    const auto ob = observability_matrix_bcn(moved, probe);
    for (Index i = 1; i <= sys.state_count(); ++i)
      if (oa.column(i) != ob.column(g(i))) ++violations_d;
  }
  o.require(violations_d == 0, "(d) " + std::to_string(violations_d) + " violations");

  // (e) semi-tensor product algebra against a naive dense oracle
  std::mt19937_64 rng(6000);
  std::uniform_int_distribution<int> dim(1, 4), val(-3, 3);
  auto random_dense = [&](std::size_t r, std::size_t c) {
    Dense d(r, std::vector<std::int64_t>(c));
    for (auto& row : d)
      for (auto& v : row) v = val(rng);
    return d;
  };
  std::size_t violations_e = 0;
  for (int k = 0; k < 500; ++k) {
    const Dense a = random_dense(dim(rng), dim(rng)), b = random_dense(dim(rng), dim(rng)),
                c = random_dense(dim(rng), dim(rng));
    const auto A = from_rows(a), B = from_rows(b), C = from_rows(c);
    if (stp(stp(A, B), C) != stp(A, stp(B, C))) ++violations_e;
    if (to_rows(stp(A, B)) != naive_stp(a, b)) ++violations_e;
    const Dense b2 = random_dense(a[0].size(), dim(rng));
    if (stp(A, from_rows(b2)) != multiply(A, from_rows(b2))) ++violations_e;
  }
  o.require(violations_e == 0, "(e) " + std::to_string(violations_e) + " violations");
  o.notes << "(a) " << ok_a << "/100, (b) " << ok_b3 << "/50 and " << ok_b4 << "/50, (c) " << violations_c
          << " violations over " << o3_found << " O3-testable plants, (d) " << violations_d << ", (e) "
          << violations_e << " violations";
}

// ---- 8 ----------------------------------------------------------------------

void pair_slots(Outcome& o) {
  std::size_t bad = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t size = std::size_t{1} << n;
    const std::size_t N = pair_count(size);
    if (N != (std::size_t{1} << (2 * n - 1)) - (std::size_t{1} << (n - 1)) || N != size * (size - 1) / 2) ++bad;
    std::vector<int> hits(N + 1, 0);
    for (Index i = 1; i <= size; ++i)
      for (Index j = i + 1; j <= size; ++j) {
        const auto s = pair_index(i, j, size);
        if (s < 1 || s > N) {
          ++bad;
          continue;
        }
        ++hits[s];
        if (pair_at(s, size) != std::make_pair(i, j)) ++bad;
      }
    for (std::size_t s = 1; s <= N; ++s)
      if (hits[s] != 1) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " violations");
  o.notes << "sizes 2..32, " << bad << " violations";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"compile lac operon", compile_exactness},
      {"8-state BN identification", bn8_case},
      {"4-state BCN identification via an O3-test", bcn4_case},
      {"identifiable but unobservable", twin_bn},
      {"lac operon identification", lac_case},
      {"partial identification from one initial state", partial},
      {"property suite", properties},
      {"pair slot bijectivity", pair_slots},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << " [exception: " << e.what() << "]";
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << "criterion " << k + 1 << " (" << criteria[k].first << "): " << (o.pass ? "PASS" : "FAIL")
              << ": " << o.notes.str() << " [" << ms << " ms]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
