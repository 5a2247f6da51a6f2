#include "bcnid/io.hpp"

#include <fstream>
#include <sstream>

#include "bcnid/error.hpp"
#include "json.hpp"

namespace bcnid {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(std::string("field \"") + key + "\": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump() + "\n"; }

std::vector<Index> indices(std::span<const Index> s) { return {s.begin(), s.end()}; }

json network_fields(std::size_t n, std::size_t m, std::size_t l, std::span<const Index> f,
                    std::span<const Index> h) {
  return json{{"n", n}, {"m", m}, {"l", l}, {"F", indices(f)}, {"H", indices(h)}};
}

}  // namespace

std::string to_json(const Bcn& sys) {
  return dump(network_fields(sys.n(), sys.m(), sys.l(), sys.F().indices(), sys.H().indices()));
}

Bcn network_from_json(const std::string& text) {
  const json j = parse(text);
  const auto n = field<std::size_t>(j, "n");
  const auto m = j.contains("m") ? field<std::size_t>(j, "m") : 0;
  const auto l = field<std::size_t>(j, "l");
  if (n > 20 || m > 20 || l > 20) throw LimitExceeded("network dimensions too large");
  return Bcn(n, m, l, LogicalMatrix(std::size_t{1} << n, field<std::vector<Index>>(j, "F")),
             LogicalMatrix(std::size_t{1} << l, field<std::vector<Index>>(j, "H")));
}

std::string to_json(const O1Test& test) {
  return dump(json{{"n", test.n}, {"m", test.m}, {"p", test.p()}, {"tests", test.tests}});
}

O1Test o1test_from_json(const std::string& text) {
  const json j = parse(text);
  O1Test t{field<std::size_t>(j, "n"), field<std::size_t>(j, "m"),
           field<std::vector<InputSequence>>(j, "tests")};
  t.check_shape();
  if (j.contains("p") && field<std::size_t>(j, "p") != t.p())
    throw Error("field \"p\" disagrees with the test length");
  return t;
}

namespace {

json samples_json(const SampleSet& data) {
  json j{{"case", to_string(data.case_tag)}};
  if (data.n) j["n"] = *data.n;
  j["m"] = data.m;
  j["l"] = data.l;
  json groups = json::array();
  for (const auto& g : data.groups) {
    json members = json::array();
    for (const auto& mem : g.members) members.push_back({{"inputs", mem.inputs}, {"outputs", mem.outputs}});
    groups.push_back({{"id", g.id}, {"members", std::move(members)}});
  }
  j["groups"] = std::move(groups);
  return j;
}

}  // namespace

std::string to_json(const SampleSet& data) { return dump(samples_json(data)); }

SampleSet samples_from_json(const std::string& text) {
  const json j = parse(text);
  SampleSet data;
  data.case_tag = case_from_string(field<std::string>(j, "case"));
  if (j.contains("n") && !j.at("n").is_null()) data.n = field<std::size_t>(j, "n");
  data.m = j.contains("m") ? field<std::size_t>(j, "m") : 0;
  data.l = field<std::size_t>(j, "l");
  for (const auto& g : field<json>(j, "groups")) {
    SampleGroup group{field<std::string>(g, "id"), {}};
    for (const auto& mem : field<json>(g, "members")) {
      group.members.push_back({mem.contains("inputs") ? field<InputSequence>(mem, "inputs") : InputSequence{},
                               field<OutputSequence>(mem, "outputs")});
    }
    data.groups.push_back(std::move(group));
  }
  data.validate();
  return data;
}

std::string to_json(const IdentResult& r) {
  json j;
  if (auto n = r.n()) j["n"] = *n;
  j["m"] = r.m;
  j["l"] = r.l;
  j["F"] = r.F;
  j["H"] = r.H;
  j["states"] = r.state_count;
  j["complete"] = r.complete;
  j["labeling"] = r.table.signatures();
  j["signature_kind"] = to_string(r.table.kind());
  j["initial"] = r.group_initial;
  return dump(j);
}

std::string to_json(const ExperimentLog& log) {
  json j = samples_json(log.data);
  json prov{{"protocol", log.protocol}};
  if (log.test) prov["test"] = log.test->tests;
  if (log.cover) prov["cover"] = *log.cover;
  j["provenance"] = std::move(prov);
  return dump(j);
}

std::string to_json(const PermutationMap& g) {
  return dump(json{{"G", indices(g.images())}});
}

std::string to_json(const Trajectory& tr) {
  return dump(json{{"inputs", tr.inputs}, {"states", tr.states}, {"outputs", tr.outputs}});
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace bcnid
