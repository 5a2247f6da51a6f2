// bcnident: compile, analyse, sample and identify Boolean (control) networks.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bcnid/bcnid.hpp"

namespace {

using namespace bcnid;

std::vector<Index> parse_csv(const std::string& text) {
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v == 0) throw Error("bad index '" + item + "' in list '" + text + "'");
    out.push_back(static_cast<Index>(v));
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") std::cout << text;
  else write_text_file(path, text);
}

Bcn load_network(const std::string& path) { return network_from_json(read_text_file(path)); }

int cmd_compile(const std::string& src, const std::string& out) {
  const Bcn sys = assemble(parse_network(read_text_file(src)));
  emit(to_json(sys), out);
  return 0;
}

int cmd_simulate(const std::string& net, Index x0, const std::string& inputs) {
  const Bcn sys = load_network(net);
  const auto us = parse_csv(inputs);
  std::cout << to_json(simulate(sys, x0, us));
  return 0;
}

int cmd_check(const std::string& net, const std::string& property, std::size_t max_len) {
  const Bcn sys = load_network(net);
  bool holds = false;
  if (property == "observable-bn") {
    holds = is_observable_bn(sys);
  } else if (property == "controllable") {
    holds = is_controllable(sys);
  } else if (property == "o1") {
    const auto found = build_o1_test(sys);
    holds = found.test.has_value();
    if (!holds) {
      std::cout << "indistinguishable pair: " << found.indistinguishable->first << " "
                << found.indistinguishable->second << "\n";
    }
  } else if (property == "o3") {
    const std::size_t bound = max_len ? max_len : sys.state_count();
    const auto test = find_o3_test(sys, bound);
    holds = test.has_value();
    if (holds) {
      std::cout << "test:";
      for (Index u : *test) std::cout << " " << u;
      std::cout << "\n";
    }
  } else {
    throw Error("unknown property '" + property + "'");
  }
  std::cout << property << ": " << (holds ? "true" : "false") << "\n";
  return holds ? 0 : 1;
}

int cmd_o1test(const std::string& net, const std::string& out) {
  const Bcn sys = load_network(net);
  const auto found = build_o1_test(sys);
  if (!found.test) {
    std::cerr << "no O1-test: states " << found.indistinguishable->first << " and "
              << found.indistinguishable->second << " are indistinguishable\n";
    return 1;
  }
  emit(to_json(*found.test), out);
  return 0;
}

struct GenOptions {
  std::string net;
  int case_no = 1;
  std::string test;
  std::string cover = "auto";
  std::string x0;
  std::size_t len = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenOptions& o) {
  Plant plant(load_network(o.net));
  CaseParams p;
  p.case_tag = case_from_string(std::to_string(o.case_no));
  p.seed = o.seed;
  if (o.len) p.length = o.len;
  if (!o.test.empty()) p.test = o1test_from_json(read_text_file(o.test));
  if (o.cover != "auto") p.cover = parse_csv(o.cover);
  if (!o.x0.empty() && o.x0 != "all") {
    p.initial_states = parse_csv(o.x0);
    // Case 4 from a chosen initial set: probe along reach walks.
    p.reach_walks = p.case_tag == CaseTag::Case4;
  }
  const auto log = gen_case(plant, p);
  emit(to_json(log), o.out);
  return 0;
}

struct IdentifyOptions {
  int case_no = 1;
  std::string data;
  std::size_t window = 0;
  std::string test;
  std::string cover;
  std::string out;
};

int cmd_identify(const IdentifyOptions& o) {
  const SampleSet data = samples_from_json(read_text_file(o.data));
  const CaseTag tag = case_from_string(std::to_string(o.case_no));
  IdentResult r;
  if (tag == CaseTag::Case1 || tag == CaseTag::Case2) {
    BnOptions opts;
    if (o.window) opts.window = o.window;
    r = identify_bn(data, opts);
  } else {
    if (o.test.empty()) throw Error("--test is required for Cases 3 and 4");
    const O1Test test = o1test_from_json(read_text_file(o.test));
    if (tag == CaseTag::Case4) {
      r = identify_bcn_o1_multi(data, test);
    } else {
      InputSequence cover;
      if (!o.cover.empty()) {
        cover = parse_csv(o.cover);
      } else {
        // The longest probe prefix is the walk itself.
        for (const auto& mem : data.groups.at(0).members)
          if (mem.inputs.size() >= test.length() && mem.inputs.size() - test.length() > cover.size())
            cover.assign(mem.inputs.begin(), mem.inputs.end() - static_cast<std::ptrdiff_t>(test.length()));
      }
      r = test.tests.size() == 1 ? identify_bcn_o3(data, cover, test.length())
                                 : identify_bcn_o1_single(data, cover, test);
    }
  }
  emit(to_json(r), o.out);
  if (!r.complete) std::cerr << "partial identification: " << r.unknown_f_columns().size() << " unknown F columns\n";
  return 0;
}

int cmd_equiv(const std::string& a, const std::string& b) {
  const auto g = equivalent(load_network(a), load_network(b));
  if (!g) {
    std::cout << "not equivalent\n";
    return 1;
  }
  std::cout << to_json(*g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identification of Boolean (control) networks from input/output data"};
  app.require_subcommand(1);
  int status = 0;

  std::string src, net, out, inputs, property, net_b;
  Index x0 = 1;
  std::size_t max_len = 0;

  auto* compile = app.add_subcommand("compile", "Compile logical equations to a network JSON");
  compile->add_option("src", src, "Network source (.bnl)")->required()->check(CLI::ExistingFile);
  compile->add_option("-o,--output", out, "Output network JSON")->required();
  compile->callback([&] { status = cmd_compile(src, out); });

  auto* sim = app.add_subcommand("simulate", "Run a network from an initial state");
  sim->add_option("net", net, "Network JSON")->required()->check(CLI::ExistingFile);
  sim->add_option("--x0", x0, "Initial state index")->required();
  sim->add_option("--inputs", inputs, "Comma-separated input indices");
  sim->callback([&] { status = cmd_simulate(net, x0, inputs); });

  auto* check = app.add_subcommand("check", "Test a structural property");
  check->add_option("net", net, "Network JSON")->required()->check(CLI::ExistingFile);
  check->add_option("--property", property, "Property")
      ->required()
      ->check(CLI::IsMember({"observable-bn", "controllable", "o1", "o3"}));
  check->add_option("--max-len", max_len, "Length bound for the o3 search (default 2^n)");
  check->callback([&] { status = cmd_check(net, property, max_len); });

  auto* o1 = app.add_subcommand("o1test", "Build an O1-test");
  o1->add_option("net", net, "Network JSON")->required()->check(CLI::ExistingFile);
  o1->add_option("-o,--output", out, "Output test JSON")->required();
  o1->callback([&] { status = cmd_o1test(net, out); });

  GenOptions gen;
  auto* gd = app.add_subcommand("gen-data", "Sample a hidden plant under one of the four protocols");
  gd->add_option("net", gen.net, "Network JSON of the plant")->required()->check(CLI::ExistingFile);
  gd->add_option("--case", gen.case_no, "Sampling case")->required()->check(CLI::Range(1, 4));
  gd->add_option("--test", gen.test, "Test JSON (Cases 3, 4)")->check(CLI::ExistingFile);
  gd->add_option("--cover", gen.cover, "Walk for Case 3: auto or comma-separated inputs");
  gd->add_option("--x0", gen.x0, "Initial state(s): an index, a comma-separated list, or all");
  gd->add_option("--len", gen.len, "Trajectory length for Cases 1, 2");
  gd->add_option("--seed", gen.seed, "Seed for randomly chosen initial states");
  gd->add_option("-o,--output", gen.out, "Output data JSON")->required();
  gd->callback([&] { status = cmd_gen(gen); });

  IdentifyOptions id;
  auto* ident = app.add_subcommand("identify", "Reconstruct (F, H) from logged data");
  ident->add_option("--case", id.case_no, "Sampling case")->required()->check(CLI::Range(1, 4));
  ident->add_option("--data", id.data, "Data JSON")->required()->check(CLI::ExistingFile);
  ident->add_option("--window", id.window, "Window length for Cases 1, 2 (default 2^n)");
  ident->add_option("--test", id.test, "Test JSON (Cases 3, 4)")->check(CLI::ExistingFile);
  ident->add_option("--cover", id.cover, "Walk of Case 3 data (default: read from the data)");
  ident->add_option("-o,--output", id.out, "Output result JSON")->required();
  ident->callback([&] { status = cmd_identify(id); });

  auto* eq = app.add_subcommand("equiv", "Search a coordinate change between two networks");
  eq->add_option("a", net, "First network JSON")->required()->check(CLI::ExistingFile);
  eq->add_option("b", net_b, "Second network JSON")->required()->check(CLI::ExistingFile);
  eq->callback([&] { status = cmd_equiv(net, net_b); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << src << ":" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
