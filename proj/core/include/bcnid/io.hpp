#pragma once

/// @file io.hpp
/// JSON encodings (1-based delta indices throughout) and file helpers.
///
///   network     {"n":3,"m":3,"l":3,"F":[...],"H":[...]}
///   test        {"n":3,"m":3,"p":0,"tests":[[5],[1],...]}
///   samples     {"case":"Case4","n":3,"m":3,"l":3,"groups":[{"id":"g1","members":[...]}]}
///   result      network fields with 0 for unknown columns, plus "states",
///               "complete" and "labeling" (signatures in label order)

#include <string>

#include "bcnid/analysis.hpp"
#include "bcnid/dynamics.hpp"
#include "bcnid/harness.hpp"
#include "bcnid/ident.hpp"

namespace bcnid {

std::string to_json(const Bcn& sys);
Bcn network_from_json(const std::string& text);

std::string to_json(const O1Test& test);
O1Test o1test_from_json(const std::string& text);

std::string to_json(const SampleSet& data);
SampleSet samples_from_json(const std::string& text);

std::string to_json(const IdentResult& result);

/// Sample set plus a "provenance" object; samples_from_json reads it back.
std::string to_json(const ExperimentLog& log);

std::string to_json(const PermutationMap& g);

std::string to_json(const Trajectory& tr);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bcnid
