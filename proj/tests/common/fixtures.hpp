#pragma once

// Reference systems and data shared by the unit and acceptance tests.

#include <string>
#include <vector>

#include "bcnid/bcnid.hpp"

namespace fixtures {

using bcnid::Bcn;
using bcnid::Index;
using bcnid::LogicalMatrix;

inline std::string lac_source_path() { return std::string(BCNID_DATA_DIR) + "/lac_operon.bnl"; }

// Two observed runs of a BN with 3 state nodes and 1 output node.
inline bcnid::SampleSet bn8_data() {
  bcnid::SampleSet d;
  d.case_tag = bcnid::CaseTag::Case2;
  d.n = 3;
  d.m = 0;
  d.l = 1;
  d.groups = {{"g1", {{{}, {2, 1, 1, 2, 2, 2, 1, 2, 2, 2, 1, 2, 2, 2, 1}}}},
              {"g2", {{{}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1}}}}};
  return d;
}

inline std::vector<bcnid::OutputSequence> bn8_signatures() {
  return {{2, 1, 1, 2, 2, 2, 1, 2}, {1, 1, 2, 2, 2, 1, 2, 2}, {1, 2, 2, 2, 1, 2, 2, 2},
          {2, 2, 2, 1, 2, 2, 2, 1}, {2, 2, 1, 2, 2, 2, 1, 2}, {2, 1, 2, 2, 2, 1, 2, 2},
          {1, 2, 1, 2, 1, 2, 1, 2}, {2, 1, 2, 1, 2, 1, 2, 1}};
}

inline Bcn bn8() {
  return Bcn::network(3, 1, LogicalMatrix(8, {2, 3, 4, 5, 6, 3, 8, 7}),
                      LogicalMatrix(2, {2, 1, 1, 2, 2, 2, 1, 2}));
}

inline Bcn bn8_relabeled() {
  return Bcn::network(3, 1, LogicalMatrix(8, {2, 1, 4, 5, 6, 7, 8, 5}),
                      LogicalMatrix(2, {1, 2, 2, 1, 1, 2, 2, 2}));
}

// Signature Y_k is relabeled as state relabel[k-1].
inline std::vector<Index> bn8_relabeling() { return {3, 4, 5, 6, 7, 8, 1, 2}; }

// A BCN with 2 state nodes, 1 input node and 1 output node.
inline Bcn bcn4() {
  return Bcn(2, 1, 1, LogicalMatrix(4, {2, 4, 1, 1, 2, 3, 2, 2}), LogicalMatrix(2, {2, 1, 1, 2}));
}

inline Bcn bcn4_identified() {
  return Bcn(2, 1, 1, LogicalMatrix(4, {2, 3, 1, 1, 2, 4, 2, 2}), LogicalMatrix(2, {2, 1, 2, 1}));
}

inline bcnid::InputSequence bcn4_cover() { return {1, 1, 1, 2, 2, 1, 1, 1, 2, 2, 2}; }
inline bcnid::InputSequence bcn4_test() { return {1, 1}; }

// The twelve logged output sequences, member j driven by (u_0..u_{j-1}, 1, 1).
inline std::vector<bcnid::OutputSequence> bcn4_members() {
  return {{2, 1, 2},
          {2, 1, 2, 2},
          {2, 1, 2, 2, 1},
          {2, 1, 2, 2, 1, 2},
          {2, 1, 2, 2, 1, 2, 2},
          {2, 1, 2, 2, 1, 1, 2, 1},
          {2, 1, 2, 2, 1, 1, 2, 1, 2},
          {2, 1, 2, 2, 1, 1, 2, 1, 2, 2},
          {2, 1, 2, 2, 1, 1, 2, 1, 2, 2, 1},
          {2, 1, 2, 2, 1, 1, 2, 1, 2, 1, 2, 2},
          {2, 1, 2, 2, 1, 1, 2, 1, 2, 1, 1, 2, 1},
          {2, 1, 2, 2, 1, 1, 2, 1, 2, 1, 1, 1, 2, 2}};
}

// An unobservable BN (states 1 and 2 are twins) and its single observed run.
inline Bcn twin_bn() {
  return Bcn::network(2, 1, LogicalMatrix(4, {3, 3, 4, 4}), LogicalMatrix(2, {1, 1, 2, 1}));
}

inline bcnid::SampleSet twin_bn_data() {
  bcnid::SampleSet d;
  d.case_tag = bcnid::CaseTag::Case1;
  d.n = 2;
  d.m = 0;
  d.l = 1;
  d.groups = {{"g1", {{{}, {1, 2, 1, 1, 1, 1, 1, 1, 1}}}}};
  return d;
}

// The lac operon in algebraic form.
inline Bcn lac() {
  return Bcn(3, 3, 3,
             LogicalMatrix(8, {8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8,
                               8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 1, 1, 1, 5, 3, 3, 3, 7, 1, 1, 1, 5,
                               3, 3, 3, 7, 3, 3, 3, 7, 4, 4, 4, 8, 4, 4, 4, 8, 4, 4, 4, 8}),
             LogicalMatrix(8, {8, 6, 3, 6, 5, 6, 7, 6}));
}

inline Bcn lac_identified() {
  return Bcn(3, 3, 3,
             LogicalMatrix(8, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
                               2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 6, 1, 7, 1, 3, 3, 3, 1, 6, 1, 7,
                               1, 3, 3, 3, 3, 2, 3, 6, 3, 4, 4, 4, 4, 2, 4, 2, 4, 4, 4, 4}),
             LogicalMatrix(8, {8, 6, 3, 6, 6, 7, 5, 6}));
}

inline std::vector<std::size_t> lac_test_slots() { return {9, 10, 11, 12, 13, 20, 21, 22, 27}; }

// U_s = (5) for s in S, (1) otherwise.
inline bcnid::O1Test lac_test() {
  bcnid::O1Test t{3, 3, std::vector<bcnid::InputSequence>(28, bcnid::InputSequence{1})};
  for (auto s : lac_test_slots()) t.tests[s - 1] = {5};
  return t;
}

inline bool in_s(std::size_t s) {
  for (auto k : lac_test_slots())
    if (k == s) return true;
  return false;
}

}  // namespace fixtures
