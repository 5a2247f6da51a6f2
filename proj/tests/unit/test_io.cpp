#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "bcnid/error.hpp"
#include "bcnid/io.hpp"
#include "fixtures.hpp"

using namespace bcnid;

TEST(Json, NetworkRoundTrip) {
  for (const Bcn& sys : {fixtures::bn8(), fixtures::bcn4(), fixtures::lac()})
    EXPECT_EQ(network_from_json(to_json(sys)), sys);
}

TEST(Json, NetworkLayout) {
  EXPECT_EQ(to_json(fixtures::bcn4()), "{\"F\":[2,4,1,1,2,3,2,2],\"H\":[2,1,1,2],\"l\":1,\"m\":1,\"n\":2}\n");
}

TEST(Json, NetworkWithoutM) {
  const Bcn sys = network_from_json(R"({"n":1,"l":1,"F":[2,1],"H":[1,2]})");
  EXPECT_TRUE(sys.is_bn());
}

TEST(Json, NetworkErrors) {
  EXPECT_THROW(network_from_json("{"), Error);
  EXPECT_THROW(network_from_json(R"({"n":1,"l":1,"F":[2,1]})"), Error);
  EXPECT_THROW(network_from_json(R"({"n":1,"l":1,"F":"x","H":[1,2]})"), Error);
  EXPECT_THROW(network_from_json(R"({"n":1,"l":1,"F":[2,3],"H":[1,2]})"), DimensionError);
  EXPECT_THROW(network_from_json(R"({"n":40,"l":1,"F":[],"H":[]})"), LimitExceeded);
}

TEST(Json, TestRoundTrip) {
  const auto t = fixtures::lac_test();
  const auto back = o1test_from_json(to_json(t));
  EXPECT_EQ(back.tests, t.tests);
  EXPECT_EQ(back.n, 3u);
  EXPECT_THROW(o1test_from_json(R"({"n":1,"m":1,"p":1,"tests":[[1]]})"), Error);
  EXPECT_THROW(o1test_from_json(R"({"n":1,"m":1,"tests":[[1],[1,2]]})"), DimensionError);
}

TEST(Json, SamplesRoundTrip) {
  const auto d = fixtures::bn8_data();
  EXPECT_EQ(samples_from_json(to_json(d)), d);
  auto unknown_n = d;
  unknown_n.n.reset();
  EXPECT_EQ(samples_from_json(to_json(unknown_n)), unknown_n);
}

TEST(Json, SamplesAreValidated) {
  EXPECT_THROW(samples_from_json(R"({"case":"Case3","m":1,"l":1,"groups":[]})"), DataInconsistency);
  EXPECT_THROW(samples_from_json(R"({"case":"Case9","l":1,"groups":[]})"), Error);
}

TEST(Json, ExperimentLogReadsBackAsSamples) {
  Plant plant(fixtures::bcn4());
  CaseParams p;
  p.case_tag = CaseTag::Case4;
  const auto log = gen_case(plant, p);
  const auto text = to_json(log);
  EXPECT_NE(text.find("\"provenance\""), std::string::npos);
  EXPECT_EQ(samples_from_json(text), log.data);
}

TEST(Json, ResultCarriesUnknowns) {
  auto d = fixtures::bn8_data();
  d.groups.pop_back();
  const auto text = to_json(identify_bn(d));
  EXPECT_NE(text.find("\"complete\":false"), std::string::npos);
  EXPECT_NE(text.find("\"n\":3"), std::string::npos);
}

TEST(Json, PermutationAndTrajectory) {
  EXPECT_EQ(to_json(PermutationMap({2, 1})), "{\"G\":[2,1]}\n");
  const auto tr = simulate(fixtures::bcn4(), 1, InputSequence{2});
  EXPECT_EQ(to_json(tr), "{\"inputs\":[2],\"outputs\":[2,1],\"states\":[1,2]}\n");
}

TEST(Files, WriteAndRead) {
  const auto path = std::filesystem::temp_directory_path() / "bcnid_io_test.txt";
  write_text_file(path.string(), "abc\n");
  EXPECT_EQ(read_text_file(path.string()), "abc\n");
  std::filesystem::remove(path);
  EXPECT_THROW(read_text_file(path.string()), Error);
}
