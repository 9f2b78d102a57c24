// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

namespace chshkit {
namespace {

TEST(FormatDouble, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(-1.0), "-1");
  EXPECT_EQ(std::stod(format_double(kPi)), kPi);
}

TEST(SequenceCsv, PairLayout) {
  std::ostringstream out;
  write_pair_csv(out, SequencePair{{1, -1, 1}, {-1, -1, 1}});
  EXPECT_EQ(out.str(), "a,b\n+1,-1\n-1,-1\n+1,+1\n");
}

TEST(SequenceCsv, OctetRoundTrip) {
  const auto o = sample_octet(JointDistribution4::uniform(), 1000, Seed{1});
  std::stringstream s;
  write_octet_csv(s, o);
  const auto back = read_sequences_csv(s);
  ASSERT_EQ(back.names, (std::vector<std::string>{"a_oo", "b_oo", "a_bo", "b_ob"}));
  EXPECT_EQ(back.columns[0], o.a_oo());
  EXPECT_EQ(back.columns[1], o.b_oo());
  EXPECT_EQ(back.columns[2], o.a_bo());
  EXPECT_EQ(back.columns[3], o.b_ob());
}

TEST(SequenceCsv, CrLfAccepted) {
  std::istringstream in("a,b\r\n+1,-1\r\n-1,+1\r\n");
  const auto s = read_sequences_csv(in);
  EXPECT_EQ(s.columns[0], (OutcomeSequence{1, -1}));
  EXPECT_EQ(s.columns[1], (OutcomeSequence{-1, 1}));
}

TEST(SequenceCsv, Malformed) {
  for (const char* text : {"", "a,b\n", "a,b\n+1\n", "a,b\n+1,1\n", "a,b\n+1,-1,+1\n",
                           "a,b\n+1,0\n", "a,b\n+1,\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_sequences_csv(in), FormatError) << text;
  }
}

TEST(SequenceCsv, ShapeChecked) {
  std::ostringstream out;
  EXPECT_THROW(write_sequences_csv(out, NamedSequences{{"a"}, {}}), ShapeError);
  EXPECT_THROW(write_sequences_csv(out, NamedSequences{{"a", "b"}, {{1}, {1, 1}}}),
               ShapeError);
}

TEST(BandMapCsv, HeaderAndPrecision) {
  std::ostringstream out;
  write_band_map_csv(out, band_map(2));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "theta1,theta2,theta3,lo,hi,width");
  std::getline(in, line);
  EXPECT_EQ(line, "0,0,0,-1,-1,0");
  std::getline(in, line);
  EXPECT_EQ(line, "0,0,3.1415926535897931,1,1,0");
  int rows = 2;
  while (std::getline(in, line)) {
    ++rows;
  }
  EXPECT_EQ(rows, 8);
}

TEST(GridFile, RoundTrip) {
  testing::Gen g(91);
  const auto payload = testing::fuzzed_band_grid(g, 4);
  const auto text = serialize_grid_candidate(payload, "fuzz");
  const auto cand = parse_grid_candidate(text);
  EXPECT_EQ(cand.kind(), CandidateKind::grid);
  EXPECT_EQ(cand.name(), "fuzz");
  ASSERT_NE(cand.grid_payload(), nullptr);
  EXPECT_EQ(cand.grid_payload()->resolution, 4);
  EXPECT_EQ(cand.grid_payload()->values, payload.values);
}

TEST(GridFile, Malformed) {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"resolution":2,"values":[0,0,0,0,0,0,0,0]})",
      R"({"kind":"table","resolution":2,"values":[0,0,0,0,0,0,0,0]})",
      R"({"kind":"grid","resolution":2.5,"values":[0,0,0,0,0,0,0,0]})",
      R"({"kind":"grid","resolution":2,"values":[0,0,0]})",
      R"({"kind":"grid","resolution":2,"values":[0,0,0,0,0,0,0,"x"]})",
      R"({"kind":"grid","resolution":2,"values":[0,0,0,0,0,0,0,3]})",
      R"({"kind":"grid","resolution":1,"values":[0]})",
      R"({"kind":"grid","name":7,"resolution":2,"values":[0,0,0,0,0,0,0,0]})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(parse_grid_candidate(text), FormatError) << text;
  }
  EXPECT_NO_THROW(
      parse_grid_candidate(R"({"kind":"grid","resolution":2,"values":[0,0,0,0,0,0,0,0]})"));
}

}  // namespace
}  // namespace chshkit
