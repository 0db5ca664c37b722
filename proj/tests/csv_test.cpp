#include <gtest/gtest.h>

#include <random>

#include "nichebench/csv.hpp"
#include "nichebench/error.hpp"
#include "support/fixture.hpp"

namespace csv = nichebench::csv;
using nichebench::Error;
using nichebench::ErrorKind;

TEST(Csv, ParsesQuotedFieldsAndEscapes) {
  const auto t = csv::parse("a,b,c\n1,\"x, y\",\"say \"\"hi\"\"\"\n");
  ASSERT_EQ(t.header, (csv::Row{"a", "b", "c"}));
  ASSERT_EQ(t.records.size(), 1u);
  EXPECT_EQ(t.records[0].fields, (csv::Row{"1", "x, y", "say \"hi\""}));
  EXPECT_EQ(t.records[0].line, 2u);
}

TEST(Csv, HandlesCrlfBomAndBlankLines) {
  const auto t = csv::parse("\xEF\xBB\xBFh1,h2\r\n\r\nv1,\r\nv3,v4");
  ASSERT_EQ(t.header, (csv::Row{"h1", "h2"}));
  ASSERT_EQ(t.records.size(), 2u);
  EXPECT_EQ(t.records[0].fields, (csv::Row{"v1", ""}));
  EXPECT_EQ(t.records[0].line, 3u);
  EXPECT_EQ(t.records[1].fields, (csv::Row{"v3", "v4"}));
}

TEST(Csv, QuotedFieldMaySpanLines) {
  const auto t = csv::parse("a,b\n\"line1\nline2\",x\ny,z\n");
  ASSERT_EQ(t.records.size(), 2u);
  EXPECT_EQ(t.records[0].fields[0], "line1\nline2");
  EXPECT_EQ(t.records[1].line, 4u);
}

TEST(Csv, RejectsUnterminatedQuote) {
  try {
    csv::parse("a\n\"open\n", "f.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedRow);
    EXPECT_NE(std::string(e.what()).find("f.csv:2"), std::string::npos);
  }
}

TEST(Csv, RejectsStrayQuote) {
  EXPECT_THROW(csv::parse("a\nab\"c\n"), Error);
  EXPECT_THROW(csv::parse("a\n\"ab\"c\n"), Error);
}

TEST(Csv, ReadFileChecksHeaderAndWidth) {
  testing_support::TempDir dir;
  dir.write("x.csv", "a,b\n1,2\n3\n");
  try {
    csv::read_file(dir.path() / "x.csv", {"a", "b"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedRow);
    EXPECT_NE(std::string(e.what()).find("x.csv:3"), std::string::npos);
  }
  EXPECT_THROW(csv::read_file(dir.path() / "x.csv", {"a", "c"}), Error);
  try {
    csv::read_file(dir.path() / "missing.csv", {"a"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingFile);
  }
}

TEST(Csv, EscapeThenParseRoundTripsRandomFields) {
  std::mt19937 rng(7);
  const std::string alphabet = "ab,\"\n\r x;";
  for (int trial = 0; trial < 300; ++trial) {
    csv::Row row;
    const int width = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < width; ++i) {
      std::string f;
      const int len = static_cast<int>(rng() % 6);
      for (int k = 0; k < len; ++k) f += alphabet[rng() % alphabet.size()];
      row.push_back(f);
    }
    // A lone empty field is indistinguishable from a blank line.
    if (width == 1 && row[0].empty()) row[0] = "z";
    std::string text = "h\n";
    for (std::size_t i = 0; i < row.size(); ++i) text += (i ? "," : "") + csv::escape(row[i]);
    text += "\n";
    const auto t = csv::parse(text);
    ASSERT_EQ(t.records.size(), 1u) << text;
    EXPECT_EQ(t.records[0].fields, row) << text;
  }
}
