#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "nichebench/corpus.hpp"
#include "nichebench/error.hpp"
#include "support/fixture.hpp"

namespace nb = nichebench;
using testing_support::TempDir;

namespace {

nb::ErrorKind load_error(const TempDir& dir) {
  try {
    nb::load_corpus(nb::CorpusPaths::in_directory(dir.path()));
  } catch (const nb::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected load_corpus to throw";
  return nb::ErrorKind::OutOfRange;
}

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_minimal(const TempDir& dir) {
  dir.write("taxonomy.csv", "code,name,level,parent_code\n1,Root,1,\n10,Sub,2,1\n11,Leaf A,3,10\n12,Leaf B,3,10\n");
  dir.write("journals.csv", "journal_id,title,asjc_codes\nJ1,First,11;12\nJ2,Second,12\n");
  dir.write("snip.csv", "journal_id,snip_2010\nJ1,1.5\nJ2,\n");
  dir.write("institutions.csv", "institution_id,name,region\nA,Alpha,PB\nB,Beta,SD\n");
  dir.write("publications.csv",
            "pub_id,institution_id,journal_id,year,citations,title\n"
            "P1,A,J1,2009,4,\"One, two\"\nP2,A,J2,2010,0,x\n");
}

}  // namespace

TEST(Corpus, FixtureRowCountsMatchFiles) {
  const auto& c = testing_support::fixture().corpus();
  const auto dir = testing_support::fixture_dir();
  EXPECT_EQ(c.publications().size(), testing_support::count_data_lines(dir / "publications.csv"));
  EXPECT_EQ(c.publications().size(), 500u);
  EXPECT_EQ(c.journals().size(), testing_support::count_data_lines(dir / "journals.csv"));
  EXPECT_EQ(c.institutions().size(), testing_support::count_data_lines(dir / "institutions.csv"));
  EXPECT_EQ(c.taxonomy().size(), testing_support::count_data_lines(dir / "taxonomy.csv"));
}

TEST(Corpus, FixtureIsReferentiallyClosed) {
  const auto& c = testing_support::fixture().corpus();
  for (const auto& p : c.publications()) {
    EXPECT_NO_THROW(c.journal(p.journal_id));
    EXPECT_NO_THROW(c.institution(p.institution_id));
  }
}

TEST(Corpus, LoadsMinimalFilesWithQuotedTitle) {
  TempDir dir;
  write_minimal(dir);
  const auto c = nb::load_corpus(nb::CorpusPaths::in_directory(dir.path()));
  ASSERT_EQ(c.publications().size(), 2u);
  EXPECT_EQ(c.publications()[0].title, "One, two");
  EXPECT_EQ(c.journal("J1").asjc_codes, (std::vector<nb::SubjectCode>{11, 12}));
  EXPECT_DOUBLE_EQ(*c.journal("J1").snip_2010, 1.5);
  EXPECT_FALSE(c.journal("J2").snip_2010.has_value());
  EXPECT_EQ(c.regions(), (std::set<std::string>{"PB", "SD"}));
  EXPECT_EQ(c.subjects_of_journal("J1", nb::Level::Discipline), (std::set<nb::SubjectCode>{1}));
}

TEST(Corpus, EmptyPublicationsFileIsValid) {
  TempDir dir;
  write_minimal(dir);
  dir.write("publications.csv", "pub_id,institution_id,journal_id,year,citations,title\n");
  const auto c = nb::load_corpus(nb::CorpusPaths::in_directory(dir.path()));
  EXPECT_EQ(c.publications().size(), 0u);
}

TEST(Corpus, UnknownJournalIsDanglingReference) {
  TempDir dir;
  write_minimal(dir);
  dir.write("publications.csv",
            "pub_id,institution_id,journal_id,year,citations,title\nP1,A,J999,2009,1,x\n");
  try {
    nb::load_corpus(nb::CorpusPaths::in_directory(dir.path()));
    FAIL();
  } catch (const nb::Error& e) {
    EXPECT_EQ(e.kind(), nb::ErrorKind::DanglingReference);
    EXPECT_NE(std::string(e.what()).find("J999"), std::string::npos);
  }
}

TEST(Corpus, ReferentialAndUniquenessErrors) {
  TempDir dir;
  write_minimal(dir);
  dir.write("publications.csv",
            "pub_id,institution_id,journal_id,year,citations,title\nP1,A,J1,2009,1,x\nP1,B,J1,2010,2,y\n");
  EXPECT_EQ(load_error(dir), nb::ErrorKind::DuplicateId);

  write_minimal(dir);
  dir.write("publications.csv",
            "pub_id,institution_id,journal_id,year,citations,title\nP1,Z,J1,2009,1,x\n");
  EXPECT_EQ(load_error(dir), nb::ErrorKind::DanglingReference);

  write_minimal(dir);
  dir.write("journals.csv", "journal_id,title,asjc_codes\nJ1,First,11;77\nJ2,Second,12\n");
  EXPECT_EQ(load_error(dir), nb::ErrorKind::DanglingReference);

  write_minimal(dir);
  dir.write("journals.csv", "journal_id,title,asjc_codes\nJ1,First,10\nJ2,Second,12\n");
  EXPECT_EQ(load_error(dir), nb::ErrorKind::MalformedRow);

  write_minimal(dir);
  dir.write("snip.csv", "journal_id,snip_2010\nJ1,1.5\nJ1,2.0\n");
  EXPECT_EQ(load_error(dir), nb::ErrorKind::DuplicateId);

  write_minimal(dir);
  dir.write("institutions.csv", "institution_id,name,region\nA,Alpha,PB\nA,Beta,SD\n");
  EXPECT_EQ(load_error(dir), nb::ErrorKind::DuplicateId);

  write_minimal(dir);
  dir.write("institutions.csv", "institution_id,name,region\nA,Alpha,ALL\nB,Beta,SD\n");
  EXPECT_EQ(load_error(dir), nb::ErrorKind::MalformedRow);
}

TEST(Corpus, MalformedRowsReportFileAndLine) {
  TempDir dir;
  write_minimal(dir);
  dir.write("publications.csv",
            "pub_id,institution_id,journal_id,year,citations,title\nP1,A,J1,2009,1,x\nP2,A,J1,20x9,1,y\n");
  try {
    nb::load_corpus(nb::CorpusPaths::in_directory(dir.path()));
    FAIL();
  } catch (const nb::Error& e) {
    EXPECT_EQ(e.kind(), nb::ErrorKind::MalformedRow);
    EXPECT_NE(std::string(e.what()).find("publications.csv:3"), std::string::npos) << e.what();
  }

  dir.write("publications.csv",
            "pub_id,institution_id,journal_id,year,citations,title\nP1,A,J1,2009,-3,x\n");
  EXPECT_EQ(load_error(dir), nb::ErrorKind::MalformedRow);

  write_minimal(dir);
  dir.write("snip.csv", "journal_id,snip_2010\nJ1,-0.5\n");
  EXPECT_EQ(load_error(dir), nb::ErrorKind::MalformedRow);
}

TEST(Corpus, MissingFile) {
  TempDir dir;
  write_minimal(dir);
  std::filesystem::remove(dir.path() / "snip.csv");
  EXPECT_EQ(load_error(dir), nb::ErrorKind::MissingFile);
}

TEST(Corpus, ValidateFixtureWarnsOnlyAboutMissingSnip) {
  const auto& c = testing_support::fixture().corpus();
  const auto report = nb::validate_corpus(c);
  // Expected count: blank snip_2010 values in snip.csv.
  std::ifstream in(testing_support::fixture_dir() / "snip.csv");
  std::size_t blank = 0;
  for (std::string line; std::getline(in, line);) blank += (!line.empty() && line.back() == ',');
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.snip_absent.size(), blank);
  EXPECT_EQ(report.snip_absent.size(), 20u);
  EXPECT_EQ(report.warning_count(), blank);
}

TEST(Corpus, ValidateFlagsOutOfWindowAndIdleInstitutions) {
  TempDir dir;
  write_minimal(dir);
  dir.write("snip.csv", "journal_id,snip_2010\nJ1,1.5\nJ2,0.7\n");
  auto c = nb::load_corpus(nb::CorpusPaths::in_directory(dir.path()));
  auto report = nb::validate_corpus(c);
  EXPECT_TRUE(report.snip_absent.empty());
  EXPECT_TRUE(report.out_of_window.empty());
  EXPECT_EQ(report.idle_institutions, (std::vector<std::string>{"B"}));

  dir.write("publications.csv",
            "pub_id,institution_id,journal_id,year,citations,title\nP1,A,J1,2005,1,x\nP2,B,J2,2010,0,y\n");
  c = nb::load_corpus(nb::CorpusPaths::in_directory(dir.path()));
  report = nb::validate_corpus(c);
  EXPECT_EQ(report.out_of_window, (std::vector<std::string>{"P1"}));
  EXPECT_EQ(c.publications().size(), 2u);  // retained, only flagged
}

TEST(Corpus, SummaryIsDeterministic) {
  const auto a = nb::load_corpus(nb::CorpusPaths::in_directory(testing_support::fixture_dir()));
  const auto b = nb::load_corpus(nb::CorpusPaths::in_directory(testing_support::fixture_dir()));
  EXPECT_EQ(nb::corpus_summary(a), nb::corpus_summary(b));

  TempDir dir;
  testing_support::copy_fixture_to(dir);
  auto pubs = read(dir.path() / "publications.csv");
  pubs.replace(pubs.find("P0001,U08,J056,2010,0"), 21, "P0001,U08,J056,2010,1");
  dir.write("publications.csv", pubs);
  const auto c = nb::load_corpus(nb::CorpusPaths::in_directory(dir.path()));
  EXPECT_NE(nb::corpus_summary(a), nb::corpus_summary(c));
}

TEST(Corpus, RegionChecks) {
  const auto& c = testing_support::fixture().corpus();
  EXPECT_NO_THROW(c.check_region("ALL"));
  EXPECT_NO_THROW(c.check_region("KP"));
  EXPECT_THROW(c.check_region("XX"), nb::Error);
}

TEST(Corpus, WindowMustBeOrdered) {
  EXPECT_THROW(nb::make_window(2013, 2008), nb::Error);
  EXPECT_EQ(nb::make_window(2010, 2010), (nb::YearWindow{2010, 2010}));
}
