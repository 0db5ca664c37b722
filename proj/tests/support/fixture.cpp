#include "support/fixture.hpp"

#include <atomic>
#include <fstream>
#include <random>

namespace nb = nichebench;

namespace testing_support {

std::filesystem::path fixture_dir() { return NICHEBENCH_FIXTURE_DIR; }

const nb::Dataset& fixture() {
  static const nb::Dataset data(nb::load_corpus(nb::CorpusPaths::in_directory(fixture_dir())));
  return data;
}

std::size_t count_data_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) ++n;
  }
  return n == 0 ? 0 : n - 1;
}

nb::SubjectTaxonomy tiny_taxonomy() {
  using nb::Level;
  std::vector<nb::SubjectNode> nodes;
  for (nb::SubjectCode root : {100, 200}) {
    nodes.push_back({root, "D" + std::to_string(root), Level::Discipline, std::nullopt});
    for (nb::SubjectCode sub : {root + 10, root + 20}) {
      nodes.push_back({sub, "S" + std::to_string(sub), Level::SubDiscipline, root});
      for (nb::SubjectCode leaf : {sub + 1, sub + 2}) {
        nodes.push_back({leaf, "N" + std::to_string(leaf), Level::Niche, sub});
      }
    }
  }
  return nb::SubjectTaxonomy::from_nodes(std::move(nodes));
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("nichebench-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void TempDir::write(const std::string& name, const std::string& content) const {
  std::ofstream out(path_ / name, std::ios::binary);
  out << content;
}

void copy_fixture_to(const TempDir& dir) {
  for (const char* name : {"publications.csv", "journals.csv", "institutions.csv", "taxonomy.csv", "snip.csv"}) {
    std::filesystem::copy_file(fixture_dir() / name, dir.path() / name,
                               std::filesystem::copy_options::overwrite_existing);
  }
}

}  // namespace testing_support
