#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nichebench::csv {

using Row = std::vector<std::string>;

struct Record {
  std::size_t line;  // 1-based line where the record starts
  Row fields;
};

struct Table {
  std::string path;
  Row header;
  std::vector<Record> records;
};

/// RFC-4180 reader: comma delimiter, double-quote quoting with "" escapes,
/// CRLF or LF line endings, quoted fields may span lines. A UTF-8 BOM at the
/// start is skipped. Blank lines are ignored. Throws Error(MalformedRow) on an
/// unterminated quote or stray characters after a closing quote.
Table parse(std::string_view text, std::string path = "<memory>");

/// Reads and parses a file; throws Error(MissingFile) if it cannot be opened.
/// The header must equal `expected_header` exactly.
Table read_file(const std::filesystem::path& file, const Row& expected_header);

/// Quotes a field when it contains a delimiter, quote, or line break.
std::string escape(std::string_view field);

}  // namespace nichebench::csv
