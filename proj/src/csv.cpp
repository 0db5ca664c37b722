#include "nichebench/csv.hpp"

#include <fstream>
#include <sstream>

#include "nichebench/error.hpp"

namespace nichebench::csv {

namespace {

std::string join(const Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += row[i];
  }
  return out;
}

}  // namespace

Table parse(std::string_view text, std::string path) {
  Table table;
  table.path = std::move(path);

  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Record> rows;
  Row fields;
  std::string field;
  bool in_quotes = false;
  bool after_quote = false;  // just closed a quoted field
  std::size_t line = 1;
  std::size_t record_line = 1;
  bool record_has_content = false;

  auto end_record = [&] {
    fields.push_back(std::move(field));
    field.clear();
    if (record_has_content || fields.size() > 1 || !fields.front().empty()) {
      rows.push_back({record_line, std::move(fields)});
    }
    fields.clear();
    record_has_content = false;
    after_quote = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || after_quote) {
          throw Error(ErrorKind::MalformedRow,
                      table.path + ":" + std::to_string(line) + ": unexpected quote inside field");
        }
        in_quotes = true;
        record_has_content = true;
        break;
      case ',':
        fields.push_back(std::move(field));
        field.clear();
        after_quote = false;
        record_has_content = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        record_line = line;
        break;
      default:
        if (after_quote) {
          throw Error(ErrorKind::MalformedRow,
                      table.path + ":" + std::to_string(line) + ": characters after closing quote");
        }
        field += c;
        record_has_content = true;
    }
  }
  if (in_quotes) {
    throw Error(ErrorKind::MalformedRow,
                table.path + ":" + std::to_string(record_line) + ": unterminated quoted field");
  }
  if (record_has_content || !field.empty()) end_record();

  if (!rows.empty()) {
    table.header = std::move(rows.front().fields);
    rows.erase(rows.begin());
  }
  table.records = std::move(rows);
  return table;
}

Table read_file(const std::filesystem::path& file, const Row& expected_header) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorKind::MissingFile, file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  Table table = parse(buf.str(), file.string());
  if (table.header != expected_header) {
    throw Error(ErrorKind::MalformedRow, table.path + ":1: expected header '" +
                                             join(expected_header) + "', got '" +
                                             join(table.header) + "'");
  }
  for (const auto& rec : table.records) {
    if (rec.fields.size() != expected_header.size()) {
      throw Error(ErrorKind::MalformedRow,
                  table.path + ":" + std::to_string(rec.line) + ": expected " +
                      std::to_string(expected_header.size()) + " fields, got " +
                      std::to_string(rec.fields.size()));
    }
  }
  return table;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace nichebench::csv
