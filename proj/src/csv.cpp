/*
 * Copyright 2026 The fedtext Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "fedtext/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fedtext {

std::optional<std::size_t> DelimitedTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

DelimitedTable parse_delimited(std::string_view content, char delimiter) {
  DelimitedTable table;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool record_started = false;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    if (table.header.empty()) {
      table.header = std::move(record);
    } else {
      table.rows.push_back(std::move(record));
    }
    record.clear();
    record_started = false;
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;  // doubled quote escapes itself
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      in_quotes = true;
      record_started = true;
    } else if (c == delimiter) {
      end_field();
      record_started = true;
    } else if (c == '\n') {
      if (record_started || !field.empty()) end_record();
    } else if (c == '\r') {
      // swallowed; \r\n and bare \r both end the line at the \n branch
      if (i + 1 >= content.size() || content[i + 1] != '\n') {
        if (record_started || !field.empty()) end_record();
      }
    } else {
      field.push_back(c);
      record_started = true;
    }
  }
  if (in_quotes) throw std::runtime_error("unterminated quoted field");
  if (record_started || !field.empty()) end_record();
  return table;
}

DelimitedTable read_delimited_file(const std::filesystem::path& path,
                                   char delimiter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_delimited(buf.str(), delimiter);
}

}  // namespace fedtext
