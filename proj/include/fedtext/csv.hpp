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
#ifndef FEDTEXT_CSV_HPP_
#define FEDTEXT_CSV_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fedtext {

// A delimiter-separated table with a header row. Quoted fields may contain
// the delimiter, doubled quotes and line breaks (RFC 4180 style).
struct DelimitedTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view name) const;
};

DelimitedTable parse_delimited(std::string_view content, char delimiter = ',');
DelimitedTable read_delimited_file(const std::filesystem::path& path,
                                   char delimiter = ',');

}  // namespace fedtext

#endif  // FEDTEXT_CSV_HPP_
