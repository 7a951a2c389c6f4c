// Copyright 2026 The cheshire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHESHIRE_TEXTIO_HPP
#define CHESHIRE_TEXTIO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cheshire {

// Emitted files must be bit-identical across runs and must survive a
// parse/re-emit round trip byte-for-byte, so all numeric text goes through
// shortest-round-trip formatting (std::to_chars) instead of iostreams.

std::string format_double(double value);
std::string format_u64(std::uint64_t value);

/// Throws std::invalid_argument unless the whole field parses.
double parse_double(std::string_view field);
std::uint64_t parse_u64(std::string_view field);

/// Splits one line on the delimiter. No quoting: none of the schemas here
/// emit the delimiter inside fields.
std::vector<std::string_view> split_fields(std::string_view line, char delimiter = ',');

/// Splits text into lines on '\n', dropping a trailing empty segment.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace cheshire

#endif
