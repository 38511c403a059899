// Copyright 2026 The dpident Authors
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

#ifndef DPIDENT_SRC_CSV_H_
#define DPIDENT_SRC_CSV_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dpident::csv {

// RFC 4180-style reader: comma separator, optional quoting with doubled
// quote escapes, quoted fields may contain commas and newlines, CRLF and
// bare LF both accepted, UTF-8 BOM stripped. Decimal point only (no locale
// commas).
//
// Returns one vector of fields per record. Throws ParseError on a stray
// quote. The final record may lack a trailing newline.
std::vector<std::vector<std::string>> ReadRecords(std::istream& in);

// Shortest round-trip decimal representation (std::to_chars); integral
// values print without an exponent or trailing ".0".
std::string FormatDouble(double value);

// Quotes the field if it contains a comma, quote or newline.
std::string EscapeField(std::string_view field);

void WriteRecord(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace dpident::csv

#endif  // DPIDENT_SRC_CSV_H_
