// SPDX-License-Identifier: Apache-2.0
//
// mmlink: link-level spectral efficiency simulator for mmWave downlinks
// Copyright (C) 2026 The mmlink authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmlink {

// Shortest-safe text form of a double: 17 significant digits, so parsing the
// text back yields the same bits.
std::string format_double(double v);

// Shortest text that parses back to the same double; for messages and configs.
std::string format_shortest(double v);

// Parses a full field as a double; throws std::invalid_argument otherwise.
double parse_double(const std::string &text);

struct CsvTable
{
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// Reads a numeric CSV with one header line.
CsvTable read_numeric_csv(std::istream &is);

} // namespace mmlink
