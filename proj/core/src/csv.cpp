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

#include "mmlink/csv.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace mmlink {

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (res.ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

std::string format_shortest(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{})
        throw std::runtime_error("format_shortest: conversion failed");
    return std::string(buf, res.ptr);
}

double parse_double(const std::string &text)
{
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t\r");
    if (begin == std::string::npos)
        throw std::invalid_argument("empty numeric field");
    double v = 0.0;
    const char *first = text.data() + begin;
    const char *last = text.data() + end + 1;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw std::invalid_argument("not a number: '" + text + "'");
    return v;
}

namespace {

std::vector<std::string> split_commas(const std::string &line)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        out.push_back(field);
    return out;
}

} // namespace

CsvTable read_numeric_csv(std::istream &is)
{
    CsvTable table;
    std::string line;
    if (!std::getline(is, line))
        throw std::invalid_argument("csv: missing header");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    table.header = split_commas(line);
    while (std::getline(is, line))
    {
        if (line.empty())
            continue;
        std::vector<double> row;
        for (const auto &f : split_commas(line))
            row.push_back(parse_double(f));
        if (row.size() != table.header.size())
            throw std::invalid_argument("csv: row width does not match header");
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace mmlink
