//------------------------------------------------------------------------------
//
//   Copyright 2026 The mechfront Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#include "mechfront/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace mechfront {

namespace {

std::size_t json_count(nlohmann::json const &doc, char const *key)
{
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 0)
  {
    throw std::invalid_argument(std::string("instance JSON: '") + key +
                                "' must be a nonnegative integer");
  }
  return doc[key].get<std::size_t>();
}

double parse_value(std::string const &token, double big)
{
  if (token == "inf")
  {
    return big;
  }
  double      v   = 0.0;
  auto const  end = token.data() + token.size();
  auto const [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end)
  {
    throw std::invalid_argument("instance: malformed value '" + token + "'");
  }
  return v;
}

}  // namespace

std::string format_exact(double v)
{
  char buf[64];
  auto const [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc())
  {
    throw std::runtime_error("format_exact: conversion failed");
  }
  return std::string(buf, ptr);
}

nlohmann::json instance_to_json(Instance const &inst)
{
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < inst.n(); ++i)
  {
    nlohmann::json row = nlohmann::json::array();
    for (double v : inst.times().row(i))
    {
      if (v == inst.big())
      {
        row.push_back("inf");
      }
      else
      {
        row.push_back(v);
      }
    }
    rows.push_back(std::move(row));
  }
  return {{"n", inst.n()}, {"m", inst.m()}, {"big", inst.big()}, {"t", std::move(rows)}};
}

Instance instance_from_json(nlohmann::json const &doc)
{
  if (!doc.is_object())
  {
    throw std::invalid_argument("instance JSON: expected an object");
  }
  std::size_t const n   = json_count(doc, "n");
  std::size_t const m   = json_count(doc, "m");
  double            big = kDefaultBig;
  if (doc.contains("big"))
  {
    if (!doc["big"].is_number())
    {
      throw std::invalid_argument("instance JSON: 'big' must be a number");
    }
    big = doc["big"].get<double>();
  }
  if (!doc.contains("t") || !doc["t"].is_array() || doc["t"].size() != n)
  {
    throw std::invalid_argument("instance JSON: 't' must be an array of n rows");
  }
  Matrix t(n, m);
  for (std::size_t i = 0; i < n; ++i)
  {
    auto const &row = doc["t"][i];
    if (!row.is_array() || row.size() != m)
    {
      throw std::invalid_argument("instance JSON: every row of 't' must have m entries");
    }
    for (std::size_t j = 0; j < m; ++j)
    {
      auto const &cell = row[j];
      if (cell.is_string() && cell.get<std::string>() == "inf")
      {
        t(i, j) = big;
      }
      else if (cell.is_number())
      {
        t(i, j) = cell.get<double>();
      }
      else
      {
        throw std::invalid_argument("instance JSON: entries must be numbers or \"inf\"");
      }
    }
  }
  return Instance(std::move(t), big);
}

std::string instance_to_text(Instance const &inst)
{
  std::string out = std::to_string(inst.n()) + " " + std::to_string(inst.m()) + " " +
                    format_exact(inst.big()) + "\n";
  for (std::size_t i = 0; i < inst.n(); ++i)
  {
    for (std::size_t j = 0; j < inst.m(); ++j)
    {
      if (j > 0)
      {
        out += ' ';
      }
      double const v = inst(i, j);
      out += v == inst.big() ? std::string("inf") : format_exact(v);
    }
    out += '\n';
  }
  return out;
}

Instance instance_from_text(std::string const &text)
{
  std::istringstream in(text);
  std::string        tn, tm, tbig;
  if (!(in >> tn >> tm >> tbig))
  {
    throw std::invalid_argument("instance text: missing 'n m big' header");
  }
  auto count = [](std::string const &s) {
    std::size_t v   = 0;
    auto const  end = s.data() + s.size();
    auto const [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end)
    {
      throw std::invalid_argument("instance text: malformed count '" + s + "'");
    }
    return v;
  };
  std::size_t const n   = count(tn);
  std::size_t const m   = count(tm);
  double const      big = parse_value(tbig, kDefaultBig);
  Matrix            t(n, m);
  std::string       token;
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < m; ++j)
    {
      if (!(in >> token))
      {
        throw std::invalid_argument("instance text: expected n rows of m values");
      }
      t(i, j) = parse_value(token, big);
    }
  }
  if (in >> token)
  {
    throw std::invalid_argument("instance text: trailing data '" + token + "'");
  }
  return Instance(std::move(t), big);
}

Instance read_instance(std::istream &in)
{
  std::string const text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto const        first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
  {
    nlohmann::json doc;
    try
    {
      doc = nlohmann::json::parse(text);
    }
    catch (nlohmann::json::parse_error const &e)
    {
      throw std::invalid_argument(std::string("instance JSON: ") + e.what());
    }
    return instance_from_json(doc);
  }
  return instance_from_text(text);
}

Instance read_instance_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw std::runtime_error("cannot open instance file '" + path + "'");
  }
  return read_instance(in);
}

void write_instance_file(std::string const &path, Instance const &inst)
{
  std::ofstream out(path);
  if (!out)
  {
    throw std::runtime_error("cannot write instance file '" + path + "'");
  }
  bool const json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (json)
  {
    out << instance_to_json(inst).dump() << '\n';
  }
  else
  {
    out << instance_to_text(inst);
  }
  if (!out)
  {
    throw std::runtime_error("failed writing instance file '" + path + "'");
  }
}

}  // namespace mechfront
