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

#include "mechfront/model.hpp"
#include "mechfront/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mechfront {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
  : rows_(rows)
  , cols_(cols)
  , data_(rows * cols, fill)
{}

Matrix::Matrix(std::vector<std::vector<double>> const &rows)
  : rows_(rows.size())
  , cols_(rows.empty() ? 0 : rows.front().size())
{
  data_.reserve(rows_ * cols_);
  for (auto const &r : rows)
  {
    if (r.size() != cols_)
    {
      throw std::invalid_argument("Matrix: ragged rows");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
  : Matrix(std::vector<std::vector<double>>(rows.begin(), rows.end()))
{
}

std::vector<double> Matrix::column(std::size_t c) const
{
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
  {
    out[r] = (*this)(r, c);
  }
  return out;
}

void Matrix::set_column(std::size_t c, std::span<double const> values)
{
  if (values.size() != rows_)
  {
    throw std::invalid_argument("Matrix::set_column: size mismatch");
  }
  for (std::size_t r = 0; r < rows_; ++r)
  {
    (*this)(r, c) = values[r];
  }
}

std::vector<std::vector<double>> Matrix::to_rows() const
{
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
  {
    auto span = row(r);
    out[r].assign(span.begin(), span.end());
  }
  return out;
}

namespace {

double max_below(Matrix const &times, double big)
{
  double best = 0.0;
  for (std::size_t i = 0; i < times.rows(); ++i)
  {
    for (double v : times.row(i))
    {
      if (v < big)
      {
        best = std::max(best, v);
      }
    }
  }
  return best;
}

}  // namespace

Instance::Instance(Matrix times, double big)
  : times_(std::move(times))
  , big_(big)
{
  if (times_.rows() == 0)
  {
    throw std::invalid_argument("Instance: at least one machine is required");
  }
  if (!(big_ > 0.0) || !std::isfinite(big_))
  {
    throw std::invalid_argument("Instance: big must be a positive finite value");
  }
  for (std::size_t i = 0; i < times_.rows(); ++i)
  {
    for (double v : times_.row(i))
    {
      if (!(v >= 0.0) || !std::isfinite(v))
      {
        throw std::invalid_argument("Instance: processing times must be finite and nonnegative");
      }
    }
  }
  double const bound = 2.0 * static_cast<double>(n() + m()) * max_finite();
  if (!(big_ > bound))
  {
    char buf[160];
    std::snprintf(buf, sizeof buf, "Instance: big=%g does not dominate finite entries (needs > %g)",
                  big_, bound);
    throw std::invalid_argument(buf);
  }
}

double Instance::max_finite() const noexcept
{
  return max_below(times_, big_);
}

double Instance::default_big_for(Matrix const &times)
{
  double const bound =
      2.0 * static_cast<double>(times.rows() + times.cols()) * max_below(times, kDefaultBig);
  double big = kDefaultBig;
  while (!(big > bound))
  {
    big *= 10.0;
  }
  return big;
}

StrategyProfile::StrategyProfile(Matrix reports)
  : reports_(std::move(reports))
{
  for (std::size_t i = 0; i < reports_.rows(); ++i)
  {
    for (double v : reports_.row(i))
    {
      if (!(v >= 0.0))
      {
        throw std::invalid_argument("StrategyProfile: reports must be nonnegative");
      }
    }
  }
}

MechanismId MechanismId::reserve_price(double alpha)
{
  if (!(alpha >= 1.0) || !std::isfinite(alpha))
  {
    throw std::invalid_argument("reserve-price mechanism requires finite alpha >= 1");
  }
  return {MechanismKind::kReservePrice, alpha};
}

MechanismId MechanismId::parse(std::string const &text)
{
  if (text == "fp")
  {
    return first_price();
  }
  if (text == "sp")
  {
    return second_price();
  }
  if (text == "greedy")
  {
    return pay_load_greedy();
  }
  if (text.rfind("spa:", 0) == 0)
  {
    std::string const rest = text.substr(4);
    std::size_t       used = 0;
    double            alpha{};
    try
    {
      alpha = std::stod(rest, &used);
    }
    catch (std::exception const &)
    {
      used = 0;
    }
    if (used == 0 || used != rest.size())
    {
      throw std::invalid_argument("bad alpha in mechanism id: " + text);
    }
    return reserve_price(alpha);
  }
  throw std::invalid_argument("unknown mechanism id: " + text);
}

std::string MechanismId::to_string() const
{
  switch (kind)
  {
  case MechanismKind::kFirstPrice:
    return "fp";
  case MechanismKind::kSecondPrice:
    return "sp";
  case MechanismKind::kPayLoadGreedy:
    return "greedy";
  case MechanismKind::kReservePrice:
  {
    char buf[64];
    std::snprintf(buf, sizeof buf, "spa:%.15g", alpha);
    return buf;
  }
  }
  return "?";
}

Outcome apply(MechanismId const &mech, StrategyProfile const &profile)
{
  if (mech.kind == MechanismKind::kPayLoadGreedy)
  {
    return payload_greedy(profile);
  }
  SingleTaskRule const rule(mech);
  std::size_t const    n = profile.n();
  Outcome              out;
  out.winner.resize(profile.m());
  out.payments.assign(n, 0.0);
  std::vector<double> pay(n);
  for (std::size_t j = 0; j < profile.m(); ++j)
  {
    auto const bids = profile.task_bids(j);
    out.winner[j]   = rule.run(bids, pay);
    for (std::size_t i = 0; i < n; ++i)
    {
      out.payments[i] += pay[i];
    }
  }
  return out;
}

double utility(Instance const &inst, Outcome const &out, std::size_t machine)
{
  if (machine >= inst.n() || machine >= out.payments.size())
  {
    throw std::out_of_range("utility: machine index out of range");
  }
  double work = 0.0;
  for (std::size_t j = 0; j < out.winner.size(); ++j)
  {
    if (out.winner[j] == machine)
    {
      work += inst(machine, j);
    }
  }
  return out.payments[machine] - work;
}

double utility(MechanismId const &mech, Instance const &inst, StrategyProfile const &profile,
               std::size_t machine)
{
  if (machine >= inst.n())
  {
    throw std::out_of_range("utility: machine index out of range");
  }
  if (profile.n() != inst.n() || profile.m() != inst.m())
  {
    throw std::invalid_argument("utility: profile shape does not match instance");
  }
  return utility(inst, apply(mech, profile), machine);
}

std::vector<double> loads(Instance const &inst, std::span<std::size_t const> winner)
{
  if (winner.size() != inst.m())
  {
    throw std::invalid_argument("loads: assignment length does not match task count");
  }
  std::vector<double> load(inst.n(), 0.0);
  for (std::size_t j = 0; j < winner.size(); ++j)
  {
    if (winner[j] >= inst.n())
    {
      throw std::out_of_range("loads: winner index out of range");
    }
    load[winner[j]] += inst(winner[j], j);
  }
  return load;
}

double makespan(Instance const &inst, std::span<std::size_t const> winner)
{
  auto const load = loads(inst, winner);
  return *std::max_element(load.begin(), load.end());
}

double makespan(Instance const &inst, Outcome const &out)
{
  return makespan(inst, out.winner);
}

}  // namespace mechfront
