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
#pragma once

// Core scheduling objects: processing-time instances, reported strategy
// profiles, mechanism outcomes, and the utility / makespan evaluations that
// every other module builds on.
//
// Machines and tasks are indexed from 0 throughout the library.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mechfront {

inline constexpr double kDefaultBig = 1e6;

/// Dense row-major matrix, rows = machines, columns = tasks.
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::vector<std::vector<double>> const &rows);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept
  {
    return rows_;
  }
  std::size_t cols() const noexcept
  {
    return cols_;
  }

  double operator()(std::size_t r, std::size_t c) const
  {
    return data_[r * cols_ + c];
  }
  double &operator()(std::size_t r, std::size_t c)
  {
    return data_[r * cols_ + c];
  }

  std::span<double const> row(std::size_t r) const
  {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<double> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<double const> values);

  std::vector<std::vector<double>> to_rows() const;

  bool operator==(Matrix const &) const = default;

private:
  std::size_t         rows_{0};
  std::size_t         cols_{0};
  std::vector<double> data_;
};

/// True processing times t (n machines x m tasks). Entries >= big stand in
/// for an arbitrarily large time.
class Instance
{
public:
  /// Validates nonnegativity and that big strictly dominates every finite
  /// entry: big > 2 (n + m) max_finite.
  explicit Instance(Matrix times, double big = kDefaultBig);

  std::size_t n() const noexcept
  {
    return times_.rows();
  }
  std::size_t m() const noexcept
  {
    return times_.cols();
  }
  double big() const noexcept
  {
    return big_;
  }
  Matrix const &times() const noexcept
  {
    return times_;
  }
  double operator()(std::size_t i, std::size_t j) const
  {
    return times_(i, j);
  }
  std::vector<double> column(std::size_t j) const
  {
    return times_.column(j);
  }

  bool is_sentinel(double v) const noexcept
  {
    return v >= big_;
  }
  /// Largest entry that is not a sentinel (0 when there is none).
  double max_finite() const noexcept;

  /// Smallest big value satisfying the dominance rule for `times`, rounded up
  /// to a power of ten and never below kDefaultBig.
  static double default_big_for(Matrix const &times);

  bool operator==(Instance const &) const = default;

private:
  Matrix times_;
  double big_;
};

/// Reported processing times s, same shape as the instance.
class StrategyProfile
{
public:
  StrategyProfile() = default;
  explicit StrategyProfile(Matrix reports);

  std::size_t n() const noexcept
  {
    return reports_.rows();
  }
  std::size_t m() const noexcept
  {
    return reports_.cols();
  }
  Matrix const &reports() const noexcept
  {
    return reports_;
  }
  double operator()(std::size_t i, std::size_t j) const
  {
    return reports_(i, j);
  }
  std::vector<double> task_bids(std::size_t j) const
  {
    return reports_.column(j);
  }

  bool operator==(StrategyProfile const &) const = default;

private:
  Matrix reports_;
};

/// Allocation x (as a winner per task) and payments p.
struct Outcome
{
  std::vector<std::size_t> winner;
  std::vector<double>      payments;

  bool operator==(Outcome const &) const = default;
};

enum class MechanismKind
{
  kFirstPrice,
  kSecondPrice,
  kReservePrice,  ///< second price capped at alpha times the lowest bid
  kPayLoadGreedy,
};

/// Mechanism identifier. Ties are always broken towards the lowest index.
struct MechanismId
{
  MechanismKind kind{MechanismKind::kFirstPrice};
  double        alpha{1.0};

  static MechanismId first_price()
  {
    return {MechanismKind::kFirstPrice, 1.0};
  }
  static MechanismId second_price()
  {
    return {MechanismKind::kSecondPrice, 1.0};
  }
  static MechanismId reserve_price(double alpha);
  static MechanismId pay_load_greedy()
  {
    return {MechanismKind::kPayLoadGreedy, 1.0};
  }

  /// Parses `fp`, `sp`, `spa:<alpha>` or `greedy`.
  static MechanismId parse(std::string const &text);
  std::string        to_string() const;

  bool task_independent() const noexcept
  {
    return kind != MechanismKind::kPayLoadGreedy;
  }

  bool operator==(MechanismId const &) const = default;
};

/// Runs the mechanism on the reports.
Outcome apply(MechanismId const &mech, StrategyProfile const &profile);

/// Payment minus true workload of `machine` when `profile` is reported.
double utility(MechanismId const &mech, Instance const &inst, StrategyProfile const &profile,
               std::size_t machine);
double utility(Instance const &inst, Outcome const &out, std::size_t machine);

/// Per-machine true load of an assignment.
std::vector<double> loads(Instance const &inst, std::span<std::size_t const> winner);
double              makespan(Instance const &inst, std::span<std::size_t const> winner);
double              makespan(Instance const &inst, Outcome const &out);

}  // namespace mechfront
