// Copyright 2026 The hoa-adapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOA_ERROR_H_
#define HOA_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace hoa {

// Argument outside the mathematical domain of an operation (|x| > 1 for a
// Legendre argument, |m| > n for a harmonic, unsupported bit depth, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested Ambisonics order exceeds what the input supports.
class OrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Matrix or buffer dimensions do not agree.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Index window lies outside a finite signal.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A monotone clock was asked to go backwards.
class ClockRegressionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Sample magnitude above full scale when the overflow guard is set to error.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Invalid scenario or layout configuration. `path` names the offending field
// (e.g. "link.loss_probability").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file is readable but not in a supported format.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hoa

#endif  // HOA_ERROR_H_
