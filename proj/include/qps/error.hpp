// Copyright 2026 The qps Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qps {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed circuit text. Carries the 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Input that is well-formed but violates a documented constraint
/// (device model bounds, circuit too large for device, bad config).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A transpiler stage could not produce an output (e.g. stochastic routing
/// exhausted its trial budget).
class PassError : public Error {
 public:
  using Error::Error;
};

/// A simulator was asked to handle a circuit outside its domain
/// (non-Clifford gate in a tableau, too many qubits for a statevector).
class SimulationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qps
