// Copyright 2026 The mlpsol Authors
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

#ifndef MLPSOL_ERROR_H_
#define MLPSOL_ERROR_H_

#include <stdexcept>
#include <string>

namespace mlpsol {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that violates a documented schema or invariant: malformed numerals,
// dimension mismatches, unknown activations, bad options.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Fixed-point overflow, division by zero, or an argument outside the domain
// of a transcendental function.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mlpsol

#endif  // MLPSOL_ERROR_H_
