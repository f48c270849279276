// Copyright 2026 The evotomo Authors
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

namespace evotomo {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad parameter ranges, non-Hermitian matrices, bad files.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Dimension < 2, mismatched dimensions, or vector lengths that are not d^2.
class DimensionError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A seed window is shorter than the extension requires.
class InsufficientSeed : public Error {
 public:
  InsufficientSeed(const std::string& what, int required)
      : Error(what), required_(required) {}
  int required() const noexcept { return required_; }

 private:
  int required_;
};

/// A numerically borderline decision (minimal-polynomial degree, zero Jordan
/// block) that the library refuses to guess.
class NumericalAmbiguity : public Error {
 public:
  using Error::Error;
};

/// Request outside the supported set, e.g. a degenerate generator spectrum.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Linear system too ill-conditioned to solve reliably.
class IllConditioned : public Error {
 public:
  IllConditioned(const std::string& what, double condition)
      : Error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

}  // namespace evotomo
