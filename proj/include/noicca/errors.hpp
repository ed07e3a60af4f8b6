// include/noicca/errors.hpp

// Copyright 2026  The noicca authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace noicca {

/// Base class for all noicca errors.  The CLI maps the subclasses onto
/// process exit codes (see tools/noicca_main.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched or out-of-range matrix/vector shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: indefinite matrix where PSD was required, eigensolver
/// non-convergence, rank deficiency, degenerate directions.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Invalid data contents (too few samples, empty minibatch, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration (bad keys, out-of-range hyperparameters, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed file contents (bad magic, truncation, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Failure to open/read/write a file.
class IoError : public Error {
 public:
  using Error::Error;
};

/// API misuse, e.g. a backward pass fed a cache from a different forward.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace noicca
