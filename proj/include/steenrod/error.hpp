// Copyright 2026 The steenrod Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace steenrod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed complex file or other textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A topological precondition failed (not a closed pseudomanifold,
/// non-orientable where an orientation is required, wrong dimension, ...).
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// A product construction would exceed the configured simplex budget.
class SizeBoundError : public Error {
 public:
  using Error::Error;
};

/// Bad argument: degree out of range, ring mismatch, unsupported modulus.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace steenrod
