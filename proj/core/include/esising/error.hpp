// Copyright 2026 The esising Authors.
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

namespace esising {

// Base class for every error raised by the library. Messages name the
// violated condition so the CLI can surface them verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument to an operation (dimension mismatch, out-of-range parameter).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An EsInstance invariant does not hold.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// The exhaustive oracle refuses instances above its enumeration cap.
class OracleTooLarge : public Error {
 public:
  using Error::Error;
};

// Malformed instance, program, or campaign file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace esising
