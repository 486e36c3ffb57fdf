// Copyright 2026 The Agreeable Authors
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

#ifndef AGREEABLE_ERRORS_H_
#define AGREEABLE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace agreeable {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument or instance does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured size cap (brute-force items, DP cells, cover blocks,
// resample budget) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed input text. The message names the line or field at fault.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An algorithm was asked to run on an instance kind it does not accept.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace agreeable

#endif  // AGREEABLE_ERRORS_H_
