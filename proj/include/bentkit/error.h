// Copyright 2026 The Bentkit Authors.
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

#ifndef BENTKIT_ERROR_H_
#define BENTKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace bentkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Elements or functions from two different field contexts were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// A mathematical guarantee did not hold at runtime. Always a bug or a
// corrupted input table, never a user error.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bentkit

#endif  // BENTKIT_ERROR_H_
