// Copyright 2026 The splitord Authors
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

#ifndef SPLITORD_KERNEL_ERRORS_HPP_
#define SPLITORD_KERNEL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace splitord {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element, map or cone does not match the shape of the group it is
/// used with.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not available for this kind of input, e.g.
/// automorphism enumeration on an infinite group.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition failed. The message names the witness.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed literal or document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace splitord

#endif  // SPLITORD_KERNEL_ERRORS_HPP_
