// Copyright 2026 The mapc-csr Authors.
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

#ifndef MAPC_ERROR_HPP_
#define MAPC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mapc {

// Every error raised by the library derives from Error. The CLI maps the
// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of a formula (e.g. a non-positive
// distance) or a parameter block breaks its invariants.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Containers whose sizes or indices do not match the scenario they are
// evaluated against.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// The input cannot be turned into a valid instance, e.g. fewer STAs than APs
// when every AP needs at least one associated STA.
class InfeasibleInputError : public Error {
 public:
  using Error::Error;
};

// An instance exceeds the exact solver's configured guard rails.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Relative throughput gain against a baseline that delivers nothing.
class UndefinedGainError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mapc

#endif  // MAPC_ERROR_HPP_
