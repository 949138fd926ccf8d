// Copyright 2026 The tranclone Authors
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

namespace tranclone {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or subsystem indices do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the value of an argument was violated
/// (non-Hermitian input, state outside the symmetric subspace, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The requested construction exceeds the dense-dimension budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A computed object does not have the structure it is expected to have.
class StructureError : public Error {
 public:
  using Error::Error;
};

}  // namespace tranclone
