/*
 * Copyright 2026 The pbnphi Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace pbnphi {

enum class ErrorKind {
  Usage,
  Validation,
  Computation,
  SizeCap,
};

/// Base of every error raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A network or document violates a structural invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

/// A well-formed request has no defined value (unobservable state,
/// non-convergence, absolute-continuity violation, ...).
class ComputationError : public Error {
 public:
  explicit ComputationError(const std::string& what) : Error(ErrorKind::Computation, what) {}
};

class SizeCapError : public Error {
 public:
  explicit SizeCapError(const std::string& what) : Error(ErrorKind::SizeCap, what) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::Usage, what) {}
};

}  // namespace pbnphi
