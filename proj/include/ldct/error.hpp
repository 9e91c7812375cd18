/*
 * Copyright 2026 The ldct Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LDCT_ERROR_HPP_
#define LDCT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ldct {

// Base class for every error raised by the library. The CLI maps all of
// these onto the "data/format error" exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidKeyError : public Error {
 public:
  using Error::Error;
};

// Non-finite state while integrating the Lorenz system.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Parameters for which the requested quantity does not exist
// (e.g. no real equilibria, a zero-variance correlation, a log of |c| < 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateKeystreamError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed or unsupported file contents (PPM headers, bundle layout).
class FormatError : public Error {
 public:
  using Error::Error;
};

class ChecksumError : public FormatError {
 public:
  using FormatError::FormatError;
};

}  // namespace ldct

#endif  // LDCT_ERROR_HPP_
