/*
 * Copyright 2026 The hdrcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HDRCHECK_ERROR_H
#define HDRCHECK_ERROR_H

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hdrcheck {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid generator or analysis parameter.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Numeric argument outside the domain of a transfer function or type.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Frame signalling that an operation cannot handle (e.g. non-PQ transfer).
class UnsupportedSignalError : public Error {
 public:
  using Error::Error;
};

// Analysis input without enough structure to measure (e.g. a flat region
// handed to the bit-depth estimator).
class InsufficientSignalError : public Error {
 public:
  using Error::Error;
};

// Malformed byte stream. `offset` is the position of the offending byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::uint64_t offset)
      : Error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::uint64_t offset() const { return offset_; }

 private:
  std::uint64_t offset_;
};

// Stream ended before a complete frame or record could be read.
class TruncationError : public ParseError {
 public:
  using ParseError::ParseError;
};

// ISOBMFF box tree inconsistent with the file (size overruns, bad headers).
class StructuralError : public ParseError {
 public:
  using ParseError::ParseError;
};

// A document failed schema validation; `field` names the offending field.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Measurement-log problem; `line` is 1-based, 0 when not tied to a line.
class LogError : public Error {
 public:
  LogError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Digest or content check failed against a recorded manifest.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hdrcheck

#endif  // HDRCHECK_ERROR_H
