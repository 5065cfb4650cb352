// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace tacsim {

/// Base class for every error the simulator raises on purpose.
class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingFile : public SimError {
 public:
  explicit MissingFile(const std::string& path)
      : SimError("file not found: " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class IoError : public SimError {
 public:
  using SimError::SimError;
};

/// Malformed config, scene, or trace document. Carries the 1-based line
/// of the offending token when the underlying parser knows it (0 otherwise).
class ParseError : public SimError {
 public:
  ParseError(int line, const std::string& message)
      : SimError("parse error (line " + std::to_string(line) + "): " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// A structurally well-formed document that violates a type invariant.
class ValidationError : public SimError {
 public:
  ValidationError(const std::string& field, const std::string& constraint)
      : SimError("invalid field '" + field + "': " + constraint),
        field_(field),
        constraint_(constraint) {}
  const std::string& field() const { return field_; }
  const std::string& constraint() const { return constraint_; }

 private:
  std::string field_;
  std::string constraint_;
};

class MalformedMesh : public SimError {
 public:
  using SimError::SimError;
};

class DimensionMismatch : public SimError {
 public:
  using SimError::SimError;
};

class DuplicateId : public SimError {
 public:
  explicit DuplicateId(const std::string& id)
      : SimError("duplicate body id: " + id) {}
};

class UnknownId : public SimError {
 public:
  explicit UnknownId(const std::string& id)
      : SimError("unknown body id: " + id) {}
};

class InvalidArguments : public SimError {
 public:
  using SimError::SimError;
};

}  // namespace tacsim
