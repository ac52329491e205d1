// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace mma {

// Base class for all library errors. CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor/block shape incompatibilities (channel mismatch, broadcast failure, ...).
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error("dimension error: " + msg) {}
};

// Spatial geometry violations (non-integral conv output, odd dims, size not divisible).
class GeometryError : public Error {
public:
    explicit GeometryError(const std::string& msg) : Error("geometry error: " + msg) {}
};

// API contract violations (non-scalar loss, mismatched list lengths, bad step index).
class ContractError : public Error {
public:
    explicit ContractError(const std::string& msg) : Error("contract error: " + msg) {}
};

// Invalid configuration values (indivisible SE ratio, unknown config key).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error("config error: " + msg) {}
};

// Malformed file contents (image headers, checkpoints, configs).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

// Filesystem failures (cannot open/read/write).
class FileError : public Error {
public:
    explicit FileError(const std::string& msg) : Error("file error: " + msg) {}
};

// Missing prerequisite artifacts (e.g. IR training without a VI checkpoint).
class DependencyError : public Error {
public:
    explicit DependencyError(const std::string& msg) : Error("dependency error: " + msg) {}
};

} // namespace mma
