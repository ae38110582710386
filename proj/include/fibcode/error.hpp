#pragma once

#include <stdexcept>
#include <string>

namespace fibcode {

// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside the coded domain (zero, unknown preset, empty range).
class DomainError : public Error {
public:
    using Error::Error;
};

// 64-bit accumulator or Fibonacci index ran past the table.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Stream ended before the declared number of codes was read.
class TruncationError : public Error {
public:
    using Error::Error;
};

// Bad parameters (segment size, index range, repeat count).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed archive or raw-number file.
class FormatError : public Error {
public:
    using Error::Error;
};

// A file could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

// The two decoders disagreed with each other or with the source data.
class CorrectnessError : public Error {
public:
    using Error::Error;
};

} // namespace fibcode
