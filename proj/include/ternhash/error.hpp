// Copyright 2026 The ternhash Authors.
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

namespace ternhash {

// Error taxonomy shared by the library and the CLI. Each category maps
// to a distinct process exit code (see tools/).
enum class ErrorCode {
    Internal = 1,
    Usage = 2,
    Io = 3,
    Format = 4,
    Parameter = 5,
    Dimension = 6,
    Data = 7,
    CorruptCode = 8,
    DegenerateRange = 9,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Failure to open/read/write a file at the OS level.
struct IoError : Error {
    explicit IoError(const std::string& m) : Error(ErrorCode::Io, m) {}
};

// Malformed file contents: bad magic, bad version, truncation, size mismatch.
struct FormatError : Error {
    explicit FormatError(const std::string& m) : Error(ErrorCode::Format, m) {}
};

// An argument value outside its documented domain.
struct ParameterError : Error {
    explicit ParameterError(const std::string& m) : Error(ErrorCode::Parameter, m) {}
};

// Mismatched lengths or shapes between operands.
struct DimensionError : Error {
    explicit DimensionError(const std::string& m) : Error(ErrorCode::Dimension, m) {}
};

// Invalid payload values: non-finite floats, labels out of range.
struct DataError : Error {
    explicit DataError(const std::string& m) : Error(ErrorCode::Data, m) {}
};

// A packed ternary code containing the forbidden 11 bit pair.
struct CorruptCodeError : Error {
    explicit CorruptCodeError(const std::string& m) : Error(ErrorCode::CorruptCode, m) {}
};

// A histogram over a zero-width value range (all outputs identical).
struct DegenerateRangeError : Error {
    explicit DegenerateRangeError(const std::string& m) : Error(ErrorCode::DegenerateRange, m) {}
};

}  // namespace ternhash
