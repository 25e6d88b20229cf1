// Copyright 2026 The qtomo Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qtomo {

/// Exit status categories shared by the library errors and the CLI.
enum class ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIo = 2,
    kData = 3,
    kNumerical = 4,
};

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
    virtual ExitCode exit_code() const noexcept = 0;
};

/// Bad arguments or flags from a caller.
class UsageError : public Error {
   public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::kUsage; }
};

/// A file could not be opened, read or written.
class IoError : public Error {
   public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::kIo; }
};

/// Input data violates a structural or physical constraint.
class DataError : public Error {
   public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::kData; }
};

/// A numerical routine failed or produced an out-of-tolerance result.
class NumericalError : public Error {
   public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::kNumerical; }
};

}  // namespace qtomo
