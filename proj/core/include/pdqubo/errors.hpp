// Copyright 2026 The pdqubo authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace pdqubo {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (diagram CSV, QUBO files, bit strings).
/// Messages carry the offending source name and line number.
struct ParseError : Error {
    using Error::Error;
};

/// Violated value constraints: bad coordinates, dimension mismatches,
/// invalid parameters, structurally impossible requests.
struct DomainError : Error {
    using Error::Error;
};

/// A configured enumeration cap was exceeded.
struct SizeError : Error {
    using Error::Error;
};

}  // namespace pdqubo
