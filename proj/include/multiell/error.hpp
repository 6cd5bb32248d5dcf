// SPDX-License-Identifier: Apache-2.0
//
// multiell - Monte Carlo simulator for the multi-elliptical propagation model
// Copyright (C) 2026 The multiell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MULTIELL_ERROR_HPP
#define MULTIELL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multiell {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// geometry
class DegenerateEllipse : public Error { public: using Error::Error; };
class InvalidGeometry : public Error { public: using Error::Error; };

// antenna
class InvalidHpbw : public Error { public: using Error::Error; };

// pdp
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};
class UnsortedDelays : public Error { public: using Error::Error; };
class EmptyProfile : public Error { public: using Error::Error; };
class InvalidDs : public Error { public: using Error::Error; };

// scattering
class KappaOutOfRange : public Error { public: using Error::Error; };

// engine
class ConfigError : public Error { public: using Error::Error; };

// stats
class NoPower : public Error { public: using Error::Error; };
class BadBinWidth : public Error { public: using Error::Error; };

} // namespace multiell

#endif
