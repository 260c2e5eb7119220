// Copyright 2026 The spatial-lgi Authors
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

namespace slgi {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Invalid user input: bad model parameters, mismatched chain lengths, bad grids.
class ConfigError : public Error {
   public:
    using Error::Error;
};

/// A site index outside [0, n_sites).
class IndexError : public ConfigError {
   public:
    using ConfigError::ConfigError;
};

/// Sequential measurement events given out of time order.
class OrderingError : public ConfigError {
   public:
    using ConfigError::ConfigError;
};

/// Requested Hilbert space or dense realization is too large.
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// Base for failures of a numerical routine on otherwise valid input.
class NumericalError : public Error {
   public:
    using Error::Error;
};

class ConvergenceError : public NumericalError {
   public:
    ConvergenceError(const std::string &what, double residual) : NumericalError(what), residual_(residual) {}
    double residual() const noexcept {
        return residual_;
    }

   private:
    double residual_;
};

/// The sampler was forced onto a branch of (numerically) zero probability.
class DegeneracyError : public NumericalError {
   public:
    using NumericalError::NumericalError;
};

}  // namespace slgi
