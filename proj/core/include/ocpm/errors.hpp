// SPDX-License-Identifier: Apache-2.0
//
// ocpm — robust secure transmission design for IRS-aided wiretap channels
// Copyright (C) 2026 The ocpm contributors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ocpm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimMismatchError : Error {
    using Error::Error;
};

struct NotPsdError : Error {
    using Error::Error;
};

struct NoConvergenceError : Error {
    using Error::Error;
};

struct InvalidDistanceError : Error {
    using Error::Error;
};

struct SingularLinearizationError : Error {
    using Error::Error;
};

struct DegenerateChannelError : Error {
    using Error::Error;
};

struct RandomizationFailedError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace ocpm
