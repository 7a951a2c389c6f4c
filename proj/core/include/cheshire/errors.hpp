// Copyright 2026 The cheshire Authors
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

#ifndef CHESHIRE_ERRORS_HPP
#define CHESHIRE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cheshire {

/// Pre- and post-selection overlap is numerically zero, so weak values and
/// normalized incidences are undefined for this configuration.
class OrthogonalSelection : public std::runtime_error {
 public:
  explicit OrthogonalSelection(const std::string& what) : std::runtime_error(what) {}
};

/// A reference count of zero was drawn, so the incidence ratio n/n0 is undefined.
class ZeroReference : public std::runtime_error {
 public:
  explicit ZeroReference(const std::string& what) : std::runtime_error(what) {}
};

/// Line-fit abscissae are all identical; the slope is undetermined.
class DegenerateAbscissa : public std::invalid_argument {
 public:
  explicit DegenerateAbscissa(const std::string& what) : std::invalid_argument(what) {}
};

/// Fewer data points than the fit has parameters.
class TooFewPoints : public std::invalid_argument {
 public:
  explicit TooFewPoints(const std::string& what) : std::invalid_argument(what) {}
};

/// A tomographic reconstruction was requested from an incomplete set of
/// measurement settings.
class MissingSetting : public std::invalid_argument {
 public:
  explicit MissingSetting(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cheshire

#endif
