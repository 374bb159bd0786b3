// Copyright 2026 The aoglab Authors
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

#ifndef AOGLAB_ERROR_HPP_
#define AOGLAB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace aoglab {

// Bad parameters, malformed words, or a violated precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested vertex count (or oracle input size) is above the configured cap.
class SizeGuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A constructor produced an object that its own verifier rejected.
class ConstructionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outcome of a certificate check. Rejections carry the first violation found.
class Verdict {
 public:
  static Verdict accept() { return Verdict(true, {}); }
  static Verdict reject(std::string reason) {
    return Verdict(false, std::move(reason));
  }

  bool accepted() const { return accepted_; }
  explicit operator bool() const { return accepted_; }
  const std::string& reason() const { return reason_; }

 private:
  Verdict(bool accepted, std::string reason)
      : accepted_(accepted), reason_(std::move(reason)) {}

  bool accepted_;
  std::string reason_;
};

}  // namespace aoglab

#endif  // AOGLAB_ERROR_HPP_
