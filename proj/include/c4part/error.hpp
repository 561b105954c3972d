// Copyright 2026 The c4part Authors
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

#ifndef C4PART_ERROR_HPP_
#define C4PART_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace c4part {

// Invalid arguments handed to a library entry point (bad vertex ids, demand
// values below two, size guards).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input. `position()` is a byte offset for graph6 and a
// 1-based line number for edge lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An internal invariant failed. Never thrown on inputs satisfying the
// documented hypotheses.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace c4part

#endif  // C4PART_ERROR_HPP_
