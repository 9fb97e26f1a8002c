/*
Copyright 2026 The Flowloop Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef FLOWLOOP_ERRORS_HPP
#define FLOWLOOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flowloop {

// Malformed or unreadable input file (bad magic, truncation, invalid header).
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite data where finite values are required.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flowloop

#endif  // FLOWLOOP_ERRORS_HPP
