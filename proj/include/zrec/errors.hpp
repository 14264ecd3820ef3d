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

#ifndef ZREC_ERRORS_HPP_
#define ZREC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace zrec {

// Base of every error thrown by the library. The CLI maps all of these to
// exit code 2 (input error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownSemiringError : public Error {
 public:
  using Error::Error;
};

// A literal that does not match the semiring's grammar, or that names a value
// outside the carrier (e.g. "-3" for the naturals).
class LiteralError : public Error {
 public:
  enum class Reason { malformed, out_of_carrier };
  LiteralError(Reason reason, std::string token, const std::string& message)
      : Error(message), reason_(reason), token_(std::move(token)) {}
  Reason reason() const { return reason_; }
  const std::string& token() const { return token_; }

 private:
  Reason reason_;
  std::string token_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SemiringMismatchError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// A closed-form solver was handed a system whose initial vector is not zero.
class InitialConditionError : public Error {
 public:
  using Error::Error;
};

class KindMismatchError : public Error {
 public:
  using Error::Error;
};

// An automaton violating the input-state invariants.
class StructureError : public Error {
 public:
  StructureError(std::string state, const std::string& message)
      : Error(message), state_(std::move(state)) {}
  const std::string& state() const { return state_; }

 private:
  std::string state_;
};

class BoundError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace zrec

#endif  // ZREC_ERRORS_HPP_
