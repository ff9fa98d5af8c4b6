/*
  Copyright (c) 2026 the wmisolve authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef WMISOLVE_ERRORS_HPP
#define WMISOLVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wmi {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
        line(line), col(col) {}
  int line;
  int col;
};

class UnknownVariableError : public Error {
public:
  using Error::Error;
};

class UnboundedError : public Error {
public:
  using Error::Error;
};

class NotPolynomialError : public Error {
public:
  using Error::Error;
};

class UnknownFuncError : public Error {
public:
  using Error::Error;
};

class NegativeWeightError : public Error {
public:
  using Error::Error;
};

class ZeroAcceptanceError : public Error {
public:
  using Error::Error;
};

class TooLargeError : public Error {
public:
  using Error::Error;
};

class SkeletonFiViolation : public Error {
public:
  using Error::Error;
};

class ZeroPartitionError : public Error {
public:
  using Error::Error;
};

class UnsatError : public Error {
public:
  using Error::Error;
};

}  // namespace wmi

#endif
