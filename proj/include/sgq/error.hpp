// Copyright 2026 The sgq Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Object outside an action domain, or a domain that is not closed.
class DomainError : public ContractError {
 public:
  using ContractError::ContractError;
};

// Configured size bound exceeded.
class SizeError : public ContractError {
 public:
  using ContractError::ContractError;
};

// Bad orbit or object selector.
class SelectorError : public Error {
 public:
  using Error::Error;
};

// Group order bound; SGQ_MAX_ORDER overrides the default of 100000.
std::uint64_t max_enumeration_order();

}  // namespace sgq
