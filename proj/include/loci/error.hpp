// Copyright 2026 The loci Authors.
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

#ifndef LOCI_ERROR_HPP
#define LOCI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace loci {

/// Base class of every error raised by the library. All of them describe
/// invalid input; none signal an internal failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A relation or function was used with a carrier it does not live on.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument lacks a required structural property (e.g. a relation that
/// must be an equivalence relation is not symmetric).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration would exceed its configured bound.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A function table is not monotone; carries the offending pair of inputs
/// (x <= y but f(x) is not below f(y)) as carrier indices.
class NotMonotone : public Error {
 public:
  NotMonotone(std::string message, std::size_t lower, std::size_t upper)
      : Error(std::move(message)), lower_(lower), upper_(upper) {}

  std::size_t lower() const { return lower_; }
  std::size_t upper() const { return upper_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
};

}  // namespace loci

#endif  // LOCI_ERROR_HPP
