/*
 Copyright 2026 sampinfo authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace sampinfo {

// A symmetric matrix failed its Cholesky factorization.
class not_positive_definite : public std::domain_error {
 public:
  explicit not_positive_definite(const std::string& what)
      : std::domain_error(what) {}
};

// A quadrature or iterative routine could not meet its tolerance.
class no_convergence : public std::runtime_error {
 public:
  explicit no_convergence(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace sampinfo
