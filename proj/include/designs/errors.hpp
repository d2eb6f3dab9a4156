#pragma once

#include <stdexcept>
#include <string>

namespace designs {

// Invalid input or violated precondition.  CLI maps this to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A requested object provably does not exist (e.g. a divisibility
// obstruction).  This is an answer, not a failure; CLI exit code 1.
class Nonexistence : public Error {
 public:
  explicit Nonexistence(const std::string& what) : Error(what) {}
};

// A containment graph whose side degrees are not constant.
class NotBiregular : public Error {
 public:
  explicit NotBiregular(const std::string& what) : Error(what) {}
};

}  // namespace designs
