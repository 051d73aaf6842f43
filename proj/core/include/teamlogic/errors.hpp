#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace teamlogic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

// Variables of a formula or team do not fit the scope they are used with.
class ScopeMismatch : public Error {
 public:
  using Error::Error;
};

// A scope is larger than the configured evaluation or family cap.
class ScopeCapExceeded : public Error {
 public:
  ScopeCapExceeded(std::size_t scope_size, std::size_t cap, const std::string& which);

  std::size_t scope_size() const noexcept { return scope_size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t scope_size_;
  std::size_t cap_;
};

// An exhaustive search would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedConnective : public Error {
 public:
  using Error::Error;
};

// Operations stated only for consistent formulas.
class InconsistentInput : public Error {
 public:
  using Error::Error;
};

class ValuationNotSupporting : public Error {
 public:
  using Error::Error;
};

class NotSubteam : public Error {
 public:
  using Error::Error;
};

// A constructed result failed its re-check. Always a bug.
class InternalAssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace teamlogic
