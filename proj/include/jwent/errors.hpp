#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jwent {

/// Argument outside the mathematical domain of an operation (bad site, bad sector, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request exceeds a hard size limit of the dense path.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Non-finite input to a numerical routine.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sign rule requested for couplings with no uniform sign.
class ConventionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The ground state is not unique; carries the up-counts of all tied sectors.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(const std::string& what, std::vector<int> tied_sectors)
      : std::runtime_error(what), tied_sectors_(std::move(tied_sectors)) {}

  const std::vector<int>& tied_sectors() const noexcept { return tied_sectors_; }

 private:
  std::vector<int> tied_sectors_;
};

}  // namespace jwent
