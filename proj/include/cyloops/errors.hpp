#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyloops {

/// A gamma function (or Pochhammer ratio standing in for one) hit a
/// nonpositive integer argument.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two evaluation routes for the same quantity disagree.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A derived density disagrees with the closed-form rational.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, std::size_t root_index)
      : std::runtime_error(what), root_index_(root_index) {}
  std::size_t root_index() const noexcept { return root_index_; }

 private:
  std::size_t root_index_;
};

}  // namespace cyloops
