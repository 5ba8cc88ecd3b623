#pragma once

#include <stdexcept>
#include <string>

namespace cantorq {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad word, point off its
/// constraint, wrong split-set cardinality, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Refinement along a boundary's ternary address neither reached a gap nor
/// closed a period within the configured depth.
class DepthExceeded : public Error {
 public:
  DepthExceeded(const std::string& what, int depth) : Error(what), depth_(depth) {}
  int depth() const noexcept { return depth_; }

 private:
  int depth_;
};

/// A Voronoi cell carries zero probability mass.
class EmptyCell : public Error {
 public:
  EmptyCell(const std::string& what, std::size_t index) : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace cantorq
