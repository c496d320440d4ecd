#ifndef BILACE_ERROR_HPP
#define BILACE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bilace {

using Vertex = std::uint32_t;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class OddCycleFound : public Error {
 public:
  explicit OddCycleFound(std::vector<Vertex> cycle);
  const std::vector<Vertex>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<Vertex> cycle_;
};

class NoPerfectMatching : public Error {
 public:
  explicit NoPerfectMatching(std::vector<Vertex> unmatched);
  const std::vector<Vertex>& unmatched() const noexcept { return unmatched_; }

 private:
  std::vector<Vertex> unmatched_;
};

class SameClass : public Error {
 public:
  SameClass(Vertex u, Vertex v);
  Vertex u() const noexcept { return u_; }
  Vertex v() const noexcept { return v_; }

 private:
  Vertex u_;
  Vertex v_;
};

class NotConnected : public Error {
 public:
  using Error::Error;
};

/// A lazy generator produced more neighbours than its declared degree bound,
/// or an asymmetric adjacency.
class LocalFinitenessError : public Error {
 public:
  using Error::Error;
};

/// Truncated computation could not be completed inside its bounds.
class RadiusError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant of a construction failed. Signals a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bilace

#endif  // BILACE_ERROR_HPP
