#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace oml {

/// Base class for every error raised by the library. The CLI maps all of
/// these to exit code 2; property violations are reported as data, not
/// exceptions.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------------------
// Construction errors
// ---------------------------------------------------------------------------

class CycleDetected : public Error {
public:
  explicit CycleDetected(const std::string& detail)
      : Error("cover relation is cyclic: " + detail) {}
};

/// Some pair has no unique greatest lower bound or least upper bound.
class NotALattice : public Error {
public:
  NotALattice(std::string a, std::string b, bool missing_meet)
      : Error("not a lattice: elements '" + a + "' and '" + b + "' have no unique " +
              (missing_meet ? "greatest lower bound" : "least upper bound")),
        a_(std::move(a)),
        b_(std::move(b)),
        missing_meet_(missing_meet) {}

  const std::string& a() const { return a_; }
  const std::string& b() const { return b_; }
  bool missing_meet() const { return missing_meet_; }

private:
  std::string a_, b_;
  bool missing_meet_;
};

class NotBounded : public Error {
public:
  explicit NotBounded(const std::string& which)
      : Error("not a bounded lattice: no unique " + which + " element") {}
};

class LatticeTooLarge : public Error {
public:
  LatticeTooLarge(std::size_t n, std::size_t limit)
      : Error("lattice has " + std::to_string(n) + " elements, limit is " +
              std::to_string(limit)) {}
};

class UnknownElement : public Error {
public:
  explicit UnknownElement(const std::string& name)
      : Error("unknown element '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

// ---------------------------------------------------------------------------
// Orthocomplement errors, each carrying its witness
// ---------------------------------------------------------------------------

class InvolutionViolation : public Error {
public:
  explicit InvolutionViolation(const std::string& x)
      : Error("involution violated at '" + x + "': double negation differs") {}
};

class DeMorganViolation : public Error {
public:
  DeMorganViolation(const std::string& x, const std::string& y)
      : Error("De Morgan law violated at pair ('" + x + "', '" + y + "')") {}
};

class ComplementViolation : public Error {
public:
  explicit ComplementViolation(const std::string& x)
      : Error("complement law violated at '" + x + "'") {}
};

// ---------------------------------------------------------------------------
// Subset and subalgebra errors
// ---------------------------------------------------------------------------

class EmptySet : public Error {
public:
  EmptySet() : Error("operation requires a non-empty subset") {}
};

class InvalidSubalgebra : public Error {
public:
  explicit InvalidSubalgebra(const std::string& detail)
      : Error("not a Boolean subalgebra: " + detail) {}
};

/// Internal self-check: the computed center failed the Boolean subalgebra
/// test. Cannot fire on a valid orthomodular lattice.
class CenterNotBoolean : public Error {
public:
  CenterNotBoolean() : Error("internal inconsistency: center is not a Boolean subalgebra") {}
};

/// Internal guard: the meet of the central upper bounds of an element is
/// not itself a central upper bound. Cannot fire on a finite orthomodular
/// lattice.
class NotSaturated : public Error {
public:
  explicit NotSaturated(const std::string& x)
      : Error("no least central upper bound exists for '" + x + "'") {}
};

class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(std::size_t budget)
      : Error("subalgebra enumeration exceeded budget of " + std::to_string(budget)) {}
};

class NotAFilter : public Error {
public:
  explicit NotAFilter(const std::string& detail) : Error("not a filter: " + detail) {}
};

class NotMaximal : public Error {
public:
  explicit NotMaximal(const std::string& detail)
      : Error("filter is not maximal: " + detail) {}
};

/// Square-of-opposition checks are only defined for non-central elements.
class PIsCentral : public Error {
public:
  explicit PIsCentral(const std::string& x)
      : Error("element '" + x + "' is central; the square of opposition degenerates") {}
};

// ---------------------------------------------------------------------------
// Parsing and generation errors
// ---------------------------------------------------------------------------

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, const std::string& reason)
      : Error("syntax error at line " + std::to_string(line) + ": " + reason),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

class SemanticError : public Error {
public:
  explicit SemanticError(const std::string& reason) : Error(reason) {}
};

class LoopOrder3or4 : public Error {
public:
  explicit LoopOrder3or4(const std::string& blocks)
      : Error("block diagram contains a loop of order 3 or 4 through " + blocks) {}
};

class BlockOverlapTooLarge : public Error {
public:
  BlockOverlapTooLarge(std::size_t i, std::size_t j)
      : Error("blocks " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
              " share more than one atom") {}
};

class GenerationFailed : public Error {
public:
  explicit GenerationFailed(const std::string& detail)
      : Error("generated lattice failed validation: " + detail) {}
};

}  // namespace oml
