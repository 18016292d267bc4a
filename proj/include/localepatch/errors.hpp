#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace localepatch {

// Every failure mode carries a stable kind tag (machine readable, used by the
// CLI for reporting) and, where meaningful, the offending element ids.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

class NotAPartialOrder : public Error {
public:
  NotAPartialOrder(const std::string& message, int u = -1, int v = -1)
      : Error("NotAPartialOrder", message), u(u), v(v) {}
  int u, v;
};

// Witness: a pair with no greatest lower bound or least upper bound, or a
// missing top/bottom (then u = v = -1).
class NotALattice : public Error {
public:
  NotALattice(const std::string& message, int u = -1, int v = -1)
      : Error("NotALattice", message), u(u), v(v) {}
  int u, v;
};

// Witness triple: u /\ (v \/ w) != (u /\ v) \/ (u /\ w).
class NotDistributive : public Error {
public:
  NotDistributive(const std::string& message, int u, int v, int w)
      : Error("NotDistributive", message), u(u), v(v), w(w) {}
  int u, v, w;
};

class NotMonotone : public Error {
public:
  NotMonotone(const std::string& message, int u = -1, int v = -1)
      : Error("NotMonotone", message), u(u), v(v) {}
  int u, v;
};

// Witness: the smallest element that is not the join of its cover.
class NotABasis : public Error {
public:
  NotABasis(const std::string& message, int counterexample)
      : Error("NotABasis", message), counterexample(counterexample) {}
  int counterexample;
};

// Witness: a finite family whose join is not preserved.
class NotJoinPreserving : public Error {
public:
  NotJoinPreserving(const std::string& message, std::vector<int> family = {})
      : Error("NotJoinPreserving", message), family(std::move(family)) {}
  std::vector<int> family;
};

// `law` is one of "top", "bottom", "meet", "join"; u, v witness the failure.
class NotAFrameHom : public Error {
public:
  NotAFrameHom(const std::string& message, std::string law, int u = -1, int v = -1)
      : Error("NotAFrameHom", message), law(std::move(law)), u(u), v(v) {}
  std::string law;
  int u, v;
};

class NotInflationary : public Error {
public:
  NotInflationary(const std::string& message, int u)
      : Error("NotInflationary", message), u(u) {}
  int u;
};

class NotMeetPreserving : public Error {
public:
  NotMeetPreserving(const std::string& message, int u, int v)
      : Error("NotMeetPreserving", message), u(u), v(v) {}
  int u, v;
};

class NotIdempotent : public Error {
public:
  NotIdempotent(const std::string& message, int u)
      : Error("NotIdempotent", message), u(u) {}
  int u;
};

class NotDirected : public Error {
public:
  NotDirected(const std::string& message, int u = -1, int v = -1)
      : Error("NotDirected", message), u(u), v(v) {}
  int u, v;
};

class UnknownTag : public Error {
public:
  UnknownTag(const std::string& message, int tag)
      : Error("UnknownTag", message), tag(tag) {}
  int tag;
};

// Raised when an exhaustive check would enumerate too many subsets.
class FrameTooLarge : public Error {
public:
  FrameTooLarge(const std::string& message, int size, int bound)
      : Error("FrameTooLarge", message), size(size), bound(bound) {}
  int size, bound;
};

class NotSpectral : public Error {
public:
  explicit NotSpectral(const std::string& message) : Error("NotSpectral", message) {}
};

class SourceNotStone : public Error {
public:
  explicit SourceNotStone(const std::string& message) : Error("SourceNotStone", message) {}
};

}  // namespace localepatch
