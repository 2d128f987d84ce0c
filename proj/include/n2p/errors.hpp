#ifndef N2P_ERRORS_HPP
#define N2P_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace n2p {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A generator equal to 1 was supplied.
struct GeneratorIsUnit : Error {
  GeneratorIsUnit() : Error("generator equal to 1 is not allowed") {}
};

// A degree-1 generator is present; the ambient ring would change if we
// quotiented it away, so we refuse instead.
struct ContainsLinearForm : Error {
  explicit ContainsLinearForm(const std::string& gen)
      : Error("ideal contains the linear generator " + gen) {}
};

// A generator of degree != 2 where a quadratic ideal is required.
struct NotQuadratic : Error {
  std::vector<std::string> offenders;
  explicit NotQuadratic(std::vector<std::string> offs)
      : Error("ideal is not generated by quadrics (offending: " +
              join(offs) + ")"),
        offenders(std::move(offs)) {}

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += v[i];
    }
    return s;
  }
};

struct NotSquarefree : Error {
  explicit NotSquarefree(const std::string& gen)
      : Error("generator " + gen + " is not squarefree") {}
};

struct EmptyVariableSet : Error {
  EmptyVariableSet() : Error("variable subset must be non-empty") {}
};

struct VertexNotInComplex : Error {
  explicit VertexNotInComplex(const std::string& v)
      : Error("vertex " + v + " is not a face of the complex") {}
};

struct VoidComplex : Error {
  VoidComplex() : Error("the void complex (no faces) is not representable") {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error(what) {}
};

struct TooManyVariables : Error {
  explicit TooManyVariables(int n, int cap)
      : Error("refusing the 2^n subset sweep for " + std::to_string(n) +
              " variables (cap " + std::to_string(cap) + ")") {}
};

struct DegreeCapTooLow : Error {
  explicit DegreeCapTooLow(int cap, int needed)
      : Error("degree cap " + std::to_string(cap) +
              " truncates the resolution (complete through degree " +
              std::to_string(needed) + " is required)") {}
};

struct IncompleteTable : Error {
  IncompleteTable() : Error("Betti table is truncated; verdict would be unreliable") {}
};

struct ZeroIdealRegularity : Error {
  ZeroIdealRegularity() : Error("regularity of the zero ideal is undefined") {}
};

struct ParseError : Error {
  int line, column;
  ParseError(int ln, int col, const std::string& msg)
      : Error("parse error at " + std::to_string(ln) + ":" +
              std::to_string(col) + ": " + msg),
        line(ln), column(col) {}
};

struct UnknownVariable : Error {
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable " + name) {}
};

struct SelfLoop : Error {
  explicit SelfLoop(const std::string& v)
      : Error("self loop at vertex " + v) {}
};

struct DuplicateEdge : Error {
  explicit DuplicateEdge(const std::string& e)
      : Error("duplicate edge " + e) {}
};

}  // namespace n2p

#endif  // N2P_ERRORS_HPP
