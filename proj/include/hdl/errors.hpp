// errors.hpp — exception types carrying the measured magnitude that tripped them

#pragma once

#include <stdexcept>
#include <string>

namespace hdl {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Bad caller input: non-finite entries, malformed arguments, violated setup invariants.
class InvalidInput : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class DomainError : public Error {
  public:
    using Error::Error;
};

class NotUnitary : public Error {
  public:
    NotUnitary(const std::string& what, double defect) : Error(what), defect(defect) {}
    double defect;  // ‖UᴴU − I‖_F
};

class NotContraction : public Error {
  public:
    NotContraction(const std::string& what, double norm) : Error(what), norm(norm) {}
    double norm;  // measured ‖T‖₂
};

class NotPsd : public Error {
  public:
    NotPsd(const std::string& what, double min_eigenvalue)
        : Error(what), min_eigenvalue(min_eigenvalue) {}
    double min_eigenvalue;
};

// Resolvent requested at a point where the factor is numerically singular.
class BoundarySingularity : public Error {
  public:
    BoundarySingularity(const std::string& what, double condition)
        : Error(what), condition(condition) {}
    double condition;
};

// A solve that is invertible in exact arithmetic came back numerically singular.
// Never silently regularized; the caller sees the condition estimate.
class NumericalSingularity : public Error {
  public:
    NumericalSingularity(const std::string& what, double condition)
        : Error(what), condition(condition) {}
    double condition;
};

class ConstructionInconsistency : public Error {
  public:
    ConstructionInconsistency(const std::string& what, double residual)
        : Error(what), residual(residual) {}
    double residual;
};

}  // namespace hdl
