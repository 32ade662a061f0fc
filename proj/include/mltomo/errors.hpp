#pragma once

#include <stdexcept>
#include <string>

namespace mltomo {

/// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string &msg) : Error(msg) {}
};

class NonHermitianInput : public Error {
  public:
    explicit NonHermitianInput(const std::string &msg) : Error(msg) {}
};

class PhysicalityViolation : public Error {
  public:
    explicit PhysicalityViolation(const std::string &msg) : Error(msg) {}
};

class ZeroTraceAfterClamp : public Error {
  public:
    explicit ZeroTraceAfterClamp(const std::string &msg) : Error(msg) {}
};

class EmptyDataset : public Error {
  public:
    explicit EmptyDataset(const std::string &msg) : Error(msg) {}
};

class InconsistentDimensions : public Error {
  public:
    explicit InconsistentDimensions(const std::string &msg) : Error(msg) {}
};

class InvalidConfig : public Error {
  public:
    explicit InvalidConfig(const std::string &msg) : Error(msg) {}
};

class InvalidPlan : public Error {
  public:
    explicit InvalidPlan(const std::string &msg) : Error(msg) {}
};

class SingularProbability : public Error {
  public:
    explicit SingularProbability(const std::string &msg) : Error(msg) {}
};

class DegenerateLambda : public Error {
  public:
    explicit DegenerateLambda(const std::string &msg) : Error(msg) {}
};

/// I/O and schema failures surfaced by the file-format layer.
class IoError : public Error {
  public:
    explicit IoError(const std::string &msg) : Error(msg) {}
};

class SchemaError : public IoError {
  public:
    explicit SchemaError(const std::string &msg) : IoError(msg) {}
};

} // namespace mltomo
