#pragma once

#include <stdexcept>
#include <string>

namespace sicq {

// Mismatched or otherwise unusable dimensions.
class DimensionError : public std::invalid_argument {
  public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A vector required to be unit-norm is not.
class NormalizationError : public std::invalid_argument {
  public:
    NormalizationError(const std::string& what, double norm)
        : std::invalid_argument(what), norm_(norm) {}
    double norm() const { return norm_; }

  private:
    double norm_;
};

// A matrix handed in as Hermitian fails the entrywise self-adjointness check.
class HermiticityError : public std::invalid_argument {
  public:
    explicit HermiticityError(const std::string& what) : std::invalid_argument(what) {}
};

// An operator offered as a density operator violates trace-one or positivity.
class DensityError : public std::invalid_argument {
  public:
    explicit DensityError(const std::string& what) : std::invalid_argument(what) {}
};

// A probability vector whose reconstruction is not a quantum state; carries
// the offending minimum eigenvalue.
class ValidityError : public std::runtime_error {
  public:
    ValidityError(const std::string& what, double min_eigenvalue)
        : std::runtime_error(what), min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const { return min_eigenvalue_; }

  private:
    double min_eigenvalue_;
};

// Requested tensor dimension exceeds the dense desk-scale cap.
class CapError : public std::invalid_argument {
  public:
    explicit CapError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace sicq
