#ifndef BPSWF_ERRORS_HPP
#define BPSWF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bpswf {

// Invalid parameter (alpha <= -1, zero quadrature count, negative degree, ...).
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation point outside the domain of the operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Spherical index outside the admissible set.
class IndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

// Evaluation on the polar axis where the spherical frame is undefined.
class PoleError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Mismatched configuration, e.g. a quadrature rule built for another alpha.
class ConfigurationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Sample set too degenerate to support a ratio estimate.
class SamplingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace bpswf

#endif
