#ifndef XYQ_ERRORS_HPP
#define XYQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xyq {

// Base for all domain-specific failures thrown by the library.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The (lambda, gamma) origin has no polar angle.
struct OriginUndefined : DomainError {
  using DomainError::DomainError;
};

// Jacobi sweep limit reached without meeting the off-diagonal target.
struct NoConvergence : DomainError {
  using DomainError::DomainError;
};

// Point or path touches the degeneracy sphere r = 1, where the ground
// state is undefined.
struct OnDegeneracySphere : DomainError {
  using DomainError::DomainError;
};

// Connection evaluated on the theta = pi ray, where the single-chart
// vector potential diverges.
struct DiracString : DomainError {
  using DomainError::DomainError;
};

// Operation stated only for radii outside the degeneracy sphere.
struct InsideSphere : DomainError {
  using DomainError::DomainError;
};

// A discretized path is too coarse to unwrap segment phases safely.
struct InsufficientResolution : DomainError {
  using DomainError::DomainError;
};

// A closed path has points on both sides of the degeneracy sphere.
struct SphereCrossing : DomainError {
  using DomainError::DomainError;
};

// A detection query matched nothing.
struct EmptyResult : DomainError {
  using DomainError::DomainError;
};

// Filesystem failure; message carries the OS context.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace xyq

#endif
