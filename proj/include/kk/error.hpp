#pragma once

#include <stdexcept>
#include <string>

namespace kk {

/// Base class for every error thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Data errors: the input fails a documented precondition or invariant.
struct empty_spec : error {
  using error::error;
};
struct not_a_group : error {
  using error::error;
};
struct not_a_hom : error {
  using error::error;
};
struct budget_exceeded : error {
  using error::error;
};
struct not_exact : error {
  using error::error;
};
struct not_a_section : error {
  using error::error;
};
struct not_an_action : error {
  using error::error;
};
struct diagram_failure : error {
  using error::error;
};
struct mismatched_base : error {
  using error::error;
};
struct not_in_kernel : error {
  using error::error;
};
struct not_abelian : error {
  using error::error;
};
struct jacobi_failure : error {
  using error::error;
};
struct not_a_module : error {
  using error::error;
};
struct degree_overflow : error {
  using error::error;
};
struct schema_error : error {
  using error::error;
};

/// Internal-consistency failures.  These indicate a convention bug in the
/// library itself, never bad input: exactness of a validated extension
/// guarantees e.g. that conjugates land in the kernel, so a miss here means
/// a construction used the wrong orientation somewhere.
struct internal_failure : error {
  using error::error;
};
struct value_outside_kernel : internal_failure {
  using internal_failure::internal_failure;
};
struct factorization_failure : internal_failure {
  using internal_failure::internal_failure;
};
struct uniqueness_failure : internal_failure {
  using internal_failure::internal_failure;
};
struct well_definedness_failure : internal_failure {
  using internal_failure::internal_failure;
};
struct classical_mismatch : internal_failure {
  using internal_failure::internal_failure;
};

}  // namespace kk
