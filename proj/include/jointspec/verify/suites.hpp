#pragma once

#include <vector>

#include "jointspec/verify/suite.hpp"

namespace jointspec::verify {

// linalg
Suite det_float_suite();
Suite eigen_suite();
Suite schur_suite();

// jsm
Suite moment_oracle_suite();
Suite measure_suite();
Suite marginal_suite();
Suite laplacian_suite();
Suite power_covariance_suite();
Suite cumulant_suite();
Suite analytic_minor_suite();
Suite slater_suite();
Suite basis_independence_suite();
Suite hadamard_suite();

// starlimit
Suite block_resolvent_suite();
Suite parity_suite();
Suite psd_suite();
Suite norm_bound_suite();
Suite convergence_suite();
Suite odd_convergence_suite();
Suite obata_suite();
Suite mgf_suite();

// hikes
Suite reconciliation_suite();
Suite closed_forms_suite();
Suite pyramid_suite();
Suite zeta_u_witness_suite();
Suite hike_dedup_suite();

/// Every suite, in report order.
std::vector<Suite> all_suites();

}  // namespace jointspec::verify
