#include "jointspec/verify/suites.hpp"

namespace jointspec::verify {

std::vector<Suite> all_suites() {
  return {det_float_suite(),
          eigen_suite(),
          schur_suite(),
          moment_oracle_suite(),
          measure_suite(),
          marginal_suite(),
          laplacian_suite(),
          power_covariance_suite(),
          cumulant_suite(),
          analytic_minor_suite(),
          slater_suite(),
          basis_independence_suite(),
          hadamard_suite(),
          block_resolvent_suite(),
          parity_suite(),
          psd_suite(),
          norm_bound_suite(),
          convergence_suite(),
          odd_convergence_suite(),
          obata_suite(),
          mgf_suite(),
          reconciliation_suite(),
          closed_forms_suite(),
          pyramid_suite(),
          zeta_u_witness_suite(),
          hike_dedup_suite()};
}

}  // namespace jointspec::verify
