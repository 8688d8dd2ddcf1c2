#ifndef BPSWF_TOOLS_COMMANDS_HPP
#define BPSWF_TOOLS_COMMANDS_HPP

#include "grid.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bpswf::cli {

struct ModeOptions {
    double alpha = 0.0;
    double c = 0.0;
    int n = 1;
    int k = 0;
    int ell = 1;
    bool scalar = false;
};

/// `alpha,c,n,k,chi` rows for every mode with 2k + n <= N, sorted by (n, k).
std::string eigenvalues_csv(double alpha, double c, int N, bool scalar);

/// `j,beta_j` rows; exactly-zero coefficients are omitted.
std::string coeffs_csv(const ModeOptions &mode);

/// `x,y,z,vx,vy,vz` (or `x,y,z,value` for scalar modes). Drop counts go to `log`.
std::string field_csv(const ModeOptions &mode, const FieldGridSpec &grid, std::ostream &log);

struct QuadratureSizes {
    int m_r = 0;
    int m_theta = 0;
    int m_phi = 0;
};

struct VerifyOptions {
    double alpha = 0.0;
    double c = 0.0;
    int N = 4;
    std::vector<std::string> checks; // empty = all
    QuadratureSizes quad;            // zero entries take bandwidth-based defaults
    std::uint64_t seed = 0;
};

const std::vector<std::string> &available_checks();

/// JSON report; `pass` at top level is the conjunction of all checks run.
nlohmann::json run_verify(const VerifyOptions &opts);

} // namespace bpswf::cli

#endif
