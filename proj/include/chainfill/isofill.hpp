#pragma once

#include <iosfwd>
#include <string>

#include "chainfill/decomposition.hpp"

namespace chainfill {

struct FillConfig {
    Rational lambda = Rational(1, 6);  // k >= 2 only
    double eps_stop = 1e-6;            // stop when M(R_n) <= eps_stop * M(T)
    ClipMode mode = ClipMode::exact_mode();
    bool auto_mode = true;   // pick exact for polytope norms, snap otherwise
    double snap_tol_rel = 1e-5;  // snap tolerance relative to diam(spt T)
    unsigned seed = 1;
    int max_rounds = 10000;
};

struct RoundTrace {
    int round = 0;
    size_t pieces_total = 0;     // N_n
    double remainder_mass = 0;   // M(R_n)
    double sum_piece_mass = 0;   // sum of M(T_i) so far
    double sum_fill_mass = 0;    // sum of cone masses so far
    double achieved_fraction = 0;
};

struct PieceCert {
    double mass = 0;       // M(T_i)
    double diam = 0;       // diam(spt T_i)
    double cone_mass = 0;  // M(S_i)
    double cone_bound = 0; // C_k diam M(T_i)
};

struct FillingCertificate {
    int k = 1;
    ConstantsChain consts;
    double input_mass = 0;
    double output_mass = 0;
    double ratio = 0;  // M(S) / M(T)^{(k+1)/k}
    std::vector<RoundTrace> rounds;
    std::vector<PieceCert> pieces;
    double final_remainder_mass = 0;  // coned directly at termination
    double final_cone_mass = 0;
    double final_cone_bound = 0;
    bool boundary_exact = false;
    double eps_stop = 0;
    std::string mode;  // "exact" | "snap"
    double tol = 0;    // absolute snap tolerance used
};

struct FillResult {
    Chain filling;
    FillingCertificate cert;
};

/**
 * The isoperimetric filling engine: iterate the round decomposition on the
 * running remainder, cone-fill every round piece from its own support, stop
 * once M(R_n) <= eps_stop * M(T) (or R_n = 0 exactly) and cone-fill the last
 * remainder directly. Certifies ∂S = T exactly and
 * M(S) <= D_k M(T)^{(k+1)/k}; every certified line is asserted before
 * returning. Dimensions 1 and 2; the k = 2 run feeds its slice cycles back
 * into the k = 1 engine with C = D_1.
 */
FillResult fill(const Chain& t, const FillConfig& cfg = {});

struct VerifyReport {
    bool boundary_ok = false;
    bool mass_ok = false;
    bool constants_ok = false;
    bool ratio_ok = false;
    bool ledger_ok = false;
    std::vector<std::string> failures;

    bool ok() const {
        return boundary_ok && mass_ok && constants_ok && ratio_ok && ledger_ok;
    }
};

// Re-derives every certificate line from T and S alone (plus the recorded
// per-round/per-piece numbers); independent of the engine's internal state.
VerifyReport verify(const Chain& t, const Chain& s, const FillingCertificate& cert);

void write_certificate(const FillingCertificate& cert, std::ostream& os);
FillingCertificate read_certificate(std::istream& is);

}  // namespace chainfill
