#pragma once

#include "summa/kernels.hpp"
#include "summa/maximal.hpp"
#include "summa/test_functions.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace summa::harness {

struct Metric {
    std::string name;
    double value = 0.0;
    // tolerance <= 0 marks a recorded-only metric with no pass condition
    double tolerance = 0.0;
    bool within() const { return tolerance <= 0.0 || value <= tolerance; }
};

struct ExperimentReport {
    std::string suite_id;
    nlohmann::json parameters;
    bool pass = true;
    std::vector<Metric> metrics;
    double runtime_seconds = 0.0;
    std::string failure_detail;

    void add(const std::string& name, double value, double tolerance = 0.0);
    void finish(); // folds metric tolerances into pass
    nlohmann::json to_json() const;
};

// Closed forms vs lattice sums at seeded random off-collision grid points.
struct IdentityConfig {
    struct Case {
        int d;
        double q; // 1 or inf
        long n;
        std::size_t G;
    };
    std::vector<Case> cases;
    std::size_t points = 1000;
    std::uint64_t seed = 1;
    double perturbation = 0.0; // added to the closed form, for harness-contract tests
    static IdentityConfig defaults();
};
ExperimentReport run_identity_suite(const IdentityConfig& cfg);

// Kernel L1 norms along an n-ladder: uniform bounds for summability kernels,
// log-affine growth for Dirichlet kernels.
struct BoundSweepConfig {
    struct Family {
        std::string label;
        kernels::KernelSpec spec; // n overridden along the ladder
        std::vector<long> ladder;
        enum class Expect { bounded, log_affine, constant_2pi } expect;
    };
    std::vector<Family> families;
    static BoundSweepConfig defaults();
};
ExperimentReport run_bound_sweep(const BoundSweepConfig& cfg);

// |sigma_n f - f| along a ladder in the requested norm.
struct ConvergenceConfig {
    std::string f_id = "trig";
    int dim = 1;
    kernels::KernelSpec family;   // n overridden
    std::string norm_id = "sup";  // "sup" or "l2"
    std::vector<long> ladder{4, 8, 16, 32, 64};
    std::size_t G = 256;
    double final_tolerance = 1e-3;
    bool expect_gibbs = false; // jump functions under raw partial sums
    std::uint64_t seed = 1;
};
ExperimentReport run_convergence_experiment(const ConvergenceConfig& cfg);

// Pointwise behavior at classified points: midpoint convergence at 1-D
// jumps (exact-coefficient route), cone-restricted convergence at
// continuity points on the grid.
struct LebesgueConfig {
    std::string f_id = "jump";
    int dim = 1;
    double tau = 2.0;
    long top_n = 512;
    std::size_t G = 512;     // grid route (dim >= 2)
    double tolerance = 0.01;
    std::uint64_t seed = 1;
};
ExperimentReport run_lebesgue_experiment(const LebesgueConfig& cfg);

// sup_n |K_n^theta|_{E_inf} over a cone ladder and the ratio
// sigma_box f / M_box f over a function batch, swept across grids.
struct DominationConfig {
    std::string theta_id = "fejer";
    double tau = 2.0;
    long index_limit = 16;
    std::vector<std::size_t> grids{64, 128, 256};
    int batch = 6;
    double safety_factor = 4.0;
    double stability = 0.10;
    std::uint64_t seed = 1;
};
ExperimentReport run_domination_experiment(const DominationConfig& cfg);

// Support bijection (k,l) -> (k+l, l-k) and the empirical proportionality
// factor between triangular and rotated cubic partial sums.
ExperimentReport run_rotation_check(long n, int trials, std::uint64_t seed = 1);

} // namespace summa::harness
