#pragma once

#include "sfwm/model.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sfwm
{
// Sampled joint temporal amplitude psi(t_s, t_i) on a shared time axis, with
// per-sample quadrature weights. Row index is t_s, column index is t_i.
class WavepacketGrid
{
public:
    static constexpr int kMinPoints = 16;

    WavepacketGrid(std::vector<double> t_axis, Eigen::MatrixXcd amplitudes, std::vector<double> weights);

    const std::vector<double> &t_axis() const { return t_axis_; }
    const Eigen::MatrixXcd &amplitudes() const { return amplitudes_; }
    const std::vector<double> &weights() const { return weights_; }
    int size() const { return static_cast<int>(t_axis_.size()); }

    // sum_ij w_i w_j |psi_ij|^2; approximates the pair probability.
    double weighted_norm() const;

    // Same grid with psi scaled by a constant, or with t_s and t_i exchanged.
    WavepacketGrid scaled(std::complex<double> factor) const;
    WavepacketGrid transposed() const;

private:
    std::vector<double> t_axis_;
    Eigen::MatrixXcd amplitudes_;
    std::vector<double> weights_;
};

struct SchmidtGridOptions
{
    int points = 512;
    double t_max_over_gamma = 20.0; // grid spans [0, t_max_over_gamma / gamma]
};

// Uniform trapezoid grid of the closed-form broadband wavepacket. Requires a
// pulsed pump with the analytic flattop spectrum; CW pumps are rejected.
WavepacketGrid discretize_wavepacket(const RingParams &ring, const CouplingConfig &config, const PumpSpec &pump,
                                     const SchmidtGridOptions &options = {});

struct SchmidtResult
{
    std::vector<double> lambdas; // normalized, descending, sum to 1
    double schmidt_number = 1.0; // K = 1 / sum lambda^2
    double norm = 0.0;           // sum of squared singular values before normalization
};

// Singular value decomposition of M_ij = sqrt(w_i) psi_ij sqrt(w_j).
// M = left * diag(singular_values) * right^H.
struct SchmidtDecomposition
{
    Eigen::VectorXd singular_values; // descending
    Eigen::MatrixXcd left;
    Eigen::MatrixXcd right;
    Eigen::MatrixXcd kernel; // the weighted matrix M
};

SchmidtDecomposition schmidt_decompose(const WavepacketGrid &grid);
SchmidtResult schmidt_spectrum(const WavepacketGrid &grid);

struct SchmidtSweepEntry
{
    CouplingConfig config;
    std::optional<double> schmidt_number;
    std::string error; // non-empty when the point failed

    // K - 1, for log-scale plots. NaN for failed points.
    double excess() const;
};

// K for every configuration; failures are recorded per entry and do not abort the sweep.
std::vector<SchmidtSweepEntry> schmidt_number_sweep(const RingParams &ring, std::span<const CouplingConfig> configs,
                                                    const PumpSpec &pump, const SchmidtGridOptions &options = {},
                                                    int threads = 1);
} // namespace sfwm
