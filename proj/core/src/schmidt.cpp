#include "sfwm/schmidt.hpp"

#include "sfwm/parallel.hpp"
#include "sfwm/pulsed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sfwm
{
namespace
{
Eigen::MatrixXcd weighted_kernel(const WavepacketGrid &grid)
{
    const int n = grid.size();
    Eigen::VectorXd root_w(n);
    for (int i = 0; i < n; ++i)
    {
        root_w[i] = std::sqrt(grid.weights()[static_cast<std::size_t>(i)]);
    }
    Eigen::MatrixXcd m = root_w.asDiagonal() * grid.amplitudes() * root_w.asDiagonal();
    if (!m.allFinite())
    {
        throw ComputationError("Schmidt decomposition: wavepacket grid contains non-finite values");
    }
    return m;
}

// True when the kernel is real and symmetric, so |eigenvalues| are its singular values.
bool is_real_symmetric(const Eigen::MatrixXcd &m)
{
    if (!m.imag().isZero(0.0))
    {
        return false;
    }
    const Eigen::MatrixXd re = m.real();
    const double scale = re.norm();
    return (re - re.transpose()).norm() <= 1e-14 * scale;
}

SchmidtResult result_from_singular_values(std::vector<double> sigma)
{
    std::sort(sigma.begin(), sigma.end(), std::greater<>());
    double norm = 0.0;
    for (double s : sigma)
    {
        norm += s * s;
    }
    if (!(norm > 0.0) || !std::isfinite(norm))
    {
        throw ComputationError("Schmidt decomposition: wavepacket has zero or non-finite norm");
    }
    SchmidtResult result;
    result.norm = norm;
    result.lambdas.reserve(sigma.size());
    double purity = 0.0;
    for (double s : sigma)
    {
        const double lambda = s * s / norm;
        result.lambdas.push_back(lambda);
        purity += lambda * lambda;
    }
    result.schmidt_number = 1.0 / purity;
    return result;
}
} // namespace

WavepacketGrid::WavepacketGrid(std::vector<double> t_axis, Eigen::MatrixXcd amplitudes, std::vector<double> weights)
    : t_axis_(std::move(t_axis)), amplitudes_(std::move(amplitudes)), weights_(std::move(weights))
{
    const auto n = static_cast<Eigen::Index>(t_axis_.size());
    if (n < kMinPoints)
    {
        throw ValidationError("WavepacketGrid: at least 16 time samples required");
    }
    if (amplitudes_.rows() != n || amplitudes_.cols() != n)
    {
        throw ValidationError("WavepacketGrid: amplitude matrix must be N x N for N time samples");
    }
    if (weights_.size() != t_axis_.size())
    {
        throw ValidationError("WavepacketGrid: one quadrature weight per time sample required");
    }
    for (std::size_t i = 0; i < t_axis_.size(); ++i)
    {
        if (!std::isfinite(t_axis_[i]) || (i > 0 && !(t_axis_[i] > t_axis_[i - 1])))
        {
            throw ValidationError("WavepacketGrid: time axis must be finite and strictly increasing");
        }
        if (!(std::isfinite(weights_[i]) && weights_[i] >= 0.0))
        {
            throw ValidationError("WavepacketGrid: weights must be finite and non-negative");
        }
    }
}

double WavepacketGrid::weighted_norm() const
{
    double sum = 0.0;
    const int n = size();
    for (int j = 0; j < n; ++j)
    {
        for (int i = 0; i < n; ++i)
        {
            sum += weights_[static_cast<std::size_t>(i)] * weights_[static_cast<std::size_t>(j)] *
                   std::norm(amplitudes_(i, j));
        }
    }
    return sum;
}

WavepacketGrid WavepacketGrid::scaled(std::complex<double> factor) const
{
    return {t_axis_, amplitudes_ * factor, weights_};
}

WavepacketGrid WavepacketGrid::transposed() const
{
    return {t_axis_, amplitudes_.transpose(), weights_};
}

WavepacketGrid discretize_wavepacket(const RingParams &ring, const CouplingConfig &config, const PumpSpec &pump,
                                     const SchmidtGridOptions &options)
{
    if (pump.is_cw())
    {
        throw ValidationError("Schmidt number is defined per pulse; a CW pump has no finite joint temporal amplitude");
    }
    if (pump.spectrum_kind() != SpectrumKind::FlattopAnalytic)
    {
        throw ValidationError("discretize_wavepacket requires the broadband flattop spectrum (closed-form wavepacket)");
    }
    if (options.points < WavepacketGrid::kMinPoints)
    {
        throw ValidationError("discretize_wavepacket: at least 16 grid points required");
    }
    if (!(options.t_max_over_gamma > 0.0) || !std::isfinite(options.t_max_over_gamma))
    {
        throw ValidationError("discretize_wavepacket: t_max_over_gamma must be positive");
    }

    const int n = options.points;
    const double gamma = config.gamma();
    const double t_max = options.t_max_over_gamma / gamma;
    const double step = t_max / (n - 1);
    std::vector<double> t(static_cast<std::size_t>(n));
    std::vector<double> w(static_cast<std::size_t>(n), step);
    for (int i = 0; i < n; ++i)
    {
        t[static_cast<std::size_t>(i)] = i * step;
    }
    w.front() = 0.5 * step;
    w.back() = 0.5 * step;

    const double delta_omega = pump.delta_omega(config.pump_gamma());
    // Validates energy and the broadband condition.
    (void)pulsed_wavepacket(ring, config, pump.energy(), delta_omega, 0.0, 0.0);
    const double prefactor = config.pump().a * config.output_gamma() * kTwoPi * ring.nonlinear_coefficient() *
                             pump.energy() / delta_omega;
    Eigen::MatrixXcd psi(n, n);
    for (int j = 0; j < n; ++j)
    {
        for (int i = j; i < n; ++i)
        {
            const double value =
                prefactor * pulsed_wavepacket_shape(config.pump_gamma(), gamma, t[static_cast<std::size_t>(i)],
                                                    t[static_cast<std::size_t>(j)]);
            psi(i, j) = value;
            psi(j, i) = value;
        }
    }
    return {std::move(t), std::move(psi), std::move(w)};
}

SchmidtDecomposition schmidt_decompose(const WavepacketGrid &grid)
{
    SchmidtDecomposition out;
    out.kernel = weighted_kernel(grid);
    const Eigen::Index n = out.kernel.rows();
    if (is_real_symmetric(out.kernel))
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(out.kernel.real());
        if (solver.info() != Eigen::Success)
        {
            throw ComputationError("Schmidt decomposition: symmetric eigensolver failed");
        }
        std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        const auto &values = solver.eigenvalues();
        std::stable_sort(order.begin(), order.end(),
                         [&](Eigen::Index a, Eigen::Index b) { return std::abs(values[a]) > std::abs(values[b]); });
        out.singular_values.resize(n);
        out.left.resize(n, n);
        out.right.resize(n, n);
        for (Eigen::Index k = 0; k < n; ++k)
        {
            const Eigen::Index src = order[static_cast<std::size_t>(k)];
            const double lambda = values[src];
            out.singular_values[k] = std::abs(lambda);
            out.left.col(k) = solver.eigenvectors().col(src).cast<std::complex<double>>();
            out.right.col(k) = (lambda < 0.0 ? -1.0 : 1.0) * out.left.col(k);
        }
        return out;
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(out.kernel, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success)
    {
        throw ComputationError("Schmidt decomposition: SVD failed");
    }
    out.singular_values = svd.singularValues();
    out.left = svd.matrixU();
    out.right = svd.matrixV();
    return out;
}

SchmidtResult schmidt_spectrum(const WavepacketGrid &grid)
{
    const Eigen::MatrixXcd kernel = weighted_kernel(grid);
    std::vector<double> sigma;
    if (is_real_symmetric(kernel))
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(kernel.real(), Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
        {
            throw ComputationError("Schmidt decomposition: symmetric eigensolver failed");
        }
        for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
        {
            sigma.push_back(std::abs(solver.eigenvalues()[k]));
        }
    }
    else
    {
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(kernel);
        if (svd.info() != Eigen::Success)
        {
            throw ComputationError("Schmidt decomposition: SVD failed");
        }
        sigma.assign(svd.singularValues().data(), svd.singularValues().data() + svd.singularValues().size());
    }
    return result_from_singular_values(std::move(sigma));
}

double SchmidtSweepEntry::excess() const
{
    return schmidt_number ? *schmidt_number - 1.0 : std::numeric_limits<double>::quiet_NaN();
}

std::vector<SchmidtSweepEntry> schmidt_number_sweep(const RingParams &ring, std::span<const CouplingConfig> configs,
                                                    const PumpSpec &pump, const SchmidtGridOptions &options,
                                                    int threads)
{
    std::vector<SchmidtSweepEntry> entries;
    entries.reserve(configs.size());
    for (const auto &config : configs)
    {
        entries.push_back({config, std::nullopt, {}});
    }
    parallel_for(entries.size(), threads, [&](std::size_t i) {
        try
        {
            entries[i].schmidt_number = schmidt_spectrum(discretize_wavepacket(ring, entries[i].config, pump, options))
                                            .schmidt_number;
        }
        catch (const std::exception &e)
        {
            entries[i].error = e.what();
        }
    });
    return entries;
}
} // namespace sfwm
