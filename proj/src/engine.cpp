// Copyright 2026 the maskinlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maskinlab/engine.hpp"

#include <array>
#include <cmath>
#include <random>

#include "maskinlab/errors.hpp"

namespace maskinlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;

} // namespace

LocalOperator::LocalOperator(double theta, double phi) : theta_(theta), phi_(phi) {
    if (!(theta >= 0.0 && theta <= kPi))
        throw InputError("theta out of range [0, pi]: " + std::to_string(theta));
    if (!(phi >= 0.0 && phi <= kPi / 2.0))
        throw InputError("phi out of range [0, pi/2]: " + std::to_string(phi));
}

std::pair<Complex, Complex> LocalOperator::first_column() const {
    const double c = std::cos(theta_ / 2.0);
    const double s = std::sin(theta_ / 2.0);
    return {std::polar(c, phi_), Complex(0.0, s)};
}

std::pair<Complex, Complex> LocalOperator::last_column() const {
    const double c = std::cos(theta_ / 2.0);
    const double s = std::sin(theta_ / 2.0);
    return {Complex(0.0, s), std::polar(c, -phi_)};
}

std::array<Complex, 4> LocalOperator::matrix() const {
    const auto [f0, f1] = first_column();
    const auto [l0, l1] = last_column();
    return {f0, l0, f1, l1};
}

LocalOperator LocalOperator::phase_op(int l) {
    if (l < 2) throw InputError("phase operator needs group size >= 2, got " + std::to_string(l));
    return {0.0, kPi / l};
}

double AmplitudeVector::norm_sq() const {
    double s = 0.0;
    for (const Complex& a : amps) s += std::norm(a);
    return s;
}

AmplitudeVector entangle(int agents, int max_agents) {
    if (agents < 2 || agents > max_agents)
        throw InputError("agent count " + std::to_string(agents) + " outside [2, " +
                         std::to_string(max_agents) + "]");
    AmplitudeVector psi;
    psi.agents = agents;
    psi.amps.assign(std::size_t{1} << agents, Complex(0.0, 0.0));
    psi.amps.front() = Complex(kInvSqrt2, 0.0);
    psi.amps.back() = Complex(0.0, kInvSqrt2);
    return psi;
}

AmplitudeVector apply_local_ops(std::span<const LocalOperator> ops,
                                const AmplitudeVector& source) {
    const int n = source.agents;
    if (static_cast<int>(ops.size()) != n)
        throw InputError("got " + std::to_string(ops.size()) + " operators for " +
                         std::to_string(n) + " agents");
    const std::size_t dim = std::size_t{1} << n;
    if (source.amps.size() != dim) throw InputError("amplitude vector has wrong length");
    if (std::abs(source.amps.front() - Complex(kInvSqrt2, 0.0)) > 1e-9 ||
        std::abs(source.amps.back() - Complex(0.0, kInvSqrt2)) > 1e-9)
        throw InputError("input is not the entangled source state");

    // The source state has support {first, last}, so the operator tensor
    // product only contributes its first and last columns. Each column is a
    // Kronecker product of per-agent 2-vectors, expanded in place from the
    // back so a single pass per agent suffices.
    std::vector<Complex> first(dim), last(dim);
    first[0] = Complex(1.0, 0.0);
    last[0] = Complex(1.0, 0.0);
    std::size_t filled = 1;
    for (int j = 0; j < n; ++j) {
        const auto [f0, f1] = ops[j].first_column();
        const auto [l0, l1] = ops[j].last_column();
        for (std::size_t k = filled; k-- > 0;) {
            const Complex f = first[k];
            const Complex l = last[k];
            first[2 * k + 1] = f * f1;
            first[2 * k] = f * f0;
            last[2 * k + 1] = l * l1;
            last[2 * k] = l * l0;
        }
        filled *= 2;
    }

    AmplitudeVector out;
    out.agents = n;
    out.amps.resize(dim);
    const Complex w_first(kInvSqrt2, 0.0);
    const Complex w_last(0.0, kInvSqrt2);
    for (std::size_t k = 0; k < dim; ++k) out.amps[k] = w_first * first[k] + w_last * last[k];
    return out;
}

AmplitudeVector apply_j_dagger(const AmplitudeVector& psi) {
    const std::size_t dim = psi.amps.size();
    if (psi.agents < 1 || dim != (std::size_t{1} << psi.agents))
        throw InputError("amplitude vector has wrong length");
    AmplitudeVector out;
    out.agents = psi.agents;
    out.amps.resize(dim);
    const Complex minus_i(0.0, -1.0);
    for (std::size_t k = 0; k < dim / 2; ++k) {
        const std::size_t r = dim - 1 - k;
        const Complex a = psi.amps[k];
        const Complex b = psi.amps[r];
        out.amps[k] = (a + minus_i * b) * kInvSqrt2;
        out.amps[r] = (b + minus_i * a) * kInvSqrt2;
    }
    return out;
}

BasisDistribution distribution(const AmplitudeVector& psi) {
    BasisDistribution dist;
    dist.agents = psi.agents;
    dist.probs.resize(psi.amps.size());
    double total = 0.0;
    for (std::size_t k = 0; k < psi.amps.size(); ++k) {
        dist.probs[k] = std::norm(psi.amps[k]);
        total += dist.probs[k];
    }
    if (std::abs(total - 1.0) > 1e-6)
        throw NumericError("state vector norm drifted: |psi|^2 = " + std::to_string(total));
    return dist;
}

CornerProbabilities corner_probs_phase_member(int agents, int l, double theta, double phi) {
    if (l < 2 || l > agents)
        throw InputError("phase-member corners need 2 <= l <= n, got l = " +
                         std::to_string(l) + ", n = " + std::to_string(agents));
    LocalOperator check(theta, phi); // validates parameter ranges
    (void)check;
    const double c2 = std::cos(theta / 2.0) * std::cos(theta / 2.0);
    const double s2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
    const double cg = std::cos(kPi / l);
    const double sg = std::sin(kPi / l);
    const double cd = std::cos(phi - kPi / l);
    const double sd = std::sin(phi - kPi / l);
    return {c2 * cd * cd, s2 * cg * cg, s2 * sg * sg, c2 * sd * sd};
}

CornerProbabilities corner_probs_phase_outsider(int agents, int l, double theta, double phi) {
    if (l < 2 || l > agents - 1)
        throw InputError("phase-outsider corners need 2 <= l <= n-1, got l = " +
                         std::to_string(l) + ", n = " + std::to_string(agents));
    LocalOperator check(theta, phi);
    (void)check;
    const double c2 = std::cos(theta / 2.0) * std::cos(theta / 2.0);
    const double s2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
    const double sp = std::sin(phi);
    return {c2 * (1.0 - sp * sp), s2, 0.0, c2 * sp * sp};
}

std::uint64_t sample_basis(const BasisDistribution& dist, std::uint64_t seed) {
    if (dist.probs.empty()) throw InputError("empty distribution");
    std::mt19937_64 gen(seed);
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    double cum = 0.0;
    std::uint64_t last_positive = 0;
    bool any_positive = false;
    for (std::size_t k = 0; k < dist.probs.size(); ++k) {
        const double p = dist.probs[k];
        if (p > 0.0) {
            last_positive = k;
            any_positive = true;
        }
        cum += p;
        if (u < cum && p > 0.0) return k;
    }
    if (!any_positive) throw InputError("distribution has no positive mass");
    return last_positive; // u landed in the rounding tail
}

} // namespace maskinlab
