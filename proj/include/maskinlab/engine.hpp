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

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace maskinlab {

using Complex = std::complex<double>;

/// Parameterized 2x2 unitary
///
///   [ e^{i phi} cos(theta/2)      i sin(theta/2)          ]
///   [ i sin(theta/2)              e^{-i phi} cos(theta/2) ]
///
/// with theta in [0, pi] and phi in [0, pi/2]. (0, 0) is the identity;
/// (0, pi/l) is the pure phase rotation used by coordinating agents.
class LocalOperator {
public:
    LocalOperator(double theta, double phi);

    double theta() const { return theta_; }
    double phi() const { return phi_; }

    /// Column vectors of the realized matrix.
    std::pair<Complex, Complex> first_column() const;
    std::pair<Complex, Complex> last_column() const;

    /// Row-major 2x2 matrix.
    std::array<Complex, 4> matrix() const;

    static LocalOperator identity() { return {0.0, 0.0}; }

    /// Phase rotation diag(e^{i pi/l}, e^{-i pi/l}); requires l >= 2.
    static LocalOperator phase_op(int l);

private:
    double theta_, phi_;
};

/// Dense 2^n complex amplitude vector over the n-agent basis. Basis index
/// convention: agent 0 owns the most significant bit (leftmost tensor
/// factor); bit value 0 is the "canonical" letter, 1 the "fallback" letter.
struct AmplitudeVector {
    int agents = 0;
    std::vector<Complex> amps;

    std::size_t size() const { return amps.size(); }
    double norm_sq() const;
};

/// Probability weights over the 2^n basis vectors.
struct BasisDistribution {
    int agents = 0;
    std::vector<double> probs;

    std::size_t size() const { return probs.size(); }
};

/// Probabilities of the four corner basis vectors that carry all the mass
/// when every agent but the last applies a diagonal operator:
///   all_canonical  : every letter canonical            (index 0)
///   last_fallback  : only the last agent's letter is fallback   (index 1)
///   rest_fallback  : every letter fallback except the last       (index 2^n - 2)
///   all_fallback   : every letter fallback             (index 2^n - 1)
struct CornerProbabilities {
    double all_canonical = 0.0;
    double last_fallback = 0.0;
    double rest_fallback = 0.0;
    double all_fallback = 0.0;

    double sum() const { return all_canonical + last_fallback + rest_fallback + all_fallback; }
};

inline constexpr int kDefaultMaxAgents = 24;

/// The entangled source state: amplitude 1/sqrt(2) on the all-canonical
/// basis vector and i/sqrt(2) on the all-fallback one. Built directly from
/// the closed form; the 2^n x 2^n entangling matrix is never materialized.
AmplitudeVector entangle(int agents, int max_agents = kDefaultMaxAgents);

/// Applies the tensor product of per-agent local operators to the entangled
/// source state. Because the input has exactly two non-zero amplitudes, the
/// result is assembled from two streamed Kronecker column products in
/// O(2^n) time and space. The input must be the `entangle` output shape.
AmplitudeVector apply_local_ops(std::span<const LocalOperator> ops,
                                const AmplitudeVector& source);

/// Applies the conjugate transpose of the entangling map. Acts index-wise:
/// out[k] = (in[k] - i * in[2^n-1-k]) / sqrt(2).
AmplitudeVector apply_j_dagger(const AmplitudeVector& psi);

/// Squared magnitudes of a unit vector. Raises NumericError when the input
/// norm deviates from 1 by more than 1e-6.
BasisDistribution distribution(const AmplitudeVector& psi);

/// Corner probabilities when the last agent plays omega(theta, phi) inside a
/// coordinating group: agents 1..n-l apply the identity, agents n-l+1..n-1
/// the phase op for group size l. Requires 2 <= l <= n.
CornerProbabilities corner_probs_phase_member(int agents, int l, double theta, double phi);

/// Corner probabilities when the last agent plays omega(theta, phi) outside
/// the coordinating group: agents 1..l apply the phase op, the rest up to
/// n-1 the identity. Requires 2 <= l <= n-1.
CornerProbabilities corner_probs_phase_outsider(int agents, int l, double theta, double phi);

/// Inverse-CDF draw of a basis index. One uniform variate is taken from a
/// freshly seeded std::mt19937_64 (top 53 bits scaled to [0,1)), so equal
/// (distribution, seed) pairs reproduce the same index on any platform.
std::uint64_t sample_basis(const BasisDistribution& dist, std::uint64_t seed);

} // namespace maskinlab
