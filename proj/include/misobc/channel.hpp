// SPDX-License-Identifier: Apache-2.0
//
// misobc - two-user MISO broadcast channel DoF toolkit
// Copyright (C) 2026 The misobc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MISOBC_CHANNEL_HPP
#define MISOBC_CHANNEL_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace misobc {

using cplx = std::complex<double>;

enum class User : std::uint8_t { one = 0, two = 1 };
enum class Subband : std::uint8_t { A = 0, B = 1 };
enum class ScenarioKind : std::uint8_t { unmatched, matched };

inline constexpr std::array<User, 2> kUsers{User::one, User::two};
inline constexpr std::array<Subband, 2> kSubbands{Subband::A, Subband::B};

inline constexpr std::size_t index(User u) { return static_cast<std::size_t>(u); }
inline constexpr std::size_t index(Subband s) { return static_cast<std::size_t>(s); }
inline constexpr User other(User u) { return u == User::one ? User::two : User::one; }

std::string_view to_string(User u);
std::string_view to_string(Subband s);
std::string_view to_string(ScenarioKind k);
/// Throws Errc::invalid_argument for anything but "unmatched"/"matched".
ScenarioKind parse_scenario(std::string_view name);

/// CSIT quality exponents. Both lie in [0,1]; the unmatched scenario
/// additionally requires beta >= alpha (see require_ordered).
struct QualityPair {
    double beta = 0.0;
    double alpha = 0.0;

    /// Range-checked construction, throws Errc::invalid_quality.
    static QualityPair make(double beta, double alpha);
    bool ordered() const { return beta >= alpha; }
    const QualityPair &require_ordered() const;
    QualityPair swapped() const { return {alpha, beta}; }

    friend bool operator==(const QualityPair &, const QualityPair &) = default;
};

/// Error exponent of (user, subband) under the scenario's assignment.
/// unmatched: (1,A)->beta (1,B)->alpha (2,A)->alpha (2,B)->beta
/// matched:   A->beta, B->alpha for both users
double quality(ScenarioKind kind, const QualityPair &q, User user, Subband band);

/// Linear SNR, strictly above 1 so that p^-a <= 1 for a in [0,1].
class SnrPoint {
public:
    static SnrPoint linear(double p);
    static SnrPoint from_db(double db);

    double p() const { return p_; }
    double db() const;
    double log2p() const;

private:
    explicit SnrPoint(double p) : p_(p) {}
    double p_;
};

struct ComplexVec2 {
    std::array<cplx, 2> x{};

    cplx &operator[](std::size_t i) { return x[i]; }
    const cplx &operator[](std::size_t i) const { return x[i]; }

    friend ComplexVec2 operator+(const ComplexVec2 &a, const ComplexVec2 &b) {
        return {{a[0] + b[0], a[1] + b[1]}};
    }
    friend ComplexVec2 operator-(const ComplexVec2 &a, const ComplexVec2 &b) {
        return {{a[0] - b[0], a[1] - b[1]}};
    }
    friend ComplexVec2 operator*(double s, const ComplexVec2 &a) { return {{s * a[0], s * a[1]}}; }
    friend bool operator==(const ComplexVec2 &, const ComplexVec2 &) = default;

    double norm2() const { return std::norm(x[0]) + std::norm(x[1]); }
    double norm() const;
};

/// a^H b
inline cplx inner(const ComplexVec2 &a, const ComplexVec2 &b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

/// One user's link in one subband: actual = estimate + error.
struct ChannelSample {
    ComplexVec2 actual;
    ComplexVec2 estimate;
    ComplexVec2 error;
};

struct ChannelRealization {
    std::array<std::array<ChannelSample, 2>, 2> links{}; // [user][subband]

    const ChannelSample &at(User u, Subband s) const { return links[index(u)][index(s)]; }
    ChannelSample &at(User u, Subband s) { return links[index(u)][index(s)]; }
};

using Rng = std::mt19937_64;

/// Independent generator for trial `index` of a run seeded with `seed`.
/// A pure function of both arguments, so trials can be evaluated in any
/// order or partition.
Rng substream(std::uint64_t seed, std::uint64_t index);

/// sigma^2 = p^-a
double error_variance(double a, SnrPoint p);

/// Draws error ~ CN(0, sigma^2 I), estimate ~ CN(0, (1 - sigma^2) I) and
/// returns actual = estimate + error.
ChannelSample sample_pair(Rng &rng, double a, SnrPoint p);

/// All four links, drawn in the order (1,A) (1,B) (2,A) (2,B).
ChannelRealization sample_realization(Rng &rng, const QualityPair &q, ScenarioKind kind,
                                      SnrPoint p);

inline constexpr double kDirectionTolerance = 1e-12;

/// Unit vector w with v^H w = 0, fixed phase w = (-conj(v2), conj(v1)) / |v|.
ComplexVec2 zf_direction(const ComplexVec2 &v);
/// v / |v|
ComplexVec2 unit_direction(const ComplexVec2 &v);

/// Least-squares slope of -log2(mean |error|^2 / 2) against log2 p.
double measure_error_exponent(double a, std::span<const SnrPoint> ladder, std::size_t trials,
                              std::uint64_t seed);

} // namespace misobc

#endif
