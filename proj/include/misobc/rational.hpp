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

#ifndef MISOBC_RATIONAL_HPP
#define MISOBC_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace misobc {

/// Exact fraction over 64-bit integers, always stored in lowest terms with a
/// positive denominator. Used for power-allocation coefficients and the exact
/// DoF ratio diagnostics.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t num) : num_(num) {}
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(Rational a, Rational b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(Rational a, Rational b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(Rational a, Rational b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num_ == 0)
            throw std::domain_error("rational division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    Rational operator-() const { return {-num_, den_}; }
    Rational &operator+=(Rational o) { return *this = *this + o; }
    Rational &operator-=(Rational o) { return *this = *this - o; }

    friend bool operator==(const Rational &, const Rational &) = default;
    friend std::strong_ordering operator<=>(Rational a, Rational b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
        os << r.num_;
        if (r.den_ != 1)
            os << '/' << r.den_;
        return os;
    }

private:
    void normalize() {
        if (den_ == 0)
            throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace misobc

#endif
