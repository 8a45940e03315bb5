#pragma once

#include <cmath>
#include <complex>

#include "blbc/errors.hpp"

namespace blbc {

using cplx = std::complex<double>;

/// Complex coherent-state amplitude. energy() is the mean photon number |alpha|^2.
class Amplitude {
public:
    constexpr Amplitude() = default;
    Amplitude(double re, double im = 0.0) : value_(re, im) { check(); }
    Amplitude(cplx value) : value_(value) { check(); }

    static Amplitude polar(double magnitude, double phase) { return Amplitude(std::polar(magnitude, phase)); }

    double re() const { return value_.real(); }
    double im() const { return value_.imag(); }
    cplx value() const { return value_; }
    double energy() const { return value_.real() * value_.real() + value_.imag() * value_.imag(); }

    friend bool operator==(const Amplitude& a, const Amplitude& b) { return a.value_ == b.value_; }
    friend bool operator<(const Amplitude& a, const Amplitude& b)
    {
        if (a.re() != b.re())
            return a.re() < b.re();
        return a.im() < b.im();
    }

private:
    void check() const
    {
        require(std::isfinite(value_.real()) && std::isfinite(value_.imag()), "Amplitude: non-finite component");
    }

    cplx value_{0.0, 0.0};
};

// Lexicographic order on (Re, Im); used for deterministic tie-breaks.
inline bool lex_less(cplx a, cplx b)
{
    if (a.real() != b.real())
        return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace blbc
