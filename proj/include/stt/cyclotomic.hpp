#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace stt {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

unsigned euler_phi(unsigned n);
unsigned gcd_u(unsigned a, unsigned b);
unsigned lcm_u(unsigned a, unsigned b);

/// Exact element of the n-th cyclotomic field Q(zeta_n), stored in the power
/// basis 1, z, ..., z^{phi(n)-1} with rational coordinates. The ambient order
/// n is fixed at construction; mixed-order arithmetic lifts both operands to
/// the lcm of their orders.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rat(0)) {}

    static Cyclotomic zero(unsigned order = 1);
    static Cyclotomic one(unsigned order = 1);
    static Cyclotomic rational(const Rat& q, unsigned order = 1);
    /// zeta_n^k as an element of Q(zeta_n).
    static Cyclotomic root_of_unity(unsigned n, long long k);
    /// Element from power-basis coordinates; coeffs.size() must be phi(order).
    static Cyclotomic from_coeffs(unsigned order, std::vector<Rat> coeffs);

    unsigned order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Rational value; requires is_rational().
    Rat rational_value() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    /// Multiplicative inverse; throws on zero.
    Cyclotomic inverse() const;
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic pow(long long e) const;
    /// Complex conjugate (zeta -> zeta^{-1}).
    Cyclotomic conj() const;
    /// Re-express in Q(zeta_m); requires order() | m.
    Cyclotomic lift(unsigned m) const;

    /// Smallest k >= 1 with (*this)^k == 1, or nullopt if none up to cap.
    std::optional<unsigned> multiplicative_order(unsigned cap = 256) const;

    /// Numerical embedding zeta_n -> exp(2*pi*i/n).
    std::complex<double> to_complex() const;

private:
    Cyclotomic(unsigned order, std::vector<Rat> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    unsigned order_;
    std::vector<Rat> coeffs_; // length phi(order_)
};

/// Discrete log of a root of unity in mu_N: j with z == zeta_N^j, if any.
std::optional<long long> root_of_unity_log(const Cyclotomic& z, unsigned N);

} // namespace stt
