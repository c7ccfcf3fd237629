#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <set>
#include <vector>

namespace stt {

using BigInt = boost::multiprecision::cpp_int;

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, integral model.
struct EllipticCurve {
    long long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    /// extra primes to exclude on top of those dividing the discriminant
    std::set<long long> bad_primes;

    BigInt discriminant() const;
    bool good_reduction(long long p) const;

    /// Twist by the quadratic character of d; requires a1 = a3 = 0.
    EllipticCurve quadratic_twist(long long d) const;
};

/// a_p = p + 1 - #E(F_p) by direct enumeration (O(p) with a residue table).
/// Throws BadReduction at primes of bad reduction.
long long ap_point_count(const EllipticCurve& e, long long p);

/// Legendre symbol (d/p) for odd prime p, 0 if p | d.
int legendre_symbol(long long d, long long p);

std::vector<long long> primes_up_to(long long n);

} // namespace stt
