#include "stt/elliptic.hpp"

#include "stt/errors.hpp"

#include <cmath>

namespace stt {

BigInt EllipticCurve::discriminant() const {
    BigInt A1 = a1, A2 = a2, A3 = a3, A4 = a4, A6 = a6;
    BigInt b2 = A1 * A1 + 4 * A2;
    BigInt b4 = 2 * A4 + A1 * A3;
    BigInt b6 = A3 * A3 + 4 * A6;
    BigInt b8 = A1 * A1 * A6 + 4 * A2 * A6 - A1 * A3 * A4 + A2 * A3 * A3 - A4 * A4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

bool EllipticCurve::good_reduction(long long p) const {
    if (bad_primes.count(p)) return false;
    return discriminant() % p != 0;
}

EllipticCurve EllipticCurve::quadratic_twist(long long d) const {
    if (a1 != 0 || a3 != 0)
        throw Error("quadratic_twist requires a model with a1 = a3 = 0");
    EllipticCurve t;
    t.a2 = d * a2;
    t.a4 = d * d * a4;
    t.a6 = d * d * d * a6;
    return t;
}

int legendre_symbol(long long d, long long p) {
    long long r = d % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    // Euler criterion by fast exponentiation
    unsigned long long e = (p - 1) / 2, base = r, acc = 1;
    while (e) {
        if (e & 1) acc = static_cast<unsigned long long>(
            static_cast<unsigned __int128>(acc) * base % p);
        base = static_cast<unsigned long long>(
            static_cast<unsigned __int128>(base) * base % p);
        e >>= 1;
    }
    return acc == 1 ? 1 : -1;
}

std::vector<long long> primes_up_to(long long n) {
    std::vector<long long> out;
    if (n < 2) return out;
    std::vector<char> sieve(n + 1, 1);
    sieve[0] = sieve[1] = 0;
    for (long long i = 2; i * i <= n; ++i)
        if (sieve[i])
            for (long long j = i * i; j <= n; j += i) sieve[j] = 0;
    for (long long i = 2; i <= n; ++i)
        if (sieve[i]) out.push_back(i);
    return out;
}

namespace {

long long mod_ll(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

// brute force over all (x, y) in F_p^2, used for p = 2, 3
long long affine_count_small(const EllipticCurve& e, long long p) {
    long long count = 0;
    for (long long x = 0; x < p; ++x)
        for (long long y = 0; y < p; ++y) {
            long long lhs = mod_ll(y * y + e.a1 * x * y + e.a3 * y, p);
            long long rhs = mod_ll(((x + e.a2) * x + e.a4) * x + e.a6, p);
            if (lhs == rhs) ++count;
        }
    return count;
}

} // namespace

long long ap_point_count(const EllipticCurve& e, long long p) {
    if (p < 2) throw BadPrime(p);
    if (!e.good_reduction(p)) throw BadReduction(p);

    if (p <= 3) {
        long long ap = p - affine_count_small(e, p);
        return ap;
    }

    // With p odd, completing the square gives (2y + a1 x + a3)^2 = B(x),
    // B(x) = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2; the y-count over
    // a given x is 1 + chi(B(x)).
    std::vector<char> is_square(p, 0);
    for (long long t = 0; t < p; ++t)
        is_square[static_cast<unsigned long long>(
            static_cast<unsigned __int128>(t) * t % p)] = 1;

    long long a1m = mod_ll(e.a1, p), a2m = mod_ll(e.a2, p), a3m = mod_ll(e.a3, p);
    long long a4m = mod_ll(e.a4, p), a6m = mod_ll(e.a6, p);
    auto mulm = [p](long long a, long long b) {
        return static_cast<long long>(static_cast<unsigned __int128>(a) * b % p);
    };
    long long affine = 0;
    for (long long x = 0; x < p; ++x) {
        long long cubic = (mulm(mulm(x + a2m, x) + a4m, x) + a6m) % p;
        long long lin = (mulm(a1m, x) + a3m) % p;
        long long b = (4 * cubic % p + mulm(lin, lin)) % p;
        if (b == 0)
            affine += 1;
        else
            affine += is_square[b] ? 2 : 0;
    }
    long long ap = p - affine;
    // Weil bound sanity check
    if (static_cast<double>(ap) * ap > 4.0 * p + 1e-9)
        throw InvariantViolation("Weil bound violated at p = " + std::to_string(p));
    return ap;
}

} // namespace stt
