#include "stt/cyclotomic.hpp"

#include "stt/errors.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>

namespace stt {

unsigned gcd_u(unsigned a, unsigned b) {
    while (b) {
        unsigned t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / gcd_u(a, b) * b; }

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

using Poly = std::vector<Rat>; // coeffs[i] * x^i, no trailing zeros enforced by trim

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Remainder of a modulo monic divisor d.
Poly poly_mod(Poly a, const Poly& d) {
    trim(a);
    size_t dd = d.size() - 1;
    while (a.size() > dd) {
        Rat c = a.back();
        size_t shift = a.size() - 1 - dd;
        if (c != 0) {
            for (size_t i = 0; i < dd; ++i) a[shift + i] -= c * d[i];
        }
        a.pop_back();
        trim(a);
        if (a.size() <= dd) break;
    }
    return a;
}

// Quotient of a by monic divisor d (exact division expected for cyclotomic towers).
Poly poly_div(Poly a, const Poly& d) {
    trim(a);
    size_t dd = d.size() - 1;
    if (a.size() < d.size()) return {};
    Poly q(a.size() - dd, Rat(0));
    while (a.size() >= d.size()) {
        Rat c = a.back();
        size_t shift = a.size() - 1 - dd;
        q[shift] = c;
        for (size_t i = 0; i <= dd; ++i) a[shift + i] -= c * d[i];
        trim(a);
        if (a.empty()) break;
    }
    return q;
}

// Cyclotomic polynomial Phi_n, cached. Computed as (x^n - 1) / prod_{d|n, d<n} Phi_d.
const Poly& cyclotomic_poly(unsigned n) {
    static std::map<unsigned, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // compute without holding recursion through the lock: iterative over divisors
    std::function<const Poly&(unsigned)> get = [&](unsigned m) -> const Poly& {
        auto jt = cache.find(m);
        if (jt != cache.end()) return jt->second;
        Poly num(m + 1, Rat(0));
        num[0] = -1;
        num[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d == 0) num = poly_div(num, get(d));
        }
        return cache.emplace(m, std::move(num)).first->second;
    };
    return get(n);
}

// Extended Euclid in Q[x]: returns (g, u) with u*a == g (mod m), g = gcd(a, m) normalized monic.
std::pair<Poly, Poly> poly_half_ext_gcd(Poly a, Poly m) {
    trim(a);
    trim(m);
    Poly r0 = m, r1 = a;
    Poly u0 = {}, u1 = {Rat(1)};
    while (!r1.empty()) {
        // divide r0 by r1
        Poly r = r0;
        Poly q(std::max<size_t>(r.size(), r1.size()), Rat(0));
        q.assign(r.size() >= r1.size() ? r.size() - r1.size() + 1 : 1, Rat(0));
        Rat lead = r1.back();
        while (r.size() >= r1.size() && !r.empty()) {
            Rat c = r.back() / lead;
            size_t shift = r.size() - r1.size();
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) r[shift + i] -= c * r1[i];
            trim(r);
        }
        // (u0, u1) <- (u1, u0 - q*u1)
        Poly qu = poly_mul(q, u1);
        Poly nu = u0;
        if (nu.size() < qu.size()) nu.resize(qu.size(), Rat(0));
        for (size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
        trim(nu);
        u0 = u1;
        u1 = nu;
        r0 = r1;
        r1 = r;
    }
    // normalize gcd monic
    if (!r0.empty()) {
        Rat lead = r0.back();
        for (auto& c : r0) c /= lead;
        for (auto& c : u0) c /= lead;
    }
    return {r0, u0};
}

} // namespace

Cyclotomic Cyclotomic::zero(unsigned order) {
    return Cyclotomic(order, std::vector<Rat>(euler_phi(order), Rat(0)));
}

Cyclotomic Cyclotomic::one(unsigned order) {
    std::vector<Rat> c(euler_phi(order), Rat(0));
    c[0] = 1;
    return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::rational(const Rat& q, unsigned order) {
    std::vector<Rat> c(euler_phi(order), Rat(0));
    c[0] = q;
    return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long long k) {
    k %= static_cast<long long>(n);
    if (k < 0) k += n;
    Poly x(static_cast<size_t>(k) + 1, Rat(0));
    x[static_cast<size_t>(k)] = 1;
    Poly r = poly_mod(x, cyclotomic_poly(n));
    std::vector<Rat> c(euler_phi(n), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) c[i] = r[i];
    return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::from_coeffs(unsigned order, std::vector<Rat> coeffs) {
    if (order < 1 || coeffs.size() != euler_phi(order))
        throw Error("Cyclotomic::from_coeffs: expected phi(order) coordinates");
    return Cyclotomic(order, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error("Cyclotomic::rational_value on a non-rational element");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::lift(unsigned m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw Error("Cyclotomic::lift: target order not a multiple");
    unsigned k = m / order_;
    // substitute z_n -> z_m^k
    Poly p;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        size_t deg = i * k;
        if (p.size() <= deg) p.resize(deg + 1, Rat(0));
        p[deg] += coeffs_[i];
    }
    Poly r = poly_mod(p, cyclotomic_poly(m));
    std::vector<Rat> c(euler_phi(m), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) c[i] = r[i];
    return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    unsigned m = lcm_u(order_, o.order_);
    Cyclotomic a = lift(m), b = o.lift(m);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    unsigned m = lcm_u(order_, o.order_);
    Cyclotomic a = lift(m), b = o.lift(m);
    Poly pa(a.coeffs_.begin(), a.coeffs_.end());
    Poly pb(b.coeffs_.begin(), b.coeffs_.end());
    trim(pa);
    trim(pb);
    Poly r = poly_mod(poly_mul(pa, pb), cyclotomic_poly(m));
    std::vector<Rat> c(euler_phi(m), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) c[i] = r[i];
    return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error("Cyclotomic::inverse of zero");
    Poly a(coeffs_.begin(), coeffs_.end());
    trim(a);
    auto [g, u] = poly_half_ext_gcd(a, cyclotomic_poly(order_));
    if (g.size() != 1) throw Error("Cyclotomic::inverse: gcd not constant");
    Poly r = poly_mod(u, cyclotomic_poly(order_));
    std::vector<Rat> c(euler_phi(order_), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) c[i] = r[i];
    return Cyclotomic(order_, std::move(c));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    unsigned m = lcm_u(order_, o.order_);
    Cyclotomic a = lift(m), b = o.lift(m);
    return a.coeffs_ == b.coeffs_;
}

Cyclotomic Cyclotomic::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this;
    Cyclotomic acc = Cyclotomic::one(order_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Cyclotomic Cyclotomic::conj() const {
    // substitute z -> z^{n-1}
    Poly p;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        size_t deg = (i * (order_ - 1)) % order_;
        if (p.size() <= deg) p.resize(deg + 1, Rat(0));
        p[deg] += coeffs_[i];
    }
    Poly r = poly_mod(p, cyclotomic_poly(order_));
    std::vector<Rat> c(euler_phi(order_), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) c[i] = r[i];
    return Cyclotomic(order_, std::move(c));
}

std::optional<unsigned> Cyclotomic::multiplicative_order(unsigned cap) const {
    if (is_zero()) return std::nullopt;
    Cyclotomic acc = *this;
    for (unsigned k = 1; k <= cap; ++k) {
        if (acc.is_one()) return k;
        acc = acc * *this;
    }
    return std::nullopt;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> r(0.0, 0.0);
    const double w = 2.0 * std::numbers::pi / static_cast<double>(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double c = coeffs_[i].convert_to<double>();
        r += c * std::complex<double>(std::cos(w * static_cast<double>(i)),
                                      std::sin(w * static_cast<double>(i)));
    }
    return r;
}

std::optional<long long> root_of_unity_log(const Cyclotomic& z, unsigned N) {
    Cyclotomic zeta = Cyclotomic::root_of_unity(N, 1);
    Cyclotomic acc = Cyclotomic::one(N);
    for (unsigned j = 0; j < N; ++j) {
        if (z == acc) return j;
        acc = acc * zeta;
    }
    return std::nullopt;
}

} // namespace stt
