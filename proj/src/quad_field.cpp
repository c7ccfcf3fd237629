#include "stt/quad_field.hpp"

#include "stt/errors.hpp"

#include <cmath>
#include <sstream>

namespace stt {

namespace {

long long common_D(long long a, long long b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a != b) throw Error("QuadFieldElem: mixed discriminants " + std::to_string(a) + ", " +
                            std::to_string(b));
    return a;
}

} // namespace

QuadFieldElem QuadFieldElem::operator+(const QuadFieldElem& o) const {
    return {common_D(D, o.D), x + o.x, y + o.y};
}

QuadFieldElem QuadFieldElem::operator-(const QuadFieldElem& o) const {
    return {common_D(D, o.D), x - o.x, y - o.y};
}

QuadFieldElem QuadFieldElem::operator*(const QuadFieldElem& o) const {
    long long d = common_D(D, o.D);
    return {d, x * o.x + Rat(d) * y * o.y, x * o.y + y * o.x};
}

bool QuadFieldElem::operator==(const QuadFieldElem& o) const {
    if (x != o.x) return false;
    Rat ya = (D == 0) ? Rat(0) : y;
    Rat yb = (o.D == 0) ? Rat(0) : o.y;
    if (ya == 0 && yb == 0) return true;
    return D == o.D && ya == yb;
}

double QuadFieldElem::embed(int which) const {
    if (D < 0) throw Error("QuadFieldElem::embed on an imaginary field");
    double s = (which == 1) ? 1.0 : -1.0;
    return x.convert_to<double>() + s * y.convert_to<double>() * std::sqrt(static_cast<double>(D));
}

int QuadFieldElem::embedding_sign(int s) const {
    if (D < 0) throw Error("QuadFieldElem::embedding_sign on an imaginary field");
    Rat ys = Rat(s) * y;
    if (ys == 0 || D == 0) return x > 0 ? 1 : (x < 0 ? -1 : 0);
    if (x == 0) return ys > 0 ? 1 : -1;
    // compare x with -ys*sqrt(D): both nonzero
    if (x > 0 && ys > 0) return 1;
    if (x < 0 && ys < 0) return -1;
    // opposite signs: the larger of |x| and |ys|sqrt(D) decides
    Rat lhs = x * x, rhs = Rat(D) * ys * ys;
    if (lhs == rhs) return 0;
    bool positive = (x > 0) ? (lhs > rhs) : (rhs > lhs);
    return positive ? 1 : -1;
}

bool QuadFieldElem::abs_square_leq(int s, const Rat& bound) const {
    if (D < 0) {
        return x * x + Rat(-D) * y * y <= bound;
    }
    // (x + s y sqrt(D))^2 = x^2 + D y^2 + 2 s x y sqrt(D) <= bound
    QuadFieldElem sq{D, x * x + Rat(D) * y * y, Rat(2 * s) * x * y};
    QuadFieldElem diff = QuadFieldElem{D, bound, Rat(0)} - sq;
    return diff.embedding_sign(1) >= 0;
}

bool QuadFieldElem::totally_positive() const {
    if (D < 0) throw Error("totally_positive undefined for imaginary fields");
    if (D == 0 || y == 0) return x > 0;
    return embedding_sign(1) > 0 && embedding_sign(-1) > 0;
}

std::string QuadFieldElem::str() const {
    std::ostringstream os;
    if (is_rational()) {
        os << x;
    } else {
        os << x << " + " << y << "*sqrt(" << D << ")";
    }
    return os.str();
}

std::optional<QuadFieldElem> root_of_unity_in_quad(const Cyclotomic& z, long long D) {
    if (z.is_rational()) {
        Rat v = z.rational_value();
        if (v == 1 || v == -1) return QuadFieldElem{D, v, Rat(0)};
        return std::nullopt;
    }
    auto try_match = [&](const QuadFieldElem& cand, unsigned n, long long k) {
        return z == Cyclotomic::root_of_unity(n, k) ? std::optional<QuadFieldElem>(cand)
                                                    : std::nullopt;
    };
    if (D == -1) {
        if (auto r = try_match({D, Rat(0), Rat(1)}, 4, 1)) return r;   // i
        if (auto r = try_match({D, Rat(0), Rat(-1)}, 4, 3)) return r;  // -i
    }
    if (D == -3) {
        // zeta_6^k = (1 + sqrt(-3))/2 powers; zeta_3 = (-1 + sqrt(-3))/2
        const QuadFieldElem z6{D, Rat(1, 2), Rat(1, 2)};
        QuadFieldElem acc{D, Rat(1), Rat(0)};
        for (long long k = 1; k < 6; ++k) {
            acc = acc * z6;
            if (z == Cyclotomic::root_of_unity(6, k)) return acc;
        }
    }
    return std::nullopt;
}

} // namespace stt
