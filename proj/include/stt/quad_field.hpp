#pragma once

#include "stt/cyclotomic.hpp"

#include <optional>
#include <string>

namespace stt {

/// Exact element x + y*sqrt(D) of Q(sqrt(D)), D squarefree (D = 0 encodes a
/// plain rational). For D < 0 the nontrivial automorphism is complex
/// conjugation; for D > 0 it swaps the two real embeddings.
struct QuadFieldElem {
    long long D = 0;
    Rat x, y;

    static QuadFieldElem from_rational(const Rat& q) { return {0, q, Rat(0)}; }

    bool is_rational() const { return y == 0 || D == 0; }
    bool is_zero() const { return x == 0 && (y == 0 || D == 0); }

    QuadFieldElem operator+(const QuadFieldElem& o) const;
    QuadFieldElem operator-(const QuadFieldElem& o) const;
    QuadFieldElem operator*(const QuadFieldElem& o) const;
    bool operator==(const QuadFieldElem& o) const;
    bool operator!=(const QuadFieldElem& o) const { return !(*this == o); }

    /// The nontrivial field automorphism sqrt(D) -> -sqrt(D).
    QuadFieldElem galois_conj() const { return {D, x, -y}; }
    /// Complex conjugation in the embedding picture: galois_conj for D < 0,
    /// identity for D >= 0 (real field).
    QuadFieldElem complex_conj() const { return D < 0 ? galois_conj() : *this; }

    /// x^2 - D y^2 (rational).
    Rat norm() const { return x * x - Rat(D) * y * y; }
    /// 2x (field trace to Q).
    Rat field_trace() const { return 2 * x; }

    /// Real embeddings x +- y sqrt(D); requires D >= 0.
    double embed(int which) const;
    /// Exact sign of x + s*y*sqrt(D), s = +1/-1; requires D >= 0.
    int embedding_sign(int s) const;
    /// Exact test (x + s y sqrt(D))^2 <= bound, D >= 0; for D < 0 tests
    /// |x + y sqrt(D)|^2 <= bound (independent of s).
    bool abs_square_leq(int s, const Rat& bound) const;
    /// Totally positive: > 0 under both real embeddings (D > 0), or simply
    /// > 0 for rationals.
    bool totally_positive() const;

    std::string str() const;
};

/// Express a root of unity inside Q(sqrt(D)) if possible (orders 1, 2 and,
/// for matching D, 3, 4, 6).
std::optional<QuadFieldElem> root_of_unity_in_quad(const Cyclotomic& z, long long D);

} // namespace stt
