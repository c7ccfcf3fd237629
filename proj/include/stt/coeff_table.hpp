#pragma once

#include "stt/cyclotomic.hpp"
#include "stt/quad_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stt {

/// One good prime of a coefficient table: a_p in Q(sqrt(D)), the character
/// value eps(p), and an optional component-class label.
struct PrimeRecord {
    long long p = 0;
    QuadFieldElem a;
    Cyclotomic eps = Cyclotomic::one();
    std::optional<int> class_label;
};

struct CoefficientTable {
    long long D = 0;        // quadratic part of the coefficient field
    long long level = 0;    // 0 when unknown
    std::vector<PrimeRecord> records;
};

/// CSV schema: optional comment lines `#D=<int>` (required) and `#N=<int>`,
/// then a header `p,ax,ay,eps_num,eps_ord`, then one record per line with
/// a_p = ax + ay*sqrt(D) (rationals as `n` or `n/d`) and eps = zeta_ord^num.
CoefficientTable load_coefficients(const std::string& path);
void write_coefficients(const CoefficientTable& table, const std::string& path);

/// Normalized trace sigma(a_p)/sqrt(p) for embedding 1 or 2 (real part of
/// the embedding when D < 0). Lies in [-2, 2] for valid records.
double normalize(const PrimeRecord& record, int embedding);

struct PrimeFailure {
    long long p;
    std::string message;
};

struct CheckReport {
    long long checked = 0;
    std::vector<PrimeFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Exact per-prime verification of a_p^2 = eps_p * (a_p * conj(a_p)), with
/// conj(a_p) * a_p required rational for D < 0 and totally positive for D > 0.
CheckReport ribet_identity_check(const CoefficientTable& table);

/// Exact per-prime verification of c_p = Tr_{M/Q}(a_p * b_p), where the
/// trace is the identity for M = Q and the sum of the two conjugates for
/// quadratic M. Tables must share prime support.
CheckReport tensor_trace_check(const CoefficientTable& a_table,
                               const CoefficientTable& b_table,
                               const CoefficientTable& c_table);

} // namespace stt
