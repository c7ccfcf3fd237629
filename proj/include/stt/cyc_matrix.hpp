#pragma once

#include "stt/cyclotomic.hpp"

#include <complex>
#include <vector>

namespace stt {

/// Small dense matrix with exact cyclotomic entries.
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Cyclotomic::zero()) {}

    static CycMatrix identity(int n);
    static CycMatrix scalar(int n, const Cyclotomic& z);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cyclotomic& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Cyclotomic& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix operator-() const;
    CycMatrix scaled(const Cyclotomic& z) const;
    /// Conjugate transpose.
    CycMatrix ctranspose() const;
    Cyclotomic trace() const;

    bool operator==(const CycMatrix& o) const;
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }
    bool is_identity() const;
    /// True if *this equals o or -o.
    bool equals_up_to_sign(const CycMatrix& o) const;
    /// M * M^* == I, checked exactly.
    bool is_unitary() const;

    std::vector<std::vector<std::complex<double>>> to_complex() const;

private:
    int rows_, cols_;
    std::vector<Cyclotomic> a_;
};

/// Deterministic representative of {M, -M}: the one whose first nonzero entry
/// (row-major) has complex argument in [0, pi).
CycMatrix pm_representative(const CycMatrix& m);

} // namespace stt
