#include "stt/cyc_matrix.hpp"

#include "stt/errors.hpp"

#include <cmath>
#include <numbers>

namespace stt {

CycMatrix CycMatrix::identity(int n) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one();
    return m;
}

CycMatrix CycMatrix::scalar(int n, const Cyclotomic& z) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = z;
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("CycMatrix multiply");
    CycMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

CycMatrix CycMatrix::operator-() const {
    CycMatrix r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = -r.at(i, j);
    return r;
}

CycMatrix CycMatrix::scaled(const Cyclotomic& z) const {
    CycMatrix r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = r.at(i, j) * z;
    return r;
}

CycMatrix CycMatrix::ctranspose() const {
    CycMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

Cyclotomic CycMatrix::trace() const {
    Cyclotomic t = Cyclotomic::zero();
    for (int i = 0; i < std::min(rows_, cols_); ++i) t = t + at(i, i);
    return t;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool CycMatrix::equals_up_to_sign(const CycMatrix& o) const {
    return *this == o || *this == -o;
}

bool CycMatrix::is_unitary() const {
    if (rows_ != cols_) return false;
    return (*this * ctranspose()).is_identity();
}

std::vector<std::vector<std::complex<double>>> CycMatrix::to_complex() const {
    std::vector<std::vector<std::complex<double>>> r(
        rows_, std::vector<std::complex<double>>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i][j] = at(i, j).to_complex();
    return r;
}

CycMatrix pm_representative(const CycMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            double arg = std::arg(m.at(i, j).to_complex());
            // arg in [0, pi) keeps the entry; arg in [-pi, 0) (or exactly pi) flips
            const double eps = 1e-12;
            if (arg >= -eps && arg < std::numbers::pi - eps) return m;
            return -m;
        }
    return m; // zero matrix
}

} // namespace stt
