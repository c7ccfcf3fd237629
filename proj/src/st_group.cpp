#include "stt/st_group.hpp"

#include "stt/errors.hpp"
#include "stt/rng.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace stt {

int STGroupSpec::total_dim() const {
    int d = 0;
    for (int n : block_dims) d += 2 * n;
    return d;
}

STGroupSpec STGroupSpec::su2() {
    STGroupSpec s;
    s.m = 1;
    s.gamma = FiniteGroup::trivial();
    s.action = {{0}};
    s.twists = {{CycMatrix::identity(1)}};
    s.a = 1;
    s.block_dims = {1};
    return s;
}

STGroupSpec STGroupSpec::rm_swap() {
    STGroupSpec s;
    s.m = 2;
    s.gamma = FiniteGroup::cyclic(2);
    s.action = {{0, 1}, {1, 0}};
    s.twists = {{CycMatrix::identity(1), CycMatrix::identity(1)},
                {CycMatrix::identity(1), CycMatrix::identity(1)}};
    s.a = 1;
    s.block_dims = {1, 1};
    return s;
}

STGroupSpec STGroupSpec::z4_scalar_twist() {
    STGroupSpec s;
    s.m = 1;
    s.gamma = FiniteGroup::cyclic(4);
    s.action = {{0}, {0}, {0}, {0}};
    s.a = 2;
    s.block_dims = {2};
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    s.twists.clear();
    for (int k = 0; k < 4; ++k)
        s.twists.push_back({CycMatrix::scalar(2, i.pow(k))});
    return s;
}

STGroupSpec STGroupSpec::pauli_twist() {
    STGroupSpec s;
    s.m = 1;
    s.gamma = FiniteGroup::klein_four();
    s.action = {{0}, {0}, {0}, {0}};
    s.a = 1;
    s.block_dims = {2};
    CycMatrix sx(2, 2), sz(2, 2);
    sx.at(0, 1) = Cyclotomic::one();
    sx.at(1, 0) = Cyclotomic::one();
    sz.at(0, 0) = Cyclotomic::one();
    sz.at(1, 1) = -Cyclotomic::one();
    CycMatrix sxz = sx * sz;
    // gamma element 2*i + j under direct_product(C2, C2): (i,j) -> sx^i sz^j
    s.twists = {{CycMatrix::identity(2)}, {sz}, {sx}, {sxz}};
    return s;
}

ValidationReport validate_spec(const STGroupSpec& spec) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };
    const int n = spec.gamma.order();
    if (spec.m <= 0) fail("m must be positive");
    if (static_cast<int>(spec.action.size()) != n) fail("action table size != |gamma|");
    if (static_cast<int>(spec.twists.size()) != n) fail("twist table size != |gamma|");
    if (static_cast<int>(spec.block_dims.size()) != spec.m) fail("block_dims size != m");
    if (!rep.ok()) return rep;

    for (int s = 0; s < n; ++s) {
        if (static_cast<int>(spec.action[s].size()) != spec.m) {
            fail("action[" + std::to_string(s) + "] is not a permutation of the blocks");
            return rep;
        }
        std::vector<bool> seen(spec.m, false);
        for (int j : spec.action[s]) {
            if (j < 0 || j >= spec.m || seen[j]) {
                fail("action[" + std::to_string(s) + "] is not a permutation");
                break;
            }
            seen[j] = true;
        }
    }
    if (!rep.ok()) return rep;

    // homomorphism into S_m: action[st] = action[s] o action[t]
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int j = 0; j < spec.m; ++j)
                if (spec.action[spec.gamma.mul[s][t]][j] != spec.action[s][spec.action[t][j]]) {
                    fail("action is not a homomorphism at (" + std::to_string(s) + "," +
                         std::to_string(t) + ")");
                    s = t = n; // break out
                    break;
                }
    for (int j = 0; j < spec.m; ++j)
        if (spec.action[spec.gamma.identity][j] != j) fail("action(identity) != id");

    for (int i = 0; i < spec.m; ++i) {
        const CycMatrix& tw = spec.twists[spec.gamma.identity][i];
        if (!tw.is_identity()) fail("twists(identity, " + std::to_string(i) + ") != I");
    }
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < spec.m; ++i) {
            const CycMatrix& tw = spec.twists[s][i];
            if (tw.rows() != spec.block_dims[i] || tw.cols() != spec.block_dims[i])
                fail("twist (" + std::to_string(s) + "," + std::to_string(i) +
                     ") has wrong dimensions");
            else if (!tw.is_unitary())
                fail("twist (" + std::to_string(s) + "," + std::to_string(i) + ") not unitary");
        }
    if (!rep.ok()) return rep;

    // block dims constant along orbits of the action
    for (int s = 0; s < n; ++s)
        for (int j = 0; j < spec.m; ++j)
            if (spec.block_dims[spec.action[s][j]] != spec.block_dims[j])
                fail("block dims not constant on an action orbit");

    // projective compatibility up to the <-I> ambiguity:
    //   twists(s, action[t](j)) twists(t, j) == +- twists(st, j)
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int j = 0; j < spec.m; ++j) {
                CycMatrix lhs = spec.twists[s][spec.action[t][j]] * spec.twists[t][j];
                if (!lhs.equals_up_to_sign(spec.twists[spec.gamma.mul[s][t]][j]))
                    fail("twist compatibility fails at (s=" + std::to_string(s) +
                         ",t=" + std::to_string(t) + ",block=" + std::to_string(j) + ")");
            }

    // entries are roots of unity with order dividing the mu_{2a}-derived bound
    const unsigned bound = lcm_u(static_cast<unsigned>(2 * spec.a),
                                 static_cast<unsigned>(spec.gamma.exponent()));
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < spec.m; ++i) {
            const CycMatrix& tw = spec.twists[s][i];
            for (int r = 0; r < tw.rows(); ++r)
                for (int c = 0; c < tw.cols(); ++c) {
                    if (tw.at(r, c).is_zero()) continue;
                    auto ord = tw.at(r, c).multiplicative_order(2 * bound);
                    if (!ord || bound % *ord != 0)
                        fail("twist entry at (" + std::to_string(s) + "," + std::to_string(i) +
                             ") exceeds the mu_{2a} order bound");
                }
        }
    return rep;
}

STElement sample_element(const STGroupSpec& spec, std::uint64_t seed,
                         std::optional<int> forced_component) {
    Rng rng(seed);
    return sample_element_rng(spec, rng, forced_component);
}

STElement sample_element_rng(const STGroupSpec& spec, Rng& rng,
                             std::optional<int> forced_component) {
    STElement el;
    el.g.reserve(spec.m);
    for (int i = 0; i < spec.m; ++i) {
        // uniform unit quaternion -> Haar on SU(2)
        double q0, q1, q2, q3, norm;
        do {
            q0 = rng.next_gaussian();
            q1 = rng.next_gaussian();
            q2 = rng.next_gaussian();
            q3 = rng.next_gaussian();
            norm = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
        } while (norm < 1e-12);
        q0 /= norm;
        q1 /= norm;
        q2 /= norm;
        q3 /= norm;
        Eigen::Matrix2cd g;
        g(0, 0) = std::complex<double>(q0, q1);
        g(0, 1) = std::complex<double>(q2, q3);
        g(1, 0) = std::complex<double>(-q2, q3);
        g(1, 1) = std::complex<double>(q0, -q1);
        el.g.push_back(g);
    }
    if (forced_component)
        el.component = *forced_component;
    else
        el.component = static_cast<int>(rng.next_index(spec.gamma.order()));
    return el;
}

Eigen::MatrixXcd embed_matrix(const STGroupSpec& spec, const STElement& elem) {
    if (static_cast<int>(elem.g.size()) != spec.m)
        throw DimensionMismatch("embed_matrix: element has wrong number of SU(2) factors");
    const int total = spec.total_dim();
    std::vector<int> offset(spec.m, 0);
    for (int i = 1; i < spec.m; ++i) offset[i] = offset[i - 1] + 2 * spec.block_dims[i - 1];
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(total, total);
    const auto& perm = spec.action[elem.component];
    for (int j = 0; j < spec.m; ++j) {
        const int i = perm[j]; // row block
        const int nj = spec.block_dims[j];
        auto tw = spec.twists[elem.component][j].to_complex();
        const Eigen::Matrix2cd& g = elem.g[j];
        for (int r2 = 0; r2 < 2; ++r2)
            for (int c2 = 0; c2 < 2; ++c2)
                for (int r = 0; r < nj; ++r)
                    for (int c = 0; c < nj; ++c)
                        M(offset[i] + r2 * nj + r, offset[j] + c2 * nj + c) =
                            g(r2, c2) * tw[r][c];
    }
    return M;
}

std::complex<double> trace(const STGroupSpec& spec, const STElement& elem) {
    std::complex<double> t(0, 0);
    const auto& perm = spec.action[elem.component];
    for (int j = 0; j < spec.m; ++j) {
        if (perm[j] != j) continue; // non-fixed blocks land off the diagonal
        std::complex<double> tau = spec.twists[elem.component][j].trace().to_complex();
        t += elem.g[j].trace() * tau;
    }
    return t;
}

std::vector<double> char_poly(const STGroupSpec& spec, const STElement& elem) {
    Eigen::MatrixXcd M = embed_matrix(spec, elem);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
    const auto& ev = es.eigenvalues();
    std::vector<std::complex<double>> coeffs = {1.0};
    for (int i = 0; i < ev.size(); ++i) {
        coeffs.push_back(0.0);
        for (size_t j = coeffs.size() - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - ev[i] * coeffs[j];
        coeffs[0] = -ev[i] * coeffs[0];
    }
    // coeffs[k] is the coefficient of x^k in det(xI - M)
    std::vector<double> out(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k) out[k] = coeffs[k].real();
    return out;
}

ComponentGroupData component_group_data(const STGroupSpec& spec) {
    std::vector<CycMatrix> gens;
    const int n0 = spec.block_dims[0];
    for (int s = 0; s < spec.gamma.order(); ++s) gens.push_back(spec.twists[s][0]);
    gens.push_back(-CycMatrix::identity(n0));
    ComponentGroupData d{MatrixGroup::closure(gens), {}, {}};
    d.table = character_table(d.h.group);
    for (int s = 0; s < spec.gamma.order(); ++s) {
        int idx = d.h.find(spec.twists[s][0]);
        if (idx < 0) throw Error("component twist not found in H");
        d.twist_index.push_back(idx);
    }
    return d;
}

std::vector<IrrepLabel> enumerate_irreps(const STGroupSpec& spec, int e_max,
                                         const ComponentGroupData& h_data) {
    const int minus_elem = h_data.h.find(-CycMatrix::identity(spec.block_dims[0]));
    if (minus_elem < 0) throw Error("enumerate_irreps: -I not in H");
    std::vector<IrrepLabel> out;
    std::vector<int> e(spec.m, 0);
    while (true) {
        int parity = std::accumulate(e.begin(), e.end(), 0) % 2;
        for (int eta = 0; eta < h_data.table.num_classes(); ++eta) {
            const Cyclotomic& at_minus = h_data.table.value(eta, minus_elem);
            Cyclotomic want = Cyclotomic::rational(Rat(h_data.table.degrees[eta]));
            if (parity == 1) want = -want;
            if (at_minus != want) continue;
            IrrepLabel lab;
            lab.e = e;
            lab.eta_index = eta;
            lab.eta_degree = h_data.table.degrees[eta];
            lab.trivial =
                (parity == 0 && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }) &&
                 h_data.table.is_trivial(eta));
            out.push_back(std::move(lab));
        }
        int i = 0;
        for (; i < spec.m; ++i) {
            if (++e[i] <= e_max) break;
            e[i] = 0;
        }
        if (i == spec.m) break;
    }
    return out;
}

std::vector<IrrepLabel> enumerate_irreps(const STGroupSpec& spec, int e_max) {
    return enumerate_irreps(spec, e_max, component_group_data(spec));
}

double symm_character(int e, double t) {
    // U_e with U_0 = 1, U_1 = t, U_e = t U_{e-1} - U_{e-2}
    double a = 1.0, b = t;
    if (e == 0) return a;
    if (e == 1) return b;
    for (int k = 2; k <= e; ++k) {
        double c = t * b - a;
        a = b;
        b = c;
    }
    return b;
}

} // namespace stt
