#pragma once

#include "stt/character_table.hpp"
#include "stt/cyc_matrix.hpp"
#include "stt/finite_group.hpp"
#include "stt/unitary_rep.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stt {

/// Blueprint of a Sato-Tate group of shape (SU(2)^m x twists) . Gamma:
/// m SU(2) blocks, a finite component group acting by block permutations,
/// and a unitary twist matrix per (component, block). `a` is the order of
/// the nebentypus-type character bounding the twist roots of unity.
struct STGroupSpec {
    int m = 1;
    FiniteGroup gamma;
    /// action[s] is a permutation of {0..m-1}; composition convention is
    /// action[st] = action[s] o action[t].
    std::vector<std::vector<int>> action;
    /// twists[s][i]: N_i x N_i unitary matrix with cyclotomic entries.
    std::vector<std::vector<CycMatrix>> twists;
    int a = 1;
    std::vector<int> block_dims;

    int total_dim() const;

    static STGroupSpec su2();                // m=1, trivial component group
    static STGroupSpec rm_swap();            // m=2, Z/2 swapping the blocks
    static STGroupSpec z4_scalar_twist();    // m=1, Gamma=Z/4, twists diag(i,i), a=2
    static STGroupSpec pauli_twist();        // m=1, Gamma=Z/2xZ/2, Pauli twists (|H|=8)
};

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

ValidationReport validate_spec(const STGroupSpec& spec);

/// Sampled element: m SU(2) matrices plus a component-group element.
struct STElement {
    std::vector<Eigen::Matrix2cd> g;
    int component = 0;
};

/// Haar sample: each g_i from the uniform unit-quaternion law, component
/// uniform over gamma unless forced. Deterministic per seed.
STElement sample_element(const STGroupSpec& spec, std::uint64_t seed,
                         std::optional<int> forced_component = std::nullopt);

class Rng;
/// Same sampling law, drawing from a caller-owned stream.
STElement sample_element_rng(const STGroupSpec& spec, Rng& rng,
                             std::optional<int> forced_component = std::nullopt);

/// Block-monomial unitary realization; identity component is block-diagonal
/// (g_i tensor twist_i). Block for column j sits at row action[gamma][j].
Eigen::MatrixXcd embed_matrix(const STGroupSpec& spec, const STElement& elem);

/// Trace of embed_matrix, computed directly from the fixed blocks.
std::complex<double> trace(const STGroupSpec& spec, const STElement& elem);

/// Real coefficient vector (degree ascending) of det(xI - embed_matrix).
std::vector<double> char_poly(const STGroupSpec& spec, const STElement& elem);

/// Component-group data derived from block-0 twists: the finite matrix group
/// H generated by the twists together with -I, and its character table.
struct ComponentGroupData {
    MatrixGroup h;
    CharacterTable table;
    std::vector<int> twist_index; // gamma element -> index of its twist in h
};

ComponentGroupData component_group_data(const STGroupSpec& spec);

/// Label of an irreducible representation Sym^{e_1} x ... x Sym^{e_m} x eta,
/// subject to the parity constraint eta(-I) = (-1)^{sum e_i} I.
struct IrrepLabel {
    std::vector<int> e;
    int eta_index = 0; // row of the character table of H
    int eta_degree = 1;
    bool trivial = true;
};

/// All parity-admissible labels with each e_i <= e_max.
std::vector<IrrepLabel> enumerate_irreps(const STGroupSpec& spec, int e_max,
                                         const ComponentGroupData& h_data);
std::vector<IrrepLabel> enumerate_irreps(const STGroupSpec& spec, int e_max);

/// Character of Sym^e of SU(2) at an element of trace t (Chebyshev U_e).
double symm_character(int e, double t);

} // namespace stt
