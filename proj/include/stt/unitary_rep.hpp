#pragma once

#include "stt/cocycle.hpp"
#include "stt/cyc_matrix.hpp"
#include "stt/finite_group.hpp"

#include <optional>
#include <vector>

namespace stt {

/// Matrix representation of a finite group with exact cyclotomic entries.
/// For genuine representations images[s]*images[t] == images[st]; projective
/// representations relax this up to a declared multiplier cocycle.
struct UnitaryRep {
    FiniteGroup group;
    int dim = 0;
    std::vector<CycMatrix> images;

    const CycMatrix& at(int s) const { return images[s]; }

    bool is_genuine() const;
    bool all_unitary() const;
    /// rho(s) rho(t) == c(s,t) rho(st) for all pairs.
    bool has_multiplier(const Cocycle2& c) const;

    static UnitaryRep trivial(const FiniteGroup& g);
    /// 1-dim rep from a character value table (must be a homomorphism).
    static UnitaryRep one_dim(const FiniteGroup& g, std::vector<Cyclotomic> values);
    static UnitaryRep regular(const FiniteGroup& g);
};

/// chi(s) = tr rho(s).
std::vector<Cyclotomic> character(const UnitaryRep& rho);

/// s -> alpha(s)^{-1} rho(s); requires rho to have multiplier coboundary(alpha).
UnitaryRep twist_projective_rep(const UnitaryRep& rho, const Cocycle2& c, const Splitting& alpha);

/// A finite group of exact unitary matrices, closed under multiplication,
/// with its Cayley table. Built from generators by closure (cap 256 elements).
struct MatrixGroup {
    std::vector<CycMatrix> elements;
    FiniteGroup group;

    static MatrixGroup closure(const std::vector<CycMatrix>& generators, int cap = 256);
    /// Index of m in elements, or -1.
    int find(const CycMatrix& m) const;
    /// Inclusion map as a genuine representation of group.
    UnitaryRep inclusion_rep() const;
};

/// The descent of Lemma-style eta_e data: given a projective matrix map theta
/// on G (defined up to sign, with sqrt_choice(s) * theta(s) landing in H), a
/// genuine rep eta of H with eta(-I) = (-1)^e I, and a 1-dim rep epsilon with
/// sqrt_choice(s)^2 == epsilon(s), returns the genuine representation
///   s -> sqrt_choice(s)^{-e} * eta(sqrt_choice(s) * theta(s)).
/// The result does not depend on the choice of square roots.
UnitaryRep build_eta_e(const UnitaryRep& theta, const MatrixGroup& h, const UnitaryRep& eta,
                       const UnitaryRep& epsilon, int e,
                       const std::vector<Cyclotomic>& sqrt_choice);

} // namespace stt
