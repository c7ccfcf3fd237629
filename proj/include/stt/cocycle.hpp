#pragma once

#include "stt/cyclotomic.hpp"
#include "stt/finite_group.hpp"

#include <optional>
#include <vector>

namespace stt {

/// Normalized 2-cochain on a finite group with values that are roots of unity.
struct Cocycle2 {
    FiniteGroup group;
    std::vector<std::vector<Cyclotomic>> values; // values[s][t]

    const Cyclotomic& at(int s, int t) const { return values[s][t]; }
    static Cocycle2 trivial(const FiniteGroup& g);
    bool is_normalized() const;
    /// lcm of the multiplicative orders of all values; throws if some value
    /// is not a root of unity.
    unsigned value_order() const;
};

/// A 1-cochain alpha with alpha(1) = 1, candidate splitting of a 2-cocycle.
struct Splitting {
    FiniteGroup group;
    std::vector<Cyclotomic> alpha;

    static Splitting trivial(const FiniteGroup& g);
};

/// Exhaustive check of c(s,t) c(st,u) == c(t,u) c(s,tu) over all triples.
bool verify_cocycle(const Cocycle2& c);

/// c(s,t) = alpha(s) alpha(t) / alpha(st).
Cocycle2 coboundary(const Splitting& alpha);

struct Obstruction {
    unsigned smallest_tested_order = 0;
    int rank_defect = 0; // unsatisfiable congruences at that order
};

struct SplitResult {
    std::optional<Splitting> splitting;
    Obstruction obstruction; // meaningful when !splitting
    bool ok() const { return splitting.has_value(); }
};

/// Searches for alpha with coboundary(alpha) == c, with values in mu_N for
/// the smallest workable N: N sweeps multiples of the value order of c up to
/// max_order, solving the exponent system over Z/N. Throws NotACocycle if c
/// fails verify_cocycle.
SplitResult split_cocycle(const Cocycle2& c, unsigned max_order);

/// Test-oracle helper: brute force over all mu_N-valued 1-cochains (use only
/// for tiny groups; cost N^(|G|-1)).
std::optional<Splitting> split_cocycle_exhaustive(const Cocycle2& c, unsigned N);

/// The inflation to Z/2 x Z/2 of the carry cocycle of the nonsplit extension
/// Z/4 -> Z/2: nontrivial with mu_2 values, becomes a coboundary over mu_4.
Cocycle2 carry_cocycle_klein_four();

/// The 2-cocycle of the quaternion central extension Q8 -> Z/2 x Z/2. This
/// represents the nontrivial Schur class of the Klein four-group and splits
/// over no root-of-unity coefficients (it is not symmetric).
Cocycle2 quaternion_cocycle_klein_four();

} // namespace stt
