#pragma once

#include "stt/cyclotomic.hpp"
#include "stt/finite_group.hpp"

#include <vector>

namespace stt {

/// Exact character table of a finite group (order <= 64). Characters are
/// stored per conjugacy class with values in Q(zeta_e), e = exponent of G.
/// Row 0 is the trivial character; remaining rows sorted by degree.
struct CharacterTable {
    std::vector<std::vector<int>> classes; // element indices per class
    std::vector<int> class_of;             // element -> class index
    std::vector<int> degrees;              // per irreducible
    std::vector<std::vector<Cyclotomic>> chars; // chars[i][c]

    int num_classes() const { return static_cast<int>(classes.size()); }
    const Cyclotomic& value(int irrep, int element) const {
        return chars[irrep][class_of[element]];
    }
    bool is_trivial(int irrep) const;
};

/// Dixon's algorithm: class-sum matrices over F_p, common eigenvectors, and
/// lifting of eigenvalue multiplicities back to exact cyclotomic values.
CharacterTable character_table(const FiniteGroup& g);

} // namespace stt
