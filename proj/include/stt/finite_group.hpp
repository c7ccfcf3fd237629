#pragma once

#include <string>
#include <vector>

namespace stt {

/// A finite group given by its Cayley table. Element 0..order-1; mul[s][t]
/// is the product st. Exhaustive associativity verification is intended for
/// orders up to 64.
struct FiniteGroup {
    std::vector<std::vector<int>> mul;
    int identity = 0;
    std::vector<int> inv;

    int order() const { return static_cast<int>(mul.size()); }
    int op(int s, int t) const { return mul[s][t]; }

    /// Builds inverse table and locates the identity; throws InvariantViolation
    /// if the table is not a group (associativity checked exhaustively for
    /// order <= 64, by random sampling above).
    static FiniteGroup from_table(std::vector<std::vector<int>> mul);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup klein_four();
    static FiniteGroup symmetric3();
    static FiniteGroup dihedral(int n); // order 2n
    static FiniteGroup quaternion8();
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    bool is_abelian() const;
    int element_order(int s) const;
    int exponent() const;
    /// Orbits under conjugation; classes are sorted by their minimal element.
    std::vector<std::vector<int>> conjugacy_classes() const;
    /// class_of[s] = index of the conjugacy class containing s.
    std::vector<int> class_map(const std::vector<std::vector<int>>& classes) const;
    int power(int s, long long k) const;
};

/// All groups of order <= 8 up to isomorphism, with short names.
std::vector<std::pair<std::string, FiniteGroup>> small_groups_up_to_8();

} // namespace stt
