#pragma once

#include "stt/cyclotomic.hpp"

#include <map>
#include <vector>

namespace stt {

/// Character (Z/N)^x -> roots of unity, built from images of generators.
class DirichletCharacter {
public:
    /// generator_images: residue -> value (a root of unity). The listed
    /// residues must generate (Z/N)^x and the images must extend to a
    /// homomorphism; otherwise NotAHomomorphism.
    DirichletCharacter(long long modulus,
                       const std::map<long long, Cyclotomic>& generator_images);

    static DirichletCharacter trivial(long long modulus);

    long long modulus() const { return n_; }
    /// Value at any integer coprime to N; BadPrime if gcd(m, N) > 1.
    Cyclotomic operator()(long long m) const;
    /// Multiplicative order of the character.
    unsigned order() const;
    bool is_trivial() const;

private:
    long long n_;
    std::map<long long, Cyclotomic> values_; // unit residue -> value
};

/// Component class of Frobenius at p from a residue class map mod N.
/// class_map must cover every unit residue; BadPrime if p | N.
int frobenius_class_label(long long p, long long modulus,
                          const std::map<long long, int>& class_map);

} // namespace stt
