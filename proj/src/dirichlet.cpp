#include "stt/dirichlet.hpp"

#include "stt/errors.hpp"

#include <numeric>

namespace stt {

namespace {

long long mod_pos(long long v, long long n) {
    long long r = v % n;
    return r < 0 ? r + n : r;
}

} // namespace

DirichletCharacter::DirichletCharacter(long long modulus,
                                       const std::map<long long, Cyclotomic>& generator_images)
    : n_(modulus) {
    if (modulus < 1) throw Error("DirichletCharacter: modulus must be >= 1");
    for (const auto& [g, v] : generator_images) {
        long long r = mod_pos(g, n_);
        if (std::gcd(r, n_) != 1)
            throw NotAHomomorphism("generator " + std::to_string(g) +
                                   " is not a unit mod " + std::to_string(n_));
        if (!v.multiplicative_order())
            throw NotAHomomorphism("image of " + std::to_string(g) +
                                   " is not a root of unity");
        auto it = values_.find(r);
        if (it != values_.end() && !(it->second == v))
            throw NotAHomomorphism("conflicting images for residue " + std::to_string(r));
        values_[r] = v;
    }
    values_[1 % n_] = Cyclotomic::one();
    if (generator_images.empty()) {
        // trivial character: every unit residue maps to 1
        for (long long r = 1; r < std::max<long long>(n_, 2); ++r)
            if (std::gcd(r, n_) == 1) values_[r] = Cyclotomic::one();
    }

    // close under multiplication; conflicts mean the images are inconsistent
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = values_;
        for (const auto& [r1, v1] : snapshot)
            for (const auto& [r2, v2] : snapshot) {
                long long r = mod_pos(r1 * r2, n_);
                Cyclotomic v = v1 * v2;
                auto it = values_.find(r);
                if (it == values_.end()) {
                    values_[r] = v;
                    grew = true;
                } else if (!(it->second == v)) {
                    throw NotAHomomorphism("images do not extend to (Z/" +
                                           std::to_string(n_) + ")^x at residue " +
                                           std::to_string(r));
                }
            }
    }

    for (long long r = 1; r < std::max<long long>(n_, 2); ++r)
        if (std::gcd(r, n_) == 1 && !values_.count(r))
            throw NotAHomomorphism("generators do not generate (Z/" + std::to_string(n_) +
                                   ")^x: residue " + std::to_string(r) + " unreached");
    if (n_ == 1) values_[0] = Cyclotomic::one();
}

DirichletCharacter DirichletCharacter::trivial(long long modulus) {
    return DirichletCharacter(modulus, {});
}

Cyclotomic DirichletCharacter::operator()(long long m) const {
    long long r = mod_pos(m, n_);
    if (n_ == 1) return Cyclotomic::one();
    if (std::gcd(r, n_) != 1) throw BadPrime(m);
    return values_.at(r);
}

unsigned DirichletCharacter::order() const {
    unsigned ord = 1;
    for (const auto& [r, v] : values_) ord = std::lcm(ord, v.multiplicative_order().value_or(1));
    return ord;
}

bool DirichletCharacter::is_trivial() const { return order() == 1; }

int frobenius_class_label(long long p, long long modulus,
                          const std::map<long long, int>& class_map) {
    if (modulus < 1) throw Error("frobenius_class_label: modulus must be >= 1");
    long long r = mod_pos(p, modulus);
    if (modulus > 1 && std::gcd(r, modulus) != 1) throw BadPrime(p);
    auto it = class_map.find(modulus == 1 ? 0 : r);
    if (it == class_map.end())
        throw Error("frobenius_class_label: residue " + std::to_string(r) +
                    " missing from class map");
    return it->second;
}

} // namespace stt
