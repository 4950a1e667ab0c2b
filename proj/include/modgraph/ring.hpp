#pragma once

#include "arith.hpp"
#include "error.hpp"

#include <compare>
#include <numeric>
#include <string>
#include <vector>

namespace modgraph {

/// The ring Z_n of integers modulo n, n >= 2.
class Ring {
public:
    explicit Ring(Int modulus) : modulus_(modulus)
    {
        if (modulus < 2)
            throw DescriptorError("ring modulus must be at least 2, got " + std::to_string(modulus));
    }

    Int modulus() const { return modulus_; }
    std::string descriptor() const { return "Z" + std::to_string(modulus_); }

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    Int modulus_;
};

/// An ideal dZ_n of Z_n. Every ideal of Z_n has this form for a unique divisor
/// d of n; the zero ideal is stored as d = n.
class Ideal {
public:
    /// Ideal generated by `element`; the stored generator is gcd(element, n).
    Ideal(Ring ring, Int element)
        : ring_(ring), generator_(std::gcd(element % ring.modulus(), ring.modulus()))
    {
        if (generator_ == 0)
            generator_ = ring.modulus();
    }

    static Ideal zero(Ring ring) { return Ideal(ring, 0); }
    static Ideal whole(Ring ring) { return Ideal(ring, 1); }

    const Ring& ring() const { return ring_; }
    Int generator() const { return generator_; }

    bool is_zero() const { return generator_ == ring_.modulus(); }
    bool is_whole() const { return generator_ == 1; }
    bool is_nontrivial() const { return !is_zero() && !is_whole(); }
    bool contains(Int r) const { return (r % ring_.modulus()) % generator_ == 0; }
    Int order() const { return ring_.modulus() / generator_; }

    /// Z_n / dZ_n is a domain exactly when d is prime (including d = n prime).
    bool is_prime() const { return is_prime_number(generator_); }

    std::vector<Int> elements() const
    {
        std::vector<Int> out;
        for (Int r = 0; r < ring_.modulus(); r += generator_)
            out.push_back(r);
        return out;
    }

    std::string label() const
    {
        if (is_zero())
            return "0";
        if (is_whole())
            return ring_.descriptor();
        return std::to_string(generator_) + ring_.descriptor();
    }

    friend Ideal operator+(const Ideal& a, const Ideal& b)
    {
        check_same(a, b);
        return Ideal(a.ring_, std::gcd(a.generator_, b.generator_));
    }

    friend Ideal intersect(const Ideal& a, const Ideal& b)
    {
        check_same(a, b);
        return Ideal(a.ring_, lcm_of(a.generator_, b.generator_) % a.ring_.modulus());
    }

    friend bool operator==(const Ideal&, const Ideal&) = default;

    /// Order of the canonical key (sorted element list): the zero ideal first,
    /// then by ascending generator.
    friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b)
    {
        if (auto c = a.ring_.modulus() <=> b.ring_.modulus(); c != 0)
            return c;
        if (a.is_zero() != b.is_zero())
            return a.is_zero() ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.generator_ <=> b.generator_;
    }

private:
    static void check_same(const Ideal& a, const Ideal& b)
    {
        if (!(a.ring_ == b.ring_))
            throw ModuleMismatchError("ideals of different rings " + a.ring_.descriptor() + " and " +
                                      b.ring_.descriptor());
    }

    Ring ring_;
    Int generator_;
};

/// All ideals of the ring in canonical order.
inline std::vector<Ideal> ideals_of(const Ring& ring)
{
    std::vector<Ideal> out{Ideal::zero(ring)};
    for (Int d : divisors(ring.modulus()))
        if (d != ring.modulus())
            out.emplace_back(ring, d);
    return out;
}

} // namespace modgraph
