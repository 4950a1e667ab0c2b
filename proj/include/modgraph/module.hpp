#pragma once

#include "arith.hpp"
#include "error.hpp"
#include "ring.hpp"

#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modgraph {

/// Element of a finite module, encoded as a mixed-radix index. The first
/// invariant factor is the most significant digit, so index order equals
/// lexicographic order of residue tuples.
using Element = std::uint32_t;

/// The Z_n-module Z_{d_1} x ... x Z_{d_k} with every d_i dividing n.
class FiniteModule {
public:
    FiniteModule(Ring ring, std::vector<Int> factors) : ring_(ring), factors_(std::move(factors))
    {
        if (factors_.empty())
            throw DescriptorError("module needs at least one invariant factor");
        std::uint64_t order = 1;
        for (Int d : factors_) {
            if (d < 2)
                throw DescriptorError("invariant factor must be at least 2, got " + std::to_string(d));
            if (ring_.modulus() % d != 0)
                throw DescriptorError("invariant factor " + std::to_string(d) + " does not divide " +
                                      std::to_string(ring_.modulus()));
            order *= d;
            if (order > UINT32_MAX)
                throw SizeGuardError("module order overflows 32 bits");
        }
        order_ = static_cast<std::size_t>(order);
        strides_.assign(factors_.size(), 1);
        for (std::size_t i = factors_.size(); i-- > 1;)
            strides_[i - 1] = strides_[i] * factors_[i];
    }

    /// Z_n as a module over itself.
    static FiniteModule regular(Ring ring) { return FiniteModule(ring, {ring.modulus()}); }

    const Ring& ring() const { return ring_; }
    const std::vector<Int>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    std::size_t order() const { return order_; }
    bool is_cyclic_presentation() const { return factors_.size() == 1; }
    bool is_regular() const { return factors_.size() == 1 && factors_[0] == ring_.modulus(); }

    Int exponent() const
    {
        Int e = 1;
        for (Int d : factors_)
            e = lcm_of(e, d);
        return e;
    }

    Int digit(Element x, std::size_t i) const { return (x / strides_[i]) % factors_[i]; }

    std::vector<Int> digits(Element x) const
    {
        std::vector<Int> out(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i)
            out[i] = digit(x, i);
        return out;
    }

    Element encode(std::span<const Int> digits) const
    {
        if (digits.size() != factors_.size())
            throw DescriptorError("element has " + std::to_string(digits.size()) + " coordinates, module has " +
                                  std::to_string(factors_.size()));
        Element x = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (digits[i] >= factors_[i])
                throw DescriptorError("coordinate " + std::to_string(digits[i]) + " out of range for Z" +
                                      std::to_string(factors_[i]));
            x += digits[i] * strides_[i];
        }
        return x;
    }

    Element add(Element x, Element y) const
    {
        if (factors_.size() == 1)
            return (x + y) % factors_[0];
        Element z = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            z += ((digit(x, i) + digit(y, i)) % factors_[i]) * strides_[i];
        return z;
    }

    /// Scalar action r.x, coordinatewise r*a_i mod d_i.
    Element scale(Int r, Element x) const
    {
        if (factors_.size() == 1)
            return static_cast<Element>((static_cast<std::uint64_t>(r) * x) % factors_[0]);
        Element z = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            z += static_cast<Element>((static_cast<std::uint64_t>(r) * digit(x, i)) % factors_[i]) * strides_[i];
        return z;
    }

    /// Unit vectors e_1, ..., e_k; they generate the module.
    std::vector<Element> standard_generators() const
    {
        std::vector<Element> out;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            out.push_back(strides_[i]);
        return out;
    }

    bool contains(Element x) const { return x < order_; }

    /// "5" for a cyclic presentation, "(1,0,2)" otherwise.
    std::string format(Element x) const
    {
        if (factors_.size() == 1)
            return std::to_string(x);
        std::string s = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(digit(x, i));
        }
        return s + ")";
    }

    std::string descriptor() const
    {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i)
                s += 'x';
            s += "Z" + std::to_string(factors_[i]);
        }
        return s;
    }

    friend bool operator==(const FiniteModule& a, const FiniteModule& b)
    {
        return a.ring_ == b.ring_ && a.factors_ == b.factors_;
    }

private:
    Ring ring_;
    std::vector<Int> factors_;
    std::vector<Int> strides_;
    std::size_t order_ = 1;
};

/// Parses `Z<n>` atoms joined by `x`, e.g. "Z2xZ4".
inline std::vector<Int> parse_factors(std::string_view text)
{
    std::vector<Int> out;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw DescriptorError("malformed descriptor '" + std::string(text) + "': " + why);
    };
    if (text.empty())
        fail("empty");
    while (true) {
        if (pos >= text.size() || text[pos] != 'Z')
            fail("expected 'Z' at position " + std::to_string(pos));
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            ++pos;
        if (pos == start)
            fail("expected an integer after 'Z'");
        Int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
        if (ec != std::errc{} || ptr != text.data() + pos)
            fail("integer out of range");
        if (value < 2)
            throw DescriptorError("invariant factor must be at least 2, got " + std::to_string(value));
        out.push_back(value);
        if (pos == text.size())
            break;
        if (text[pos] != 'x')
            fail("expected 'x' at position " + std::to_string(pos));
        ++pos;
    }
    return out;
}

/// Parses a module descriptor and optional ring descriptor. Without a ring the
/// module is read over Z_e, e = lcm of its invariant factors.
inline std::pair<Ring, FiniteModule> parse_descriptor(std::string_view module_text,
                                                      std::optional<std::string_view> ring_text = std::nullopt)
{
    auto factors = parse_factors(module_text);
    Int modulus = 1;
    if (ring_text) {
        auto ring_factors = parse_factors(*ring_text);
        if (ring_factors.size() != 1)
            throw DescriptorError("ring descriptor must be a single Z<n>, got '" + std::string(*ring_text) + "'");
        modulus = ring_factors[0];
    } else {
        for (Int d : factors) {
            std::uint64_t l = std::lcm<std::uint64_t>(modulus, d);
            if (l > UINT32_MAX)
                throw DescriptorError("ring modulus overflows 32 bits");
            modulus = static_cast<Int>(l);
        }
    }
    Ring ring(modulus);
    return {ring, FiniteModule(ring, std::move(factors))};
}

} // namespace modgraph
