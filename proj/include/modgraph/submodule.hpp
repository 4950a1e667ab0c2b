#pragma once

#include "error.hpp"
#include "module.hpp"
#include "ring.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace modgraph {

/// Fixed-size bit set over the elements of a module.
class ElementBits {
public:
    ElementBits() = default;
    explicit ElementBits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool test(Element x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
    void set(Element x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool is_subset_of(const ElementBits& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    ElementBits operator&(const ElementBits& other) const
    {
        ElementBits out(size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            out.words_[i] = words_[i] & other.words_[i];
        return out;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const ElementBits&, const ElementBits&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementBitsHash {
    std::size_t operator()(const ElementBits& b) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto w : b.words())
            h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ull;
        return h;
    }
};

namespace detail {
/// Replaces S by S + <g> in place (S given as bits plus member list).
inline void extend_by_cyclic(const FiniteModule& module, ElementBits& bits, std::vector<Element>& members, Element g)
{
    if (bits.test(g))
        return;
    const std::size_t base = members.size();
    Element step = g;
    // Cosets S + j*g are disjoint from S until j*g first lands in S.
    while (!bits.test(step)) {
        for (std::size_t i = 0; i < base; ++i) {
            Element y = module.add(members[i], step);
            bits.set(y);
            members.push_back(y);
        }
        step = module.add(step, g);
    }
}
} // namespace detail

/// A submodule of a finite module. Identity is the sorted element list, which
/// also serves as the canonical ordering key.
class Submodule {
public:
    /// Builds the submodule with exactly the given member set. The set must be
    /// closed; callers obtain it from closure operations.
    Submodule(FiniteModule module, ElementBits members) : module_(std::move(module)), bits_(std::move(members))
    {
        bits_.for_each([&](Element x) { elements_.push_back(x); });
        choose_generators();
    }

    const FiniteModule& module() const { return module_; }
    const ElementBits& bits() const { return bits_; }
    const std::vector<Element>& elements() const { return elements_; }
    const std::vector<Element>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(Element x) const { return x < module_.order() && bits_.test(x); }
    bool is_zero() const { return elements_.size() == 1; }
    bool is_whole() const { return elements_.size() == module_.order(); }
    bool is_subset_of(const Submodule& other) const { return bits_.is_subset_of(other.bits_); }

    /// "0", "M", "dM" for a cyclic presentation, "<g1,g2>" otherwise.
    std::string label() const
    {
        if (is_zero())
            return "0";
        if (is_whole())
            return "M";
        if (module_.is_cyclic_presentation())
            return std::to_string(generators_.front()) + "M";
        std::string s = "<";
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (i)
                s += ',';
            s += module_.format(generators_[i]);
        }
        return s + ">";
    }

    std::string elements_text() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (i)
                s += ',';
            s += module_.format(elements_[i]);
        }
        return s + "}";
    }

    friend bool operator==(const Submodule& a, const Submodule& b)
    {
        return a.module_ == b.module_ && a.bits_ == b.bits_;
    }

    friend std::strong_ordering operator<=>(const Submodule& a, const Submodule& b)
    {
        return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
                                                      b.elements_.end());
    }

private:
    // Greedy scan in index order keeps each element outside the span of those
    // already kept; a second pass drops any generator the others cover.
    void choose_generators()
    {
        auto span_size = [&](const std::vector<Element>& gens, std::size_t skip) {
            ElementBits reached(module_.order());
            std::vector<Element> reached_list{0};
            reached.set(0);
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (i != skip && !reached.test(gens[i]))
                    detail::extend_by_cyclic(module_, reached, reached_list, gens[i]);
            return reached_list.size();
        };
        ElementBits reached(module_.order());
        std::vector<Element> reached_list{0};
        reached.set(0);
        for (Element x : elements_) {
            if (reached.test(x))
                continue;
            generators_.push_back(x);
            detail::extend_by_cyclic(module_, reached, reached_list, x);
        }
        for (std::size_t i = generators_.size(); i-- > 0;)
            if (span_size(generators_, i) == elements_.size())
                generators_.erase(generators_.begin() + static_cast<std::ptrdiff_t>(i));
    }

    FiniteModule module_;
    ElementBits bits_;
    std::vector<Element> elements_;
    std::vector<Element> generators_;
};

inline Submodule zero_submodule(const FiniteModule& module)
{
    ElementBits bits(module.order());
    bits.set(0);
    return Submodule(module, std::move(bits));
}

inline Submodule whole_module(const FiniteModule& module)
{
    ElementBits bits(module.order());
    for (Element x = 0; x < module.order(); ++x)
        bits.set(x);
    return Submodule(module, std::move(bits));
}

/// Smallest submodule containing `gens`. Over Z_n every subgroup is a
/// submodule, so additive closure suffices.
inline Submodule span(const FiniteModule& module, std::span<const Element> gens)
{
    ElementBits bits(module.order());
    std::vector<Element> members{0};
    bits.set(0);
    for (Element g : gens) {
        if (!module.contains(g))
            throw DescriptorError("element index " + std::to_string(g) + " out of range for " + module.descriptor());
        detail::extend_by_cyclic(module, bits, members, g);
    }
    return Submodule(module, std::move(bits));
}

inline Submodule span(const FiniteModule& module, std::initializer_list<Element> gens)
{
    return span(module, std::span<const Element>(gens.begin(), gens.size()));
}

namespace detail {
inline void check_same_module(const Submodule& n, const Submodule& k)
{
    if (!(n.module() == k.module()))
        throw ModuleMismatchError("submodules of different modules " + n.module().descriptor() + " and " +
                                  k.module().descriptor());
}
} // namespace detail

inline Submodule submodule_sum(const Submodule& n, const Submodule& k)
{
    detail::check_same_module(n, k);
    ElementBits bits = n.bits();
    std::vector<Element> members = n.elements();
    for (Element g : k.generators())
        detail::extend_by_cyclic(n.module(), bits, members, g);
    return Submodule(n.module(), std::move(bits));
}

inline Submodule submodule_intersection(const Submodule& n, const Submodule& k)
{
    detail::check_same_module(n, k);
    return Submodule(n.module(), n.bits() & k.bits());
}

/// rN = {r.x : x in N}.
inline Submodule scaled(Int r, const Submodule& n)
{
    std::vector<Element> gens;
    for (Element g : n.generators())
        gens.push_back(n.module().scale(r, g));
    return span(n.module(), gens);
}

/// IM for the ideal I = dZ_n: the span of d.e_i.
inline Submodule ideal_times_module(const Ideal& ideal, const FiniteModule& module)
{
    std::vector<Element> gens;
    for (Element e : module.standard_generators())
        gens.push_back(module.scale(ideal.generator(), e));
    return span(module, gens);
}

/// (0 :_M I) = {m : I m = 0}; for I = dZ_n this is the kernel of m -> d.m.
inline Submodule annihilated_by(const Ideal& ideal, const FiniteModule& module)
{
    ElementBits bits(module.order());
    for (Element x = 0; x < module.order(); ++x)
        if (module.scale(ideal.generator(), x) == 0)
            bits.set(x);
    return Submodule(module, std::move(bits));
}

} // namespace modgraph
