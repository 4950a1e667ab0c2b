#pragma once

#include "error.hpp"
#include "module.hpp"
#include "predicates.hpp"
#include "ring.hpp"
#include "submodule.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace modgraph {

/// Limits on the work a single module may demand.
struct SizeGuard {
    std::size_t max_order = 4096;
    std::size_t max_lattice = 20000;
};

struct SubmoduleFlags {
    bool prime = false;
    bool second = false;
    bool minimal = false;
    bool maximal = false;
    bool large = false;
    bool small = false;

    friend bool operator==(const SubmoduleFlags&, const SubmoduleFlags&) = default;
};

class SubmoduleLattice;
SubmoduleLattice enumerate_submodules(const FiniteModule& module, SizeGuard guard);
SubmoduleFlags classify_submodule(const Submodule& n, const SubmoduleLattice& lattice);

/// Every submodule of a finite module, in canonical order, with meet, join and
/// the per-submodule classification.
class SubmoduleLattice {
public:
    const FiniteModule& module() const { return module_; }
    std::size_t size() const { return all_.size(); }
    const std::vector<Submodule>& all() const { return all_; }
    const Submodule& at(std::size_t i) const { return all_.at(i); }
    const SubmoduleFlags& flags(std::size_t i) const { return flags_.at(i); }

    std::size_t zero_index() const { return zero_; }
    std::size_t top_index() const { return top_; }
    bool is_nonzero_proper(std::size_t i) const { return i != zero_ && i != top_; }

    std::optional<std::size_t> find(const ElementBits& bits) const
    {
        auto it = index_.find(bits);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> find(const Submodule& n) const
    {
        if (!(n.module() == module_))
            return std::nullopt;
        return find(n.bits());
    }

    std::size_t index_of(const Submodule& n) const
    {
        if (auto i = find(n))
            return *i;
        throw ModuleMismatchError("submodule " + n.label() + " is not a member of the lattice of " +
                                  module_.descriptor());
    }

    /// True when at(inner) ⊆ at(outer).
    bool includes(std::size_t outer, std::size_t inner) const
    {
        return all_.at(inner).bits().is_subset_of(all_.at(outer).bits());
    }

    std::size_t meet(std::size_t i, std::size_t j) const
    {
        return *find(all_.at(i).bits() & all_.at(j).bits());
    }

    std::size_t join(std::size_t i, std::size_t j) const { return index_of(submodule_sum(all_.at(i), all_.at(j))); }

    /// Indices of nonzero proper submodules, in canonical order.
    std::vector<std::size_t> nonzero_proper() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < all_.size(); ++i)
            if (is_nonzero_proper(i))
                out.push_back(i);
        return out;
    }

    template <class Pred>
    std::vector<std::size_t> select(Pred pred) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < all_.size(); ++i)
            if (pred(flags_[i]))
                out.push_back(i);
        return out;
    }

    std::vector<std::size_t> minimal_indices() const { return select([](auto& f) { return f.minimal; }); }
    std::vector<std::size_t> maximal_indices() const { return select([](auto& f) { return f.maximal; }); }
    std::vector<std::size_t> second_indices() const { return select([](auto& f) { return f.second; }); }
    std::vector<std::size_t> prime_indices() const { return select([](auto& f) { return f.prime; }); }

private:
    friend SubmoduleLattice enumerate_submodules(const FiniteModule& module, SizeGuard guard);

    explicit SubmoduleLattice(FiniteModule module) : module_(std::move(module)) {}

    FiniteModule module_;
    std::vector<Submodule> all_;
    std::vector<SubmoduleFlags> flags_;
    std::unordered_map<ElementBits, std::size_t, ElementBitsHash> index_;
    std::size_t zero_ = 0;
    std::size_t top_ = 0;
};

namespace detail {

inline bool is_minimal_in(const Submodule& n, const SubmoduleLattice& lattice)
{
    if (n.is_zero() || n.is_whole())
        return false;
    for (const auto& k : lattice.all())
        if (!k.is_zero() && k.order() < n.order() && n.order() % k.order() == 0 && k.is_subset_of(n))
            return false;
    return true;
}

inline bool is_maximal_in(const Submodule& n, const SubmoduleLattice& lattice)
{
    if (n.is_zero() || n.is_whole())
        return false;
    for (const auto& k : lattice.all())
        if (!k.is_whole() && k.order() > n.order() && k.order() % n.order() == 0 && n.is_subset_of(k))
            return false;
    return true;
}

} // namespace detail

namespace detail {

struct Extremes {
    std::vector<std::size_t> minimal;
    std::vector<std::size_t> maximal;
};

inline Extremes extremes_of(const SubmoduleLattice& lattice)
{
    Extremes e;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (is_minimal_in(lattice.at(i), lattice))
            e.minimal.push_back(i);
        if (is_maximal_in(lattice.at(i), lattice))
            e.maximal.push_back(i);
    }
    return e;
}

inline SubmoduleFlags classify_with(const Submodule& n, const SubmoduleLattice& lattice, const Extremes& extremes)
{
    SubmoduleFlags f;
    f.prime = is_prime_submodule(n);
    f.second = is_second_submodule(n);
    f.minimal = is_minimal_in(n, lattice);
    f.maximal = is_maximal_in(n, lattice);

    // Every nonzero K contains a minimal submodule S, and N ∩ S ≠ 0 iff S ⊆ N;
    // dually every proper L lies in a maximal one.
    f.large = !n.is_zero();
    for (std::size_t i : extremes.minimal)
        if (!lattice.at(i).is_subset_of(n))
            f.large = false;
    f.small = !n.is_whole();
    for (std::size_t i : extremes.maximal)
        if (!n.is_subset_of(lattice.at(i)))
            f.small = false;
    return f;
}

} // namespace detail

/// Flags of `n` within `lattice`. Minimal and maximal refer to nonzero proper
/// submodules only.
inline SubmoduleFlags classify_submodule(const Submodule& n, const SubmoduleLattice& lattice)
{
    return detail::classify_with(n, lattice, detail::extremes_of(lattice));
}

/// Sum of all second submodules contained in N, or 0 when there are none.
inline Submodule second_socle(const Submodule& n, const SubmoduleLattice& lattice)
{
    Submodule acc = zero_submodule(lattice.module());
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (lattice.flags(i).second && lattice.at(i).is_subset_of(n))
            acc = submodule_sum(acc, lattice.at(i));
    return acc;
}

/// Intersection of all prime submodules, or M when there are none.
inline Submodule prime_radical(const SubmoduleLattice& lattice)
{
    Submodule acc = whole_module(lattice.module());
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (lattice.flags(i).prime)
            acc = submodule_intersection(acc, lattice.at(i));
    return acc;
}

struct ModuleProperties {
    bool coreduced = false;
    bool reduced = false;
    bool multiplication = false;
    bool comultiplication = false;
    bool dac = false;
    bool strong_comultiplication = false;
    bool faithful = false;
    bool hollow = false;
    bool uniform = false;

    friend bool operator==(const ModuleProperties&, const ModuleProperties&) = default;
};

inline ModuleProperties module_properties(const SubmoduleLattice& lattice)
{
    const FiniteModule& module = lattice.module();
    const Ring& ring = module.ring();
    const Int modulus = ring.modulus();
    const Submodule whole = whole_module(module);
    ModuleProperties p;

    std::vector<Submodule> multiples_of_m;
    multiples_of_m.reserve(modulus);
    for (Int r = 0; r < modulus; ++r)
        multiples_of_m.push_back(scaled(r, whole));

    p.coreduced = true;
    for (Int r = 0; r < modulus && p.coreduced; ++r)
        if (!(multiples_of_m[r] == multiples_of_m[(static_cast<std::uint64_t>(r) * r) % modulus]))
            p.coreduced = false;

    // rm = 0 implies rM ∩ Rm = 0; Rm only depends on the cyclic submodule.
    p.reduced = true;
    std::unordered_set<std::size_t> visited;
    for (Element m = 0; m < module.order() && p.reduced; ++m) {
        Submodule cyclic = span(module, {m});
        if (!visited.insert(lattice.index_of(cyclic)).second)
            continue;
        for (Int r = 0; r < modulus; ++r) {
            if (module.scale(r, m) != 0)
                continue;
            if (!submodule_intersection(multiples_of_m[r], cyclic).is_zero()) {
                p.reduced = false;
                break;
            }
        }
    }

    p.multiplication = true;
    p.comultiplication = true;
    for (const auto& n : lattice.all()) {
        if (p.multiplication && !(n == ideal_times_module(colon_ideal(n, module), module)))
            p.multiplication = false;
        if (p.comultiplication && !(n == annihilated_by(annihilator(n), module)))
            p.comultiplication = false;
    }

    p.dac = true;
    for (const Ideal& ideal : ideals_of(ring))
        if (!(annihilator(annihilated_by(ideal, module)) == ideal)) {
            p.dac = false;
            break;
        }
    p.strong_comultiplication = p.comultiplication && p.dac;
    p.faithful = annihilator(whole).is_zero();

    p.hollow = true;
    p.uniform = true;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (i != lattice.top_index() && !lattice.flags(i).small)
            p.hollow = false;
        if (i != lattice.zero_index() && !lattice.flags(i).large)
            p.uniform = false;
    }
    return p;
}

/// All submodules of `module`: seeds every cyclic span, then joins each found
/// submodule with every cyclic seed until nothing new appears. Since each
/// submodule is a join of cyclic ones, the fixpoint is the whole lattice.
inline SubmoduleLattice enumerate_submodules(const FiniteModule& module, SizeGuard guard = {})
{
    if (module.order() > guard.max_order)
        throw SizeGuardError("module " + module.descriptor() + " has order " + std::to_string(module.order()) +
                             ", above the limit " + std::to_string(guard.max_order));

    const std::size_t order = module.order();
    std::vector<ElementBits> found;
    std::unordered_map<ElementBits, std::size_t, ElementBitsHash> seen;
    auto insert = [&](ElementBits bits) {
        auto [it, fresh] = seen.emplace(bits, found.size());
        if (fresh) {
            found.push_back(std::move(bits));
            if (found.size() > guard.max_lattice)
                throw SizeGuardError("lattice of " + module.descriptor() + " exceeds " +
                                     std::to_string(guard.max_lattice) + " submodules");
        }
    };

    // One representative generator per distinct cyclic submodule. Walking the
    // multiples j*x of x lists <x>; the j coprime to |<x>| generate the same one.
    std::vector<Element> seeds;
    std::vector<char> covered(order, 0);
    for (Element x = 0; x < order; ++x) {
        if (covered[x])
            continue;
        ElementBits bits(order);
        bits.set(0);
        std::vector<Element> multiples{0};
        detail::extend_by_cyclic(module, bits, multiples, x);
        const std::size_t cyc = multiples.size();
        for (std::size_t j = 1; j < cyc; ++j)
            if (std::gcd(j, cyc) == 1)
                covered[multiples[j]] = 1;
        covered[x] = 1;
        if (!seen.contains(bits))
            seeds.push_back(x);
        insert(std::move(bits));
    }

    for (std::size_t i = 0; i < found.size(); ++i) {
        for (Element g : seeds) {
            if (found[i].test(g))
                continue;
            ElementBits bits = found[i];
            std::vector<Element> members;
            bits.for_each([&](Element y) { members.push_back(y); });
            detail::extend_by_cyclic(module, bits, members, g);
            insert(std::move(bits));
        }
    }

    SubmoduleLattice lattice(module);
    lattice.all_.reserve(found.size());
    for (auto& bits : found)
        lattice.all_.emplace_back(module, std::move(bits));
    std::sort(lattice.all_.begin(), lattice.all_.end());
    for (std::size_t i = 0; i < lattice.all_.size(); ++i) {
        lattice.index_.emplace(lattice.all_[i].bits(), i);
        if (lattice.all_[i].is_zero())
            lattice.zero_ = i;
        if (lattice.all_[i].is_whole())
            lattice.top_ = i;
    }
    const auto extremes = detail::extremes_of(lattice);
    lattice.flags_.reserve(lattice.all_.size());
    for (const auto& n : lattice.all_)
        lattice.flags_.push_back(detail::classify_with(n, lattice, extremes));
    return lattice;
}

} // namespace modgraph
