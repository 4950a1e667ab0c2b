#pragma once

#include "module.hpp"
#include "ring.hpp"
#include "submodule.hpp"

namespace modgraph {

/// (N :_R M) = {r : rM ⊆ N}. It is enough to test r against the unit vectors.
inline Ideal colon_ideal(const Submodule& n, const FiniteModule& module)
{
    if (!(n.module() == module))
        throw ModuleMismatchError("colon ideal of a submodule of " + n.module().descriptor() + " in " +
                                  module.descriptor());
    const auto gens = module.standard_generators();
    const Int modulus = module.ring().modulus();
    for (Int r = 1; r < modulus; ++r) {
        bool inside = true;
        for (Element e : gens)
            if (!n.contains(module.scale(r, e))) {
                inside = false;
                break;
            }
        if (inside)
            return Ideal(module.ring(), r);
    }
    return Ideal::zero(module.ring());
}

/// Ann_R(N) = (0 :_R N).
inline Ideal annihilator(const Submodule& n)
{
    const FiniteModule& module = n.module();
    const Int modulus = module.ring().modulus();
    for (Int r = 1; r < modulus; ++r) {
        bool kills = true;
        for (Element g : n.generators())
            if (module.scale(r, g) != 0) {
                kills = false;
                break;
            }
        if (kills)
            return Ideal(module.ring(), r);
    }
    return Ideal::zero(module.ring());
}

/// Proper P with: r.m in P implies m in P or r in (P :_R M), tested over
/// every pair (r, m). The whole module is never prime.
inline bool is_prime_submodule(const Submodule& p)
{
    if (p.is_whole())
        return false;
    const FiniteModule& module = p.module();
    const Ideal colon = colon_ideal(p, module);
    const Int modulus = module.ring().modulus();
    const auto order = static_cast<Element>(module.order());
    for (Int r = 0; r < modulus; ++r) {
        if (colon.contains(r))
            continue;
        for (Element m = 0; m < order; ++m)
            if (!p.contains(m) && p.contains(module.scale(r, m)))
                return false;
    }
    return true;
}

/// Nonzero S with rS = 0 or rS = S for every r. Since rS ⊆ S and S is finite,
/// rS = S exactly when r kills no nonzero element of S.
inline bool is_second_submodule(const Submodule& s)
{
    if (s.is_zero())
        return false;
    const FiniteModule& module = s.module();
    const Int modulus = module.ring().modulus();
    for (Int r = 0; r < modulus; ++r) {
        bool kills_some = false;
        bool moves_some = false;
        for (Element x : s.elements()) {
            if (x == 0)
                continue;
            if (module.scale(r, x) == 0)
                kills_some = true;
            else
                moves_some = true;
            if (kills_some && moves_some)
                return false;
        }
    }
    return true;
}

} // namespace modgraph
