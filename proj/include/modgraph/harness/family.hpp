#pragma once

#include "../arith.hpp"
#include "../error.hpp"
#include "../module.hpp"
#include "instance.hpp"

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modgraph {

namespace detail {

inline Int parse_count(std::string_view text, std::string_view context)
{
    Int value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw DescriptorError("bad number '" + std::string(text) + "' in family item '" + std::string(context) + "'");
    return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

inline void expand_item(std::string_view item, std::vector<FiniteModule>& out)
{
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
        throw DescriptorError("family item '" + std::string(item) + "' lacks a ':'");
    const auto head = item.substr(0, colon);
    const auto body = item.substr(colon + 1);

    if (head == "cyclic") {
        const auto dots = body.find("..");
        if (dots == std::string_view::npos)
            throw DescriptorError("expected cyclic:<lo>..<hi>, got '" + std::string(item) + "'");
        const Int lo = parse_count(body.substr(0, dots), item);
        const Int hi = parse_count(body.substr(dots + 2), item);
        if (lo < 2 || lo > hi)
            throw DescriptorError("cyclic range needs 2 <= lo <= hi, got '" + std::string(item) + "'");
        for (Int n = lo; n <= hi; ++n)
            out.push_back(FiniteModule::regular(Ring(n)));
        return;
    }
    if (head == "product") {
        if (!body.starts_with("ab<="))
            throw DescriptorError("expected product:ab<=<N>, got '" + std::string(item) + "'");
        const Int bound = parse_count(body.substr(4), item);
        for (Int a = 2; a * a <= bound; ++a)
            for (Int b = a; a * b <= bound; ++b)
                out.emplace_back(Ring(lcm_of(a, b)), std::vector<Int>{a, b});
        return;
    }
    if (head == "vector") {
        const auto caret = body.find('^');
        if (caret == std::string_view::npos)
            throw DescriptorError("expected vector:<p>^<k>, got '" + std::string(item) + "'");
        const Int p = parse_count(body.substr(0, caret), item);
        const Int k = parse_count(body.substr(caret + 1), item);
        if (!is_prime_number(p) || k < 1)
            throw DescriptorError("vector family needs a prime p and k >= 1, got '" + std::string(item) + "'");
        out.emplace_back(Ring(p), std::vector<Int>(k, p));
        return;
    }
    if (head == "zmod") {
        const auto slash = body.find('/');
        std::optional<std::string_view> ring;
        if (slash != std::string_view::npos)
            ring = body.substr(slash + 1);
        out.push_back(parse_descriptor(body.substr(0, slash), ring).second);
        return;
    }
    throw DescriptorError("unknown family kind '" + std::string(head) + "'");
}

} // namespace detail

/// Family grammar: comma-separated items, each one of
///   cyclic:<lo>..<hi>   Z_n over Z_n
///   product:ab<=<N>     Z_a x Z_b over Z_lcm(a,b), 2 <= a <= b, ab <= N
///   vector:<p>^<k>      (Z_p)^k over Z_p
///   zmod:<module>[/<ring>]
/// An empty string is the empty family.
inline std::vector<FiniteModule> parse_family(std::string_view spec)
{
    std::vector<FiniteModule> out;
    if (spec.empty())
        return out;
    for (auto item : detail::split(spec, ','))
        detail::expand_item(item, out);
    return out;
}

/// Builds every instance, in family order. Throws SizeGuardError when any
/// member exceeds the guard.
inline std::vector<Instance> generate_family(std::string_view spec, SizeGuard guard = {})
{
    std::vector<Instance> out;
    for (const auto& module : parse_family(spec))
        out.emplace_back(module, guard);
    return out;
}

} // namespace modgraph
