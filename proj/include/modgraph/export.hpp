#pragma once

#include "error.hpp"
#include "graph.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <string_view>

namespace modgraph {

enum class ExportFormat { dot, json };

inline ExportFormat parse_export_format(std::string_view text)
{
    if (text == "dot")
        return ExportFormat::dot;
    if (text == "json")
        return ExportFormat::json;
    throw UsageError("unknown format '" + std::string(text) + "' (expected dot or json)");
}

namespace detail {

inline std::string dot_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace detail

inline nlohmann::ordered_json graph_to_json(const SimpleGraph& g)
{
    nlohmann::ordered_json doc;
    doc["kind"] = std::string(to_string(g.kind()));
    doc["ring"] = g.ring().descriptor();
    doc["module"] = g.module().descriptor();
    doc["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Vertex& v = g.vertex(i);
        nlohmann::ordered_json item;
        item["id"] = i;
        item["label"] = v.label;
        item["order"] = v.order;
        item["generators"] = v.generators;
        doc["vertices"].push_back(std::move(item));
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (auto [i, j] : g.edges())
        doc["edges"].push_back({i, j});
    return doc;
}

/// DOT or JSON text; identical graphs give identical bytes.
inline std::string export_graph(const SimpleGraph& g, ExportFormat format)
{
    if (format == ExportFormat::json)
        return graph_to_json(g).dump(2) + "\n";

    std::ostringstream out;
    out << "graph " << to_string(g.kind()) << " {\n";
    out << "  // module " << g.module().descriptor() << " over " << g.ring().descriptor() << "\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Vertex& v = g.vertex(i);
        out << "  v" << i << " [label=\"" << detail::dot_escape(v.label + "=" + v.elements_text) << "\"];\n";
    }
    for (auto [i, j] : g.edges())
        out << "  v" << i << " -- v" << j << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace modgraph
