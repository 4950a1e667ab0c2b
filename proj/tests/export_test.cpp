#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace modgraph;

namespace {

SimpleGraph graph_of(GraphKind kind, const std::string& text)
{
    return build_graph(kind, enumerate_submodules(support::module_of(text)));
}

} // namespace

TEST(ExportFormat, Parse)
{
    EXPECT_EQ(parse_export_format("dot"), ExportFormat::dot);
    EXPECT_EQ(parse_export_format("json"), ExportFormat::json);
    EXPECT_THROW(parse_export_format("graphml"), UsageError);
}

TEST(ExportDot, SsiZ6)
{
    EXPECT_EQ(export_graph(graph_of(GraphKind::ssi, "Z6"), ExportFormat::dot),
              "graph SSI {\n"
              "  // module Z6 over Z6\n"
              "  v0 [label=\"2M={0,2,4}\"];\n"
              "  v1 [label=\"3M={0,3}\"];\n"
              "}\n");
}

TEST(ExportDot, LabelsCarryElements)
{
    auto dot = export_graph(graph_of(GraphKind::ssi, "Z12"), ExportFormat::dot);
    EXPECT_NE(dot.find("2M={0,2,4,6,8,10}"), std::string::npos);
    EXPECT_NE(dot.find("v0 -- v3;"), std::string::npos);
}

TEST(ExportDot, EmptyGraph)
{
    EXPECT_EQ(export_graph(graph_of(GraphKind::ssi, "Z5"), ExportFormat::dot),
              "graph SSI {\n  // module Z5 over Z5\n}\n");
}

TEST(ExportJson, SsiZ12Schema)
{
    auto doc = nlohmann::json::parse(export_graph(graph_of(GraphKind::ssi, "Z12"), ExportFormat::json));
    EXPECT_EQ(doc["kind"], "SSI");
    EXPECT_EQ(doc["ring"], "Z12");
    EXPECT_EQ(doc["module"], "Z12");
    ASSERT_EQ(doc["vertices"].size(), 4u);
    ASSERT_EQ(doc["edges"].size(), 4u);
    EXPECT_EQ(doc["vertices"][0]["id"], 0);
    EXPECT_EQ(doc["vertices"][0]["label"], "2M");
    EXPECT_EQ(doc["vertices"][0]["order"], 6);
    EXPECT_EQ(doc["vertices"][0]["generators"], nlohmann::json::parse("[[2]]"));
    for (const auto& e : doc["edges"])
        EXPECT_LT(e[0].get<int>(), e[1].get<int>());
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"])
        edges.emplace_back(e[0], e[1]);
    EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
}

TEST(ExportJson, EmptyGraph)
{
    auto doc = nlohmann::json::parse(export_graph(graph_of(GraphKind::pss, "Z3"), ExportFormat::json));
    EXPECT_TRUE(doc["vertices"].is_array());
    EXPECT_TRUE(doc["vertices"].empty());
    EXPECT_TRUE(doc["edges"].is_array());
    EXPECT_TRUE(doc["edges"].empty());
}

TEST(ExportJson, RoundTripReproducesAdjacency)
{
    for (const auto& module : parse_family("cyclic:2..40,product:ab<=32,vector:2^3")) {
        auto lattice = enumerate_submodules(module);
        for (GraphKind kind : all_graph_kinds) {
            if ((kind == GraphKind::pis || kind == GraphKind::sii) && !module.is_regular())
                continue;
            auto g = build_graph(kind, lattice);
            auto doc = nlohmann::json::parse(export_graph(g, ExportFormat::json));
            const std::size_t n = doc["vertices"].size();
            ASSERT_EQ(n, g.size());
            std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
            for (const auto& e : doc["edges"]) {
                adj[e[0].get<std::size_t>()][e[1].get<std::size_t>()] = true;
                adj[e[1].get<std::size_t>()][e[0].get<std::size_t>()] = true;
            }
            EXPECT_EQ(adj, support::as_adj(g).a) << module.descriptor() << " " << to_string(kind);
        }
    }
}

TEST(Export, ByteStable)
{
    for (auto format : {ExportFormat::dot, ExportFormat::json}) {
        auto a = export_graph(graph_of(GraphKind::pss, "Z2xZ8"), format);
        auto b = export_graph(graph_of(GraphKind::pss, "Z2xZ8"), format);
        EXPECT_EQ(a, b);
    }
}
