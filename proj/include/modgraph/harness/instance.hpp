#pragma once

#include "../graph.hpp"
#include "../lattice.hpp"
#include "../metrics.hpp"
#include "../module.hpp"
#include "../ring.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace modgraph {

/// One module with everything the checks look at, computed once up front.
class Instance {
public:
    Instance(const FiniteModule& module, SizeGuard guard = {})
        : module_(module), lattice_(enumerate_submodules(module, guard)),
          ring_lattice_(enumerate_submodules(FiniteModule::regular(module.ring()), guard)),
          properties_(module_properties(lattice_))
    {
        for (GraphKind kind : all_graph_kinds) {
            const auto& source = (kind == GraphKind::pis || kind == GraphKind::sii) ? ring_lattice_ : lattice_;
            auto g = std::make_unique<SimpleGraph>(build_graph(kind, source));
            metrics_[slot(kind)] = graph_metrics(*g);
            graphs_[slot(kind)] = std::move(g);
        }
        minimal_ = lattice_.minimal_indices();
        maximal_ = lattice_.maximal_indices();
        seconds_ = lattice_.second_indices();
        primes_ = lattice_.prime_indices();
        socle_ = lattice_.index_of(second_socle(whole_module(module_), lattice_));
        radical_ = lattice_.index_of(prime_radical(lattice_));
        for (const auto& n : lattice_.all())
            labels_.push_back(n.label());
    }

    /// "Z2xZ4/Z4": module over ring.
    std::string descriptor() const { return module_.descriptor() + "/" + module_.ring().descriptor(); }

    const Ring& ring() const { return module_.ring(); }
    const FiniteModule& module() const { return module_; }
    const SubmoduleLattice& lattice() const { return lattice_; }
    const SubmoduleLattice& ring_lattice() const { return ring_lattice_; }
    const ModuleProperties& properties() const { return properties_; }
    const SimpleGraph& graph(GraphKind kind) const { return *graphs_[slot(kind)]; }
    const GraphMetrics& metrics(GraphKind kind) const { return metrics_[slot(kind)]; }

    const std::vector<std::size_t>& minimal() const { return minimal_; }
    const std::vector<std::size_t>& maximal() const { return maximal_; }
    const std::vector<std::size_t>& seconds() const { return seconds_; }
    const std::vector<std::size_t>& primes() const { return primes_; }
    std::size_t second_socle_index() const { return socle_; }
    std::size_t prime_radical_index() const { return radical_; }

    const std::string& label(std::size_t lattice_index) const { return labels_.at(lattice_index); }

private:
    static std::size_t slot(GraphKind kind) { return static_cast<std::size_t>(kind); }

    FiniteModule module_;
    SubmoduleLattice lattice_;
    SubmoduleLattice ring_lattice_;
    ModuleProperties properties_;
    std::array<std::unique_ptr<SimpleGraph>, 6> graphs_;
    std::array<GraphMetrics, 6> metrics_;
    std::vector<std::size_t> minimal_, maximal_, seconds_, primes_;
    std::size_t socle_ = 0;
    std::size_t radical_ = 0;
    std::vector<std::string> labels_;
};

} // namespace modgraph
