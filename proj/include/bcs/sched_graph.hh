/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_SCHED_GRAPH_HH
#define BCS_SCHED_GRAPH_HH 1

#include <bcs/errors.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bcs
{
    using NodeId = std::size_t;
    using Weight = std::uint64_t;

    /**
     * Directed weighted graph over thread ids (and fresh ids created by
     * contraction). Also used for the undirected view, with a symmetric
     * weight matrix.
     */
    class SchedGraph
    {
        private:
            std::vector<NodeId> _nodes;
            std::vector<Weight> _weights;

            [[nodiscard]] auto index_of(NodeId n) const -> std::size_t;

        public:
            SchedGraph() = default;
            explicit SchedGraph(std::vector<NodeId> nodes);

            [[nodiscard]] auto nodes() const -> const std::vector<NodeId> & { return _nodes; }
            [[nodiscard]] auto num_nodes() const -> std::size_t { return _nodes.size(); }
            [[nodiscard]] auto has_node(NodeId n) const -> bool;

            [[nodiscard]] auto weight(NodeId from, NodeId to) const -> Weight;
            auto set_weight(NodeId from, NodeId to, Weight w) -> void;
            auto add_weight(NodeId from, NodeId to, Weight w) -> void;

            /// Weight by dense index into nodes().
            [[nodiscard]] auto weight_at(std::size_t i, std::size_t j) const -> Weight
            {
                return _weights[i * _nodes.size() + j];
            }

            [[nodiscard]] auto out_weight(NodeId n) const -> Weight;
            [[nodiscard]] auto in_weight(NodeId n) const -> Weight;

            auto operator== (const SchedGraph &) const -> bool = default;
    };

    struct ContractionStep
    {
        NodeId first;
        NodeId second;
        NodeId fresh;

        auto operator== (const ContractionStep &) const -> bool = default;
    };

    struct ContractionProcess
    {
        std::vector<ContractionStep> steps;

        auto operator== (const ContractionProcess &) const -> bool = default;
    };

    /// Rooted binary tree; leaves carry graph nodes, internal nodes have two children.
    struct CarvingDecomposition
    {
        struct TreeNode
        {
            std::optional<std::size_t> left, right;
            std::optional<NodeId> leaf;

            auto operator== (const TreeNode &) const -> bool = default;
        };

        std::vector<TreeNode> tree;
        std::size_t root = 0;

        auto operator== (const CarvingDecomposition &) const -> bool = default;
    };

    /// Graph of a context-owner sequence: E(i, j) counts switches from i to j.
    [[nodiscard]] auto scheduling_graph(const std::vector<NodeId> & contexts) -> SchedGraph;

    /// max(outgoing weight, incoming weight)
    [[nodiscard]] auto node_degree(const SchedGraph & g, NodeId n) -> Weight;
    [[nodiscard]] auto degree(const SchedGraph & g) -> Weight;

    [[nodiscard]] auto contract(const SchedGraph & g, NodeId n1, NodeId n2, NodeId n) -> SchedGraph;

    /// The fresh id the next contraction of g would get: one past the largest id.
    [[nodiscard]] auto next_fresh(const SchedGraph & g) -> NodeId;

    /// Replays p on g and returns the largest degree of any intermediate graph.
    [[nodiscard]] auto process_degree(const SchedGraph & g, const ContractionProcess & p) -> Weight;

    inline constexpr std::size_t default_node_cap = 16;

    [[nodiscard]] auto sdim_exact(const SchedGraph & g, std::size_t node_cap = default_node_cap)
        -> std::pair<Weight, ContractionProcess>;

    [[nodiscard]] auto to_undirected(const SchedGraph & g) -> SchedGraph;

    /// Width of a decomposition of an undirected graph: the largest cut over non-root tree edges.
    [[nodiscard]] auto decomposition_width(const SchedGraph & g, const CarvingDecomposition & d) -> Weight;

    [[nodiscard]] auto carving_width(const SchedGraph & g, std::size_t node_cap = default_node_cap)
        -> std::pair<Weight, CarvingDecomposition>;

    [[nodiscard]] auto carving_to_process(const CarvingDecomposition & d, const SchedGraph & g) -> ContractionProcess;
    [[nodiscard]] auto process_to_carving(const ContractionProcess & p, const SchedGraph & g) -> CarvingDecomposition;
}

#endif
