/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <bcs/sched_graph.hh>

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <tuple>

using std::function;
using std::map;
using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace bcs
{
    SchedGraph::SchedGraph(vector<NodeId> nodes) :
        _nodes(std::move(nodes))
    {
        std::sort(_nodes.begin(), _nodes.end());
        if (std::adjacent_find(_nodes.begin(), _nodes.end()) != _nodes.end())
            throw InputError("scheduling graph lists a node twice");
        _weights.assign(_nodes.size() * _nodes.size(), 0);
    }

    auto SchedGraph::has_node(NodeId n) const -> bool
    {
        return std::binary_search(_nodes.begin(), _nodes.end(), n);
    }

    auto SchedGraph::index_of(NodeId n) const -> size_t
    {
        auto it = std::lower_bound(_nodes.begin(), _nodes.end(), n);
        if (it == _nodes.end() || *it != n)
            throw InputError("node " + to_string(n) + " is not in the graph");
        return size_t(it - _nodes.begin());
    }

    auto SchedGraph::weight(NodeId from, NodeId to) const -> Weight
    {
        return _weights[index_of(from) * _nodes.size() + index_of(to)];
    }

    auto SchedGraph::set_weight(NodeId from, NodeId to, Weight w) -> void
    {
        if (from == to && w != 0)
            throw InputError("scheduling graph has a loop at node " + to_string(from));
        _weights[index_of(from) * _nodes.size() + index_of(to)] = w;
    }

    auto SchedGraph::add_weight(NodeId from, NodeId to, Weight w) -> void
    {
        set_weight(from, to, weight(from, to) + w);
    }

    auto SchedGraph::out_weight(NodeId n) const -> Weight
    {
        size_t i = index_of(n);
        Weight total = 0;
        for (size_t j = 0 ; j < _nodes.size() ; ++j)
            total += weight_at(i, j);
        return total;
    }

    auto SchedGraph::in_weight(NodeId n) const -> Weight
    {
        size_t j = index_of(n);
        Weight total = 0;
        for (size_t i = 0 ; i < _nodes.size() ; ++i)
            total += weight_at(i, j);
        return total;
    }

    auto scheduling_graph(const vector<NodeId> & contexts) -> SchedGraph
    {
        for (size_t i = 0 ; i + 1 < contexts.size() ; ++i)
            if (contexts[i] == contexts[i + 1])
                throw InputError("adjacent contexts belong to the same thread " + to_string(contexts[i]));

        vector<NodeId> nodes(contexts.begin(), contexts.end());
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        SchedGraph g(nodes);
        for (size_t i = 0 ; i + 1 < contexts.size() ; ++i)
            g.add_weight(contexts[i], contexts[i + 1], 1);
        return g;
    }

    auto node_degree(const SchedGraph & g, NodeId n) -> Weight
    {
        return std::max(g.out_weight(n), g.in_weight(n));
    }

    auto degree(const SchedGraph & g) -> Weight
    {
        Weight d = 0;
        for (auto n : g.nodes())
            d = std::max(d, node_degree(g, n));
        return d;
    }

    auto contract(const SchedGraph & g, NodeId n1, NodeId n2, NodeId n) -> SchedGraph
    {
        if (n1 == n2)
            throw InputError("cannot contract node " + to_string(n1) + " with itself");
        if (! g.has_node(n1) || ! g.has_node(n2))
            throw InputError("contraction of " + to_string(n1) + " and " + to_string(n2) + " names a dead node");
        if (g.has_node(n))
            throw InputError("contraction target " + to_string(n) + " is already live");

        vector<NodeId> nodes;
        for (auto x : g.nodes())
            if (x != n1 && x != n2)
                nodes.push_back(x);
        nodes.push_back(n);
        SchedGraph h(nodes);

        auto merged = [&] (NodeId x) { return x == n1 || x == n2 ? n : x; };
        for (auto x : g.nodes())
            for (auto y : g.nodes()) {
                auto w = g.weight(x, y);
                if (w == 0 || merged(x) == merged(y))
                    continue;
                h.add_weight(merged(x), merged(y), w);
            }
        return h;
    }

    auto next_fresh(const SchedGraph & g) -> NodeId
    {
        return g.nodes().empty() ? 1 : g.nodes().back() + 1;
    }

    auto process_degree(const SchedGraph & g, const ContractionProcess & p) -> Weight
    {
        std::set<NodeId> used(g.nodes().begin(), g.nodes().end());
        SchedGraph current = g;
        Weight d = degree(current);
        for (auto & step : p.steps) {
            if (used.count(step.fresh))
                throw InputError("contraction target " + to_string(step.fresh) + " is not fresh");
            used.insert(step.fresh);
            current = contract(current, step.first, step.second, step.fresh);
            d = std::max(d, degree(current));
        }
        if (current.num_nodes() > 1)
            throw InputError("contraction process leaves " + to_string(current.num_nodes()) + " nodes");
        return d;
    }

    namespace
    {
        using Mask = std::uint32_t;

        struct SplitTable
        {
            vector<Weight> best;
            vector<Mask> split;
        };

        // best(S) = max(cut(S), min over splits S1 + S2 with the lowest bit in
        // S1 of max(best(S1), best(S2)))
        auto subset_dp(size_t n, const function<auto (Mask) -> Weight> & cut) -> SplitTable
        {
            const Mask full = Mask((size_t{ 1 } << n) - 1);
            SplitTable t{ vector<Weight>(size_t(full) + 1, 0), vector<Mask>(size_t(full) + 1, 0) };
            for (Mask s = 1 ; s <= full ; ++s) {
                Weight here = cut(s);
                if ((s & (s - 1)) == 0) {
                    t.best[s] = here;
                    continue;
                }
                Mask low = s & -s;
                Mask rest = s ^ low;
                Weight best_split = std::numeric_limits<Weight>::max();
                Mask chosen = 0;
                // s1 = low + sub for every proper subset sub of rest
                for (Mask sub = (rest - 1) & rest ; ; sub = (sub - 1) & rest) {
                    Mask s1 = low | sub, s2 = s ^ s1;
                    Weight v = std::max(t.best[s1], t.best[s2]);
                    if (v < best_split) {
                        best_split = v;
                        chosen = s1;
                    }
                    if (sub == 0)
                        break;
                }
                t.best[s] = std::max(here, best_split);
                t.split[s] = chosen;
            }
            return t;
        }

        auto check_cap(const SchedGraph & g, size_t node_cap) -> void
        {
            if (g.num_nodes() > node_cap || g.num_nodes() > 24)
                throw ResourceError("graph with " + to_string(g.num_nodes()) + " nodes exceeds the node cap of "
                        + to_string(node_cap));
            if (g.num_nodes() == 0)
                throw InputError("graph has no nodes");
        }

        auto crossing(const SchedGraph & g, Mask from, Mask to) -> Weight
        {
            Weight total = 0;
            for (size_t i = 0 ; i < g.num_nodes() ; ++i)
                if (from & (Mask{ 1 } << i))
                    for (size_t j = 0 ; j < g.num_nodes() ; ++j)
                        if (to & (Mask{ 1 } << j))
                            total += g.weight_at(i, j);
            return total;
        }
    }

    auto sdim_exact(const SchedGraph & g, size_t node_cap) -> pair<Weight, ContractionProcess>
    {
        check_cap(g, node_cap);
        const size_t n = g.num_nodes();
        const Mask full = Mask((size_t{ 1 } << n) - 1);
        auto table = subset_dp(n, [&] (Mask s) {
                return std::max(crossing(g, s, full ^ s), crossing(g, full ^ s, s));
            });

        ContractionProcess p;
        NodeId fresh = next_fresh(g);
        function<auto (Mask) -> NodeId> build = [&] (Mask s) -> NodeId {
            if ((s & (s - 1)) == 0)
                return g.nodes()[size_t(std::countr_zero(s))];
            NodeId a = build(table.split[s]);
            NodeId b = build(s ^ table.split[s]);
            p.steps.push_back({ a, b, fresh });
            return fresh++;
        };
        build(full);
        return { table.best[full], p };
    }

    auto to_undirected(const SchedGraph & g) -> SchedGraph
    {
        SchedGraph h(g.nodes());
        for (auto x : g.nodes())
            for (auto y : g.nodes())
                if (x != y)
                    h.set_weight(x, y, std::max(g.weight(x, y), g.weight(y, x)));
        return h;
    }

    namespace
    {
        // leaf set (as node ids) below every tree node, after validating d
        auto subtree_leaves(const SchedGraph & g, const CarvingDecomposition & d) -> vector<vector<NodeId>>
        {
            if (d.tree.empty() || d.root >= d.tree.size())
                throw InputError("carving decomposition has no root");

            vector<vector<NodeId>> leaves(d.tree.size());
            vector<char> visited(d.tree.size(), 0);
            function<auto (size_t) -> void> walk = [&] (size_t x) {
                if (visited[x])
                    throw InputError("carving decomposition is not a tree");
                visited[x] = 1;
                auto & node = d.tree[x];
                if (node.leaf) {
                    if (node.left || node.right)
                        throw InputError("carving decomposition leaf has children");
                    leaves[x] = { *node.leaf };
                    return;
                }
                if (! node.left || ! node.right || *node.left >= d.tree.size() || *node.right >= d.tree.size())
                    throw InputError("carving decomposition internal node needs two children");
                walk(*node.left);
                walk(*node.right);
                leaves[x] = leaves[*node.left];
                leaves[x].insert(leaves[x].end(), leaves[*node.right].begin(), leaves[*node.right].end());
            };
            walk(d.root);
            if (std::find(visited.begin(), visited.end(), 0) != visited.end())
                throw InputError("carving decomposition has unreachable tree nodes");

            auto all = leaves[d.root];
            std::sort(all.begin(), all.end());
            if (all != g.nodes())
                throw InputError("carving decomposition leaves do not match the graph nodes");
            return leaves;
        }
    }

    auto decomposition_width(const SchedGraph & g, const CarvingDecomposition & d) -> Weight
    {
        auto leaves = subtree_leaves(g, d);
        Weight width = 0;
        for (size_t x = 0 ; x < d.tree.size() ; ++x) {
            if (x == d.root)
                continue;
            std::set<NodeId> inside(leaves[x].begin(), leaves[x].end());
            Weight cut = 0;
            for (auto a : g.nodes())
                for (auto b : g.nodes())
                    if (inside.count(a) && ! inside.count(b))
                        cut += g.weight(a, b);
            width = std::max(width, cut);
        }
        return width;
    }

    auto carving_width(const SchedGraph & g, size_t node_cap) -> pair<Weight, CarvingDecomposition>
    {
        check_cap(g, node_cap);
        const size_t n = g.num_nodes();
        const Mask full = Mask((size_t{ 1 } << n) - 1);
        auto table = subset_dp(n, [&] (Mask s) {
                return s == full ? Weight{ 0 } : crossing(g, s, full ^ s);
            });

        CarvingDecomposition d;
        function<auto (Mask) -> size_t> build = [&] (Mask s) -> size_t {
            if ((s & (s - 1)) == 0) {
                d.tree.push_back({ std::nullopt, std::nullopt, g.nodes()[size_t(std::countr_zero(s))] });
                return d.tree.size() - 1;
            }
            size_t a = build(table.split[s]);
            size_t b = build(s ^ table.split[s]);
            d.tree.push_back({ a, b, std::nullopt });
            return d.tree.size() - 1;
        };
        d.root = build(full);
        return { table.best[full], d };
    }

    auto carving_to_process(const CarvingDecomposition & d, const SchedGraph & g) -> ContractionProcess
    {
        subtree_leaves(g, d);
        ContractionProcess p;
        NodeId fresh = next_fresh(g);
        function<auto (size_t) -> NodeId> build = [&] (size_t x) -> NodeId {
            auto & node = d.tree[x];
            if (node.leaf)
                return *node.leaf;
            NodeId a = build(*node.left);
            NodeId b = build(*node.right);
            p.steps.push_back({ a, b, fresh });
            return fresh++;
        };
        build(d.root);
        return p;
    }

    auto process_to_carving(const ContractionProcess & p, const SchedGraph & g) -> CarvingDecomposition
    {
        if (g.num_nodes() == 0)
            throw InputError("graph has no nodes");
        std::ignore = process_degree(g, p);

        CarvingDecomposition d;
        map<NodeId, size_t> tree_node;
        for (auto n : g.nodes()) {
            tree_node[n] = d.tree.size();
            d.tree.push_back({ std::nullopt, std::nullopt, n });
        }
        for (auto & step : p.steps) {
            size_t a = tree_node.at(step.first), b = tree_node.at(step.second);
            tree_node.erase(step.first);
            tree_node.erase(step.second);
            tree_node[step.fresh] = d.tree.size();
            d.tree.push_back({ a, b, std::nullopt });
        }
        d.root = tree_node.begin()->second;
        return d;
    }
}
