#pragma once

#include <algorithm>
#include <vector>

#include "plreeb/level_set.hpp"
#include "plreeb/reeb_graph.hpp"

namespace plreeb {

namespace detail {

struct SweepNode {
    int sample = 0;
    bool at_value = false; // sample sits on a distinct vertex value
    Rational level;
    std::vector<Cell> cells;
    LevelRegionKind kind = LevelRegionKind::Point;
    std::vector<int> lower, upper;                       // global sweep-node ids
    std::optional<SurfaceSignature> lower_sig, upper_sig; // side slab component signatures
    int lower_slab = -1, upper_slab = -1;                 // (slab index, comp) for provenance
    int lower_slab_comp = -1, upper_slab_comp = -1;
    bool regular = false;
    int final_id = -1;
};

/// Shared construction behind compute_reeb_graph and sampled_reeb_oracle:
/// sweep all distinct vertex values plus `samples_per_gap` rational samples
/// inside every gap, link level components through interval components, then
/// contract every regular node.
inline ReebGraph reeb_sweep(const SimplicialSurface& mesh, const ScalarField& field, int samples_per_gap)
{
    if (samples_per_gap < 1)
        throw Error(ErrorCode::InvalidArgument, "need at least one sample per gap");
    {
        auto report = validate_surface(mesh);
        if (!report.ok)
            throw Error(report.violations.front().kind, report.violations.front().message);
    }
    field.require_matches(mesh);

    ReebGraph graph;
    FieldIndex index(mesh, field);
    if (index.value_count() == 0) return graph; // empty mesh
    const auto vpos = vertex_positions(mesh, index);
    const bool with_boundary = mesh.has_boundary();

    // sample ladder: value v_0, gap samples, value v_1, ...
    struct Sample {
        int pos;
        Rational value;
        bool at_value;
    };
    std::vector<Sample> samples;
    const auto& values = index.distinct_values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        samples.push_back({2 * static_cast<int>(i), values[i], true});
        if (i + 1 < values.size())
            for (int j = 1; j <= samples_per_gap; ++j)
                samples.push_back({2 * static_cast<int>(i) + 1,
                                   values[i] + (values[i + 1] - values[i]) * j / (samples_per_gap + 1),
                                   false});
    }

    // level components per sample, as sweep nodes
    std::vector<SweepNode> nodes;
    std::vector<std::vector<int>> sample_nodes(samples.size());
    for (std::size_t s = 0; s < samples.size(); ++s) {
        auto comps = level_components_at(mesh, vpos, samples[s].pos, samples[s].value);
        for (auto& comp : comps) {
            SweepNode node;
            node.sample = static_cast<int>(s);
            node.at_value = samples[s].at_value;
            node.level = samples[s].value;
            node.cells = std::move(comp.cells);
            node.kind = comp.kind;
            sample_nodes[s].push_back(static_cast<int>(nodes.size()));
            nodes.push_back(std::move(node));
        }
    }

    // interval components between consecutive samples carry the incidence
    // and the collar signatures for the regularity test
    std::vector<std::vector<std::vector<Cell>>> slab_cells(samples.size() > 0 ? samples.size() - 1 : 0);
    for (std::size_t s = 0; s + 1 < samples.size(); ++s) {
        Slab slab(mesh, vpos, samples[s].pos, samples[s + 1].pos);
        const bool want_sigs = samples[s].at_value || samples[s + 1].at_value;
        auto sigs = want_sigs ? slab.component_signatures()
                              : std::vector<std::optional<SurfaceSignature>>(slab.component_count());
        slab_cells[s] = slab.component_cells();

        std::vector<std::vector<int>> members(slab.component_count());
        for (int id : sample_nodes[s]) {
            int c = slab.component_of(nodes[id].cells.front());
            nodes[id].upper_slab = static_cast<int>(s);
            nodes[id].upper_slab_comp = c;
            nodes[id].upper_sig = sigs[c];
            members[c].push_back(id);
        }
        for (int id : sample_nodes[s + 1]) {
            int c = slab.component_of(nodes[id].cells.front());
            nodes[id].lower_slab = static_cast<int>(s);
            nodes[id].lower_slab_comp = c;
            nodes[id].lower_sig = sigs[c];
            for (int lo : members[c]) {
                nodes[lo].upper.push_back(id);
                nodes[id].lower.push_back(lo);
            }
        }
    }

    // PL regularity: a product collar on each side, nothing fat at the level
    auto side_ok = [&](const std::optional<SurfaceSignature>& sig) {
        if (!sig) return false;
        if (*sig == annulus_signature()) return true;
        return with_boundary && *sig == disk_signature();
    };
    for (auto& node : nodes) {
        if (!node.at_value) {
            if (node.lower.size() != 1 || node.upper.size() != 1)
                throw Error(ErrorCode::InternalError, "gap sample component without product structure");
            node.regular = true;
            continue;
        }
        node.regular = node.lower.size() == 1 && node.upper.size() == 1 &&
                       node.kind != LevelRegionKind::Fat && side_ok(node.lower_sig) &&
                       side_ok(node.upper_sig);
    }

    // surviving nodes, canonically ordered by (level, minimal cell)
    std::vector<int> survivors;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!nodes[i].regular) survivors.push_back(static_cast<int>(i));
    std::sort(survivors.begin(), survivors.end(), [&](int a, int b) {
        int c = nodes[a].level.compare(nodes[b].level);
        if (c != 0) return c < 0;
        return nodes[a].cells.front() < nodes[b].cells.front();
    });
    for (std::size_t i = 0; i < survivors.size(); ++i) nodes[survivors[i]].final_id = static_cast<int>(i);

    for (int id : survivors) {
        const auto& n = nodes[id];
        if (!n.at_value)
            throw Error(ErrorCode::InternalError, "gap sample survived contraction");
        ReebNode out;
        out.id = n.final_id;
        out.level = n.level;
        out.critical = true;
        out.cells = n.cells;
        graph.nodes.push_back(std::move(out));
    }

    // walk upward from every critical node through regular chains
    for (int id : survivors) {
        const auto& start = nodes[id];
        for (int first : start.upper) {
            std::vector<Cell> region;
            auto absorb = [&](const std::vector<Cell>& cs) { region.insert(region.end(), cs.begin(), cs.end()); };
            absorb(slab_cells[start.upper_slab][start.upper_slab_comp]);
            int cur = first;
            while (nodes[cur].regular) {
                if (nodes[cur].upper.size() != 1 || nodes[cur].upper_slab < 0)
                    throw Error(ErrorCode::InternalError, "regular node without a unique continuation");
                if (!(nodes[id].level < nodes[cur].level))
                    throw Error(ErrorCode::InternalError, "non-monotone contraction chain");
                absorb(nodes[cur].cells);
                absorb(slab_cells[nodes[cur].upper_slab][nodes[cur].upper_slab_comp]);
                cur = nodes[cur].upper.front();
            }
            ReebEdge edge;
            edge.a = nodes[id].final_id;
            edge.b = nodes[cur].final_id;
            edge.lo = nodes[id].level;
            edge.hi = nodes[cur].level;
            if (!(edge.lo < edge.hi) || edge.a == edge.b)
                throw Error(ErrorCode::InternalError, "contracted edge is not monotone");
            std::sort(region.begin(), region.end());
            region.erase(std::unique(region.begin(), region.end()), region.end());
            edge.cells = std::move(region);
            graph.edges.push_back(std::move(edge));
        }
    }

    std::stable_sort(graph.edges.begin(), graph.edges.end(), [](const ReebEdge& x, const ReebEdge& y) {
        return std::pair(std::min(x.a, x.b), std::max(x.a, x.b)) <
               std::pair(std::min(y.a, y.b), std::max(y.a, y.b));
    });
    for (std::size_t i = 0; i < graph.edges.size(); ++i) graph.edges[i].id = static_cast<int>(i);
    return graph;
}

} // namespace detail

/// Reeb graph of a PL scalar field: vertices are the level components that
/// fail the product-collar regularity test, edges are the contracted product
/// regions between them.
inline ReebGraph compute_reeb_graph(const SimplicialSurface& mesh, const ScalarField& field)
{
    return detail::reeb_sweep(mesh, field, 1);
}

/// Refinement oracle: identical construction with `extra_samples` equally
/// spaced rational samples per gap instead of one midpoint. Output must be
/// isomorphic to compute_reeb_graph for every extra_samples >= 1.
inline ReebGraph sampled_reeb_oracle(const SimplicialSurface& mesh, const ScalarField& field, int extra_samples)
{
    if (extra_samples < 1)
        throw Error(ErrorCode::InvalidArgument, "extra_samples must be positive");
    return detail::reeb_sweep(mesh, field, extra_samples);
}

} // namespace plreeb
