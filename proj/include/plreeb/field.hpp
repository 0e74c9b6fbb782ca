#pragma once

#include <algorithm>
#include <vector>

#include "plreeb/rational.hpp"
#include "plreeb/surface.hpp"
#include "plreeb/union_find.hpp"

namespace plreeb {

/// One exact rational per mesh vertex, PL-interpolated over simplices.
struct ScalarField {
    std::vector<Rational> values;

    ScalarField() = default;
    explicit ScalarField(std::vector<Rational> v) : values(std::move(v)) {}

    const Rational& at(VertexId v) const { return values[static_cast<std::size_t>(v)]; }
    std::size_t size() const { return values.size(); }

    void require_matches(const SimplicialSurface& mesh) const
    {
        if (values.size() != mesh.vertex_count())
            throw Error(ErrorCode::InvalidArgument,
                        "field has " + std::to_string(values.size()) + " values for " +
                            std::to_string(mesh.vertex_count()) + " vertices");
    }
};

/// Sorted distinct field values plus per-vertex ranks. Query levels are then
/// compared positionally: position 2i is the i-th distinct value, odd
/// positions are the open gaps between neighbors (and the two outer rays),
/// so all level-set combinatorics run on small integers.
class FieldIndex {
public:
    FieldIndex(const SimplicialSurface& mesh, const ScalarField& field)
    {
        field.require_matches(mesh);
        values_ = field.values;
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
        rank_.resize(field.values.size());
        for (std::size_t v = 0; v < field.values.size(); ++v) {
            auto it = std::lower_bound(values_.begin(), values_.end(), field.values[v]);
            rank_[v] = static_cast<int>(it - values_.begin());
        }
    }

    const std::vector<Rational>& distinct_values() const { return values_; }
    std::size_t value_count() const { return values_.size(); }
    int rank(VertexId v) const { return rank_[static_cast<std::size_t>(v)]; }
    int position_of_rank(int r) const { return 2 * r; }

    /// Position of an arbitrary rational level: -1 below the range, 2i at
    /// the i-th value, 2i+1 strictly between values i and i+1, 2n-1 above.
    int position(const Rational& t) const
    {
        auto it = std::lower_bound(values_.begin(), values_.end(), t);
        if (it != values_.end() && *it == t) return 2 * static_cast<int>(it - values_.begin());
        return 2 * static_cast<int>(it - values_.begin()) - 1;
    }

    bool is_value_position(int pos) const { return pos >= 0 && pos % 2 == 0; }

    const Rational& value_at_position(int pos) const { return values_[static_cast<std::size_t>(pos / 2)]; }

private:
    std::vector<Rational> values_;
    std::vector<int> rank_;
};

/// Maximal connected constant-value vertex clusters: two vertices share a
/// cluster iff a mesh path of equal-value edges joins them. Clusters are
/// sorted internally and listed by their minimal vertex.
inline std::vector<std::vector<VertexId>> flat_clusters(const SimplicialSurface& mesh, const ScalarField& field)
{
    field.require_matches(mesh);
    UnionFind uf(mesh.vertex_count());
    for (std::size_t e = 0; e < mesh.edge_count(); ++e) {
        auto [a, b] = mesh.edge(static_cast<int>(e));
        if (field.at(a) == field.at(b)) uf.unite(a, b);
    }
    std::vector<std::vector<VertexId>> by_root(mesh.vertex_count());
    for (std::size_t v = 0; v < mesh.vertex_count(); ++v)
        by_root[uf.find(static_cast<int>(v))].push_back(static_cast<VertexId>(v));
    std::vector<std::vector<VertexId>> clusters;
    for (auto& c : by_root)
        if (!c.empty()) clusters.push_back(std::move(c));
    return clusters;
}

} // namespace plreeb
