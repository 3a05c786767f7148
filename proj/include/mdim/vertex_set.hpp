#pragma once

#include "mdim/graph.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace mdim {

/// Sorted, deduplicated list of vertex indices. Used both as a candidate
/// set and as the certificate payload of solver results.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}
    explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members))
    {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
    Vertex front() const { return members_.front(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    const std::vector<Vertex>& members() const noexcept { return members_; }

    /// True when every member is below n.
    bool fits(Vertex n) const { return members_.empty() || members_.back() < n; }

    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<Vertex> members_;
};

std::string to_string(const VertexSet& s);

} // namespace mdim
