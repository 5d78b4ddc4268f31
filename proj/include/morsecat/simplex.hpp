#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace morsecat {

using VertexId = int;

// A nonempty finite vertex set, stored strictly sorted.
// Ordering is by dimension first, then lexicographic, so sorted containers
// of simplices iterate faces before cofaces.
class Simplex {
public:
    Simplex() = default; // empty sentinel, not a valid simplex
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<VertexId> vertices);

    const std::vector<VertexId>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    bool empty() const { return verts_.empty(); }

    bool contains(VertexId v) const;
    bool is_face_of(const Simplex& other) const;

    // this ∪ {v}; v must not already be a member
    Simplex join(VertexId v) const;
    // this − {v}; v must be a member and not the only one
    Simplex drop(VertexId v) const;

    // all codimension-1 faces, empty for vertices
    std::vector<Simplex> boundary() const;

    std::string to_string() const;

    bool operator==(const Simplex&) const = default;
    std::strong_ordering operator<=>(const Simplex& other) const;

private:
    std::vector<VertexId> verts_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const;
};

} // namespace morsecat
