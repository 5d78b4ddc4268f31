#include "morsecat/simplex.hpp"

#include "morsecat/errors.hpp"

#include <algorithm>
#include <sstream>

namespace morsecat {

Simplex::Simplex(std::vector<VertexId> vertices) : verts_(std::move(vertices)) {
    if (verts_.empty())
        throw DomainError("a simplex needs at least one vertex");
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
        throw DomainError("repeated vertex in simplex " + to_string());
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

bool Simplex::contains(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(),
                         verts_.begin(), verts_.end());
}

Simplex Simplex::join(VertexId v) const {
    Simplex out;
    out.verts_.reserve(verts_.size() + 1);
    auto pos = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (pos != verts_.end() && *pos == v)
        throw DomainError("vertex already in simplex " + to_string());
    out.verts_.insert(out.verts_.end(), verts_.begin(), pos);
    out.verts_.push_back(v);
    out.verts_.insert(out.verts_.end(), pos, verts_.end());
    return out;
}

Simplex Simplex::drop(VertexId v) const {
    auto pos = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (pos == verts_.end() || *pos != v)
        throw DomainError("vertex not in simplex " + to_string());
    if (verts_.size() == 1)
        throw DomainError("cannot drop the only vertex of a simplex");
    Simplex out;
    out.verts_.reserve(verts_.size() - 1);
    out.verts_.insert(out.verts_.end(), verts_.begin(), pos);
    out.verts_.insert(out.verts_.end(), pos + 1, verts_.end());
    return out;
}

std::vector<Simplex> Simplex::boundary() const {
    std::vector<Simplex> out;
    if (verts_.size() < 2)
        return out;
    out.reserve(verts_.size());
    for (std::size_t skip = 0; skip < verts_.size(); ++skip) {
        Simplex f;
        f.verts_.reserve(verts_.size() - 1);
        for (std::size_t i = 0; i < verts_.size(); ++i)
            if (i != skip)
                f.verts_.push_back(verts_[i]);
        out.push_back(std::move(f));
    }
    return out;
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ' ';
        os << verts_[i];
    }
    os << '}';
    return os.str();
}

std::strong_ordering Simplex::operator<=>(const Simplex& other) const {
    if (auto c = verts_.size() <=> other.verts_.size(); c != 0)
        return c;
    return verts_ <=> other.verts_;
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
    for (VertexId v : s.vertices())
        h = h * 1099511628211ULL ^ static_cast<std::size_t>(v + 0x7f);
    return h;
}

} // namespace morsecat
