#ifndef OKBODY_POLYTOPE_HPP
#define OKBODY_POLYTOPE_HPP

#include <json.hpp>
#include <vector>

#include "okbody/linalg.hpp"

namespace okb {

// Deterministic JSON with insertion-ordered keys.
using Json = nlohmann::ordered_json;

// Bounded rational polytope in vertex representation. Construction always
// reduces the generator list to the unique minimal vertex set, sorted
// lexicographically, so structural equality is meaningful equality.
// Ambient dimension is capped at 4.
class VPolytope {
public:
    static VPolytope from_points(const std::vector<QVec>& points);

    int ambient_dim() const { return ambient_; }
    const std::vector<QVec>& vertices() const { return vertices_; }

    // Euclidean volume; 0 when the polytope is not full-dimensional.
    Rat volume() const;

    VPolytope scaled(const Rat& c) const; // c >= 0
    bool contains_point(const QVec& p) const;
    bool contains(const VPolytope& other) const;
    bool equals(const VPolytope& other) const;

    Json to_json() const;
    static VPolytope from_json(const Json& j);

private:
    VPolytope(int ambient, std::vector<QVec> vertices)
        : ambient_(ambient), vertices_(std::move(vertices)) {}

    int ambient_;
    std::vector<QVec> vertices_;
};

} // namespace okb

#endif
