#ifndef OKBODY_MODELS_HPP
#define OKBODY_MODELS_HPP

#include <variant>
#include <vector>

#include "okbody/polyring.hpp"
#include "okbody/polytope.hpp"

namespace okb {

// P^n with the line bundle O(d); sections of level k are the homogeneous
// forms of degree d*k in z0..zn.
struct ProjectiveModel {
    int n = 0;
    int d = 0;
};

// Projective toric variety of a full-dimensional lattice polytope P with its
// ample bundle; sections of level k are spanned by the lattice points of kP.
struct ToricModel {
    struct FacetIneq {
        std::vector<long long> a; // primitive integer normal
        long long b = 0;          // a . x <= b on P
    };

    int n = 0;
    VPolytope polytope;
    std::vector<std::vector<long long>> vertices; // canonical (lex) order
    std::vector<FacetIneq> facets;
};

using Model = std::variant<ProjectiveModel, ToricModel>;

ProjectiveModel make_projective(int n, int d);
ToricModel make_toric(const std::vector<std::vector<long long>>& vertices);

int model_dim(const Model& m);

// Canonical section basis of one level: monomial exponent vectors for
// projective models, lattice points of kP for toric models, each listed in
// ascending lexicographic order.
struct LevelBasis {
    int level = 0;
    std::vector<MultiPoly> sections;              // projective
    std::vector<std::vector<long long>> lattice;  // toric
};

LevelBasis basis_of_level(const Model& m, int k);
long long hilbert_dim(const Model& m, int k);

bool toric_contains_lattice_point(const ToricModel& m, const std::vector<long long>& x, int k);

} // namespace okb

#endif
