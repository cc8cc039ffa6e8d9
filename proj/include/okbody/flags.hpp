#ifndef OKBODY_FLAGS_HPP
#define OKBODY_FLAGS_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "okbody/models.hpp"

namespace okb {

// Full flag of coordinate subspaces on P^n: X_i is cut out by the vanishing
// of z_{order[j]} for j > i, so order[n] is the first hyperplane and
// order[0] indexes the final point.
struct CoordinateFlag {
    std::vector<int> order; // permutation of 0..n
};

// Flag point < curve < P^2 where the curve is V(xi1) with a rational
// parametrization; the flag point is the image of (u, t) = (1, 0).
struct CurveFlag {
    MultiPoly xi1;    // defining form in z0, z1, z2
    CurveParam param; // P^1 -> P^2 hitting V(xi1)
};

// Flag of torus-invariant subvarieties read off a vertex of the moment
// polytope and an ordered unimodular basis of edge directions at it; the
// first edge carries the curve step of the flag.
struct ToricVertexFlag {
    std::vector<long long> vertex;
    std::vector<std::vector<long long>> edges;
};

using FlagSpec = std::variant<CoordinateFlag, CurveFlag, ToricVertexFlag>;

enum class CheckStatus { Pass, Fail, UserAsserted };

struct FlagCheck {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct FlagValidationReport {
    std::string flag_kind;
    std::vector<FlagCheck> checks;

    bool ok() const; // no failed checks (user-asserted entries pass)
    Json to_json() const;
};

// Runs every admissibility check for the flag against the model. Field
// arities must already be consistent (enforced when configs are parsed);
// everything semantic lands here, one check per invariant.
FlagValidationReport validate_flag(const Model& model, const FlagSpec& flag);

// The distinguished level-1 sections cutting the flag steps, paired with the
// valuation values they must take: (z_{order[i]}, e_i) for coordinate flags
// on O(1), (xi1, e_n) for curve flags with deg xi1 = d. Errors for flags
// that are not of that shape.
std::vector<std::pair<MultiPoly, std::vector<long long>>>
flag_vertex_sections(const Model& model, const FlagSpec& flag);

// Degree of the model bundle restricted to the flag curve X_1.
long long restriction_degree(const Model& model, const FlagSpec& flag);

// Matrix of the restriction-to-curve map in level j of a curve flag: row r
// lists the coefficients of the pullback of the r-th basis monomial in the
// binary-form basis u^(D-c) t^c, c = 0..D, D = e * d * j.
QMat restriction_matrix(const Model& model, const FlagSpec& flag, int j);

} // namespace okb

#endif
