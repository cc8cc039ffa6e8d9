#ifndef OKBODY_OKOUNKOV_HPP
#define OKBODY_OKOUNKOV_HPP

#include <map>
#include <string>
#include <vector>

#include "okbody/flags.hpp"

namespace okb {

using ValVec = std::vector<long long>;

// Formal Laurent combination of toric character monomials.
using LaurentSection = std::map<std::vector<long long>, Rat>;

// Flag valuation of a nonzero section of level k. Coordinate i (1-based) is
// the vanishing order along X_{i-1} inside X_i; the orders are extracted
// from the last flag step down to the point, so the divisorial order lands
// in coordinate n and the order at the point in coordinate 1.
ValVec valuation(const Model& model, const FlagSpec& flag, const MultiPoly& s, int k);
ValVec valuation(const Model& model, const FlagSpec& flag, const LaurentSection& s, int k);

// Comparison in the order the valuation is computed (coordinate n first);
// this is the order that makes it a valuation.
bool value_less(const ValVec& a, const ValVec& b);

// The full valuation image of level k: { v(s) : s nonzero of level k }.
// Its cardinality always equals hilbert_dim(model, k).
std::vector<ValVec> valuation_image(const Model& model, const FlagSpec& flag, int k);

struct SemigroupSample {
    int n = 0;
    int max_level = 0;
    std::map<int, std::vector<ValVec>> levels;

    Json to_json() const;
};

SemigroupSample enumerate_semigroup(const Model& model, const FlagSpec& flag, int max_level);

// Convex hull of the normalized sample points v/k over all sampled levels.
VPolytope body_approx(const SemigroupSample& sample);

struct TheoremPrediction {
    long long b = 0;
    VPolytope simplex;
};

// The simplex conv{0, b e_1, e_2, ..., e_n} the theorem assigns to flags of
// the distinguished shape (coordinate flags on O(1), curve flags with
// deg(xi1) = d, both on projective models). Other flags raise a hypothesis
// error.
TheoremPrediction predicted_body(const Model& model, const FlagSpec& flag);

struct TheoremReport {
    int max_level = 0;
    long long b = 0;
    VPolytope body;
    VPolytope predicted;
    bool contained = false;
    bool equal = false;
    Rat e1_gap; // b minus the largest first coordinate reached by the body

    Json to_json() const;
};

TheoremReport verify_theorem(const Model& model, const FlagSpec& flag, int max_level);

struct ScalingReport {
    int m = 0;
    int max_level = 0;
    VPolytope reindexed;   // body of the m-th reindexed model at max_level
    VPolytope scaled_base; // body of the base model at m*max_level, scaled by m
    bool equal = false;

    Json to_json() const;
};

// Compares the body sample of the reindexed model (bundle power m) with the
// m-scaled body sample of the base model.
ScalingReport scaling_check(const Model& model, const FlagSpec& flag, int m, int max_level);

struct DecompositionResult {
    long long k = 0;
    ValVec a;
    long long b = 0;
    std::vector<ValVec> simplex_vertices;  // 0, b e_1, e_2, ..., e_n
    std::vector<Rat> coefficients;         // weights summing to k

    Json to_json() const;
};

// Writes (k, a) as a nonnegative combination of (1, vertex) over the
// predicted simplex vertices, the effectivity step first: fails with
// "violates effectivity" when k - sum_{i>=2} a_i < 0 and with "point
// outside predicted simplex" when the e_1 weight overshoots.
DecompositionResult decompose(const Model& model, const FlagSpec& flag, const ValVec& a, long long k);

struct LemmaWitness {
    Rat c;
    long long b = 0;
    int m = 0;       // minimal level with an integer slot in (c*m, b*m)
    long long v1 = 0; // minimal such integer
    int big_n = 0;   // minimal power making t^(N*v1) liftable
    MultiPoly section; // lift, a form of level m*N
    ValVec value;      // its valuation, (N*v1, 0)

    Json to_json() const;
};

// Minimal witness (m, v1, N) for the lemma's surjectivity argument at
// parameter c in the open interval (0, b): v1/m lies in (c, b) and the
// monomial t^(N*v1) u^(...) is the restriction of a level-(m*N) section.
LemmaWitness lemma_witness(const Model& model, const FlagSpec& flag, const Rat& c, int max_m);

struct VolumeRow {
    int k = 0;
    long long dim = 0;  // hilbert_dim(k)
    Rat dim_over_kn;
    Rat volume;         // volume of the body sample through level k
};

std::vector<VolumeRow> volume_vs_hilbert(const Model& model, const FlagSpec& flag, int max_level);

Json volume_table_json(const std::vector<VolumeRow>& rows, int max_level, bool decimal);
std::string volume_table_csv(const std::vector<VolumeRow>& rows, bool decimal);

struct AxiomReport {
    int trials = 0;
    unsigned long long seed = 0;
    int max_level = 0;
    int products_checked = 0;
    int sums_checked = 0;
    std::vector<std::string> violations;

    Json to_json() const;
};

// Randomized check of the valuation axioms on seeded sections:
// v(fg) = v(f) + v(g) and v(f+g) >= min(v(f), v(g)) whenever f+g != 0.
AxiomReport valuation_axiom_check(const Model& model, const FlagSpec& flag, int trials,
                                  unsigned long long seed, int max_level);

} // namespace okb

#endif
