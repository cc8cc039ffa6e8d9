#ifndef OKBODY_POLYRING_HPP
#define OKBODY_POLYRING_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "okbody/rational.hpp"

namespace okb {

// Multivariate polynomial over Q with a fixed variable count. Terms are kept
// in a map ordered lexicographically on exponent vectors, which makes every
// traversal (printing, arithmetic, leading-term selection) deterministic.
class MultiPoly {
public:
    using Expo = std::vector<int>;
    using TermMap = std::map<Expo, Rat>;

    explicit MultiPoly(int num_vars);
    static MultiPoly constant(int num_vars, const Rat& c);
    static MultiPoly monomial(Expo expo, const Rat& coeff);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Accumulates coeff * x^expo, erasing the term if the sum cancels.
    void add_term(const Expo& expo, const Rat& coeff);

    // Max total degree over terms; zero polynomial has degree 0 by convention.
    int degree() const;
    bool is_homogeneous() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Rat& c) const;
    bool operator==(const MultiPoly& o) const;

private:
    int num_vars_;
    TermMap terms_;
};

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_pow(const MultiPoly& base, int e);

// Quotient f/g when g divides f exactly in Q[x], nullopt otherwise.
std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g);

// Largest m with g^m | f, together with the residual f / g^m. Requires f != 0
// and g a non-unit (positive degree).
std::pair<int, MultiPoly> max_power_dividing(const MultiPoly& f, const MultiPoly& g);

// Polynomial map P^1 -> P^n given by n+1 binary forms in (u, t) of one common
// degree e >= 1. Accepts affine input in t alone (each component is then
// homogenized to degree e = max component degree).
class CurveParam {
public:
    explicit CurveParam(std::vector<MultiPoly> components);

    int target_dim() const { return static_cast<int>(components_.size()) - 1; }
    int degree() const { return degree_; }
    const std::vector<MultiPoly>& components() const { return components_; }

private:
    std::vector<MultiPoly> components_;
    int degree_;
};

// Substitutes the parametrization into a form on P^n; the result is a binary
// form in (u, t) of degree deg(s) * deg(param).
MultiPoly pullback(const MultiPoly& s, const CurveParam& param);

// Vanishing order at (u, t) = (1, 0) of a nonzero polynomial in (u, t):
// the least t-exponent over its terms.
int order_at_base_point(const MultiPoly& f);

// Text format: sums of terms like "3/2 z0^2 z1 - z2^3 + 1". Parsing accepts
// optional '*' between factors; printing is canonical (terms in descending
// lexicographic exponent order, no '*').
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& var_names);
std::string poly_to_string(const MultiPoly& p, const std::vector<std::string>& var_names);

// Variable name conventions used by models and parametrizations.
std::vector<std::string> ambient_var_names(int n); // z0..zn
std::vector<std::string> param_var_names();        // u, t

} // namespace okb

#endif
