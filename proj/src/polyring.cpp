#include "okbody/polyring.hpp"

#include <algorithm>
#include <cctype>

namespace okb {

MultiPoly::MultiPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) fail_config("polynomial ring requires at least one variable");
}

MultiPoly MultiPoly::constant(int num_vars, const Rat& c) {
    MultiPoly p(num_vars);
    p.add_term(Expo(static_cast<size_t>(num_vars), 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(Expo expo, const Rat& coeff) {
    MultiPoly p(static_cast<int>(expo.size()));
    for (int e : expo) {
        if (e < 0) fail_config("negative exponent in monomial");
    }
    p.add_term(expo, coeff);
    return p;
}

void MultiPoly::add_term(const Expo& expo, const Rat& coeff) {
    if (static_cast<int>(expo.size()) != num_vars_) {
        fail_config("exponent arity mismatch");
    }
    if (coeff == 0) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(expo, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

static int total_degree(const MultiPoly::Expo& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

int MultiPoly::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) != d) return false;
    }
    return true;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (num_vars_ != o.num_vars_) fail_config("variable count mismatch in addition");
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (num_vars_ != o.num_vars_) fail_config("variable count mismatch in subtraction");
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, Rat(-c));
    return out;
}

MultiPoly MultiPoly::operator-() const {
    return scaled(Rat(-1));
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    MultiPoly out(num_vars_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
}

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars() != b.num_vars()) fail_config("variable count mismatch in multiplication");
    MultiPoly out(a.num_vars());
    MultiPoly::Expo e(static_cast<size_t>(a.num_vars()), 0);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly poly_pow(const MultiPoly& base, int e) {
    if (e < 0) fail_config("negative polynomial power");
    MultiPoly acc = MultiPoly::constant(base.num_vars(), Rat(1));
    MultiPoly sq = base;
    while (e > 0) {
        if (e & 1) acc = multiply(acc, sq);
        e >>= 1;
        if (e > 0) sq = multiply(sq, sq);
    }
    return acc;
}

// Long division of f by the single divisor g under the lexicographic term
// order. Whenever the current leading term is not reducible by lt(g) the
// remainder would be nonzero, and a nonzero remainder is incompatible with
// exact divisibility (any multiple of g has its leading term divisible by
// lt(g)), so the first failed reduction settles the question.
std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (f.num_vars() != g.num_vars()) fail_config("variable count mismatch in division");
    if (g.is_zero()) fail_config("division by the zero polynomial");
    MultiPoly r = f;
    MultiPoly q(f.num_vars());
    const auto& gt = *g.terms().rbegin();
    while (!r.is_zero()) {
        const auto& rt = *r.terms().rbegin();
        MultiPoly::Expo diff(rt.first.size());
        for (size_t i = 0; i < diff.size(); ++i) {
            diff[i] = rt.first[i] - gt.first[i];
            if (diff[i] < 0) return std::nullopt;
        }
        Rat c = rt.second / gt.second;
        q.add_term(diff, c);
        r = r - multiply(MultiPoly::monomial(diff, c), g);
    }
    return q;
}

std::pair<int, MultiPoly> max_power_dividing(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero()) fail_config("every power divides the zero polynomial");
    if (g.is_zero() || g.degree() == 0) fail_config("divisor must have positive degree");
    int m = 0;
    MultiPoly residual = f;
    for (;;) {
        auto q = exact_divide(residual, g);
        if (!q) return {m, residual};
        residual = std::move(*q);
        ++m;
    }
}

CurveParam::CurveParam(std::vector<MultiPoly> components)
    : components_(std::move(components)), degree_(0) {
    if (components_.size() < 2) fail_config("parametrization needs at least two components");
    bool any_nonzero = false;
    bool projective = true; // all nonzero components homogeneous of one degree
    int common = -1;
    bool u_free = true;
    for (const auto& c : components_) {
        if (c.num_vars() != 2) fail_config("parametrization components live in (u, t)");
        if (c.is_zero()) continue;
        any_nonzero = true;
        if (!c.is_homogeneous()) projective = false;
        int d = c.degree();
        if (common == -1) common = d;
        if (d != common) projective = false;
        for (const auto& [e, k] : c.terms()) {
            if (e[0] != 0) u_free = false;
        }
    }
    if (!any_nonzero) fail_config("parametrization has no nonzero component");
    if (projective) {
        degree_ = common;
    } else if (u_free) {
        // Affine input in t; homogenize every term to the max total degree.
        int e = 0;
        for (const auto& c : components_) e = std::max(e, c.degree());
        degree_ = e;
        for (auto& c : components_) {
            MultiPoly h(2);
            for (const auto& [expo, k] : c.terms()) {
                h.add_term({e - expo[1], expo[1]}, k);
            }
            c = h;
        }
    } else {
        fail_config("parametrization components must be binary forms of one "
                    "degree, or polynomials in t alone");
    }
    if (degree_ < 1) fail_config("parametrization must have degree >= 1");
}

MultiPoly pullback(const MultiPoly& s, const CurveParam& param) {
    if (s.num_vars() != param.target_dim() + 1) {
        fail_config("section arity does not match parametrization target");
    }
    const auto& phi = param.components();
    // Component powers are reused heavily across monomials; cache them.
    std::vector<std::map<int, MultiPoly>> pows(phi.size());
    auto power = [&](size_t i, int e) -> const MultiPoly& {
        auto it = pows[i].find(e);
        if (it == pows[i].end()) {
            it = pows[i].emplace(e, poly_pow(phi[i], e)).first;
        }
        return it->second;
    };
    MultiPoly out(2);
    for (const auto& [expo, coeff] : s.terms()) {
        bool kills = false;
        for (size_t i = 0; i < phi.size(); ++i) {
            if (expo[i] > 0 && phi[i].is_zero()) { kills = true; break; }
        }
        if (kills) continue;
        MultiPoly term = MultiPoly::constant(2, coeff);
        for (size_t i = 0; i < phi.size(); ++i) {
            if (expo[i] > 0) term = multiply(term, power(i, expo[i]));
        }
        out = out + term;
    }
    return out;
}

int order_at_base_point(const MultiPoly& f) {
    if (f.num_vars() != 2) fail_config("vanishing order expects a polynomial in (u, t)");
    if (f.is_zero()) fail_config("vanishing order undefined for the zero polynomial");
    int best = -1;
    for (const auto& [e, c] : f.terms()) {
        if (best < 0 || e[1] < best) best = e[1];
    }
    return best;
}

std::vector<std::string> ambient_var_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("z" + std::to_string(i));
    return names;
}

std::vector<std::string> param_var_names() {
    return {"u", "t"};
}

namespace {

struct Scanner {
    std::string_view s;
    size_t pos = 0;
    const std::vector<std::string>& vars;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }

    [[noreturn]] void fail(const std::string& why) {
        fail_config("polynomial parse error at offset " + std::to_string(pos) + ": " + why);
    }

    std::string read_digits() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::string(s.substr(start, pos - start));
    }

    Rat read_number() {
        Int num(read_digits());
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            skip_ws();
            Int den(read_digits());
            if (den == 0) fail("zero denominator");
            return Rat(num) / Rat(den);
        }
        return Rat(num);
    }

    // Longest variable-name prefix match at the cursor.
    int read_var() {
        int best = -1;
        size_t best_len = 0;
        for (size_t v = 0; v < vars.size(); ++v) {
            const auto& name = vars[v];
            if (name.size() > best_len && s.substr(pos, name.size()) == name) {
                best = static_cast<int>(v);
                best_len = name.size();
            }
        }
        if (best < 0) fail("unknown variable");
        pos += best_len;
        return best;
    }
};

} // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& var_names) {
    if (var_names.empty()) fail_config("polynomial parser needs variable names");
    Scanner sc{text, 0, var_names};
    MultiPoly out(static_cast<int>(var_names.size()));
    bool first = true;
    if (sc.done()) sc.fail("empty polynomial");
    while (!sc.done()) {
        int sign = 1;
        sc.skip_ws();
        if (sc.peek() == '+' || sc.peek() == '-') {
            sign = sc.peek() == '-' ? -1 : 1;
            ++sc.pos;
        } else if (!first) {
            sc.fail("expected '+' or '-' between terms");
        }
        // One term: any mix of number and variable factors, '*' optional.
        Rat coeff(sign);
        MultiPoly::Expo expo(var_names.size(), 0);
        bool have_factor = false;
        for (;;) {
            if (sc.done()) break;
            char c = sc.peek();
            if (c == '+' || c == '-') break;
            if (c == '*') {
                if (!have_factor) sc.fail("unexpected '*'");
                ++sc.pos;
                sc.skip_ws();
                if (sc.done()) sc.fail("dangling '*'");
                c = sc.peek();
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= sc.read_number();
                have_factor = true;
            } else {
                int v = sc.read_var();
                int e = 1;
                sc.skip_ws();
                if (sc.pos < sc.s.size() && sc.peek() == '^') {
                    ++sc.pos;
                    sc.skip_ws();
                    e = 0;
                    for (char d : sc.read_digits()) e = e * 10 + (d - '0');
                }
                expo[static_cast<size_t>(v)] += e;
                have_factor = true;
            }
            sc.skip_ws();
        }
        if (!have_factor) sc.fail("empty term");
        out.add_term(expo, coeff);
        first = false;
    }
    return out;
}

std::string poly_to_string(const MultiPoly& p, const std::vector<std::string>& var_names) {
    if (static_cast<int>(var_names.size()) != p.num_vars()) {
        fail_config("variable name count mismatch in printing");
    }
    if (p.is_zero()) return "0";
    std::string out;
    // Descending lexicographic exponent order puts the leading term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [expo, coeff] = *it;
        bool neg = coeff < 0;
        Rat mag = neg ? Rat(-coeff) : coeff;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string vars;
        for (size_t v = 0; v < expo.size(); ++v) {
            if (expo[v] == 0) continue;
            if (!vars.empty()) vars += " ";
            vars += var_names[v];
            if (expo[v] > 1) vars += "^" + std::to_string(expo[v]);
        }
        if (mag != 1 || vars.empty()) {
            out += rat_to_string(mag);
            if (!vars.empty()) out += " ";
        }
        out += vars;
    }
    return out;
}

} // namespace okb
