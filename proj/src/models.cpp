#include "okbody/models.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace okb {

ProjectiveModel make_projective(int n, int d) {
    if (n < 1) fail_config("projective model requires n >= 1");
    if (d < 1) fail_config("projective model requires d >= 1");
    return ProjectiveModel{n, d};
}

namespace {

std::vector<long long> to_ll(const QVec& v) {
    std::vector<long long> out;
    out.reserve(static_cast<size_t>(v.dim()));
    for (const auto& x : v.coords()) {
        if (!rat_is_integer(x)) fail_config("toric vertex coordinates must be integers");
        Int n = rat_num(x);
        if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min()) {
            fail_config("toric vertex coordinate out of range");
        }
        out.push_back(static_cast<long long>(n));
    }
    return out;
}

long long dot_ll(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// All facet inequalities of a full-dimensional lattice polytope, found by
// scanning vertex subsets for supporting hyperplanes. Dimensions are <= 3,
// so brute force is plenty.
std::vector<ToricModel::FacetIneq> derive_facets(const std::vector<std::vector<long long>>& verts, int n) {
    std::vector<ToricModel::FacetIneq> out;
    std::set<std::pair<std::vector<long long>, long long>> seen;
    auto push = [&](std::vector<long long> a, long long b) {
        if (seen.emplace(a, b).second) out.push_back({std::move(a), b});
    };
    if (n == 1) {
        long long lo = verts[0][0], hi = verts[0][0];
        for (const auto& v : verts) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        push({1}, hi);
        push({-1}, -lo);
        return out;
    }
    size_t m = verts.size();
    std::vector<size_t> idx(static_cast<size_t>(n));
    // Enumerate n-subsets by simple recursion.
    auto consider = [&](const std::vector<size_t>& chosen) {
        std::vector<QVec> rows;
        for (size_t i = 1; i < chosen.size(); ++i) {
            std::vector<Rat> row(static_cast<size_t>(n));
            for (int c = 0; c < n; ++c) {
                row[static_cast<size_t>(c)] =
                    Rat(verts[chosen[i]][static_cast<size_t>(c)] - verts[chosen[0]][static_cast<size_t>(c)]);
            }
            rows.emplace_back(std::move(row));
        }
        QMat diff(rows);
        if (rank(diff) != n - 1) return;
        auto h = kernel_vector(diff);
        if (!h) return;
        // Scale to a primitive integer normal, keeping direction for now.
        Int l(1);
        for (const auto& x : h->coords()) l = boost::multiprecision::lcm(l, rat_den(x));
        std::vector<Int> hz;
        Int g(0);
        for (const auto& x : h->coords()) {
            Int v = rat_num(x) * (l / rat_den(x));
            g = boost::multiprecision::gcd(g, Int(boost::multiprecision::abs(v)));
            hz.push_back(v);
        }
        std::vector<long long> a;
        for (const auto& v : hz) a.push_back(static_cast<long long>(v / g));
        long long b = dot_ll(a, verts[chosen[0]]);
        bool below = true, above = true;
        for (const auto& v : verts) {
            long long s = dot_ll(a, v);
            if (s > b) below = false;
            if (s < b) above = false;
        }
        if (below) {
            push(a, b);
        } else if (above) {
            for (auto& x : a) x = -x;
            push(a, -b);
        }
    };
    std::vector<size_t> chosen;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (chosen.size() == static_cast<size_t>(n)) {
            consider(chosen);
            return;
        }
        for (size_t i = start; i < m; ++i) {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    (void)idx;
    return out;
}

} // namespace

ToricModel make_toric(const std::vector<std::vector<long long>>& vertices) {
    if (vertices.empty()) fail_config("toric model requires vertices");
    int n = static_cast<int>(vertices[0].size());
    if (n < 1 || n > 3) fail_config("toric models support dimensions 1 through 3");
    std::vector<QVec> pts;
    for (const auto& v : vertices) {
        if (static_cast<int>(v.size()) != n) fail_config("mixed vertex arities in toric model");
        std::vector<Rat> coords;
        for (long long x : v) coords.emplace_back(x);
        pts.emplace_back(std::move(coords));
    }
    ToricModel m{n, VPolytope::from_points(pts), {}, {}};
    if (m.polytope.volume() == 0) fail_config("toric polytope must be full-dimensional");
    for (const auto& v : m.polytope.vertices()) m.vertices.push_back(to_ll(v));
    m.facets = derive_facets(m.vertices, n);
    return m;
}

int model_dim(const Model& m) {
    if (const auto* p = std::get_if<ProjectiveModel>(&m)) return p->n;
    return std::get<ToricModel>(m).n;
}

bool toric_contains_lattice_point(const ToricModel& m, const std::vector<long long>& x, int k) {
    if (static_cast<int>(x.size()) != m.n) fail_config("lattice point arity mismatch");
    for (const auto& f : m.facets) {
        if (dot_ll(f.a, x) > f.b * k) return false;
    }
    return true;
}

namespace {

void gen_monomials(int vars_left, int deg_left, std::vector<int>& cur,
                   std::vector<MultiPoly>& out) {
    if (vars_left == 1) {
        cur.push_back(deg_left);
        out.push_back(MultiPoly::monomial(cur, Rat(1)));
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= deg_left; ++e) {
        cur.push_back(e);
        gen_monomials(vars_left - 1, deg_left - e, cur, out);
        cur.pop_back();
    }
}

void gen_lattice(const ToricModel& m, int k, size_t coord, std::vector<long long>& cur,
                 const std::vector<long long>& lo, const std::vector<long long>& hi,
                 std::vector<std::vector<long long>>& out) {
    if (coord == static_cast<size_t>(m.n)) {
        if (toric_contains_lattice_point(m, cur, k)) out.push_back(cur);
        return;
    }
    for (long long x = lo[coord]; x <= hi[coord]; ++x) {
        cur.push_back(x);
        gen_lattice(m, k, coord + 1, cur, lo, hi, out);
        cur.pop_back();
    }
}

} // namespace

LevelBasis basis_of_level(const Model& m, int k) {
    if (k < 1) fail_config("level must be >= 1");
    LevelBasis out;
    out.level = k;
    if (const auto* p = std::get_if<ProjectiveModel>(&m)) {
        std::vector<int> cur;
        gen_monomials(p->n + 1, p->d * k, cur, out.sections);
        return out;
    }
    const auto& t = std::get<ToricModel>(m);
    std::vector<long long> lo(static_cast<size_t>(t.n)), hi(static_cast<size_t>(t.n));
    for (int c = 0; c < t.n; ++c) {
        long long a = t.vertices[0][static_cast<size_t>(c)];
        long long b = a;
        for (const auto& v : t.vertices) {
            a = std::min(a, v[static_cast<size_t>(c)]);
            b = std::max(b, v[static_cast<size_t>(c)]);
        }
        lo[static_cast<size_t>(c)] = a * k;
        hi[static_cast<size_t>(c)] = b * k;
    }
    std::vector<long long> cur;
    gen_lattice(t, k, 0, cur, lo, hi, out.lattice);
    return out;
}

long long hilbert_dim(const Model& m, int k) {
    if (k < 1) fail_config("level must be >= 1");
    if (const auto* p = std::get_if<ProjectiveModel>(&m)) {
        // C(n + dk, n), exactly.
        Int num(1), den(1);
        for (int i = 1; i <= p->n; ++i) {
            num *= p->d * k + i;
            den *= i;
        }
        Int c = num / den;
        if (c > std::numeric_limits<long long>::max()) fail_config("section space too large");
        return static_cast<long long>(c);
    }
    return static_cast<long long>(basis_of_level(m, k).lattice.size());
}

} // namespace okb
