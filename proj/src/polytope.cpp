#include "okbody/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

/*
 * Exact convex hulls in ambient dimension <= 4.
 *
 * The pipeline: deduplicate, project onto an exact affine frame of the
 * point set (so every later step works with a full-dimensional
 * configuration), then dispatch on that intrinsic dimension d.
 *
 *   d <= 1  trivial / min-max
 *   d == 2  monotone chain with strict turns
 *   d >= 3  incremental beneath-beyond over the points in input order
 *
 * Beneath-beyond keeps a simplicial facet complex. A new point strictly
 * outside some facet hyperplane replaces the visible facets with a cone
 * over the horizon ridges; a point not strictly outside any hyperplane is
 * skipped, which is safe because the complex's hyperplanes cut out the hull
 * of the processed points, so a skipped point is a convex combination of
 * earlier ones and can never be a vertex.
 *
 * Degenerate inputs make the simplicial facets an over-triangulation:
 * coplanar simplices can expose interior points of a true facet as simplex
 * corners. The vertex set is therefore extracted facet by facet: group
 * simplices by their (canonically scaled, oriented) supporting hyperplane,
 * gather every input point lying on that hyperplane -- such points always
 * belong to the face the hyperplane cuts out -- and recurse one dimension
 * down. A vertex of a face of P is a vertex of P, and every vertex of P is
 * a vertex of each facet containing it, so the union over facets is exactly
 * the vertex set.
 */

namespace okb {

namespace {

using Coords = std::vector<std::vector<Rat>>;

Rat dot_row(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Affine frame of a distinct point set: an origin, an exact basis of the
// direction space, and per-point coordinates in that basis.
struct Frame {
    size_t dim = 0;
    Coords coords;
    std::vector<std::vector<Rat>> basis; // direction-space basis vectors
};

Frame build_frame(const Coords& pts) {
    Frame f;
    size_t ambient = pts[0].size();
    for (size_t q = 1; q < pts.size() && f.basis.size() < ambient; ++q) {
        std::vector<Rat> v(ambient);
        for (size_t i = 0; i < ambient; ++i) v[i] = pts[q][i] - pts[0][i];
        std::vector<QVec> rows;
        for (const auto& d : f.basis) rows.emplace_back(d);
        rows.emplace_back(v);
        if (rank(QMat(rows)) > static_cast<int>(f.basis.size())) f.basis.push_back(std::move(v));
    }
    f.dim = f.basis.size();
    if (f.dim == 0) {
        f.coords.assign(pts.size(), {});
        return f;
    }
    QMat cols(static_cast<int>(ambient), static_cast<int>(f.dim));
    for (size_t j = 0; j < f.dim; ++j)
        for (size_t i = 0; i < ambient; ++i) cols.at(static_cast<int>(i), static_cast<int>(j)) = f.basis[j][i];
    f.coords.reserve(pts.size());
    for (const auto& q : pts) {
        std::vector<Rat> rhs(ambient);
        for (size_t i = 0; i < ambient; ++i) rhs[i] = q[i] - pts[0][i];
        auto y = gauss_solve(cols, QVec(rhs));
        if (!y) fail_internal("point escaped its own affine span");
        f.coords.push_back(y->coords());
    }
    return f;
}

Rat cross2(const std::vector<Rat>& a, const std::vector<Rat>& b, const std::vector<Rat>& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

// Ordered (counterclockwise) hull boundary of distinct 2-d points spanning
// the plane; strict turns only, so the result is the minimal vertex cycle.
std::vector<size_t> chain2(const Coords& pts) {
    std::vector<size_t> order(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return pts[a] < pts[b];
    });
    auto build = [&](const std::vector<size_t>& seq) {
        std::vector<size_t> h;
        for (size_t i : seq) {
            while (h.size() >= 2 && cross2(pts[h[h.size() - 2]], pts[h.back()], pts[i]) <= 0) {
                h.pop_back();
            }
            h.push_back(i);
        }
        return h;
    };
    std::vector<size_t> lower = build(order);
    std::reverse(order.begin(), order.end());
    std::vector<size_t> upper = build(order);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

struct Facet {
    std::vector<size_t> verts; // d indices, sorted
    std::vector<Rat> h;        // h . x <= c on the hull, == c on the facet
    Rat c;
};

// Oriented hyperplane through d affinely independent points, with the given
// interior point strictly on the <= side.
Facet make_facet(std::vector<size_t> verts, const Coords& pts, const std::vector<Rat>& interior) {
    size_t d = pts[0].size();
    std::sort(verts.begin(), verts.end());
    // Null vector of the (d-1) x d difference matrix.
    std::vector<std::vector<Rat>> m;
    for (size_t i = 1; i < d; ++i) {
        std::vector<Rat> row(d);
        for (size_t c = 0; c < d; ++c) row[c] = pts[verts[i]][c] - pts[verts[0]][c];
        m.push_back(std::move(row));
    }
    std::vector<int> pivot_cols;
    size_t row = 0;
    for (size_t col = 0; col < d && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        for (size_t r = row + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (size_t c = col; c < d; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_cols.push_back(static_cast<int>(col));
        ++row;
    }
    if (pivot_cols.size() != d - 1) fail_internal("facet spanned by dependent points");
    std::vector<Rat> h(d, Rat(0));
    size_t free_col = 0;
    std::set<int> pivots(pivot_cols.begin(), pivot_cols.end());
    while (pivots.count(static_cast<int>(free_col))) ++free_col;
    h[free_col] = 1;
    for (size_t i = pivot_cols.size(); i-- > 0;) {
        size_t pc = static_cast<size_t>(pivot_cols[i]);
        Rat s(0);
        for (size_t c = pc + 1; c < d; ++c) s += m[i][c] * h[c];
        h[pc] = -s / m[i][pc];
    }
    Facet f;
    f.c = dot_row(h, pts[verts[0]]);
    f.h = std::move(h);
    f.verts = std::move(verts);
    Rat side = dot_row(f.h, interior);
    if (side == f.c) fail_internal("interior point on facet hyperplane");
    if (side > f.c) {
        for (auto& x : f.h) x = -x;
        f.c = -f.c;
    }
    return f;
}

// Simplicial facet complex of the hull, by incremental insertion.
std::vector<Facet> bb_facets(const Coords& pts, size_t d) {
    // Initial simplex: greedily pick d+1 affinely independent points.
    std::vector<size_t> simplex = {0};
    std::vector<QVec> dirs;
    for (size_t q = 1; q < pts.size() && simplex.size() < d + 1; ++q) {
        std::vector<Rat> v(d);
        for (size_t i = 0; i < d; ++i) v[i] = pts[q][i] - pts[0][i];
        std::vector<QVec> rows = dirs;
        rows.emplace_back(v);
        if (rank(QMat(rows)) > static_cast<int>(dirs.size())) {
            dirs.emplace_back(v);
            simplex.push_back(q);
        }
    }
    if (simplex.size() != d + 1) fail_internal("point set not full-dimensional");

    std::vector<Rat> interior(d, Rat(0));
    for (size_t i : simplex)
        for (size_t c = 0; c < d; ++c) interior[c] += pts[i][c];
    for (auto& x : interior) x /= Rat(static_cast<int>(d) + 1);

    std::vector<Facet> facets;
    for (size_t skip = 0; skip < simplex.size(); ++skip) {
        std::vector<size_t> verts;
        for (size_t i = 0; i < simplex.size(); ++i) {
            if (i != skip) verts.push_back(simplex[i]);
        }
        facets.push_back(make_facet(std::move(verts), pts, interior));
    }

    std::set<size_t> in_simplex(simplex.begin(), simplex.end());
    for (size_t p = 0; p < pts.size(); ++p) {
        if (in_simplex.count(p)) continue;
        std::vector<size_t> visible;
        for (size_t f = 0; f < facets.size(); ++f) {
            if (dot_row(facets[f].h, pts[p]) > facets[f].c) visible.push_back(f);
        }
        if (visible.empty()) continue; // inside or on the boundary

        // Horizon ridges: ridges covered by exactly one visible facet.
        std::map<std::vector<size_t>, int> ridge_count;
        for (size_t f : visible) {
            const auto& vs = facets[f].verts;
            for (size_t skip = 0; skip < vs.size(); ++skip) {
                std::vector<size_t> ridge;
                for (size_t i = 0; i < vs.size(); ++i) {
                    if (i != skip) ridge.push_back(vs[i]);
                }
                ridge_count[ridge] += 1;
            }
        }
        std::vector<Facet> next;
        std::set<size_t> visible_set(visible.begin(), visible.end());
        for (size_t f = 0; f < facets.size(); ++f) {
            if (!visible_set.count(f)) next.push_back(std::move(facets[f]));
        }
        for (const auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            std::vector<size_t> verts = ridge;
            verts.push_back(p);
            next.push_back(make_facet(std::move(verts), pts, interior));
        }
        facets = std::move(next);
    }
    return facets;
}

// Canonical integer scaling of an oriented hyperplane, for grouping coplanar
// facet simplices.
std::pair<std::vector<Rat>, Rat> hyperplane_key(const std::vector<Rat>& h, const Rat& c) {
    Int l(1);
    auto fold_den = [&](const Rat& x) { l = boost::multiprecision::lcm(l, rat_den(x)); };
    for (const auto& x : h) fold_den(x);
    fold_den(c);
    Int g(0);
    auto fold_num = [&](const Rat& x) {
        g = boost::multiprecision::gcd(g, Int(boost::multiprecision::abs(rat_num(x) * l / rat_den(x))));
    };
    for (const auto& x : h) fold_num(x);
    fold_num(c);
    if (g == 0) fail_internal("zero hyperplane normal");
    Rat scale = Rat(l) / Rat(g);
    std::vector<Rat> hk(h);
    for (auto& x : hk) x *= scale;
    return {std::move(hk), c * scale};
}

std::vector<size_t> hull_vertex_indices(const Coords& pts);

// Vertex indices for a distinct full-dimensional point set, d >= 1.
std::vector<size_t> hull_fulldim(const Coords& pts, size_t d) {
    if (d == 1) {
        size_t lo = 0, hi = 0;
        for (size_t i = 1; i < pts.size(); ++i) {
            if (pts[i][0] < pts[lo][0]) lo = i;
            if (pts[i][0] > pts[hi][0]) hi = i;
        }
        return {lo, hi};
    }
    if (d == 2) {
        std::vector<size_t> cyc = chain2(pts);
        std::sort(cyc.begin(), cyc.end());
        return cyc;
    }
    std::vector<Facet> facets = bb_facets(pts, d);
    std::map<std::pair<std::vector<Rat>, Rat>, bool> planes;
    for (const auto& f : facets) planes[hyperplane_key(f.h, f.c)] = true;
    std::set<size_t> verts;
    for (const auto& [key, unused] : planes) {
        const auto& [h, c] = key;
        std::vector<size_t> on_plane;
        Coords sub;
        for (size_t i = 0; i < pts.size(); ++i) {
            if (dot_row(h, pts[i]) == c) {
                on_plane.push_back(i);
                sub.push_back(pts[i]);
            }
        }
        for (size_t local : hull_vertex_indices(sub)) verts.insert(on_plane[local]);
    }
    return std::vector<size_t>(verts.begin(), verts.end());
}

std::vector<size_t> hull_vertex_indices(const Coords& pts) {
    if (pts.empty()) fail_internal("hull of an empty point set");
    // Deduplicate, keeping first occurrences in input order.
    std::map<std::vector<Rat>, size_t> seen;
    Coords uniq;
    std::vector<size_t> original;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (seen.emplace(pts[i], uniq.size()).second) {
            uniq.push_back(pts[i]);
            original.push_back(i);
        }
    }
    if (uniq.size() == 1) return {original[0]};
    Frame f = build_frame(uniq);
    std::vector<size_t> local = hull_fulldim(f.coords, f.dim);
    std::vector<size_t> out;
    out.reserve(local.size());
    for (size_t i : local) out.push_back(original[i]);
    return out;
}

Rat det_abs(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        std::swap(m[col], m[piv]);
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det < 0 ? Rat(-det) : det;
}

// Volume of the hull of a distinct point set spanning dimension d, in its
// own coordinates.
Rat volume_fulldim(const Coords& pts, size_t d) {
    if (d == 1) {
        Rat lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return hi - lo;
    }
    if (d == 2) {
        std::vector<size_t> cyc = chain2(pts);
        Rat twice(0);
        for (size_t i = 0; i < cyc.size(); ++i) {
            const auto& a = pts[cyc[i]];
            const auto& b = pts[cyc[(i + 1) % cyc.size()]];
            twice += a[0] * b[1] - b[0] * a[1];
        }
        if (twice < 0) twice = -twice;
        return twice / Rat(2);
    }
    // Cone over the facet simplices from an arbitrary base vertex; facets
    // whose hyperplane passes through the base contribute zero.
    std::vector<Facet> facets = bb_facets(pts, d);
    const auto& base = pts[0];
    Rat total(0);
    Int fact(1);
    for (size_t i = 2; i <= d; ++i) fact *= i;
    for (const auto& f : facets) {
        std::vector<std::vector<Rat>> m;
        for (size_t i = 0; i < d; ++i) {
            std::vector<Rat> row(d);
            for (size_t c = 0; c < d; ++c) row[c] = pts[f.verts[i]][c] - base[c];
            m.push_back(std::move(row));
        }
        total += det_abs(std::move(m));
    }
    return total / Rat(fact);
}

Coords to_coords(const std::vector<QVec>& pts) {
    Coords out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(p.coords());
    return out;
}

} // namespace

VPolytope VPolytope::from_points(const std::vector<QVec>& points) {
    if (points.empty()) fail_config("polytope requires at least one point");
    int ambient = points[0].dim();
    if (ambient > 4) fail_config("ambient dimension capped at 4");
    for (const auto& p : points) {
        if (p.dim() != ambient) fail_config("mixed ambient dimensions in point set");
    }
    std::vector<QVec> verts;
    for (size_t i : hull_vertex_indices(to_coords(points))) verts.push_back(points[i]);
    std::sort(verts.begin(), verts.end(), lex_less);
    return VPolytope(ambient, std::move(verts));
}

Rat VPolytope::volume() const {
    if (vertices_.size() == 1) return Rat(0);
    Frame f = build_frame(to_coords(vertices_));
    if (f.dim < static_cast<size_t>(ambient_)) return Rat(0);
    // Frame coordinates distort volume by |det D| for the basis matrix D.
    return det_abs(f.basis) * volume_fulldim(f.coords, f.dim);
}

VPolytope VPolytope::scaled(const Rat& c) const {
    if (c < 0) fail_config("polytope scaling factor must be nonnegative");
    std::vector<QVec> pts;
    pts.reserve(vertices_.size());
    for (const auto& v : vertices_) pts.push_back(c * v);
    return from_points(pts);
}

bool VPolytope::contains_point(const QVec& p) const {
    if (p.dim() != ambient_) fail_config("ambient dimension mismatch in containment test");
    return in_convex_hull(p, vertices_).inside;
}

bool VPolytope::contains(const VPolytope& other) const {
    if (other.ambient_ != ambient_) fail_config("ambient dimension mismatch in containment test");
    for (const auto& v : other.vertices_) {
        if (!contains_point(v)) return false;
    }
    return true;
}

bool VPolytope::equals(const VPolytope& other) const {
    if (other.ambient_ != ambient_) fail_config("ambient dimension mismatch in equality test");
    return vertices_ == other.vertices_;
}

Json VPolytope::to_json() const {
    Json verts = Json::array();
    for (const auto& v : vertices_) {
        Json row = Json::array();
        for (const auto& x : v.coords()) row.push_back(rat_to_string(x));
        verts.push_back(std::move(row));
    }
    return Json{{"dim", ambient_}, {"vertices", std::move(verts)}};
}

VPolytope VPolytope::from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices")) {
        fail_config("polytope JSON must carry 'dim' and 'vertices'");
    }
    if (!j["dim"].is_number_integer()) fail_config("polytope 'dim' must be an integer");
    int dim = j["dim"].get<int>();
    if (dim < 1 || dim > 4) fail_config("polytope 'dim' out of range");
    if (!j["vertices"].is_array() || j["vertices"].empty()) {
        fail_config("polytope 'vertices' must be a nonempty array");
    }
    std::vector<QVec> pts;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            fail_config("polytope vertex arity mismatch");
        }
        std::vector<Rat> coords;
        for (const auto& cell : row) {
            if (!cell.is_string()) fail_config("polytope coordinates are rational strings");
            coords.push_back(rat_parse(cell.get<std::string>()));
        }
        pts.emplace_back(std::move(coords));
    }
    VPolytope p = from_points(pts);
    if (p.vertices().size() != pts.size()) {
        fail_config("polytope vertex list is not minimal");
    }
    for (size_t i = 0; i < pts.size(); ++i) {
        if (!(p.vertices()[i] == pts[i])) fail_config("polytope vertex list is not in canonical order");
    }
    return p;
}

} // namespace okb
