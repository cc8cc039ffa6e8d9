#include "okbody/flags.hpp"

#include <algorithm>
#include <set>

namespace okb {

bool FlagValidationReport::ok() const {
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Fail) return false;
    }
    return true;
}

Json FlagValidationReport::to_json() const {
    Json arr = Json::array();
    for (const auto& c : checks) {
        const char* status = c.status == CheckStatus::Pass ? "pass"
                             : c.status == CheckStatus::Fail ? "fail"
                                                             : "user-asserted";
        Json entry{{"name", c.name}, {"status", status}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        arr.push_back(std::move(entry));
    }
    return Json{{"flag_kind", flag_kind}, {"ok", ok()}, {"checks", std::move(arr)}};
}

namespace {

void add(FlagValidationReport& r, const std::string& name, bool pass, const std::string& detail = "") {
    r.checks.push_back({name, pass ? CheckStatus::Pass : CheckStatus::Fail, pass ? "" : detail});
}

void validate_coordinate(const Model& model, const CoordinateFlag& f, FlagValidationReport& r) {
    const auto* p = std::get_if<ProjectiveModel>(&model);
    add(r, "model_is_projective", p != nullptr, "coordinate flags live on projective models");
    if (!p) return;
    add(r, "supported_dimension", p->n <= 3, "coordinate flags are supported for n <= 3");
    std::vector<int> sorted = f.order;
    std::sort(sorted.begin(), sorted.end());
    bool perm = static_cast<int>(f.order.size()) == p->n + 1;
    for (int i = 0; perm && i <= p->n; ++i) perm = sorted[static_cast<size_t>(i)] == i;
    add(r, "order_is_permutation", perm, "order must be a permutation of 0..n");
}

void validate_curve(const Model& model, const CurveFlag& f, FlagValidationReport& r) {
    const auto* p = std::get_if<ProjectiveModel>(&model);
    bool plane = p && p->n == 2;
    add(r, "model_is_projective_plane", plane, "curve flags live on P^2");
    if (!plane) return;

    bool xi_ok = !f.xi1.is_zero() && f.xi1.is_homogeneous() && f.xi1.degree() >= 1 &&
                 f.xi1.num_vars() == 3;
    add(r, "xi1_nonzero_homogeneous", xi_ok, "xi1 must be a nonzero homogeneous form in z0, z1, z2");
    if (!xi_ok) return;

    add(r, "param_target_is_plane", f.param.target_dim() == 2,
        "parametrization must have three components");
    if (f.param.target_dim() != 2) return;

    // The flag point is phi(1 : 0); some component must survive at t = 0.
    bool base_defined = false;
    for (const auto& comp : f.param.components()) {
        for (const auto& [e, c] : comp.terms()) {
            if (e[1] == 0) base_defined = true;
        }
    }
    add(r, "param_basepoint_defined", base_defined,
        "no component of the parametrization survives at t = 0");

    // Resultant-free sanity sweep: the components may not simultaneously
    // vanish at sampled parameter values (including u = 0).
    int e = f.param.degree();
    bool common_zero = false;
    auto all_vanish_at = [&](const Rat& uv, const Rat& tv) {
        for (const auto& comp : f.param.components()) {
            Rat val(0);
            for (const auto& [expo, c] : comp.terms()) {
                Rat term = c;
                for (int i = 0; i < expo[0]; ++i) term *= uv;
                for (int i = 0; i < expo[1]; ++i) term *= tv;
                val += term;
            }
            if (val != 0) return false;
        }
        return true;
    };
    if (all_vanish_at(Rat(0), Rat(1))) common_zero = true;
    for (int s = 1; s <= 2 * e + 1 && !common_zero; ++s) {
        if (all_vanish_at(Rat(1), Rat(s))) common_zero = true;
    }
    add(r, "param_no_common_zero_sampled", !common_zero,
        "parametrization components vanish simultaneously at a sampled point");

    add(r, "xi1_vanishes_on_curve", pullback(f.xi1, f.param).is_zero(),
        "xi1 does not pull back to zero under the parametrization");

    // Some level-1 monomial must pull back to a nonzero form of degree e*d.
    bool degree_ok = false;
    for (const auto& mono : basis_of_level(model, 1).sections) {
        MultiPoly pb = pullback(mono, f.param);
        if (pb.is_zero()) continue;
        degree_ok = pb.is_homogeneous() && pb.degree() == e * p->d;
        break;
    }
    add(r, "pullback_degree_consistent", degree_ok,
        "pullbacks of level-1 sections must be forms of degree deg(param) * d");

    // Smoothness: linear forms are smooth; a conic is smooth exactly when
    // its symmetric matrix has full rank; higher degrees are taken on trust.
    int deg = f.xi1.degree();
    if (deg == 1) {
        add(r, "xi1_smooth_irreducible", true);
    } else if (deg == 2) {
        QMat q(3, 3);
        for (const auto& [expo, c] : f.xi1.terms()) {
            for (int i = 0; i < 3; ++i) {
                if (expo[static_cast<size_t>(i)] == 2) q.at(i, i) = c;
                for (int j = i + 1; j < 3; ++j) {
                    if (expo[static_cast<size_t>(i)] == 1 && expo[static_cast<size_t>(j)] == 1) {
                        q.at(i, j) = c / 2;
                        q.at(j, i) = c / 2;
                    }
                }
            }
        }
        add(r, "xi1_smooth_irreducible", rank(q) == 3,
            "quadric xi1 is singular (symmetric matrix rank < 3)");
    } else {
        r.checks.push_back({"xi1_smooth_irreducible", CheckStatus::UserAsserted,
                            "smoothness and irreducibility of a degree >= 3 curve are asserted "
                            "by the configuration, not machine-checked"});
    }
}

long long dot_ll(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// det of a small integer matrix given as row vectors.
long long det_ll(const std::vector<std::vector<long long>>& rows) {
    size_t n = rows.size();
    if (n == 1) return rows[0][0];
    if (n == 2) return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
    long long d = 0;
    for (size_t c = 0; c < 3; ++c) {
        long long minor = rows[1][(c + 1) % 3] * rows[2][(c + 2) % 3] -
                          rows[1][(c + 2) % 3] * rows[2][(c + 1) % 3];
        d += rows[0][c] * minor;
    }
    return d;
}

void validate_toric(const Model& model, const ToricVertexFlag& f, FlagValidationReport& r) {
    const auto* t = std::get_if<ToricModel>(&model);
    add(r, "model_is_toric", t != nullptr, "toric vertex flags live on toric models");
    if (!t) return;

    size_t n = static_cast<size_t>(t->n);
    bool arity = f.vertex.size() == n && f.edges.size() == n;
    for (const auto& e : f.edges) arity = arity && e.size() == n;
    add(r, "vertex_and_edge_arity", arity, "vertex and edges must match the polytope dimension");
    if (!arity) return;

    bool is_vertex = std::find(t->vertices.begin(), t->vertices.end(), f.vertex) != t->vertices.end();
    add(r, "vertex_is_polytope_vertex", is_vertex, "flag vertex is not a vertex of the polytope");

    long long det = det_ll(f.edges);
    add(r, "edges_unimodular", det == 1 || det == -1,
        "edge matrix determinant is " + std::to_string(det) + ", expected +-1");
    if (!is_vertex || (det != 1 && det != -1)) return;

    // Every edge direction must point into the polytope at the vertex.
    bool tangent = true;
    for (const auto& fac : t->facets) {
        if (dot_ll(fac.a, f.vertex) != fac.b) continue; // facet not active at the vertex
        for (const auto& e : f.edges) {
            if (dot_ll(fac.a, e) > 0) tangent = false;
        }
    }
    add(r, "edges_point_into_polytope", tangent,
        "an edge direction leaves the polytope at the flag vertex");

    // The first j directions must span the tangent space of a j-face:
    // the facets active along them must still cut the right codimension.
    bool face_flag = true;
    for (size_t j = 1; j < n && face_flag; ++j) {
        std::vector<QVec> rows;
        for (const auto& fac : t->facets) {
            if (dot_ll(fac.a, f.vertex) != fac.b) continue;
            bool annihilates = true;
            for (size_t i = 0; i < j; ++i) {
                if (dot_ll(fac.a, f.edges[i]) != 0) annihilates = false;
            }
            if (!annihilates) continue;
            std::vector<Rat> row;
            for (long long x : fac.a) row.emplace_back(x);
            rows.emplace_back(std::move(row));
        }
        int got = rows.empty() ? 0 : rank(QMat(rows));
        if (got != static_cast<int>(n - j)) face_flag = false;
    }
    add(r, "edges_span_face_flag", face_flag,
        "edge directions do not cut out a flag of faces at the vertex");

    // First edge must reach another vertex after an integral number of steps.
    bool reach = false;
    if (tangent && face_flag) {
        std::vector<long long> x = f.vertex;
        for (int step = 1; step <= 1 << 20; ++step) {
            for (size_t c = 0; c < n; ++c) x[c] += f.edges[0][c];
            if (!toric_contains_lattice_point(*t, x, 1)) break;
            if (std::find(t->vertices.begin(), t->vertices.end(), x) != t->vertices.end()) {
                reach = true;
                break;
            }
        }
    }
    add(r, "first_edge_reaches_vertex", reach,
        "walking the first edge direction does not reach another vertex");
}

} // namespace

FlagValidationReport validate_flag(const Model& model, const FlagSpec& flag) {
    FlagValidationReport r;
    if (const auto* c = std::get_if<CoordinateFlag>(&flag)) {
        r.flag_kind = "coordinate";
        validate_coordinate(model, *c, r);
    } else if (const auto* c = std::get_if<CurveFlag>(&flag)) {
        r.flag_kind = "curve";
        validate_curve(model, *c, r);
    } else {
        r.flag_kind = "toric_vertex";
        validate_toric(model, std::get<ToricVertexFlag>(flag), r);
    }
    return r;
}

std::vector<std::pair<MultiPoly, std::vector<long long>>>
flag_vertex_sections(const Model& model, const FlagSpec& flag) {
    const auto* p = std::get_if<ProjectiveModel>(&model);
    std::vector<std::pair<MultiPoly, std::vector<long long>>> out;
    if (const auto* c = std::get_if<CoordinateFlag>(&flag)) {
        if (!p) fail_hypothesis("coordinate flags live on projective models");
        if (p->d != 1) {
            fail_hypothesis("flag vertex sections for a coordinate flag require the bundle O(1)");
        }
        for (int i = p->n; i >= 2; --i) {
            std::vector<int> expo(static_cast<size_t>(p->n) + 1, 0);
            expo[static_cast<size_t>(c->order[static_cast<size_t>(i)])] = 1;
            std::vector<long long> val(static_cast<size_t>(p->n), 0);
            val[static_cast<size_t>(i - 1)] = 1;
            out.emplace_back(MultiPoly::monomial(expo, Rat(1)), std::move(val));
        }
        return out;
    }
    if (const auto* c = std::get_if<CurveFlag>(&flag)) {
        if (!p) fail_hypothesis("curve flags live on projective models");
        if (c->xi1.degree() != p->d) {
            fail_hypothesis("flag vertex sections for a curve flag require deg(xi1) = d");
        }
        out.emplace_back(c->xi1, std::vector<long long>{0, 1});
        return out;
    }
    fail_hypothesis("flag vertex sections are polynomial data, available for projective models only");
}

long long restriction_degree(const Model& model, const FlagSpec& flag) {
    if (const auto* p = std::get_if<ProjectiveModel>(&model)) {
        if (std::get_if<CoordinateFlag>(&flag)) return p->d;
        if (const auto* c = std::get_if<CurveFlag>(&flag)) {
            return static_cast<long long>(p->d) * c->param.degree();
        }
        fail_config("flag kind does not match the projective model");
    }
    const auto& t = std::get<ToricModel>(model);
    const auto* f = std::get_if<ToricVertexFlag>(&flag);
    if (!f) fail_config("flag kind does not match the toric model");
    // Lattice length of the first edge: smallest facet bound along it.
    bool found = false;
    Rat best(0);
    for (const auto& fac : t.facets) {
        long long along = dot_ll(fac.a, f->edges[0]);
        if (along <= 0) continue;
        Rat reach = Rat(fac.b - dot_ll(fac.a, f->vertex)) / Rat(along);
        if (!found || reach < best) {
            best = reach;
            found = true;
        }
    }
    if (!found || best <= 0 || !rat_is_integer(best)) {
        fail_config("first edge direction has no integral positive reach in the polytope");
    }
    return static_cast<long long>(rat_num(best));
}

QMat restriction_matrix(const Model& model, const FlagSpec& flag, int j) {
    if (j < 1) fail_config("restriction matrix level must be >= 1");
    const auto* p = std::get_if<ProjectiveModel>(&model);
    const auto* c = std::get_if<CurveFlag>(&flag);
    if (!p || !c) fail_config("restriction matrix is defined for curve flags on projective models");
    int e = c->param.degree();
    int D = e * p->d * j;
    LevelBasis basis = basis_of_level(model, j);
    QMat m(static_cast<int>(basis.sections.size()), D + 1);
    for (size_t r = 0; r < basis.sections.size(); ++r) {
        MultiPoly pb = pullback(basis.sections[r], c->param);
        for (const auto& [expo, coeff] : pb.terms()) {
            m.at(static_cast<int>(r), expo[1]) = coeff;
        }
    }
    return m;
}

} // namespace okb
