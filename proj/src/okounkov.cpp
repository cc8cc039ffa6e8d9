#include "okbody/okounkov.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace okb {

bool value_less(const ValVec& a, const ValVec& b) {
    if (a.size() != b.size()) fail_config("valuation vector length mismatch");
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

namespace {

ValVec value_min(const ValVec& a, const ValVec& b) {
    return value_less(b, a) ? b : a;
}

ValVec add_vals(const ValVec& a, const ValVec& b) {
    ValVec out(a);
    for (size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

void check_projective_section(const ProjectiveModel& p, const MultiPoly& s, int k) {
    if (k < 1) fail_config("level must be >= 1");
    if (s.num_vars() != p.n + 1) fail_config("section has the wrong number of variables");
    if (s.is_zero()) fail_config("the valuation is undefined at the zero section");
    if (!s.is_homogeneous() || s.degree() != p.d * k) {
        fail_config("section is not homogeneous of degree d * k");
    }
}

ValVec value_coordinate(const ProjectiveModel& p, const CoordinateFlag& f, const MultiPoly& s,
                        int k, Rat* leading = nullptr) {
    check_projective_section(p, s, k);
    size_t n = static_cast<size_t>(p.n);
    if (f.order.size() != n + 1) fail_config("coordinate flag order has the wrong length");
    // Restricting to z_{order[n]} = 0, then z_{order[n-1]} = 0, ... peels the
    // term whose reordered exponents (a_{order[n]}, ..., a_{order[1]}) are
    // lexicographically least.
    const MultiPoly::Expo* best = nullptr;
    const Rat* best_coeff = nullptr;
    for (const auto& [expo, coeff] : s.terms()) {
        if (!best) {
            best = &expo;
            best_coeff = &coeff;
            continue;
        }
        for (size_t i = n; i >= 1; --i) {
            int cur = expo[static_cast<size_t>(f.order[i])];
            int b = (*best)[static_cast<size_t>(f.order[i])];
            if (cur != b) {
                if (cur < b) {
                    best = &expo;
                    best_coeff = &coeff;
                }
                break;
            }
        }
    }
    ValVec v(n);
    for (size_t i = 1; i <= n; ++i) {
        v[i - 1] = (*best)[static_cast<size_t>(f.order[i])];
    }
    if (leading) *leading = *best_coeff;
    return v;
}

ValVec value_curve(const ProjectiveModel& p, const CurveFlag& f, const MultiPoly& s, int k,
                   Rat* leading = nullptr) {
    check_projective_section(p, s, k);
    auto [power, residual] = max_power_dividing(s, f.xi1);
    MultiPoly pb = pullback(residual, f.param);
    if (pb.is_zero()) {
        fail_internal("residual section vanishes on the flag curve; xi1 is not behaving "
                      "like an irreducible curve");
    }
    int ord = order_at_base_point(pb);
    if (leading) {
        for (const auto& [expo, coeff] : pb.terms()) {
            if (expo[1] == ord) *leading = coeff;
        }
    }
    return {ord, power};
}

// Integer inverse of the unimodular edge matrix (columns = edge directions).
std::vector<std::vector<long long>> edge_matrix_inverse(const ToricVertexFlag& f, int n) {
    QMat m(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            m.at(r, c) = Rat(f.edges[static_cast<size_t>(c)][static_cast<size_t>(r)]);
    std::vector<std::vector<long long>> inv(static_cast<size_t>(n),
                                            std::vector<long long>(static_cast<size_t>(n)));
    for (int c = 0; c < n; ++c) {
        QVec e = QVec::zeros(n);
        e[c] = 1;
        auto col = gauss_solve(m, e);
        if (!col) fail_config("edge matrix is singular");
        for (int r = 0; r < n; ++r) {
            if (!rat_is_integer((*col)[r])) {
                fail_config("edge matrix is not unimodular");
            }
            inv[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                static_cast<long long>(rat_num((*col)[r]));
        }
    }
    return inv;
}

ValVec toric_monomial_value(const ToricModel& t, const ToricVertexFlag& f,
                            const std::vector<std::vector<long long>>& minv,
                            const std::vector<long long>& m, int k) {
    ValVec v(static_cast<size_t>(t.n), 0);
    for (int r = 0; r < t.n; ++r) {
        long long s = 0;
        for (int c = 0; c < t.n; ++c) {
            s += minv[static_cast<size_t>(r)][static_cast<size_t>(c)] *
                 (m[static_cast<size_t>(c)] - static_cast<long long>(k) * f.vertex[static_cast<size_t>(c)]);
        }
        v[static_cast<size_t>(r)] = s;
    }
    return v;
}

ValVec value_toric(const ToricModel& t, const ToricVertexFlag& f, const LaurentSection& s, int k,
                   Rat* leading = nullptr) {
    if (k < 1) fail_config("level must be >= 1");
    if (s.empty()) fail_config("the valuation is undefined at the zero section");
    auto minv = edge_matrix_inverse(f, t.n);
    bool have = false;
    ValVec best;
    Rat best_coeff;
    for (const auto& [m, coeff] : s) {
        if (coeff == 0) fail_config("Laurent section carries an explicit zero coefficient");
        if (!toric_contains_lattice_point(t, m, k)) {
            fail_config("Laurent section support leaves the level-k polytope");
        }
        ValVec v = toric_monomial_value(t, f, minv, m, k);
        if (!have || value_less(v, best)) {
            have = true;
            best = v;
            best_coeff = coeff;
        }
    }
    if (leading) *leading = best_coeff;
    return best;
}

struct FamilyRefs {
    const ProjectiveModel* proj = nullptr;
    const ToricModel* toric = nullptr;
    const CoordinateFlag* coord = nullptr;
    const CurveFlag* curve = nullptr;
    const ToricVertexFlag* vertex = nullptr;
};

FamilyRefs family(const Model& model, const FlagSpec& flag) {
    FamilyRefs r;
    r.proj = std::get_if<ProjectiveModel>(&model);
    r.toric = std::get_if<ToricModel>(&model);
    r.coord = std::get_if<CoordinateFlag>(&flag);
    r.curve = std::get_if<CurveFlag>(&flag);
    r.vertex = std::get_if<ToricVertexFlag>(&flag);
    if (r.proj && r.vertex) fail_config("toric vertex flag paired with a projective model");
    if (r.toric && !r.vertex) fail_config("toric models take toric vertex flags");
    return r;
}

std::vector<MultiPoly> monomials_of_degree(int vars, int deg) {
    std::vector<MultiPoly> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int deg_left) -> void {
        if (left == 1) {
            cur.push_back(deg_left);
            out.push_back(MultiPoly::monomial(cur, Rat(1)));
            cur.pop_back();
            return;
        }
        for (int e = 0; e <= deg_left; ++e) {
            cur.push_back(e);
            self(self, left - 1, deg_left - e);
            cur.pop_back();
        }
    };
    rec(rec, vars, deg);
    return out;
}

// Valuation image of a curve flag, stratified by the power of xi1: sections
// with v_2 = i are xi1^i * r with r of degree d*k - i*deg(xi1) not vanishing
// on the curve, and the reachable orders of phi^*(r) are the pivots of an
// order-triangularization of the pulled-back monomial basis. This is the
// value -> element elimination run stratum by stratum on pullback
// coefficient vectors; every value stays inside the componentwise box
// [0, k*b], which we assert.
std::vector<ValVec> image_curve(const ProjectiveModel& p, const CurveFlag& f, int k) {
    int e1 = f.xi1.degree();
    int e = f.param.degree();
    long long b = static_cast<long long>(p.d) * e;
    long long bound = b * k;

    // Incremental powers of the parametrization components.
    std::vector<std::vector<MultiPoly>> pw(3);
    for (size_t j = 0; j < 3; ++j) pw[j].push_back(MultiPoly::constant(2, Rat(1)));
    auto comp_power = [&](size_t j, int a) -> const MultiPoly& {
        while (static_cast<int>(pw[j].size()) <= a) {
            pw[j].push_back(multiply(pw[j].back(), f.param.components()[j]));
        }
        return pw[j][static_cast<size_t>(a)];
    };

    std::vector<ValVec> values;
    long long found = 0;
    for (int i = 0; i * e1 <= p.d * k; ++i) {
        int deg = p.d * k - i * e1;
        int width = e * deg + 1;
        // slots: lowest t-order -> reduced coefficient vector
        std::map<int, std::vector<Rat>> slots;
        for (const auto& mono : monomials_of_degree(3, deg)) {
            const auto& expo = mono.terms().begin()->first;
            MultiPoly pb = multiply(comp_power(0, expo[0]),
                                    multiply(comp_power(1, expo[1]), comp_power(2, expo[2])));
            std::vector<Rat> vec(static_cast<size_t>(width), Rat(0));
            for (const auto& [pe, pc] : pb.terms()) vec[static_cast<size_t>(pe[1])] = pc;
            for (;;) {
                int ord = -1;
                for (int c = 0; c < width; ++c) {
                    if (vec[static_cast<size_t>(c)] != 0) { ord = c; break; }
                }
                if (ord < 0) break; // vanishes on the curve; counted in a later stratum
                auto it = slots.find(ord);
                if (it == slots.end()) {
                    slots.emplace(ord, std::move(vec));
                    if (ord > bound || i > bound) fail_internal("valuation escaped the degree bound");
                    values.push_back({ord, i});
                    ++found;
                    break;
                }
                Rat ratio = vec[static_cast<size_t>(ord)] / it->second[static_cast<size_t>(ord)];
                for (int c = ord; c < width; ++c) {
                    vec[static_cast<size_t>(c)] -= ratio * it->second[static_cast<size_t>(c)];
                }
            }
        }
    }
    if (found != hilbert_dim(Model(p), k)) {
        fail_internal("valuation image cardinality disagrees with the section space dimension");
    }
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<ValVec> image_coordinate(const ProjectiveModel& p, const CoordinateFlag& f, int k) {
    std::vector<ValVec> values;
    std::set<ValVec> seen;
    for (const auto& mono : basis_of_level(Model(p), k).sections) {
        ValVec v = value_coordinate(p, f, mono, k);
        if (!seen.insert(v).second) fail_internal("coordinate flag values collided on the basis");
        values.push_back(std::move(v));
    }
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<ValVec> image_toric(const ToricModel& t, const ToricVertexFlag& f, int k) {
    auto minv = edge_matrix_inverse(f, t.n);
    std::vector<ValVec> values;
    std::set<ValVec> seen;
    for (const auto& m : basis_of_level(Model(t), k).lattice) {
        ValVec v = toric_monomial_value(t, f, minv, m, k);
        if (!seen.insert(v).second) fail_internal("toric flag values collided on the basis");
        values.push_back(std::move(v));
    }
    std::sort(values.begin(), values.end());
    return values;
}

} // namespace

ValVec valuation(const Model& model, const FlagSpec& flag, const MultiPoly& s, int k) {
    FamilyRefs r = family(model, flag);
    if (r.coord) return value_coordinate(*r.proj, *r.coord, s, k);
    if (r.curve) return value_curve(*r.proj, *r.curve, s, k);
    fail_config("polynomial sections belong to projective models");
}

ValVec valuation(const Model& model, const FlagSpec& flag, const LaurentSection& s, int k) {
    FamilyRefs r = family(model, flag);
    if (r.vertex) return value_toric(*r.toric, *r.vertex, s, k);
    fail_config("Laurent sections belong to toric models");
}

std::vector<ValVec> valuation_image(const Model& model, const FlagSpec& flag, int k) {
    if (k < 1) fail_config("level must be >= 1");
    FamilyRefs r = family(model, flag);
    if (r.coord) return image_coordinate(*r.proj, *r.coord, k);
    if (r.curve) return image_curve(*r.proj, *r.curve, k);
    return image_toric(*r.toric, *r.vertex, k);
}

Json SemigroupSample::to_json() const {
    Json levels_json = Json::object();
    for (const auto& [k, vals] : levels) {
        Json arr = Json::array();
        for (const auto& v : vals) arr.push_back(v);
        levels_json[std::to_string(k)] = std::move(arr);
    }
    return Json{{"n", n}, {"max_level", max_level}, {"levels", std::move(levels_json)}};
}

SemigroupSample enumerate_semigroup(const Model& model, const FlagSpec& flag, int max_level) {
    if (max_level < 1) fail_config("max level must be >= 1");
    SemigroupSample s;
    s.n = model_dim(model);
    s.max_level = max_level;
    for (int k = 1; k <= max_level; ++k) {
        s.levels[k] = valuation_image(model, flag, k);
    }
    return s;
}

VPolytope body_approx(const SemigroupSample& sample) {
    std::vector<QVec> pts;
    for (const auto& [k, vals] : sample.levels) {
        for (const auto& v : vals) {
            std::vector<Rat> coords;
            coords.reserve(v.size());
            for (long long x : v) coords.push_back(Rat(x) / k);
            pts.emplace_back(std::move(coords));
        }
    }
    if (pts.empty()) fail_config("semigroup sample carries no levels");
    return VPolytope::from_points(pts);
}

namespace {

VPolytope standard_prediction(int n, long long b) {
    std::vector<QVec> pts;
    pts.push_back(QVec::zeros(n));
    for (int i = 0; i < n; ++i) {
        QVec v = QVec::zeros(n);
        v[i] = i == 0 ? Rat(b) : Rat(1);
        pts.push_back(std::move(v));
    }
    return VPolytope::from_points(pts);
}

} // namespace

TheoremPrediction predicted_body(const Model& model, const FlagSpec& flag) {
    FamilyRefs r = family(model, flag);
    if (r.coord) {
        if (r.proj->d != 1) {
            fail_hypothesis("the theorem covers coordinate flags for the bundle O(1); "
                            "this model carries O(" + std::to_string(r.proj->d) + ")");
        }
        return {1, standard_prediction(r.proj->n, 1)};
    }
    if (r.curve) {
        if (r.curve->xi1.degree() != r.proj->d) {
            fail_hypothesis("the theorem covers curve flags with deg(xi1) = d; got deg(xi1) = " +
                            std::to_string(r.curve->xi1.degree()) + " on O(" +
                            std::to_string(r.proj->d) + ")");
        }
        long long b = static_cast<long long>(r.proj->d) * r.curve->param.degree();
        return {b, standard_prediction(r.proj->n, b)};
    }
    fail_hypothesis("toric vertex flags are not of the theorem's distinguished shape; "
                    "their bodies are computed directly instead");
}

Json TheoremReport::to_json() const {
    return Json{{"K", max_level},
                {"b", b},
                {"predicted", predicted.to_json()},
                {"body", body.to_json()},
                {"contained", contained},
                {"equal", equal},
                {"e1_gap", rat_to_string(e1_gap)}};
}

TheoremReport verify_theorem(const Model& model, const FlagSpec& flag, int max_level) {
    TheoremPrediction pred = predicted_body(model, flag);
    VPolytope body = body_approx(enumerate_semigroup(model, flag, max_level));
    bool contained = pred.simplex.contains(body);
    bool equal = body.equals(pred.simplex);
    Rat reach(0);
    for (const auto& v : body.vertices()) reach = std::max(reach, v[0]);
    return TheoremReport{max_level,         pred.b, std::move(body), std::move(pred.simplex),
                         contained,         equal,  Rat(pred.b) - reach};
}

Json ScalingReport::to_json() const {
    return Json{{"m", m},
                {"max_level", max_level},
                {"reindexed_body", reindexed.to_json()},
                {"scaled_base_body", scaled_base.to_json()},
                {"equal", equal}};
}

ScalingReport scaling_check(const Model& model, const FlagSpec& flag, int m, int max_level) {
    if (m < 1) fail_config("reindexing factor must be >= 1");
    if (max_level < 1) fail_config("max level must be >= 1");
    Model reindexed = model;
    FlagSpec reflag = flag;
    if (const auto* p = std::get_if<ProjectiveModel>(&model)) {
        reindexed = make_projective(p->n, p->d * m);
    } else {
        const auto& t = std::get<ToricModel>(model);
        std::vector<std::vector<long long>> verts;
        for (auto v : t.vertices) {
            for (auto& x : v) x *= m;
            verts.push_back(std::move(v));
        }
        reindexed = make_toric(verts);
        auto f = std::get<ToricVertexFlag>(flag);
        for (auto& x : f.vertex) x *= m;
        reflag = f;
    }
    VPolytope re_body = body_approx(enumerate_semigroup(reindexed, reflag, max_level));
    VPolytope base_body =
        body_approx(enumerate_semigroup(model, flag, m * max_level)).scaled(Rat(m));
    bool equal = re_body.equals(base_body);
    return ScalingReport{m, max_level, std::move(re_body), std::move(base_body), equal};
}

Json DecompositionResult::to_json() const {
    Json verts = Json::array();
    for (const auto& v : simplex_vertices) verts.push_back(v);
    Json coeffs = Json::array();
    for (const auto& c : coefficients) coeffs.push_back(rat_to_string(c));
    return Json{{"k", k},
                {"a", a},
                {"b", b},
                {"simplex_vertices", std::move(verts)},
                {"coefficients", std::move(coeffs)}};
}

DecompositionResult decompose(const Model& model, const FlagSpec& flag, const ValVec& a, long long k) {
    TheoremPrediction pred = predicted_body(model, flag);
    int n = model_dim(model);
    if (static_cast<int>(a.size()) != n) fail_config("valuation vector has the wrong length");
    if (k < 1) fail_config("level must be >= 1");
    for (long long x : a) {
        if (x < 0) fail_config("valuation vectors have nonnegative entries");
    }
    long long tail = 0;
    for (size_t i = 1; i < a.size(); ++i) tail += a[i];
    long long p = k - tail;
    if (p < 0) {
        fail_config("violates effectivity: k - sum_{i>=2} a_i = " + std::to_string(p) + " < 0");
    }
    Rat x1 = Rat(a[0]) / pred.b;
    Rat x0 = Rat(p) - x1;
    if (x0 < 0) {
        fail_config("point outside predicted simplex: a_1 = " + std::to_string(a[0]) +
                    " exceeds b * (k - sum_{i>=2} a_i) = " + std::to_string(pred.b * p));
    }
    DecompositionResult res;
    res.k = k;
    res.a = a;
    res.b = pred.b;
    res.simplex_vertices.push_back(ValVec(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        ValVec v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(i)] = i == 0 ? pred.b : 1;
        res.simplex_vertices.push_back(std::move(v));
    }
    res.coefficients.push_back(x0);
    res.coefficients.push_back(x1);
    for (size_t i = 1; i < a.size(); ++i) res.coefficients.emplace_back(a[i]);
    // Re-verify: weights sum to k and recombine to a.
    Rat total(0);
    std::vector<Rat> combo(static_cast<size_t>(n), Rat(0));
    for (size_t i = 0; i < res.coefficients.size(); ++i) {
        if (res.coefficients[i] < 0) fail_internal("negative decomposition weight");
        total += res.coefficients[i];
        for (int c = 0; c < n; ++c) {
            combo[static_cast<size_t>(c)] +=
                res.coefficients[i] * Rat(res.simplex_vertices[i][static_cast<size_t>(c)]);
        }
    }
    if (total != k) fail_internal("decomposition weights do not sum to the level");
    for (int c = 0; c < n; ++c) {
        if (combo[static_cast<size_t>(c)] != Rat(a[static_cast<size_t>(c)])) {
            fail_internal("decomposition does not recombine to the sample point");
        }
    }
    return res;
}

Json LemmaWitness::to_json() const {
    return Json{{"c", rat_to_string(c)},
                {"b", b},
                {"m", m},
                {"v1", v1},
                {"N", big_n},
                {"level", static_cast<long long>(m) * big_n},
                {"section", poly_to_string(section, ambient_var_names(2))},
                {"value", value}};
}

LemmaWitness lemma_witness(const Model& model, const FlagSpec& flag, const Rat& c, int max_m) {
    FamilyRefs r = family(model, flag);
    if (!r.curve) fail_hypothesis("lemma witnesses are computed on curve flags");
    if (max_m < 1) fail_config("witness search cap must be >= 1");
    long long b = static_cast<long long>(r.proj->d) * r.curve->param.degree();
    if (!(c > 0) || !(c < b)) {
        fail_config("c must lie in the open interval (0, " + std::to_string(b) + ")");
    }
    int m = 0;
    long long v1 = 0;
    for (int cand = 1; cand <= max_m; ++cand) {
        Int lo = rat_floor(c * cand);
        long long candidate = static_cast<long long>(lo) + 1;
        if (Rat(candidate) < Rat(b) * cand) {
            m = cand;
            v1 = candidate;
            break;
        }
    }
    if (m == 0) {
        fail_config("witness search exceeded the m cap (" + std::to_string(max_m) +
                    "): no integer v1 with c < v1/m < b");
    }
    constexpr int kPowerCap = 16;
    for (int N = 1; N <= kPowerCap; ++N) {
        int level = m * N;
        QMat rest = restriction_matrix(model, flag, level);
        QVec target = QVec::zeros(rest.cols());
        target[static_cast<int>(N * v1)] = 1;
        auto sol = gauss_solve(rest.transposed(), target);
        if (!sol) continue;
        LevelBasis basis = basis_of_level(model, level);
        MultiPoly lifted(3);
        for (size_t i = 0; i < basis.sections.size(); ++i) {
            if ((*sol)[static_cast<int>(i)] == 0) continue;
            lifted = lifted + basis.sections[i].scaled((*sol)[static_cast<int>(i)]);
        }
        ValVec got = valuation(model, flag, lifted, level);
        if (got != ValVec{N * v1, 0}) {
            fail_internal("lifted section does not realize the target valuation");
        }
        return LemmaWitness{c, b, m, v1, N, std::move(lifted), std::move(got)};
    }
    fail_internal("no restriction lift found up to the power cap");
}

std::vector<VolumeRow> volume_vs_hilbert(const Model& model, const FlagSpec& flag, int max_level) {
    if (max_level < 1) fail_config("max level must be >= 1");
    int n = model_dim(model);
    std::vector<VolumeRow> rows;
    std::vector<QVec> carry; // hull vertices accumulated so far
    for (int k = 1; k <= max_level; ++k) {
        std::vector<QVec> pts = carry;
        for (const auto& v : valuation_image(model, flag, k)) {
            std::vector<Rat> coords;
            for (long long x : v) coords.push_back(Rat(x) / k);
            pts.emplace_back(std::move(coords));
        }
        VPolytope body = VPolytope::from_points(pts);
        carry = body.vertices();
        VolumeRow row;
        row.k = k;
        row.dim = hilbert_dim(model, k);
        Int kn(1);
        for (int i = 0; i < n; ++i) kn *= k;
        row.dim_over_kn = Rat(row.dim) / Rat(kn);
        row.volume = body.volume();
        rows.push_back(std::move(row));
    }
    return rows;
}

Json volume_table_json(const std::vector<VolumeRow>& rows, int max_level, bool decimal) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json row{{"k", r.k},
                 {"dim", r.dim},
                 {"dim_over_k_n", rat_to_string(r.dim_over_kn)},
                 {"volume", rat_to_string(r.volume)}};
        if (decimal) {
            row["dim_over_k_n_decimal"] = rat_to_decimal(r.dim_over_kn, 6);
            row["volume_decimal"] = rat_to_decimal(r.volume, 6);
        }
        arr.push_back(std::move(row));
    }
    return Json{{"max_level", max_level}, {"rows", std::move(arr)}};
}

std::string volume_table_csv(const std::vector<VolumeRow>& rows, bool decimal) {
    std::string out = "k,dim_over_k_n,volume";
    if (decimal) out += ",dim_over_k_n_decimal,volume_decimal";
    out += "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.k) + "," + rat_to_string(r.dim_over_kn) + "," +
               rat_to_string(r.volume);
        if (decimal) {
            out += "," + rat_to_decimal(r.dim_over_kn, 6) + "," + rat_to_decimal(r.volume, 6);
        }
        out += "\n";
    }
    return out;
}

Json AxiomReport::to_json() const {
    Json v = Json::array();
    for (const auto& s : violations) v.push_back(s);
    return Json{{"trials", trials},
                {"seed", seed},
                {"max_level", max_level},
                {"products_checked", products_checked},
                {"sums_checked", sums_checked},
                {"violations", std::move(v)}};
}

namespace {

long long rng_below(std::mt19937_64& gen, long long n) {
    // Deterministic across platforms; the slight modulo bias is irrelevant.
    return static_cast<long long>(gen() % static_cast<unsigned long long>(n));
}

Rat random_coeff(std::mt19937_64& gen) {
    Rat c(1 + rng_below(gen, 3));
    return rng_below(gen, 2) ? Rat(-c) : c;
}

MultiPoly random_poly_section(std::mt19937_64& gen, const std::vector<MultiPoly>& basis) {
    MultiPoly out(basis[0].num_vars());
    for (const auto& mono : basis) {
        if (rng_below(gen, 2)) out = out + mono.scaled(random_coeff(gen));
    }
    if (out.is_zero()) {
        out = basis[static_cast<size_t>(rng_below(gen, static_cast<long long>(basis.size())))];
    }
    return out;
}

LaurentSection random_laurent_section(std::mt19937_64& gen,
                                      const std::vector<std::vector<long long>>& lattice) {
    LaurentSection out;
    for (const auto& m : lattice) {
        if (rng_below(gen, 2)) out[m] = random_coeff(gen);
    }
    if (out.empty()) {
        out[lattice[static_cast<size_t>(rng_below(gen, static_cast<long long>(lattice.size())))]] = 1;
    }
    return out;
}

LaurentSection laurent_multiply(const LaurentSection& a, const LaurentSection& b) {
    LaurentSection out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            std::vector<long long> m(ma);
            for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            Rat& slot = out[m];
            slot += ca * cb;
            if (slot == 0) out.erase(m);
        }
    }
    return out;
}

LaurentSection laurent_add(const LaurentSection& a, const LaurentSection& b) {
    LaurentSection out = a;
    for (const auto& [m, c] : b) {
        Rat& slot = out[m];
        slot += c;
        if (slot == 0) out.erase(m);
    }
    return out;
}

std::string laurent_to_string(const LaurentSection& s) {
    std::string out;
    for (const auto& [m, c] : s) {
        if (!out.empty()) out += " + ";
        out += rat_to_string(c) + "*x^(";
        for (size_t i = 0; i < m.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(m[i]);
        }
        out += ")";
    }
    return out.empty() ? "0" : out;
}

std::string vals_to_string(const ValVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

} // namespace

AxiomReport valuation_axiom_check(const Model& model, const FlagSpec& flag, int trials,
                                  unsigned long long seed, int max_level) {
    if (trials < 1) fail_config("axiom check needs at least one trial");
    if (max_level < 1) fail_config("max level must be >= 1");
    FamilyRefs refs = family(model, flag);
    AxiomReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.max_level = max_level;
    std::mt19937_64 gen(seed);
    std::map<int, LevelBasis> bases;
    auto level_basis = [&](int k) -> const LevelBasis& {
        auto it = bases.find(k);
        if (it == bases.end()) it = bases.emplace(k, basis_of_level(model, k)).first;
        return it->second;
    };
    for (int trial = 0; trial < trials; ++trial) {
        int k = 1 + static_cast<int>(rng_below(gen, max_level));
        if (refs.proj) {
            const auto& basis = level_basis(k).sections;
            MultiPoly f = random_poly_section(gen, basis);
            MultiPoly g = random_poly_section(gen, basis);
            ValVec vf = valuation(model, flag, f, k);
            ValVec vg = valuation(model, flag, g, k);
            ValVec vfg = valuation(model, flag, multiply(f, g), 2 * k);
            ++rep.products_checked;
            if (vfg != add_vals(vf, vg)) {
                rep.violations.push_back(
                    "v(fg) != v(f)+v(g) at level " + std::to_string(k) + ": f = " +
                    poly_to_string(f, ambient_var_names(refs.proj->n)) + ", g = " +
                    poly_to_string(g, ambient_var_names(refs.proj->n)) + ", v(fg) = " +
                    vals_to_string(vfg));
            }
            MultiPoly h = f + g;
            if (!h.is_zero()) {
                ++rep.sums_checked;
                ValVec vh = valuation(model, flag, h, k);
                if (value_less(vh, value_min(vf, vg))) {
                    rep.violations.push_back(
                        "v(f+g) < min(v(f), v(g)) at level " + std::to_string(k) + ": f = " +
                        poly_to_string(f, ambient_var_names(refs.proj->n)) + ", g = " +
                        poly_to_string(g, ambient_var_names(refs.proj->n)));
                }
            }
        } else {
            const auto& lattice = level_basis(k).lattice;
            LaurentSection f = random_laurent_section(gen, lattice);
            LaurentSection g = random_laurent_section(gen, lattice);
            ValVec vf = valuation(model, flag, f, k);
            ValVec vg = valuation(model, flag, g, k);
            ValVec vfg = valuation(model, flag, laurent_multiply(f, g), 2 * k);
            ++rep.products_checked;
            if (vfg != add_vals(vf, vg)) {
                rep.violations.push_back("v(fg) != v(f)+v(g) at level " + std::to_string(k) +
                                         ": f = " + laurent_to_string(f) +
                                         ", g = " + laurent_to_string(g));
            }
            LaurentSection h = laurent_add(f, g);
            if (!h.empty()) {
                ++rep.sums_checked;
                ValVec vh = valuation(model, flag, h, k);
                if (value_less(vh, value_min(vf, vg))) {
                    rep.violations.push_back("v(f+g) < min(v(f), v(g)) at level " +
                                             std::to_string(k) + ": f = " + laurent_to_string(f) +
                                             ", g = " + laurent_to_string(g));
                }
            }
        }
    }
    return rep;
}

} // namespace okb
