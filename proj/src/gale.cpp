#include "hypercross/gale.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypercross/lp.hpp"

namespace hypercross {

VectorConfiguration::VectorConfiguration(int k, std::vector<Vec> v)
    : dim(k), vectors(std::move(v)) {
    if (dim < 1) throw std::invalid_argument("VectorConfiguration: dimension must be >= 1");
    for (const auto& g : vectors)
        if (static_cast<int>(g.size()) != dim)
            throw std::invalid_argument("VectorConfiguration: vector dimension mismatch");
}

VectorConfiguration gale_transform(const PointConfiguration& cfg) {
    const int d = cfg.dim;
    const int n = cfg.size();
    if (n < d + 2) throw std::invalid_argument("gale_transform: need n >= d + 2");

    Mat m(d + 1, Vec(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < d; ++i) m[i][j] = cfg.points[j][i];
        m[d][j] = 1;
    }
    std::vector<Vec> basis = null_space(m);
    if (static_cast<int>(basis.size()) != n - d - 1)
        throw std::invalid_argument(
            "gale_transform: affinely degenerate input (null space dimension != n-d-1)");

    const int k = n - d - 1;
    std::vector<Vec> vectors(n, Vec(k));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < k; ++r) vectors[i][r] = basis[r][i];
    return VectorConfiguration(k, std::move(vectors));
}

bool validate_gale(const VectorConfiguration& vc) {
    if (vc.vectors.empty()) return false;
    Vec sum(vc.dim, Rat(0));
    Mat m(vc.dim, Vec(vc.size()));
    for (int i = 0; i < vc.size(); ++i) {
        for (int r = 0; r < vc.dim; ++r) {
            sum[r] += vc.vectors[i][r];
            m[r][i] = vc.vectors[i][r];
        }
    }
    for (const Rat& s : sum)
        if (s != 0) return false;
    return rank(std::move(m)) == vc.dim;
}

namespace {

Vec cross3(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat dot(const Vec& a, const Vec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace

Vec balanced_split_direction(const VectorConfiguration& vc) {
    if (vc.dim != 3 || vc.size() != 8)
        throw std::invalid_argument("balanced_split_direction: need 8 vectors in R^3");
    for (const auto& g : vc.vectors)
        if (is_zero(g))
            throw std::invalid_argument(
                "balanced_split_direction: zero vector (source points not in general position)");

    const auto& g = vc.vectors;
    const Vec e1{Rat(1), Rat(0), Rat(0)}, e2{Rat(0), Rat(1), Rat(0)}, e3{Rat(0), Rat(0), Rat(1)};

    // Candidate directions live on the cone edges g_i x g_j, nudged into
    // the four adjacent sign cells by tangential perturbations and, at the
    // deepest levels, by the standard basis so no dot product stays zero.
    // Signs are evaluated lexicographically across the levels and the
    // chosen candidate is materialized with concrete epsilons afterwards.
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            const Vec p = cross3(g[i], g[j]);
            if (is_zero(p)) continue;
            const Vec t1 = cross3(p, g[j]);  // controls the sign on g[i]
            const Vec t2 = cross3(p, g[i]);  // controls the sign on g[j]
            for (int s1 : {1, -1}) {
                for (int s2 : {1, -1}) {
                    std::vector<Vec> levels{p, t1, t2, e1, e2, e3};
                    if (s1 < 0)
                        for (Rat& x : levels[1]) x = -x;
                    if (s2 < 0)
                        for (Rat& x : levels[2]) x = -x;

                    int positives = 0;
                    bool ok = true;
                    for (int k = 0; k < 8 && ok; ++k) {
                        int sign = 0;
                        for (const Vec& lv : levels) {
                            sign = sgn(dot(lv, g[k]));
                            if (sign != 0) break;
                        }
                        if (sign == 0) ok = false;  // g[k] = 0, already excluded
                        else if (sign > 0) ++positives;
                    }
                    if (!ok || positives != 4) continue;

                    // Materialize: w = p + sum_l eta^l levels[l]. eta small
                    // enough that the first nonzero level dominates the rest.
                    Rat max_abs = 0, min_nonzero = 0;
                    for (int k = 0; k < 8; ++k) {
                        for (const Vec& lv : levels) {
                            const Rat a = abs(dot(lv, g[k]));
                            if (a > max_abs) max_abs = a;
                            if (a != 0 && (min_nonzero == 0 || a < min_nonzero)) min_nonzero = a;
                        }
                    }
                    Rat eta = min_nonzero / (4 * max_abs + 1);
                    if (eta > Rat(1, 2)) eta = Rat(1, 2);
                    Vec w(3, Rat(0));
                    Rat scale = 1;
                    for (const Vec& lv : levels) {
                        for (int r = 0; r < 3; ++r) w[r] += scale * lv[r];
                        scale *= eta;
                    }

                    int check = 0;
                    bool nonzero = true;
                    for (int k = 0; k < 8; ++k) {
                        const int s = sgn(dot(w, g[k]));
                        if (s == 0) nonzero = false;
                        if (s > 0) ++check;
                    }
                    if (nonzero && check == 4) return w;
                }
            }
        }
    }
    throw std::invalid_argument(
        "balanced_split_direction: candidate sweep exhausted "
        "(vectors are not a Gale transform of points in general position)");
}

AffineGaleDiagram affine_gale_diagram(const VectorConfiguration& vc, const Vec& w) {
    if (vc.dim != 3 || static_cast<int>(w.size()) != 3)
        throw std::invalid_argument("affine_gale_diagram: need vectors and direction in R^3");

    const Rat ww = dot(w, w);
    if (ww == 0) throw std::invalid_argument("affine_gale_diagram: zero direction");

    // Rational basis (u, v) of the plane {x : w.x = 0}; the projection
    // plane is {x : w.x = 1} = w/(w.w) + span(u, v). Any rational basis
    // works because every downstream predicate is affine invariant.
    const std::vector<Vec> basis = null_space(Mat{w});
    if (basis.size() != 2) throw std::invalid_argument("affine_gale_diagram: bad direction");
    const Vec &u = basis[0], &v = basis[1];

    AffineGaleDiagram diagram;
    for (const Vec& gi : vc.vectors) {
        const Rat wg = dot(w, gi);
        if (wg == 0)
            throw std::invalid_argument("affine_gale_diagram: direction orthogonal to a vector");
        diagram.colors.push_back(wg > 0 ? Color::red : Color::blue);

        // Solve p0 + alpha u + beta v = gi / wg for (alpha, beta).
        Mat sys(3, Vec(3));
        for (int r = 0; r < 3; ++r) {
            sys[r][0] = u[r];
            sys[r][1] = v[r];
            sys[r][2] = gi[r] / wg - w[r] / ww;
        }
        rref(sys);
        if (sys[2][2] != 0)
            throw std::logic_error("affine_gale_diagram: projection left the plane");
        diagram.points.push_back(Point{sys[0][2], sys[1][2]});
    }
    return diagram;
}

long long count_proper_linear_separations(const VectorConfiguration& vc) {
    const int n = vc.size();
    if (n % 2 != 0)
        throw std::invalid_argument("count_proper_linear_separations: odd configuration");
    const int m = n / 2;
    const int k = vc.dim;

    auto side_separable = [&](const std::vector<bool>& in_s) {
        lp::Model model(k);
        for (int i = 0; i < n; ++i) {
            Vec row = vc.vectors[i];
            model.add_constraint(std::move(row), in_s[i] ? lp::Rel::ge : lp::Rel::le,
                                 in_s[i] ? Rat(1) : Rat(-1));
        }
        return model.feasible();
    };

    // Subsets containing index 0, so each unordered partition counts once.
    long long count = 0;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    for (;;) {
        if (idx[0] == 0) {
            std::vector<bool> in_s(n, false);
            for (int t : idx) in_s[t] = true;
            if (side_separable(in_s)) ++count;
        }
        int t = m - 1;
        while (t >= 0 && idx[t] == n - m + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int i = t + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
    }
    return count;
}

long long count_crossing_pairs(const PointConfiguration& cfg) {
    if (cfg.size() != 2 * cfg.dim)
        throw std::invalid_argument("count_crossing_pairs: need exactly 2d points in R^d");
    if (!is_general_position(cfg))
        throw std::invalid_argument("count_crossing_pairs: points not in general position");
    return count_proper_linear_separations(gale_transform(cfg));
}

}  // namespace hypercross
