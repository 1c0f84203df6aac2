#include "hypercross/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypercross/lp.hpp"

namespace hypercross {

Point point2(long long x, long long y) { return Point{Rat(x), Rat(y)}; }

Point point_of(const std::vector<long long>& c) {
    Point p;
    p.coords.reserve(c.size());
    for (long long v : c) p.coords.emplace_back(v);
    return p;
}

PointConfiguration::PointConfiguration(int d, std::vector<Point> pts)
    : dim(d), points(std::move(pts)) {
    if (dim < 1) throw std::invalid_argument("PointConfiguration: dimension must be >= 1");
    for (const auto& p : points)
        if (p.dim() != dim)
            throw std::invalid_argument("PointConfiguration: point dimension mismatch");
}

int orient(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("orient: no points");
    const int d = pts[0].dim();
    if (static_cast<int>(pts.size()) != d + 1)
        throw std::invalid_argument("orient: need exactly d+1 points in R^d");
    for (const auto& p : pts)
        if (p.dim() != d) throw std::invalid_argument("orient: dimension mismatch among inputs");

    if (d == 2) return orient2d(pts[0], pts[1], pts[2]);

    // Subtracting the last point reduces the homogeneous (d+1)x(d+1)
    // determinant to the d x d minor with cofactor sign +1. Column k is
    // pts[k] - pts[d].
    Mat m(d, Vec(d));
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i) m[i][k] = pts[k][i] - pts[d][i];
    return det_sign(std::move(m));
}

int orient2d(const Point& a, const Point& b, const Point& c) {
    const Rat det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    return sgn(det);
}

bool is_general_position(const PointConfiguration& cfg) {
    const int d = cfg.dim;
    const int n = cfg.size();
    if (n <= d) return true;

    std::vector<int> idx(d + 1);
    for (int i = 0; i <= d; ++i) idx[i] = i;
    std::vector<Point> subset(d + 1);
    for (;;) {
        for (int i = 0; i <= d; ++i) subset[i] = cfg.points[idx[i]];
        if (orient(subset) == 0) return false;
        // next (d+1)-combination of [0, n)
        int k = d;
        while (k >= 0 && idx[k] == n - (d + 1) + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int i = k + 1; i <= d; ++i) idx[i] = idx[i - 1] + 1;
    }
    return true;
}

std::vector<int> convex_hull_2d(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    for (const auto& p : pts)
        if (p.dim() != 2) throw std::invalid_argument("convex_hull_2d: points must be 2D");
    if (n == 1) return {0};

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return pts[i][0] < pts[j][0] || (pts[i][0] == pts[j][0] && pts[i][1] < pts[j][1]);
    });
    for (int i = 0; i + 1 < n; ++i)
        if (pts[order[i]] == pts[order[i + 1]])
            throw std::invalid_argument("convex_hull_2d: duplicate point");

    if (n == 2) return {order[0], order[1]};

    // Monotone chain with strict turns; a zero orientation means three
    // collinear inputs, which callers must have excluded.
    auto build = [&](bool lower) {
        std::vector<int> chain;
        for (int k = 0; k < n; ++k) {
            const int i = order[lower ? k : n - 1 - k];
            while (chain.size() >= 2) {
                const int o = orient2d(pts[chain[chain.size() - 2]], pts[chain.back()], pts[i]);
                if (o == 0)
                    throw std::invalid_argument("convex_hull_2d: three collinear points");
                if (o > 0) break;
                chain.pop_back();
            }
            chain.push_back(i);
        }
        return chain;
    };
    std::vector<int> lower = build(true), upper = build(false);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

namespace {

// Strict crossing of closed segments under general position: the only way
// two segments can meet is transversally in both interiors.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
    const int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool inside_hull(const Point& p, const std::vector<Point>& pts, const std::vector<int>& hull) {
    if (hull.size() < 3) return false;  // a point or segment has no interior point of X
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point& a = pts[hull[i]];
        const Point& b = pts[hull[(i + 1) % hull.size()]];
        if (orient2d(a, b, p) <= 0) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> hull_edges(const std::vector<int>& hull) {
    std::vector<std::pair<int, int>> e;
    if (hull.size() == 2) e.emplace_back(hull[0], hull[1]);
    else if (hull.size() >= 3)
        for (std::size_t i = 0; i < hull.size(); ++i)
            e.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
    return e;
}

}  // namespace

bool separable_2d(const std::vector<Point>& X, const std::vector<Point>& Y) {
    if (X.empty() || Y.empty())
        throw std::invalid_argument("separable_2d: empty side");
    for (const auto& x : X)
        for (const auto& y : Y)
            if (x == y) throw std::invalid_argument("separable_2d: shared point between X and Y");

    const std::vector<int> hx = convex_hull_2d(X), hy = convex_hull_2d(Y);
    for (const auto& [a, b] : hull_edges(hx))
        for (const auto& [c, d] : hull_edges(hy))
            if (segments_cross(X[a], X[b], Y[c], Y[d])) return false;
    if (inside_hull(X[0], Y, hy)) return false;
    if (inside_hull(Y[0], X, hx)) return false;
    return true;
}

bool strictly_separable(const std::vector<Point>& X, const std::vector<Point>& Y) {
    if (X.empty() || Y.empty())
        throw std::invalid_argument("strictly_separable: empty side");
    const int d = X[0].dim();
    for (const auto& p : X)
        if (p.dim() != d) throw std::invalid_argument("strictly_separable: dimension mismatch");
    for (const auto& p : Y)
        if (p.dim() != d) throw std::invalid_argument("strictly_separable: dimension mismatch");

    // Variables: w (d), c. Strict separation scales to margin-1 separation.
    lp::Model model(d + 1);
    for (const auto& p : X) {
        Vec row(d + 1, Rat(0));
        for (int i = 0; i < d; ++i) row[i] = p[i];
        row[d] = -1;
        model.add_constraint(std::move(row), lp::Rel::ge, 1);
    }
    for (const auto& p : Y) {
        Vec row(d + 1, Rat(0));
        for (int i = 0; i < d; ++i) row[i] = p[i];
        row[d] = -1;
        model.add_constraint(std::move(row), lp::Rel::le, -1);
    }
    return model.feasible();
}

namespace {

lp::Result interior_lp(const std::vector<Point>& A, const std::vector<Point>& B) {
    if (A.empty() || A.size() != B.size())
        throw std::invalid_argument("strict_interior_intersect: need |A| = |B| = d");
    const int d = A[0].dim();
    if (static_cast<int>(A.size()) != d)
        throw std::invalid_argument("strict_interior_intersect: need |A| = |B| = d");

    std::vector<Point> all;
    all.insert(all.end(), A.begin(), A.end());
    all.insert(all.end(), B.begin(), B.end());
    for (const auto& p : all)
        if (p.dim() != d)
            throw std::invalid_argument("strict_interior_intersect: dimension mismatch");
    for (const auto& a : A)
        for (const auto& b : B)
            if (a == b)
                throw std::invalid_argument("strict_interior_intersect: shared vertex");
    if (!is_general_position(PointConfiguration(d, all)))
        throw std::invalid_argument("strict_interior_intersect: points not in general position");

    // Substituting lambda_i = t + u_i, mu_j = t + v_j (u, v >= 0, t free)
    // turns the strict LP into standard inequalities. Variables: t, u, v.
    const int nv = 1 + 2 * d;
    lp::Model model(nv);
    for (int coord = 0; coord < d; ++coord) {
        Vec row(nv, Rat(0));
        Rat tcoef = 0;
        for (int i = 0; i < d; ++i) {
            row[1 + i] = A[i][coord];
            tcoef += A[i][coord];
        }
        for (int j = 0; j < d; ++j) {
            row[1 + d + j] = -B[j][coord];
            tcoef -= B[j][coord];
        }
        row[0] = tcoef;
        model.add_constraint(std::move(row), lp::Rel::eq, 0);
    }
    {
        Vec row(nv, Rat(0));
        row[0] = d;
        for (int i = 0; i < d; ++i) row[1 + i] = 1;
        model.add_constraint(std::move(row), lp::Rel::eq, 1);
    }
    {
        Vec row(nv, Rat(0));
        row[0] = d;
        for (int j = 0; j < d; ++j) row[1 + d + j] = 1;
        model.add_constraint(std::move(row), lp::Rel::eq, 1);
    }
    for (int i = 1; i < nv; ++i) {
        Vec row(nv, Rat(0));
        row[i] = 1;
        model.add_constraint(std::move(row), lp::Rel::ge, 0);
    }

    Vec obj(nv, Rat(0));
    obj[0] = 1;
    return model.maximize(obj);
}

}  // namespace

bool strict_interior_intersect(const std::vector<Point>& A, const std::vector<Point>& B) {
    const lp::Result r = interior_lp(A, B);
    // Infeasible means even the affine hulls miss each other.
    return r.status == lp::Status::optimal && r.objective > 0;
}

std::optional<InteriorWitness> strict_interior_witness(const std::vector<Point>& A,
                                                       const std::vector<Point>& B) {
    const lp::Result r = interior_lp(A, B);
    if (r.status != lp::Status::optimal || r.objective <= 0) return std::nullopt;
    const int d = static_cast<int>(A.size());
    InteriorWitness w;
    const Rat& t = r.x[0];
    for (int i = 0; i < d; ++i) w.lambda.push_back(t + r.x[1 + i]);
    for (int j = 0; j < d; ++j) w.mu.push_back(t + r.x[1 + d + j]);
    return w;
}

}  // namespace hypercross
