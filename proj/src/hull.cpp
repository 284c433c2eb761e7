#include "ihull/hull.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>

#include "ihull/errors.hpp"
#include "ihull/lattice.hpp"
#include "ihull/simplex.hpp"

namespace ihull {

namespace {

using Point = std::vector<Int>;

void sort_unique(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

/**
 * Strict convex hull of the projection onto coordinates (u, v) by monotone
 * chain; collinear middle points are dropped. Callers only pass sets whose
 * remaining coordinates are constant, so the projection loses nothing.
 */
std::vector<Point> chain_hull(std::vector<Point> pts, std::size_t u, std::size_t v) {
    auto less = [&](const Point& p, const Point& q) {
        return p[u] != q[u] ? p[u] < q[u] : p[v] < q[v];
    };
    auto same = [&](const Point& p, const Point& q) {
        return p[u] == q[u] && p[v] == q[v];
    };
    std::sort(pts.begin(), pts.end(), less);
    pts.erase(std::unique(pts.begin(), pts.end(), same), pts.end());
    if (pts.size() <= 2) return pts;

    auto cross = [&](const Point& o, const Point& a, const Point& b) {
        return (a[u] - o[u]) * (b[v] - o[v]) - (a[v] - o[v]) * (b[u] - o[u]);
    };
    std::vector<Point> lo, hi;
    for (const Point& p : pts) {
        while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo.back(), p) <= 0)
            lo.pop_back();
        lo.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hi.size() >= 2 && cross(hi[hi.size() - 2], hi.back(), *it) <= 0)
            hi.pop_back();
        hi.push_back(*it);
    }
    lo.pop_back();
    hi.pop_back();
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

bool in_conv_cone(const Point& p, const std::vector<const Point*>& hull_pts,
                  const std::vector<Point>& cone) {
    std::size_t n = p.size();
    std::size_t cols = hull_pts.size() + cone.size();
    if (cols == 0) return false;
    std::vector<std::vector<Rat>> A(n + 1, std::vector<Rat>(cols, Rat(0)));
    std::vector<Rat> b(n + 1);
    for (std::size_t c = 0; c < hull_pts.size(); ++c) {
        for (std::size_t k = 0; k < n; ++k) A[k][c] = Rat((*hull_pts[c])[k]);
        A[n][c] = 1;
    }
    for (std::size_t c = 0; c < cone.size(); ++c)
        for (std::size_t k = 0; k < n; ++k)
            A[k][hull_pts.size() + c] = Rat(cone[c][k]);
    for (std::size_t k = 0; k < n; ++k) b[k] = Rat(p[k]);
    b[n] = 1;
    return standard_feasible(A, b);
}

/**
 * Reduces sorted candidates to the vertices of conv(candidates) + cone.
 * Pass 1 grows a spanning subset; pass 2 re-tests each survivor against the
 * others. Sound because every true vertex survives pass 1 (nothing absorbs
 * it) and pass 2 tests against a superset of the true vertex set.
 */
std::vector<Point> two_pass_vertices(const std::vector<Point>& cands,
                                     const std::vector<Point>& cone) {
    std::vector<const Point*> V;
    for (const Point& p : cands)
        if (!in_conv_cone(p, V, cone)) V.push_back(&p);

    std::vector<Point> out;
    for (std::size_t i = 0; i < V.size(); ++i) {
        std::vector<const Point*> others;
        others.reserve(V.size() - 1);
        for (std::size_t j = 0; j < V.size(); ++j)
            if (j != i) others.push_back(V[j]);
        if (!in_conv_cone(*V[i], others, cone)) out.push_back(*V[i]);
    }
    return out;
}

/**
 * two_pass_vertices with divide and conquer on lex-sorted candidates. A
 * point extreme in the union is extreme in every subset containing it, so
 * reducing each half to its own vertex set loses nothing, and the joint
 * pass over the surviving points stays exact. Halving keeps the membership
 * LPs small; the recursion bottoms out when a round stops shrinking.
 */
std::vector<Point> hull_vertex_filter(std::vector<Point> cands,
                                      const std::vector<Point>& cone) {
    constexpr std::size_t direct_threshold = 48;
    if (cands.size() <= direct_threshold) return two_pass_vertices(cands, cone);
    std::size_t total = cands.size();
    std::size_t mid = total / 2;
    std::vector<Point> right(std::make_move_iterator(cands.begin() + mid),
                             std::make_move_iterator(cands.end()));
    cands.resize(mid);
    std::vector<Point> kept = hull_vertex_filter(std::move(cands), cone);
    std::vector<Point> kept_right = hull_vertex_filter(std::move(right), cone);
    kept.insert(kept.end(), std::make_move_iterator(kept_right.begin()),
                std::make_move_iterator(kept_right.end()));
    if (kept.size() < total && kept.size() > direct_threshold)
        return hull_vertex_filter(std::move(kept), cone);
    return two_pass_vertices(kept, cone);
}

/**
 * Candidate vertices of a bounded system by fiber decomposition: fix the
 * first coordinate, recurse, and in two variables keep only the chain hull
 * of the fiber endpoints. count tracks how many points get materialized;
 * going past the cap throws.
 */
std::vector<Point> collect_candidates(const LinearSystem& sys, const Int& cap,
                                      Int& count) {
    std::size_t n = sys.cols();
    auto charge = [&](long k) {
        count += k;
        if (count > cap) throw CapExceeded("hull: point cap exceeded");
    };
    if (n == 1) {
        auto iv = integer_interval(sys);
        if (!iv) return {};
        if (iv->first == iv->second) {
            charge(1);
            return {{iv->first}};
        }
        charge(2);
        return {{iv->first}, {iv->second}};
    }
    auto range = axis_bounds(sys, 0);
    if (!range) return {};
    std::vector<Point> cands;
    for (Int c = range->first; c <= range->second; ++c) {
        LinearSystem sub = substitute_first(sys, c);
        if (n == 2) {
            auto iv = integer_interval(sub);
            if (!iv) continue;
            charge(iv->first == iv->second ? 1 : 2);
            Point p{c, iv->first};
            cands.push_back(std::move(p));
            if (iv->second != iv->first) cands.push_back({c, iv->second});
        } else {
            for (Point& q : collect_candidates(sub, cap, count)) {
                Point p;
                p.reserve(n);
                p.push_back(c);
                p.insert(p.end(), q.begin(), q.end());
                cands.push_back(std::move(p));
            }
        }
    }
    if (n == 2) return chain_hull(std::move(cands), 0, 1);
    return cands;
}

/**
 * Slice filter: group on axes.front(), recurse on the rest, chain hull once
 * two free axes remain. Keeps every vertex of the full hull because a
 * vertex stays a vertex on its own slice.
 */
std::vector<Point> filter_on_axes(std::vector<Point> pts,
                                  const std::vector<std::size_t>& axes) {
    if (pts.size() <= 2) return pts;
    if (axes.size() == 2) {
        std::size_t u = std::min(axes[0], axes[1]);
        std::size_t v = std::max(axes[0], axes[1]);
        return chain_hull(std::move(pts), u, v);
    }
    std::map<Int, std::vector<Point>> groups;
    for (Point& p : pts) {
        Int key = p[axes[0]];
        groups[std::move(key)].push_back(std::move(p));
    }
    std::vector<std::size_t> rest(axes.begin() + 1, axes.end());
    std::vector<Point> out;
    for (auto& [key, group] : groups) {
        std::vector<Point> kept = filter_on_axes(std::move(group), rest);
        out.insert(out.end(), std::make_move_iterator(kept.begin()),
                   std::make_move_iterator(kept.end()));
    }
    return out;
}

std::vector<Point> refine_candidates(std::vector<Point> cands, std::size_t n) {
    // the collection pass already sliced with axis 0 outermost
    for (std::size_t s = 1; s < n; ++s) {
        std::vector<std::size_t> axes(n);
        for (std::size_t t = 0; t < n; ++t) axes[t] = (s + t) % n;
        cands = filter_on_axes(std::move(cands), axes);
    }
    return cands;
}

/** Vertices of a bounded system, assuming boundedness was already checked. */
std::vector<Point> bounded_vertices(const LinearSystem& sys, const Int& cap,
                                    const std::vector<Point>& cone) {
    Int count(0);
    std::vector<Point> cands = collect_candidates(sys, cap, count);
    if (cands.empty()) return {};
    std::size_t n = sys.cols();
    if (n >= 3) cands = refine_candidates(std::move(cands), n);
    sort_unique(cands);
    if (n <= 2 && cone.empty()) return cands; // chain output is already exact
    return hull_vertex_filter(std::move(cands), cone);
}

void require_positive_cap(const Int& cap) {
    if (cap <= 0) throw DomainError("hull: point cap must be positive");
}

} // namespace

bool point_in_hull(const std::vector<Int>& p,
                   const std::vector<std::vector<Int>>& gen_points,
                   const std::vector<std::vector<Int>>& cone_gens) {
    std::vector<const Point*> ptrs;
    ptrs.reserve(gen_points.size());
    for (const auto& q : gen_points) ptrs.push_back(&q);
    return in_conv_cone(p, ptrs, cone_gens);
}

IntegerHull integer_hull_vertices(const LinearSystem& sys, const Int& point_cap) {
    require_positive_cap(point_cap);
    IntegerHull h;
    h.dim = sys.cols();
    try {
        if (bounding_box(sys).empty()) return h;
    } catch (const EmptyRegionError&) {
        return h;
    }
    h.vertices = bounded_vertices(sys, point_cap, {});
    return h;
}

IntegerHull knapsack_hull_vertices(const KnapsackInstance& k, const Int& point_cap) {
    require_positive_cap(point_cap);
    for (const Int& w : k.a)
        if (w == 0)
            throw DomainError("knapsack hull: zero weight needs explicit recession handling");
    std::size_t n = k.dim();
    IntegerHull h;
    h.dim = n;
    if (n == 1) {
        h.vertices.push_back({Int(0)});
        Int top = k.a0 / k.a[0];
        if (top != 0) h.vertices.push_back({top});
        return h;
    }
    if (n == 2) {
        std::vector<Point> cands;
        Int count(0);
        Int xmax = k.a0 / k.a[0];
        for (Int c(0); c <= xmax; ++c) {
            Int top = (k.a0 - k.a[0] * c) / k.a[1];
            count += top == 0 ? 1 : 2;
            if (count > point_cap) throw CapExceeded("hull: point cap exceeded");
            cands.push_back({c, Int(0)});
            if (top != 0) cands.push_back({c, top});
        }
        h.vertices = chain_hull(std::move(cands), 0, 1);
        sort_unique(h.vertices);
        return h;
    }
    return integer_hull_vertices(knapsack_system(k), point_cap);
}

IntegerHull hull_with_recession(const LinearSystem& sys,
                                const std::vector<std::vector<Int>>& recession_generators,
                                const Int& point_cap, const Int& initial_window) {
    require_positive_cap(point_cap);
    if (initial_window < 0) throw DomainError("recession: negative window");
    std::size_t n = sys.cols();
    std::vector<Point> gens = recession_generators;
    for (const Point& g : gens) {
        if (g.size() != n) throw DomainError("recession: generator dimension mismatch");
        bool nonzero = false;
        for (const Int& x : g) nonzero |= (x != 0);
        if (!nonzero) throw DomainError("recession: zero generator");
        // exact recession test; membership in {d : Ad <= 0} needs no LP
        for (std::size_t i = 0; i < sys.rows(); ++i) {
            Int dot(0);
            for (std::size_t j = 0; j < n; ++j) dot += sys.A(i, j) * g[j];
            if (dot > 0) throw DomainError("recession: generator is not a recession direction");
        }
    }
    sort_unique(gens);

    IntegerHull h;
    h.dim = n;
    h.recession_generators = gens;
    if (rank(sys.A) < n) return h; // lineality space: no vertices exist

    // which signed axis directions are unbounded
    std::vector<std::pair<std::size_t, int>> open_dirs;
    {
        std::vector<Inequality> cons(sys.rows());
        for (std::size_t i = 0; i < sys.rows(); ++i) {
            cons[i].coeffs.resize(n);
            for (std::size_t j = 0; j < n; ++j) cons[i].coeffs[j] = Rat(sys.A(i, j));
            cons[i].rhs = Rat(sys.b[i]);
        }
        for (std::size_t j = 0; j < n; ++j) {
            for (int dir : {+1, -1}) {
                std::vector<Rat> obj(n, Rat(0));
                obj[j] = dir;
                LpResult r = lp_solve(obj, cons);
                if (r.status == LpStatus::infeasible) return h;
                if (r.status == LpStatus::unbounded) open_dirs.emplace_back(j, dir);
            }
        }
    }
    if (open_dirs.empty()) {
        h.vertices = bounded_vertices(sys, point_cap, gens);
        return h;
    }

    Int T = initial_window;
    if (T == 0) {
        Int maxb(0);
        for (const Int& bi : sys.b) maxb = std::max(maxb, Int(abs(bi)));
        T = 2 * (Int(n) * delta_A(sys) + maxb + 1);
    }

    // clip open directions, enumerate, and demand a stable vertex set under
    // one doubling of the window; allow a few more doublings before giving up
    std::optional<std::vector<Point>> prev;
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<std::vector<Int>> rows;
        std::vector<Int> rhs;
        for (std::size_t i = 0; i < sys.rows(); ++i) {
            std::vector<Int> row(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = sys.A(i, j);
            rows.push_back(std::move(row));
            rhs.push_back(sys.b[i]);
        }
        for (auto [j, dir] : open_dirs) {
            std::vector<Int> row(n, Int(0));
            row[j] = dir;
            rows.push_back(std::move(row));
            rhs.push_back(T);
        }
        LinearSystem clipped(IntMatrix::from_rows(rows), std::move(rhs));

        std::vector<Point> V = bounded_vertices(clipped, point_cap, gens);
        std::erase_if(V, [&](const Point& p) {
            for (auto [j, dir] : open_dirs)
                if (p[j] * dir == T) return true;
            return false;
        });

        if (prev && *prev == V) {
            h.vertices = std::move(V);
            return h;
        }
        prev = std::move(V);
        T *= 2;
    }
    throw InstabilityError("recession: vertex set failed to stabilize under window doubling");
}

IntegerHull congruence_hull_vertices(const CongruenceInstance& c, const Int& point_cap) {
    require_positive_cap(point_cap);
    std::size_t n = c.dim();
    IntegerHull h;
    h.dim = n;
    for (std::size_t j = 0; j < n; ++j) {
        Point e(n, Int(0));
        e[j] = 1;
        h.recession_generators.push_back(std::move(e));
    }
    sort_unique(h.recession_generators);

    // solutions inside [0, delta)^n, solving for the last coordinate per
    // prefix of the first n-1
    Int prefixes = 1;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        prefixes *= c.delta;
        if (prefixes > point_cap)
            throw CapExceeded("congruence hull: prefix count exceeds point cap");
    }

    const Int& an = c.a[n - 1];
    Int g = gcd(an, c.delta);
    Int step(1), inv(0);
    if (an != 0) {
        step = c.delta / g;
        // inverse of an/g modulo step by the extended Euclid recurrence;
        // the two are coprime, so the gcd run ends at one
        Int a = an / g, b = step, x0(1), x1(0);
        while (b != 0) {
            Int q = a / b;
            Int t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        inv = x0 % step;
        if (inv < 0) inv += step;
    }

    std::vector<Point> sols;
    Int count(0);
    std::vector<Int> prefix(n - 1, Int(0));
    for (;;) {
        Int r = c.a0;
        for (std::size_t j = 0; j + 1 < n; ++j) r -= c.a[j] * prefix[j];
        r %= c.delta;
        if (r < 0) r += c.delta;

        if (an == 0) {
            if (r == 0) {
                count += c.delta;
                if (count > point_cap) throw CapExceeded("congruence hull: point cap exceeded");
                for (Int x(0); x < c.delta; ++x) {
                    Point p = prefix;
                    p.push_back(x);
                    sols.push_back(std::move(p));
                }
            }
        } else if (r % g == 0) {
            Int base = (r / g) * inv % step;
            count += g;
            if (count > point_cap) throw CapExceeded("congruence hull: point cap exceeded");
            for (Int t(0); t < g; ++t) {
                Point p = prefix;
                p.push_back(base + t * step);
                sols.push_back(std::move(p));
            }
        }

        std::size_t j = 0;
        while (j + 1 < n && prefix[j] == c.delta - 1) prefix[j++] = 0;
        if (j + 1 >= n) break;
        ++prefix[j];
    }
    if (sols.empty()) return h;

    // only coordinatewise-minimal solutions can be vertices
    std::vector<Point> minimal;
    for (const Point& p : sols) {
        bool dominated = false;
        for (const Point& q : sols) {
            if (&q == &p || q == p) continue;
            bool le = true;
            for (std::size_t j = 0; j < n && le; ++j) le = q[j] <= p[j];
            if (le) { dominated = true; break; }
        }
        if (!dominated) minimal.push_back(p);
    }
    sort_unique(minimal);
    h.vertices = hull_vertex_filter(std::move(minimal), h.recession_generators);
    return h;
}

SignRelaxation sign_relaxation_decomposition(const KnapsackInstance& k,
                                             const Int& point_cap) {
    require_positive_cap(point_cap);
    for (const Int& w : k.a)
        if (w == 0) throw DomainError("relaxation: weights must be positive");
    std::size_t n = k.dim();
    Int a1 = alpha1(k);

    SignRelaxation out;
    out.threshold_met = k.a0 >= a1 * (a1 - 1);

    IntegerHull origin;
    origin.dim = n;
    origin.vertices.push_back(Point(n, Int(0)));
    out.pieces.push_back(std::move(origin));

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Int>> rows;
        std::vector<Int> rhs;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Int> row(n, Int(0));
            row[j] = -1;
            rows.push_back(std::move(row));
            rhs.push_back(Int(0));
        }
        rows.push_back(k.a);
        rhs.push_back(k.a0);

        // recession cone of the piece: d_j >= 0 off i, a·d <= 0. Its extreme
        // rays are -e_i and, per j != i, a_i e_j - a_j e_i (made primitive);
        // the full list keeps the window-doubling pass stable.
        std::vector<Point> gens;
        Point down(n, Int(0));
        down[i] = -1;
        gens.push_back(std::move(down));
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Point r(n, Int(0));
            Int g = gcd(k.a[i], k.a[j]);
            r[j] = k.a[i] / g;
            r[i] = -k.a[j] / g;
            gens.push_back(std::move(r));
        }
        out.pieces.push_back(hull_with_recession(
            LinearSystem(IntMatrix::from_rows(rows), std::move(rhs)), gens, point_cap));
    }
    return out;
}

std::vector<std::vector<Int>> cone_extreme_rays(const IntMatrix& A) {
    std::size_t n = A.cols(), m = A.rows();
    if (n < 1 || n > 3) throw DomainError("extreme rays: dimension must be 1..3");
    if (rank(A) != n) throw DomainError("extreme rays: cone must be pointed");

    auto primitive = [](Point d) {
        Int g(0);
        for (const Int& x : d) g = gcd(g, abs(x));
        if (g > 1)
            for (Int& x : d) x /= g;
        return d;
    };

    // Every extreme ray lies on n-1 independent active rows, so candidates
    // come from row nullspaces (n=2) or row-pair cross products (n=3).
    std::vector<Point> cands;
    if (n == 1) {
        cands.push_back({Int(1)});
        cands.push_back({Int(-1)});
    } else if (n == 2) {
        for (std::size_t i = 0; i < m; ++i) {
            Point d{-A(i, 1), A(i, 0)};
            if (d[0] == 0 && d[1] == 0) continue;
            cands.push_back(primitive(d));
            cands.push_back(primitive(Point{-d[0], -d[1]}));
        }
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = i + 1; k < m; ++k) {
                Point d{A(i, 1) * A(k, 2) - A(i, 2) * A(k, 1),
                        A(i, 2) * A(k, 0) - A(i, 0) * A(k, 2),
                        A(i, 0) * A(k, 1) - A(i, 1) * A(k, 0)};
                if (d[0] == 0 && d[1] == 0 && d[2] == 0) continue;
                cands.push_back(primitive(d));
                cands.push_back(primitive(Point{-d[0], -d[1], -d[2]}));
            }
        }
    }

    std::vector<Point> rays;
    for (const Point& d : cands) {
        bool inside = true;
        for (std::size_t i = 0; i < m && inside; ++i) {
            Int dot(0);
            for (std::size_t j = 0; j < n; ++j) dot += A(i, j) * d[j];
            inside = dot <= 0;
        }
        if (inside) rays.push_back(d);
    }
    sort_unique(rays);
    return rays;
}

IntegerHull standard_form_hull_vertices(const LinearSystem& sys, const Int& point_cap) {
    require_positive_cap(point_cap);
    std::size_t n = sys.cols(), m = sys.rows();
    IntegerHull h;
    h.dim = 2 * n + m;
    for (std::size_t j = 0; j < n; ++j) {
        Point g(2 * n + m, Int(0));
        g[j] = 1;
        g[n + j] = 1;
        h.recession_generators.push_back(std::move(g));
    }
    sort_unique(h.recession_generators);

    std::vector<Point> pts = enumerate_integer_points(sys, point_cap);
    if (pts.empty()) return h;

    std::vector<Point> imgs;
    imgs.reserve(pts.size());
    for (const Point& x : pts) {
        Point y(2 * n + m, Int(0));
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j] >= 0)
                y[j] = x[j];
            else
                y[n + j] = -x[j];
        }
        for (std::size_t i = 0; i < m; ++i) {
            Int slack = sys.b[i];
            for (std::size_t j = 0; j < n; ++j) slack -= sys.A(i, j) * x[j];
            y[2 * n + i] = slack;
        }
        imgs.push_back(std::move(y));
    }
    sort_unique(imgs);
    h.vertices = hull_vertex_filter(std::move(imgs), h.recession_generators);
    return h;
}

long facet_count(const IntegerHull& h) {
    if (!h.recession_generators.empty())
        throw DomainError("facets: hull must be bounded");
    std::size_t n = h.dim;
    if (n < 1 || n > 3) throw DomainError("facets: dimension must be between one and three");
    const auto& V = h.vertices;
    if (V.size() < n + 1) throw DomainError("facets: hull is not full-dimensional");
    {
        std::vector<std::vector<Int>> diffs;
        for (std::size_t i = 1; i < V.size(); ++i) {
            std::vector<Int> d(n);
            for (std::size_t j = 0; j < n; ++j) d[j] = V[i][j] - V[0][j];
            diffs.push_back(std::move(d));
        }
        if (rank(IntMatrix::from_rows(diffs)) != n)
            throw DomainError("facets: hull is not full-dimensional");
    }
    if (n == 1) return 2;
    if (n == 2) return static_cast<long>(V.size());

    // supporting planes spanned by vertex triples, outward-normalized
    std::set<std::pair<std::array<Int, 3>, Int>> planes;
    for (std::size_t a = 0; a < V.size(); ++a)
        for (std::size_t b = a + 1; b < V.size(); ++b)
            for (std::size_t c = b + 1; c < V.size(); ++c) {
                std::array<Int, 3> u{V[b][0] - V[a][0], V[b][1] - V[a][1], V[b][2] - V[a][2]};
                std::array<Int, 3> w{V[c][0] - V[a][0], V[c][1] - V[a][1], V[c][2] - V[a][2]};
                std::array<Int, 3> nor{u[1] * w[2] - u[2] * w[1],
                                       u[2] * w[0] - u[0] * w[2],
                                       u[0] * w[1] - u[1] * w[0]};
                if (nor[0] == 0 && nor[1] == 0 && nor[2] == 0) continue;
                Int d = nor[0] * V[a][0] + nor[1] * V[a][1] + nor[2] * V[a][2];
                bool above = false, below = false;
                for (const Point& p : V) {
                    Int s = nor[0] * p[0] + nor[1] * p[1] + nor[2] * p[2];
                    above |= s > d;
                    below |= s < d;
                }
                if (above && below) continue;
                if (above) {
                    for (Int& x : nor) x = -x;
                    d = -d;
                }
                Int g = gcd(gcd(abs(nor[0]), abs(nor[1])), abs(nor[2]));
                for (Int& x : nor) x /= g;
                d /= g;
                planes.emplace(nor, d);
            }
    return static_cast<long>(planes.size());
}

std::optional<std::size_t> separating_coordinate(const std::vector<Int>& x,
                                                 const std::vector<Int>& y) {
    if (x.size() != y.size()) throw DomainError("separation: dimension mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) {
        const Int& lo = std::min(x[j], y[j]);
        const Int& hi = std::max(x[j], y[j]);
        if (2 * lo < hi) return j;
    }
    return std::nullopt;
}

SeparationCheck has_separation_property(const std::vector<std::vector<Int>>& points) {
    std::vector<Point> pts = points;
    for (const Point& p : pts)
        for (const Int& x : p)
            if (x < 0) throw DomainError("separation: points must be nonnegative");
    sort_unique(pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!separating_coordinate(pts[i], pts[j]))
                return {false, pts[i], pts[j]};
    return {};
}

} // namespace ihull
