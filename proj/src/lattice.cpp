#include "ihull/lattice.hpp"

#include "ihull/errors.hpp"
#include "ihull/simplex.hpp"

namespace ihull {

namespace {

std::vector<Inequality> to_inequalities(const LinearSystem& sys) {
    std::vector<Inequality> cons(sys.rows());
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        cons[i].coeffs.resize(sys.cols());
        for (std::size_t j = 0; j < sys.cols(); ++j)
            cons[i].coeffs[j] = Rat(sys.A(i, j));
        cons[i].rhs = Rat(sys.b[i]);
    }
    return cons;
}

/**
 * Integer range of one coordinate by exact LP. Returns nullopt when the
 * polyhedron is empty; throws UnboundedError when the coordinate is
 * unbounded in either direction.
 */
std::optional<std::pair<Int, Int>> axis_range(const std::vector<Inequality>& cons,
                                              std::size_t n, std::size_t j) {
    std::vector<Rat> obj(n, Rat(0));
    obj[j] = 1;
    LpResult hi = lp_solve(obj, cons);
    if (hi.status == LpStatus::infeasible) return std::nullopt;
    if (hi.status == LpStatus::unbounded)
        throw UnboundedError("lattice: coordinate unbounded above");
    obj[j] = -1;
    LpResult lo = lp_solve(obj, cons);
    if (lo.status == LpStatus::unbounded)
        throw UnboundedError("lattice: coordinate unbounded below");
    return std::make_pair(ceil_rat(-lo.value), floor_rat(hi.value));
}

void enumerate_rec(const LinearSystem& sys, std::vector<Int>& prefix,
                   const Int& point_cap, Int& count,
                   std::vector<std::vector<Int>>& out) {
    if (sys.cols() == 1) {
        auto iv = integer_interval(sys);
        if (!iv) return;
        for (Int v = iv->first; v <= iv->second; ++v) {
            if (++count > point_cap) throw CapExceeded("lattice: point cap exceeded");
            std::vector<Int> p = prefix;
            p.push_back(v);
            out.push_back(std::move(p));
        }
        return;
    }
    auto range = axis_bounds(sys, 0);
    if (!range) return;
    for (Int v = range->first; v <= range->second; ++v) {
        LinearSystem sub = substitute_first(sys, v);
        prefix.push_back(v);
        enumerate_rec(sub, prefix, point_cap, count, out);
        prefix.pop_back();
    }
}

} // namespace

Box bounding_box(const LinearSystem& sys) {
    std::vector<Inequality> cons = to_inequalities(sys);
    Box box;
    box.lo.resize(sys.cols());
    box.hi.resize(sys.cols());
    for (std::size_t j = 0; j < sys.cols(); ++j) {
        auto r = axis_range(cons, sys.cols(), j);
        if (!r) throw EmptyRegionError("lattice: empty polyhedron");
        box.lo[j] = r->first;
        box.hi[j] = r->second;
    }
    return box;
}

std::optional<std::pair<Int, Int>> axis_bounds(const LinearSystem& sys, std::size_t j) {
    if (j >= sys.cols()) throw DomainError("lattice: axis out of range");
    return axis_range(to_inequalities(sys), sys.cols(), j);
}

LinearSystem substitute_first(const LinearSystem& sys, const Int& value) {
    if (sys.cols() < 2) throw DomainError("substitute: no variable would remain");
    std::vector<std::vector<Int>> rows(sys.rows(), std::vector<Int>(sys.cols() - 1));
    std::vector<Int> rhs(sys.rows());
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        for (std::size_t j = 1; j < sys.cols(); ++j) rows[i][j - 1] = sys.A(i, j);
        rhs[i] = sys.b[i] - sys.A(i, 0) * value;
    }
    return LinearSystem(IntMatrix::from_rows(rows), std::move(rhs));
}

std::optional<std::pair<Int, Int>> integer_interval(const LinearSystem& sys) {
    if (sys.cols() != 1) throw DomainError("interval: system must have one variable");
    std::optional<Int> lo, hi;
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        const Int& a = sys.A(i, 0);
        const Int& b = sys.b[i];
        if (a == 0) {
            if (b < 0) return std::nullopt;
        } else if (a > 0) {
            Int f = floor_rat(make_rat(b, a));
            if (!hi || f < *hi) hi = f;
        } else {
            Int c = ceil_rat(make_rat(b, a));
            if (!lo || c > *lo) lo = c;
        }
    }
    if (!lo || !hi) throw UnboundedError("interval: one-variable system unbounded");
    if (*lo > *hi) return std::nullopt;
    return std::make_pair(*lo, *hi);
}

std::vector<std::vector<Int>> enumerate_integer_points(const LinearSystem& sys,
                                                       const Int& point_cap) {
    if (point_cap <= 0) throw DomainError("lattice: point cap must be positive");
    std::vector<std::vector<Int>> out;
    std::vector<Int> prefix;
    Int count(0);
    enumerate_rec(sys, prefix, point_cap, count, out);
    return out;
}

std::vector<Int> dyadic_cell(const std::vector<Int>& point) {
    std::vector<Int> cell;
    cell.reserve(point.size());
    for (const Int& x : point) {
        if (x < 0) throw DomainError("dyadic cell: negative coordinate");
        cell.push_back(x == 0 ? Int(0) : Int(floor_log2(x) + 1));
    }
    return cell;
}

Int count_boxes_meeting_hyperplane(const std::vector<Int>& a, const Int& a0) {
    std::size_t n = a.size();
    if (n == 0) throw DomainError("boxes: no variables");
    if (a0 < 0) throw DomainError("boxes: negative right-hand side");
    std::vector<Int> c(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (a[j] <= 0) throw DomainError("boxes: weights must be positive");
        c[j] = a0 / a[j];
        if (c[j] == 0) throw DomainError("boxes: vanishing intercept");
    }

    // index ranges: enough cells to cover [0, c_j] with one spare
    std::vector<long> top(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rat arg = make_rat(a0, a[j]) + 1;
        top[j] = static_cast<long>(ceil_with_margin(Real(1L) + log2(arg)));
    }

    // cell [lo, hi) meets the simplex iff some x with lo <= x, x + t <= hi
    // componentwise and sum x_j / c_j = 1 admits t > 0
    auto cell_meets = [&](const std::vector<long>& idx) {
        std::size_t nv = n + 1; // coordinates and the margin t
        std::vector<Inequality> cons;
        Inequality eq1, eq2;
        eq1.coeffs.assign(nv, Rat(0));
        for (std::size_t j = 0; j < n; ++j) eq1.coeffs[j] = make_rat(1, c[j]);
        eq1.rhs = 1;
        eq2.coeffs.assign(nv, Rat(0));
        for (std::size_t j = 0; j < n; ++j) eq2.coeffs[j] = make_rat(-1, c[j]);
        eq2.rhs = -1;
        cons.push_back(eq1);
        cons.push_back(eq2);
        for (std::size_t j = 0; j < n; ++j) {
            Int lo = idx[j] == 0 ? Int(0) : Int(Int(1) << (idx[j] - 1));
            Int hi = Int(1) << idx[j];
            Inequality low, high;
            low.coeffs.assign(nv, Rat(0));
            low.coeffs[j] = -1;
            low.rhs = Rat(-lo);
            high.coeffs.assign(nv, Rat(0));
            high.coeffs[j] = 1;
            high.coeffs[n] = 1;
            high.rhs = Rat(hi);
            cons.push_back(std::move(low));
            cons.push_back(std::move(high));
        }
        Inequality tpos;
        tpos.coeffs.assign(nv, Rat(0));
        tpos.coeffs[n] = -1;
        tpos.rhs = 0;
        cons.push_back(std::move(tpos));

        std::vector<Rat> obj(nv, Rat(0));
        obj[n] = 1;
        LpResult r = lp_solve(obj, cons);
        return r.status == LpStatus::optimum && r.value > 0;
    };

    Int total(0);
    std::vector<long> idx(n, 0);
    for (;;) {
        if (cell_meets(idx)) ++total;
        std::size_t j = 0;
        while (j < n && idx[j] == top[j]) idx[j++] = 0;
        if (j == n) break;
        ++idx[j];
    }
    return total;
}

} // namespace ihull
