#include "ramicond/herbrand.hpp"
#include "ramicond/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ramicond::herbrand {

long filtration::order_at(rational const& u) const
{
    for (auto const& j : jumps)
        if (u <= j.at) return j.order;
    return 1;
}

rational filtration::highest_jump() const
{
    return jumps.empty() ? rational(0) : jumps.back().at;
}

void validate(filtration const& f)
{
    for (std::size_t k = 0; k < f.jumps.size(); ++k) {
        auto const& j = f.jumps[k];
        if (j.at < 0)
            fail(errc::invalid_argument, "negative jump " + ramicond::to_string(j.at));
        if (j.order < 2)
            fail(errc::invalid_argument, "listed orders must exceed 1");
        if (k == 0) continue;
        auto const& prev = f.jumps[k - 1];
        if (j.at <= prev.at)
            fail(errc::invalid_argument, "jumps must strictly increase");
        if (j.order >= prev.order)
            fail(errc::invalid_argument, "orders must strictly decrease");
        if (f.kind == numbering::lower && prev.order % j.order != 0)
            fail(errc::invalid_argument, "lower orders must form a subgroup chain");
    }
}

filtration normalized(numbering kind, std::vector<jump> jumps)
{
    filtration f{kind, {}};
    for (auto const& j : jumps) {
        if (j.order == 1) continue;
        if (!f.jumps.empty() && f.jumps.back().order == j.order)
            f.jumps.back().at = j.at;
        else
            f.jumps.push_back(j);
    }
    validate(f);
    return f;
}

break_function identity()
{
    return {{{rational(0), rational(0)}}, {rational(1)}};
}

break_function make_break_function(std::vector<std::pair<rational, rational>> points,
                                   std::vector<rational> slopes)
{
    if (points.empty() || points.size() != slopes.size())
        fail(errc::invalid_argument, "one slope per breakpoint is required");
    if (points[0].first != 0 || points[0].second != 0)
        fail(errc::invalid_argument, "break functions start at (0, 0)");
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (slopes[k] <= 0)
            fail(errc::invalid_argument, "slopes must be positive");
        if (k == 0) continue;
        if (points[k].first <= points[k - 1].first)
            fail(errc::invalid_argument, "breakpoints must strictly increase");
        rational expect = points[k - 1].second + slopes[k - 1] * (points[k].first - points[k - 1].first);
        if (expect != points[k].second)
            fail(errc::invalid_argument, "break function is not continuous");
    }
    break_function f;
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (!f.slopes.empty() && f.slopes.back() == slopes[k]) continue;
        f.points.push_back(points[k]);
        f.slopes.push_back(slopes[k]);
    }
    return f;
}

namespace {

std::size_t segment_of(break_function const& f, rational const& x)
{
    auto it = std::upper_bound(f.points.begin(), f.points.end(), x,
        [](rational const& v, std::pair<rational, rational> const& pt) { return v < pt.first; });
    return it == f.points.begin() ? 0 : static_cast<std::size_t>(it - f.points.begin()) - 1;
}

break_function from_orders(filtration const& f, bool upward)
{
    /* slope o_k / o_1 (phi of a lower filtration) or o_1 / o_k (psi of an upper one) */
    rational o1(f.degree());
    std::vector<std::pair<rational, rational>> pts;
    std::vector<rational> sl;
    rational x = 0, y = 0;
    auto slope = [&](long order) -> rational {
        return upward ? rational(order) / o1 : o1 / rational(order);
    };
    for (auto const& j : f.jumps) {
        if (j.at <= x) continue;
        rational s = slope(j.order);
        pts.emplace_back(x, y);
        sl.push_back(s);
        y += (j.at - x) * s;
        x = j.at;
    }
    pts.emplace_back(x, y);
    sl.push_back(slope(1));
    return make_break_function(std::move(pts), std::move(sl));
}

}

rational eval(break_function const& f, rational const& x)
{
    if (x < 0)
        fail(errc::invalid_argument, "break functions are defined on [0, inf)");
    std::size_t k = segment_of(f, x);
    rational r = f.points[k].second + f.slopes[k] * (x - f.points[k].first);
    r.canonicalize();
    return r;
}

break_function invert(break_function const& f)
{
    std::vector<std::pair<rational, rational>> pts;
    std::vector<rational> sl;
    for (std::size_t k = 0; k < f.points.size(); ++k) {
        pts.emplace_back(f.points[k].second, f.points[k].first);
        rational s = 1 / f.slopes[k];
        s.canonicalize();
        sl.push_back(s);
    }
    return make_break_function(std::move(pts), std::move(sl));
}

break_function compose(break_function const& f, break_function const& g)
{
    break_function ginv = invert(g);
    std::vector<rational> xs;
    for (auto const& pt : g.points) xs.push_back(pt.first);
    for (auto const& pt : f.points) xs.push_back(eval(ginv, pt.first));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<std::pair<rational, rational>> pts;
    std::vector<rational> sl;
    for (auto const& x : xs) {
        rational gx = eval(g, x);
        pts.emplace_back(x, eval(f, gx));
        rational s = f.slopes[segment_of(f, gx)] * g.slopes[segment_of(g, x)];
        s.canonicalize();
        sl.push_back(s);
    }
    return make_break_function(std::move(pts), std::move(sl));
}

break_function phi_from_lower(filtration const& lower)
{
    if (lower.kind != numbering::lower)
        fail(errc::invalid_argument, "expected a lower filtration");
    return from_orders(lower, true);
}

break_function psi_from_lower(filtration const& lower)
{
    return invert(phi_from_lower(lower));
}

break_function psi_from_upper(filtration const& upper)
{
    if (upper.kind != numbering::upper)
        fail(errc::invalid_argument, "expected an upper filtration");
    return from_orders(upper, false);
}

filtration upper_from_lower(filtration const& lower)
{
    validate(lower);
    break_function phi = phi_from_lower(lower);
    filtration up{numbering::upper, {}};
    for (auto const& j : lower.jumps) up.jumps.push_back({eval(phi, j.at), j.order});
    return up;
}

filtration lower_from_upper(filtration const& upper)
{
    validate(upper);
    break_function psi = psi_from_upper(upper);
    filtration low{numbering::lower, {}};
    for (auto const& j : upper.jumps) low.jumps.push_back({eval(psi, j.at), j.order});
    validate(low);
    return low;
}

rational conductor(filtration const& f)
{
    return f.kind == numbering::upper ? f.highest_jump() : upper_from_lower(f).highest_jump();
}

rational highest_lower_jump(filtration const& f)
{
    return f.kind == numbering::lower ? f.highest_jump() : lower_from_upper(f).highest_jump();
}

rational serre_conductor(rational const& h)
{
    return h + 1;
}

std::string to_string(filtration const& f)
{
    std::ostringstream os;
    os << (f.kind == numbering::lower ? "lower" : "upper") << " [";
    for (std::size_t k = 0; k < f.jumps.size(); ++k)
        os << (k ? ", " : "") << "(" << ramicond::to_string(f.jumps[k].at) << ", " << f.jumps[k].order << ")";
    os << "]";
    return os.str();
}

std::string to_string(break_function const& f)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < f.points.size(); ++k)
        os << (k ? " " : "") << "(" << ramicond::to_string(f.points[k].first) << ","
           << ramicond::to_string(f.points[k].second) << ") slope " << ramicond::to_string(f.slopes[k]);
    return os.str();
}

}
