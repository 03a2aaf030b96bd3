#include "ramicond/filtration.hpp"
#include "ramicond/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ramicond::filtration {

using herbrand::jump;
using herbrand::numbering;

herbrand::filtration cyclotomic(long p, int n)
{
    if (!is_prime(p))
        fail(errc::invalid_argument, "p = " + std::to_string(p) + " is not prime");
    if (n < 1)
        fail(errc::invalid_argument, "n must be at least 1");
    if (n > 30)
        fail(errc::invalid_argument, "n too large");
    /* G_i = {a : a = 1 mod p^k} for p^{k-1} - 1 < i <= p^k - 1 */
    std::vector<jump> js;
    js.push_back({rational(0), to_int64(integer((p - 1) * ipow(p, n - 1)))});
    for (int k = 1; k < n; ++k)
        js.push_back({rational(integer(ipow(p, k) - 1)), to_int64(ipow(p, n - k))});
    return herbrand::normalized(numbering::lower, std::move(js));
}

namespace {

struct closed_lattice {
    std::vector<lattice_node> nodes;
    std::vector<std::vector<char>> leq;
    std::size_t base = 0, top = 0;

    rational cond(std::size_t i) const { return nodes[i].conductor.value_or(rational(0)); }

    std::size_t join(std::vector<std::size_t> const& parts) const {
        std::vector<std::size_t> upper;
        for (std::size_t m = 0; m < nodes.size(); ++m) {
            bool ok = true;
            for (auto i : parts) ok = ok && leq[i][m];
            if (ok) upper.push_back(m);
        }
        for (auto m : upper) {
            bool least = true;
            for (auto o : upper) least = least && leq[m][o];
            if (least) return m;
        }
        std::string names;
        for (auto i : parts) names += (names.empty() ? "" : ", ") + nodes[i].label;
        fail(errc::lattice_not_closed, "no compositum of {" + names + "} in the lattice");
    }
};

closed_lattice close(subextension_lattice const& lat)
{
    closed_lattice L;
    L.nodes = lat.nodes;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < L.nodes.size(); ++i) {
        auto const& nd = L.nodes[i];
        if (nd.degree < 1)
            fail(errc::invalid_argument, "node " + nd.label + " has degree < 1");
        if (!index.emplace(nd.label, i).second)
            fail(errc::invalid_argument, "duplicate node label " + nd.label);
        if (nd.conductor && *nd.conductor < 0)
            fail(errc::invalid_argument, "negative conductor at " + nd.label);
        if (!nd.conductor && nd.degree != 1)
            fail(errc::invalid_argument, "node " + nd.label + " lacks a conductor");
    }
    auto base_it = std::find_if(L.nodes.begin(), L.nodes.end(),
                                [](lattice_node const& nd) { return nd.degree == 1; });
    if (base_it == L.nodes.end()) {
        L.nodes.push_back({"base", 1, rational(0), std::nullopt});
        index.emplace("base", L.nodes.size() - 1);
        L.base = L.nodes.size() - 1;
    } else {
        L.base = static_cast<std::size_t>(base_it - L.nodes.begin());
    }
    std::size_t n = L.nodes.size();
    L.leq.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        L.leq[i][i] = 1;
        L.leq[L.base][i] = 1;
    }
    for (auto const& [s, l] : lat.contains) {
        auto a = index.find(s), b = index.find(l);
        if (a == index.end() || b == index.end())
            fail(errc::invalid_argument, "containment refers to unknown node " + (a == index.end() ? s : l));
        L.leq[a->second][b->second] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (L.leq[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (L.leq[k][j]) L.leq[i][j] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !L.leq[i][j]) continue;
            if (L.leq[j][i])
                fail(errc::invalid_argument, "containment cycle between " + L.nodes[i].label + " and " + L.nodes[j].label);
            if (L.nodes[j].degree % L.nodes[i].degree != 0 || L.nodes[j].degree == L.nodes[i].degree)
                fail(errc::invalid_argument, "degrees incompatible with " + L.nodes[i].label + " < " + L.nodes[j].label);
            if (L.cond(i) > L.cond(j))
                fail(errc::inconsistent_conductors,
                     "conductor drops from " + L.nodes[i].label + " to " + L.nodes[j].label);
        }
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    L.top = L.join(all);
    /* compositum conductor is the max of the parts */
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t m = L.join({i, j});
            if (L.cond(m) != ramicond::max(L.cond(i), L.cond(j)))
                fail(errc::inconsistent_conductors,
                     "conductor of the compositum " + L.nodes[m].label + " is not the max over " +
                     L.nodes[i].label + " and " + L.nodes[j].label);
        }
    return L;
}

}

herbrand::filtration reconstruct_upper(subextension_lattice const& lattice)
{
    closed_lattice L = close(lattice);
    std::set<rational> levels;
    for (std::size_t i = 0; i < L.nodes.size(); ++i)
        if (L.cond(i) > 0) levels.insert(L.cond(i));
    long top_degree = L.nodes[L.top].degree;
    auto below = [&](rational const& c) {
        std::vector<std::size_t> parts{L.base};
        for (std::size_t i = 0; i < L.nodes.size(); ++i)
            if (L.cond(i) <= c) parts.push_back(i);
        return L.join(parts);
    };
    std::vector<jump> js;
    js.push_back({rational(0), top_degree});
    rational prev = 0;
    for (auto const& c : levels) {
        long d = L.nodes[below(prev)].degree;
        if (top_degree % d != 0)
            fail(errc::inconsistent_conductors, "node degree does not divide the top degree");
        js.push_back({c, top_degree / d});
        prev = c;
    }
    /* the tame step at 0 only survives if conductor-0 nodes lift the base */
    if (L.nodes[below(0)].degree == 1) js.erase(js.begin());
    return herbrand::normalized(numbering::upper, std::move(js));
}

long different_exponent(herbrand::filtration const& lower)
{
    if (lower.kind != numbering::lower)
        fail(errc::invalid_argument, "different exponent needs the lower numbering");
    herbrand::validate(lower);
    long d = 0;
    integer prev = -1;
    for (auto const& j : lower.jumps) {
        if (!is_integer(j.at))
            fail(errc::non_integral_lower_jump, "lower jump " + to_string(j.at) + " is not an integer");
        integer at = j.at.get_num();
        d += to_int64(integer(at - prev)) * (j.order - 1);
        prev = at;
    }
    return d;
}

subextension_lattice lattice_from_json(nlohmann::ordered_json const& j)
{
    subextension_lattice lat;
    try {
        for (auto const& nd : j.at("nodes")) {
            lattice_node node;
            node.label = nd.at("label").get<std::string>();
            node.degree = nd.at("degree").get<long>();
            if (nd.contains("conductor") && !nd.at("conductor").is_null()) {
                auto const& c = nd.at("conductor");
                node.conductor = c.is_string() ? parse_rational(c.get<std::string>())
                                               : rational(c.get<long>());
            }
            if (nd.contains("field")) {
                auto const& f = nd.at("field");
                field_descriptor fd;
                fd.cprime = f.at("cprime").get<int>();
                fd.cdouble = f.at("cdouble").get<int>();
                auto const& a = f.at("a");
                fd.a = a.is_string() ? parse_rational(a.get<std::string>()) : rational(a.get<long>());
                node.field = fd;
            }
            lat.nodes.push_back(std::move(node));
        }
        if (j.contains("contains"))
            for (auto const& pr : j.at("contains"))
                lat.contains.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
    } catch (nlohmann::json::exception const& e) {
        fail(errc::syntax_error, std::string("malformed lattice: ") + e.what());
    }
    return lat;
}

nlohmann::ordered_json to_json(subextension_lattice const& lattice)
{
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (auto const& nd : lattice.nodes) {
        nlohmann::ordered_json o;
        o["label"] = nd.label;
        o["degree"] = nd.degree;
        o["conductor"] = to_string(nd.conductor.value_or(rational(0)));
        if (nd.field) {
            nlohmann::ordered_json f;
            f["cprime"] = nd.field->cprime;
            f["cdouble"] = nd.field->cdouble;
            f["a"] = to_string(nd.field->a);
            o["field"] = f;
        }
        nodes.push_back(o);
    }
    nlohmann::ordered_json contains = nlohmann::ordered_json::array();
    for (auto const& [s, l] : lattice.contains) contains.push_back({s, l});
    nlohmann::ordered_json out;
    out["nodes"] = nodes;
    out["contains"] = contains;
    return out;
}

}
