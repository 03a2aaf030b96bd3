#include "ramicond/oracle.hpp"
#include "ramicond/classify.hpp"
#include "ramicond/errors.hpp"
#include "ramicond/kummer.hpp"
#include "ramicond/padic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace ramicond::oracle {

namespace {

long mod(long x, long n)
{
    long r = x % n;
    return r < 0 ? r + n : r;
}

using matrix = std::vector<std::vector<rational>>;

}

extension_ring::extension_ring(long p, int c, rational a)
    : p_(p), c_(c), a_(std::move(a))
{
    if (!is_prime(p))
        fail(errc::invalid_argument, "p = " + std::to_string(p) + " is not prime");
    if (c < 1 || c > 8)
        fail(errc::invalid_argument, "c must be between 1 and 8");
    if (a_ == 0)
        fail(errc::invalid_argument, "a must be nonzero");
    a_.canonicalize();
    n_ = to_int64(ipow(p, c));
    phi_ = n_ - n_ / p;
    zeta_powers_.assign(n_, vec(phi_, 0));
    for (long m = 0; m < phi_; ++m) zeta_powers_[m][m] = 1;
    /* zeta^phi = -sum_{j < p-1} zeta^(j N/p) */
    for (long m = phi_; m < n_; ++m) {
        vec const& prev = zeta_powers_[m - 1];
        vec next(phi_, 0);
        for (long k = 0; k + 1 < phi_; ++k) next[k + 1] = prev[k];
        rational top = prev[phi_ - 1];
        if (top != 0)
            for (long j = 0; j + 1 < p; ++j) next[j * (n_ / p)] -= top;
        zeta_powers_[m] = std::move(next);
    }
}

vec extension_ring::scalar(rational const& q) const
{
    vec v(dimension(), 0);
    v[0] = q;
    return v;
}

vec extension_ring::monomial(long i, long j) const
{
    long jj = mod(j, n_);
    long wraps = (j - jj) / n_;
    rational coef = 1;
    rational base = wraps >= 0 ? a_ : rational(1) / a_;
    for (long k = 0; k < std::abs(wraps); ++k) coef *= base;
    coef.canonicalize();
    vec v(dimension(), 0);
    vec const& z = zeta_powers_[mod(i, n_)];
    for (long k = 0; k < phi_; ++k)
        if (z[k] != 0) v[k + phi_ * jj] = z[k] * coef;
    return v;
}

vec extension_ring::add(vec const& x, vec const& y) const
{
    vec r(x.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = x[k] + y[k];
    return r;
}

vec extension_ring::sub(vec const& x, vec const& y) const
{
    vec r(x.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = x[k] - y[k];
    return r;
}

vec extension_ring::scale(vec const& x, rational const& q) const
{
    vec r(x.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = x[k] * q;
    return r;
}

bool extension_ring::is_zero(vec const& x) const
{
    return std::all_of(x.begin(), x.end(), [](rational const& q) { return q == 0; });
}

vec extension_ring::mul(vec const& x, vec const& y) const
{
    /* t[m][j]: coefficient of zeta^m y^j with m < N, j < 2N */
    std::vector<vec> t(n_, vec(2 * n_, 0));
    for (long j1 = 0; j1 < n_; ++j1)
        for (long i1 = 0; i1 < phi_; ++i1) {
            rational const& u = x[i1 + phi_ * j1];
            if (u == 0) continue;
            for (long j2 = 0; j2 < n_; ++j2)
                for (long i2 = 0; i2 < phi_; ++i2) {
                    rational const& w = y[i2 + phi_ * j2];
                    if (w == 0) continue;
                    t[(i1 + i2) % n_][j1 + j2] += u * w;
                }
        }
    vec r(dimension(), 0);
    for (long m = 0; m < n_; ++m)
        for (long j = 0; j < 2 * n_; ++j) {
            rational coef = t[m][j];
            if (coef == 0) continue;
            long jj = j;
            if (jj >= n_) { coef *= a_; jj -= n_; }
            vec const& z = zeta_powers_[m];
            for (long k = 0; k < phi_; ++k)
                if (z[k] != 0) r[k + phi_ * jj] += coef * z[k];
        }
    for (auto& q : r) q.canonicalize();
    return r;
}

vec extension_ring::pow(vec const& x, long n) const
{
    if (n < 0) return pow(inverse(x), -n);
    vec result = scalar(1), base = x;
    while (n) {
        if (n & 1) result = mul(result, base);
        n >>= 1;
        if (n) base = mul(base, base);
    }
    return result;
}

namespace {

matrix multiplication_matrix(extension_ring const& R, vec const& x)
{
    long d = R.dimension();
    matrix m(d, std::vector<rational>(d, 0));
    for (long k = 0; k < d; ++k) {
        vec col = R.mul(x, R.monomial(k % R.phi(), k / R.phi()));
        for (long r = 0; r < d; ++r) m[r][k] = col[r];
    }
    return m;
}

}

vec extension_ring::inverse(vec const& x) const
{
    long d = dimension();
    matrix m = multiplication_matrix(*this, x);
    vec rhs(d, 0);
    rhs[0] = 1;
    for (long col = 0; col < d; ++col) {
        long piv = -1;
        for (long r = col; r < d; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0)
            fail(errc::invalid_argument, "element is a zero divisor");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        rational inv = 1 / m[col][col];
        for (long k = col; k < d; ++k) m[col][k] *= inv;
        rhs[col] *= inv;
        for (long r = 0; r < d; ++r) {
            if (r == col || m[r][col] == 0) continue;
            rational f = m[r][col];
            for (long k = col; k < d; ++k) m[r][k] -= f * m[col][k];
            rhs[r] -= f * rhs[col];
        }
    }
    for (auto& q : rhs) q.canonicalize();
    return rhs;
}

std::vector<sigma> extension_ring::group() const
{
    std::vector<sigma> g;
    for (long s = 1; s < n_; ++s) {
        if (s % p_ == 0) continue;
        for (long t = 0; t < n_; ++t) g.push_back({s, t});
    }
    return g;
}

sigma extension_ring::compose(sigma const& a, sigma const& b) const
{
    return {mod(a.s * b.s, n_), mod(a.s * b.t + a.t, n_)};
}

vec extension_ring::act(sigma const& g, vec const& x) const
{
    vec r(dimension(), 0);
    for (long j = 0; j < n_; ++j)
        for (long i = 0; i < phi_; ++i) {
            rational const& u = x[i + phi_ * j];
            if (u == 0) continue;
            vec const& z = zeta_powers_[mod(g.s * i + g.t * j, n_)];
            for (long k = 0; k < phi_; ++k)
                if (z[k] != 0) r[k + phi_ * j] += u * z[k];
        }
    for (auto& q : r) q.canonicalize();
    return r;
}

std::vector<rational> extension_ring::charpoly(vec const& x) const
{
    long n = dimension();
    matrix h = multiplication_matrix(*this, x);
    /* similarity reduction to upper Hessenberg form */
    for (long m = 1; m + 1 < n; ++m) {
        long i = -1;
        for (long r = m; r < n; ++r)
            if (h[r][m - 1] != 0) { i = r; break; }
        if (i < 0) continue;
        if (i != m) {
            std::swap(h[i], h[m]);
            for (long r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
        }
        rational piv = h[m][m - 1];
        for (long j = m + 1; j < n; ++j) {
            if (h[j][m - 1] == 0) continue;
            rational u = h[j][m - 1] / piv;
            for (long k = 0; k < n; ++k) h[j][k] -= u * h[m][k];
            for (long k = 0; k < n; ++k) h[k][m] += u * h[k][j];
        }
    }
    /* p_m = (X - h_mm) p_{m-1} - sum_i h_im h_{i+1,i} ... h_{m,m-1} p_{i-1} */
    std::vector<std::vector<rational>> polys(n + 1);
    polys[0] = {rational(1)};
    for (long m = 1; m <= n; ++m) {
        std::vector<rational> pm(m + 1, 0);
        auto const& prev = polys[m - 1];
        for (long k = 0; k < m; ++k) {
            pm[k + 1] += prev[k];
            pm[k] -= h[m - 1][m - 1] * prev[k];
        }
        rational t = 1;
        for (long i = m - 1; i >= 1; --i) {
            t *= h[i][i - 1];
            if (t == 0) break;
            rational f = h[i - 1][m - 1] * t;
            if (f == 0) continue;
            auto const& q = polys[i - 1];
            for (std::size_t k = 0; k < q.size(); ++k) pm[k] -= f * q[k];
        }
        for (auto& q : pm) q.canonicalize();
        polys[m] = std::move(pm);
    }
    return polys[n];
}

rational valuation_np(extension_ring const& R, vec const& x)
{
    if (R.is_zero(x))
        fail(errc::invalid_argument, "valuation of zero");
    auto chi = R.charpoly(x);
    long d = R.dimension();
    if (chi[0] == 0)
        fail(errc::multiple_slopes, "element is a zero divisor; A (x) Q_p is not a field");
    rational s(*ramicond::valuation(chi[0], R.p()), d);
    s.canonicalize();
    for (long i = 1; i < d; ++i) {
        if (chi[i] == 0) continue;
        if (rational(*ramicond::valuation(chi[i], R.p())) < rational(d - i) * s)
            fail(errc::multiple_slopes, "Newton polygon has several slopes");
    }
    return s;
}

namespace {

/* dense polynomials over F_p, low to high */
using fpoly = std::vector<long>;

void trim(fpoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long inv_mod(long x, long p)
{
    long r = 1, b = mod(x, p), e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

fpoly poly_mod(fpoly a, fpoly const& m, long p)
{
    trim(a);
    long dm = static_cast<long>(m.size()) - 1;
    long lead = inv_mod(m.back(), p);
    while (static_cast<long>(a.size()) - 1 >= dm) {
        long shift = static_cast<long>(a.size()) - 1 - dm;
        long f = a.back() * lead % p;
        for (long k = 0; k <= dm; ++k) a[k + shift] = mod(a[k + shift] - f * m[k], p);
        trim(a);
    }
    return a;
}

fpoly poly_mul(fpoly const& a, fpoly const& b, long p)
{
    if (a.empty() || b.empty()) return {};
    fpoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

fpoly poly_gcd(fpoly a, fpoly b, long p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        fpoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long l = inv_mod(a.back(), p);
        for (auto& v : a) v = v * l % p;
    }
    return a;
}

fpoly poly_powmod(fpoly base, integer e, fpoly const& m, long p)
{
    fpoly r{1};
    base = poly_mod(base, m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(poly_mul(r, base, p), m, p);
        e >>= 1;
        if (e > 0) base = poly_mod(poly_mul(base, base, p), m, p);
    }
    return r;
}

}

std::optional<long> residue_degree(extension_ring const& R, vec const& x)
{
    long p = R.p();
    long d = R.dimension();
    auto chi = R.charpoly(x);
    fpoly red(d + 1, 0);
    for (long k = 0; k <= d; ++k) {
        if (chi[k] == 0) continue;
        if (*ramicond::valuation(chi[k], p) < 0) return std::nullopt;
        integer num = chi[k].get_num(), den = chi[k].get_den();
        long dn = mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p));
        long nm = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p));
        red[k] = nm * inv_mod(dn, p) % p;
    }
    trim(red);
    if (red.size() < 2 || red[0] == 0) return std::nullopt;
    fpoly X{0, 1};
    fpoly frob = X;
    for (long j = 1; j <= d; ++j) {
        frob = poly_powmod(frob, integer(p), red, p);    // X^(p^j) mod chi
        fpoly diff = frob;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = mod(diff[1] - 1, p);
        trim(diff);
        fpoly g = poly_gcd(red, diff, p);
        if (g.size() <= 1) continue;
        if (static_cast<long>(g.size()) - 1 != j || d % j != 0) return std::nullopt;
        fpoly power{1};
        for (long k = 0; k < d / j; ++k) power = poly_mul(power, g, p);
        if (power != red) return std::nullopt;
        return j;
    }
    return std::nullopt;
}


namespace {

struct candidate {
    std::string label;
    vec x;
    rational v;
};

std::optional<rational> try_slope(extension_ring const& R, vec const& x)
{
    if (R.is_zero(x)) return std::nullopt;
    try {
        return valuation_np(R, x);
    } catch (error const& e) {
        if (e.code() == errc::multiple_slopes) return std::nullopt;
        throw;
    }
}

rational denominator_lcm(std::vector<candidate> const& pool)
{
    integer l = 1;
    for (auto const& cd : pool) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), cd.v.get_den().get_mpz_t());
    return rational(l);
}

/* x^a y^b for integers of either sign */
vec power_product(extension_ring const& R, vec const& x, long a, vec const& y, long b)
{
    return R.mul(R.pow(x, a), R.pow(y, b));
}

std::string power_label(std::string const& x, long a, std::string const& y, long b)
{
    auto part = [](std::string const& s, long k) {
        if (k == 0) return std::string();
        return "(" + s + ")" + (k == 1 ? "" : "^" + std::to_string(k));
    };
    std::string l = part(x, a), r = part(y, b);
    if (l.empty()) return r.empty() ? "1" : r;
    return r.empty() ? l : l + "*" + r;
}

std::vector<candidate> generator_pool(extension_ring const& R)
{
    long N = R.root_order();
    std::vector<candidate> pool;
    auto add = [&](std::string label, vec x) {
        if (auto v = try_slope(R, x)) pool.push_back({std::move(label), std::move(x), *v});
    };
    vec one = R.scalar(1);
    add(std::to_string(R.p()), R.scalar(R.p()));
    for (long k = 1; k < N; ++k) {
        add("z^" + std::to_string(k) + "-1", R.sub(R.monomial(k, 0), one));
        add("z^" + std::to_string(k) + "+1", R.add(R.monomial(k, 0), one));
    }
    for (long j = 1; j < N; ++j) {
        std::string yj = j == 1 ? "y" : "y^" + std::to_string(j);
        vec y = R.monomial(0, j);
        add(yj, y);
        add(yj + "+1", R.add(y, one));
        for (long k = 0; k < N; ++k)
            add(yj + "-z^" + std::to_string(k), R.sub(y, R.monomial(k, 0)));
    }
    return pool;
}

struct uniformizer_choice {
    vec pi;
    std::string label;
};

/* Bezout over the valuation numerators, starting from p (valuation e/e) */
std::optional<uniformizer_choice> bezout_uniformizer(extension_ring const& R,
                                                     std::vector<candidate> const& pool, rational const& E)
{
    long e = to_int64(E.get_num());
    vec pi = R.scalar(R.p());
    std::string pi_label = std::to_string(R.p());
    long num = e;
    for (auto const& cd : pool) {
        if (num == 1) break;
        rational scaled = cd.v * E;
        long n = to_int64(scaled.get_num());
        if (n == 0) continue;
        long g = std::gcd(num, n);
        if (g == num) continue;
        long r0 = num, r1 = n, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            long q = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
        }
        if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
        pi = power_product(R, pi, s0, cd.x, t0);
        pi_label = power_label(pi_label, s0, cd.label, t0);
        num = r0;
    }
    if (num != 1 || try_slope(R, pi) != std::optional<rational>(rational(1, e))) return std::nullopt;
    return uniformizer_choice{std::move(pi), std::move(pi_label)};
}


}

result lower_filtration(long p, int c, rational const& a, options const& opt)
{
    extension_ring R(p, c, a);
    long d = R.dimension();
    if (d > opt.max_degree)
        fail(errc::degree_cap_exceeded,
             "degree " + std::to_string(d) + " exceeds the cap " + std::to_string(opt.max_degree));
    result out;
    out.p = p;
    out.c = c;
    out.a = R.a();
    out.degree = d;

    /* pi-adic digit expansion of every pool element; a new valuation
     * denominator enlarges e, a unit outside the digits bounds f */
    auto pool = generator_pool(R);
    rational E;
    long e = 1;
    vec pi;
    std::optional<vec> theta;
    std::vector<std::pair<candidate, long>> tested;
    auto refresh = [&] {
        E = denominator_lcm(pool);
        e = to_int64(E.get_num());
        if (d % e != 0)
            fail(errc::no_uniformizer_found, "valuation denominators do not divide the degree");
        auto u = bezout_uniformizer(R, pool, E);
        if (!u)
            fail(errc::no_uniformizer_found, "no element of valuation 1/" + std::to_string(e));
        pi = u->pi;
        out.uniformizer = u->label;
        if (d / e == 1) return true;
        for (auto const& [cd, deg] : tested)
            if (deg == d / e) {
                theta = cd.x;
                out.residue_generator = cd.label;
                return true;
            }
        return false;
    };
    bool certified = refresh();
    /* nonzero lifts of the residue field found so far */
    std::vector<candidate> digits;
    long residue_bits = 1;
    for (long m = 1; m < p; ++m) digits.push_back({std::to_string(m), R.scalar(m), rational(0)});
    auto extend_digits = [&](vec const& u, long deg) {
        residue_bits = deg;
        std::vector<vec> powers{R.scalar(1)};
        for (long k = 1; k < deg; ++k) powers.push_back(R.mul(powers.back(), u));
        digits.clear();
        long total = to_int64(ipow(p, deg));
        for (long code = 1; code < total; ++code) {
            vec x = R.scalar(0);
            std::string l;
            long rest = code;
            for (long k = 0; k < deg; ++k, rest /= p) {
                long m = rest % p;
                if (m == 0) continue;
                x = R.add(x, R.scale(powers[k], rational(m)));
                l += (l.empty() ? "" : "+") + std::to_string(m) + (k == 0 ? "" : "t" + std::to_string(k));
            }
            digits.push_back({l, std::move(x), rational(0)});
        }
    };
    std::vector<candidate> queue = pool;
    bool split = false;
    long depth_cap = 2 * d + 2;
    for (std::size_t idx = 0; idx < queue.size() && !certified; ++idx) {
        vec x = queue[idx].x;
        std::string label = queue[idx].label;
        for (long step = 0; step < depth_cap && !certified; ++step) {
            auto v = try_slope(R, x);
            if (!v) {
                split |= !R.is_zero(x);
                break;
            }
            rational k = *v * E;
            if (!is_integer(k)) {
                pool.push_back({label, x, *v});
                certified = refresh();
                continue;
            }
            long kk = to_int64(k.get_num());
            vec u = kk == 0 ? x : R.mul(x, R.pow(pi, -kk));
            std::string ulabel = kk == 0 ? label : "(" + label + ")/pi^" + std::to_string(kk);
            auto find_digit = [&]() -> std::optional<std::size_t> {
                for (std::size_t m = 0; m < digits.size(); ++m) {
                    auto w = try_slope(R, R.sub(u, digits[m].x));
                    if (w && *w > 0) return m;
                }
                return std::nullopt;
            };
            auto digit = find_digit();
            if (!digit) {
                auto deg = residue_degree(R, u);
                if (!deg || *deg <= residue_bits) break;
                tested.push_back({{ulabel, u, rational(0)}, *deg});
                if (*deg == d / e) {
                    theta = u;
                    out.residue_generator = ulabel;
                    certified = true;
                    break;
                }
                extend_digits(u, *deg);
                digit = find_digit();
                if (!digit) break;
            }
            x = R.sub(u, digits[*digit].x);
            label = "(" + ulabel + ")-" + digits[*digit].label;
            if (R.is_zero(x)) break;
        }
    }
    if (!certified && split)
        fail(errc::multiple_slopes, "an element has several Newton slopes, so the algebra is not a field over Q_p");
    if (!certified)
        fail(errc::no_uniformizer_found,
             "no uniformizer and residue generator with e f = " + std::to_string(d) + " found");
    out.e = e;
    out.f = d / e;

    std::vector<sigma> G = R.group();
    for (auto const& g : G) {
        if (!theta) { out.inertia.push_back(g); continue; }
        vec delta = R.sub(R.act(g, *theta), *theta);
        if (R.is_zero(delta) || valuation_np(R, delta) > 0) out.inertia.push_back(g);
    }
    if (static_cast<long>(out.inertia.size()) != e)
        fail(errc::not_totally_ramified,
             "inertia group has order " + std::to_string(out.inertia.size()) + ", expected " + std::to_string(e));

    vec pi2 = R.add(R.mul(R.zeta(), pi), R.mul(pi, pi));
    std::map<rational, long> at_least;
    for (auto const& g : out.inertia) {
        if (g == sigma{1, 0}) continue;
        vec delta = R.sub(R.act(g, pi), pi);
        if (R.is_zero(delta))
            fail(errc::no_uniformizer_found, "uniformizer fixed by an inertia element");
        rational jmp = valuation_np(R, delta) * E - 1;
        jmp.canonicalize();
        rational jmp2 = valuation_np(R, R.sub(R.act(g, pi2), pi2)) * E - 1;
        if (jmp2 != jmp)
            fail(errc::no_uniformizer_found, "jumps depend on the uniformizer");
        if (!is_integer(jmp) || jmp < 0)
            fail(errc::non_integral_lower_jump, "lower jump " + to_string(jmp) + " is not a nonnegative integer");
        out.jumps.push_back({g, jmp});
        out.different += to_int64(jmp.get_num()) + 1;
    }
    std::set<rational> values;
    for (auto const& sj : out.jumps) values.insert(sj.jump);
    std::vector<herbrand::jump> js;
    for (auto const& v : values) {
        long count = 1;
        for (auto const& sj : out.jumps) count += sj.jump >= v ? 1 : 0;
        js.push_back({v, count});
    }
    out.lower = herbrand::normalized(herbrand::numbering::lower, std::move(js));
    out.upper = herbrand::upper_from_lower(out.lower);
    out.conductor = herbrand::conductor(out.lower);
    return out;
}

rational fixed_field_conductor(result const& r, std::vector<sigma> const& h)
{
    herbrand::break_function phi = herbrand::phi_from_lower(r.lower);
    rational best = 0;
    for (auto const& sj : r.jumps)
        if (std::find(h.begin(), h.end(), sj.g) == h.end())
            best = ramicond::max(best, herbrand::eval(phi, sj.jump));
    return best;
}

filtration::subextension_lattice obvious_lattice(result const& r)
{
    if (r.p != 2)
        fail(errc::invalid_argument, "the lattice helper covers p = 2 only");
    if (r.c > 2)
        fail(errc::invalid_argument, "the lattice helper covers c <= 2 only");
    long N = to_int64(ipow(2, r.c));
    struct node {
        std::vector<sigma> h;
        filtration::lattice_node info;
    };
    std::vector<node> nodes;
    for (int cp = 1; cp <= r.c; ++cp)
        for (int cd = 0; cd <= cp; ++cd) {
            long ms = to_int64(ipow(2, cp)), mt = to_int64(ipow(2, cd));
            std::vector<sigma> h;
            for (auto const& g : r.inertia)
                if (mod(g.s - 1, ms) == 0 && mod(g.t, mt) == 0 && g.s < N) h.push_back(g);
            bool seen = std::any_of(nodes.begin(), nodes.end(), [&](node const& n) { return n.h == h; });
            if (seen) continue;
            filtration::lattice_node info;
            info.label = "K" + std::to_string(cp) +
                (cd == 0 ? "" : "(a^(1/" + std::to_string(1L << cd) + "))");
            info.degree = static_cast<long>(r.inertia.size() / h.size());
            info.conductor = fixed_field_conductor(r, h);
            info.field = filtration::field_descriptor{cp, cd, r.a};
            nodes.push_back({h, info});
        }
    filtration::subextension_lattice lat;
    for (auto const& n : nodes) lat.nodes.push_back(n.info);
    for (auto const& lo : nodes)
        for (auto const& hi : nodes) {
            if (&lo == &hi) continue;
            bool sub = std::all_of(hi.h.begin(), hi.h.end(), [&](sigma const& g) {
                return std::find(lo.h.begin(), lo.h.end(), g) != lo.h.end();
            });
            if (sub) lat.contains.emplace_back(lo.info.label, hi.info.label);
        }
    return lat;
}

rational formula_conductor(long p, int c, rational const& a)
{
    if (p == 2) return classify::classify_p2(c, a).conductor;
    if (a == 0)
        fail(errc::invalid_argument, "a must be nonzero");
    /* strip p^(p^c)-th powers so that 0 <= v_p(a) < p^c */
    long N = to_int64(ipow(p, c));
    long v = *ramicond::valuation(a, p);
    long k = (v >= 0 ? v : v - N + 1) / N;
    rational b = a;
    rational shift = rational(integer(ipow(p, static_cast<unsigned long>(std::abs(k) * N))));
    if (k >= 0) b /= shift; else b *= shift;
    b.canonicalize();
    auto K = padic::local_field::cyclotomic(p, c);
    auto x = padic::element::from_rational(K, b, padic::default_precision(c, c));
    if (c == 1) {
        auto dec = kummer::primitivize(x);
        if (!dec.t_valuation) return rational(0);
        return classify::metabelian_conductor(p, 1, 1, *dec.t_valuation).closure_over_k0;
    }
    /* roots of unity of order prime to p are p^c-th powers */
    if (x.valuation() == 0) x = x * kummer::teichmuller(x).inverse();
    return classify::metabelian_conductor(c, x).closure_over_k0;
}

report verify_against_classifier(long p, int c, rational const& a, options const& opt)
{
    report rep;
    rep.p = p;
    rep.c = c;
    rep.a = a;
    rep.conductor_formula = formula_conductor(p, c, a);
    result r = lower_filtration(p, c, a, opt);
    rep.conductor_oracle = r.conductor;
    rep.lower = r.lower;
    rep.degree = r.degree;
    rep.match = rep.conductor_formula == rep.conductor_oracle;
    return rep;
}

nlohmann::ordered_json to_json(report const& r)
{
    nlohmann::ordered_json j;
    j["instance"] = {{"p", r.p}, {"c", r.c}, {"a", to_string(r.a)}};
    j["conductor_formula"] = to_string(r.conductor_formula);
    j["conductor_oracle"] = to_string(r.conductor_oracle);
    nlohmann::ordered_json jumps = nlohmann::ordered_json::array();
    for (auto const& jp : r.lower.jumps)
        jumps.push_back({{"jump", to_string(jp.at)}, {"order", jp.order}});
    j["lower_jumps"] = jumps;
    j["match"] = r.match;
    return j;
}

}
