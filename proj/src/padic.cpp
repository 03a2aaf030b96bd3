#include "ramicond/padic.hpp"
#include "ramicond/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <sstream>

namespace ramicond::padic {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

local_field local_field::cyclotomic(long p, int level)
{
    if (!is_prime(p))
        fail(errc::invalid_argument, "p = " + std::to_string(p) + " is not prime");
    if (level < 1)
        fail(errc::invalid_argument, "level must be at least 1");
    integer e = (p - 1) * ipow(p, level - 1);
    if (e > 4096)
        fail(errc::invalid_argument, "ramification index too large");
    local_field K;
    K.p = p;
    K.level = level;
    K.e = static_cast<int>(e.get_si());
    return K;
}

local_field local_field::unramified_lift() const
{
    if (residue_degree != 1)
        fail(errc::not_a_pth_power, "only one unramified lift is modelled");
    local_field L = *this;
    L.residue_degree = static_cast<int>(p);
    return L;
}

long local_field::pth_power_bound() const
{
    return static_cast<long>(p) * e / (p - 1);
}

int default_precision(int c, int level)
{
    return 2 * (c + level + 2);
}

namespace detail {

struct ring {
    local_field K;
    int M = 1;
    u64 q = 1;
    std::vector<u64> rel;        // Phi(1 + x) = x^e + sum rel[i] x^i
    std::vector<u64> p_over_pi;  // p / pi as a polynomial of degree e - 1

    int e() const { return K.e; }
    int f() const { return K.residue_degree; }
    std::size_t size() const { return static_cast<std::size_t>(K.e) * K.residue_degree; }

    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= q ? s - q : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + q - b; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % q); }
    u64 neg(u64 a) const { return a == 0 ? 0 : q - a; }

    long vp(u64 a) const {
        if (a == 0) return M;
        long v = 0;
        while (a % static_cast<u64>(K.p) == 0) { a /= K.p; ++v; }
        return v;
    }

    /* Galois ring product; residue field modulus X^p = X + 1 */
    void gr_mul(u64 const* a, u64 const* b, u64* out) const {
        int fd = f();
        if (fd == 1) { out[0] = mul(a[0], b[0]); return; }
        std::vector<u64> t(2 * fd - 1, 0);
        for (int i = 0; i < fd; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < fd; ++j)
                t[i + j] = add(t[i + j], mul(a[i], b[j]));
        }
        for (int k = 2 * fd - 2; k >= fd; --k) {
            u64 c = t[k];
            if (!c) continue;
            t[k - fd] = add(t[k - fd], c);
            t[k - fd + 1] = add(t[k - fd + 1], c);
        }
        std::copy(t.begin(), t.begin() + fd, out);
    }

    std::vector<u64> poly_mul(std::vector<u64> const& x, std::vector<u64> const& y) const {
        int E = e(), fd = f();
        std::vector<u64> t(static_cast<std::size_t>(2 * E - 1) * fd, 0);
        std::vector<u64> g(fd);
        for (int i = 0; i < E; ++i) {
            u64 const* xi = &x[i * fd];
            if (std::all_of(xi, xi + fd, [](u64 v) { return v == 0; })) continue;
            for (int j = 0; j < E; ++j) {
                u64 const* yj = &y[j * fd];
                if (std::all_of(yj, yj + fd, [](u64 v) { return v == 0; })) continue;
                gr_mul(xi, yj, g.data());
                for (int k = 0; k < fd; ++k)
                    t[(i + j) * fd + k] = add(t[(i + j) * fd + k], g[k]);
            }
        }
        for (int j = 2 * E - 2; j >= E; --j) {
            for (int k = 0; k < fd; ++k) {
                u64 c = t[j * fd + k];
                if (!c) continue;
                for (int i = 0; i < E; ++i) {
                    u64& dst = t[(j - E + i) * fd + k];
                    dst = sub(dst, mul(c, rel[i]));
                }
            }
        }
        t.resize(size());
        return t;
    }

    /* times pi */
    std::vector<u64> shift1(std::vector<u64> const& x) const {
        int E = e(), fd = f();
        std::vector<u64> t(size(), 0);
        for (int i = 0; i + 1 < E; ++i)
            for (int k = 0; k < fd; ++k)
                t[(i + 1) * fd + k] = x[i * fd + k];
        for (int k = 0; k < fd; ++k) {
            u64 c = x[(E - 1) * fd + k];
            if (!c) continue;
            for (int i = 0; i < E; ++i)
                t[i * fd + k] = sub(t[i * fd + k], mul(c, rel[i]));
        }
        return t;
    }

    long valuation_of(std::vector<u64> const& x) const {
        long best = static_cast<long>(e()) * M;
        for (int i = 0; i < e(); ++i)
            for (int k = 0; k < f(); ++k)
                best = std::min(best, e() * vp(x[i * f() + k]) + i);
        return best;
    }
};

static std::shared_ptr<const ring> build_ring(local_field const& K, int M)
{
    if (M < 1)
        fail(errc::invalid_argument, "precision M must be at least 1");
    integer q = ipow(K.p, M);
    if (q >= integer(1) << 62)
        fail(errc::invalid_argument, "p^M = " + q.get_str() + " exceeds the 62-bit coefficient range");
    auto r = std::make_shared<ring>();
    r->K = K;
    r->M = M;
    r->q = q.get_ui();

    /* Phi_{p^l}(y) = sum_{j<p} y^(j p^(l-1)) with y = 1 + x, mod q */
    int E = K.e;
    long step = static_cast<long>(E / (K.p - 1));      // p^(l-1)
    ring const& R = *r;
    std::vector<u64> base(E + 1, 0);                    // (1 + x)^step
    {
        std::vector<u64> row{1};
        for (long n = 0; n < step; ++n) {
            std::vector<u64> next(row.size() + 1, 0);
            for (std::size_t i = 0; i < row.size(); ++i) {
                next[i] = R.add(next[i], row[i]);
                next[i + 1] = R.add(next[i + 1], row[i]);
            }
            row = std::move(next);
        }
        std::copy(row.begin(), row.end(), base.begin());
    }
    std::vector<u64> phi(E + 1, 0), power(E + 1, 0);
    power[0] = 1;
    for (long j = 0; j < K.p; ++j) {
        for (int i = 0; i <= E; ++i) phi[i] = R.add(phi[i], power[i]);
        if (j + 1 == K.p) break;
        std::vector<u64> next(E + 1, 0);
        for (int a = 0; a <= E; ++a) {
            if (!power[a]) continue;
            for (int b = 0; a + b <= E; ++b)
                next[a + b] = R.add(next[a + b], R.mul(power[a], base[b]));
        }
        power = std::move(next);
    }
    r->rel.assign(phi.begin(), phi.begin() + E);
    /* p = -pi^e - sum_{i>=1} rel[i] pi^i */
    r->p_over_pi.assign(E, 0);
    r->p_over_pi[E - 1] = R.neg(1);
    for (int i = 1; i < E; ++i)
        r->p_over_pi[i - 1] = R.sub(r->p_over_pi[i - 1], r->rel[i]);
    return r;
}

std::shared_ptr<const ring> make_ring(local_field const& K, int M)
{
    static std::mutex lock;
    static std::map<std::tuple<long, int, int, int>, std::shared_ptr<const ring>> cache;
    auto key = std::make_tuple(K.p, K.level, K.residue_degree, M);
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto r = build_ring(K, M);
    cache.emplace(key, r);
    return r;
}

}

using detail::ring;

element::element(std::shared_ptr<const ring> r, std::vector<u64> c, long prec)
    : ring_(std::move(r)), c_(std::move(c)), prec_(prec)
{
    long cap = static_cast<long>(ring_->e()) * ring_->M;
    prec_ = std::clamp(prec_, 0L, cap);
}

namespace {

u64 reduce_integer(integer const& n, u64 q)
{
    integer r;
    integer qq(static_cast<unsigned long>(q));
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), qq.get_mpz_t());
    return r.get_ui();
}

}

/* Bring two elements onto one ring: smaller M, larger residue degree. */
static std::pair<element, element> coerce(element const& x, element const& y);

local_field const& element::field() const { return ring_->K; }
int element::modulus_exponent() const { return ring_->M; }

element element::zero(local_field const& K, int M)
{
    auto r = detail::make_ring(K, M);
    std::vector<u64> c(r->size(), 0);
    long prec = static_cast<long>(K.e) * M;
    return element(r, std::move(c), prec);
}

element element::one(local_field const& K, int M)
{
    element x = zero(K, M);
    x.c_[0] = 1 % x.ring_->q;
    return x;
}

element element::from_integer(local_field const& K, integer const& n, int M)
{
    element x = zero(K, M);
    x.c_[0] = reduce_integer(n, x.ring_->q);
    return x;
}

element element::from_rational(local_field const& K, rational const& q, int M)
{
    element num = from_integer(K, q.get_num(), M);
    if (q.get_den() == 1) return num;
    if (q.get_den() % K.p == 0)
        fail(errc::non_integral_element, "denominator of " + ramicond::to_string(q) + " is divisible by p");
    element den = from_integer(K, q.get_den(), M);
    return num * den.inverse();
}

element element::uniformizer(local_field const& K, int M)
{
    element x = zero(K, M);
    if (K.e == 1) {
        /* pi = zeta_p - 1 = -2 when p = 2, level = 1 */
        x.c_[0] = x.ring_->sub(0, 2 % x.ring_->q);
        /* the basis is in powers of pi = -2; store pi itself as the element */
        return x;
    }
    x.c_[1 * K.residue_degree] = 1;
    return x;
}

element element::zeta(local_field const& K, int M)
{
    return one(K, M) + uniformizer(K, M);
}

element element::from_coefficients(local_field const& K, int M,
        std::vector<std::vector<integer>> const& coefficients)
{
    element x = zero(K, M);
    int fd = K.residue_degree;
    if (static_cast<int>(coefficients.size()) > K.e)
        fail(errc::invalid_argument, "more coefficients than the ramification index");
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (static_cast<int>(coefficients[i].size()) > fd)
            fail(errc::invalid_argument, "coefficient exceeds the residue degree");
        for (std::size_t k = 0; k < coefficients[i].size(); ++k)
            x.c_[i * fd + k] = reduce_integer(coefficients[i][k], x.ring_->q);
    }
    return x;
}

bool element::is_zero() const
{
    return ring_->valuation_of(c_) >= prec_;
}

long element::valuation() const
{
    long v = ring_->valuation_of(c_);
    if (v >= prec_)
        fail(errc::precision_exhausted,
             "element vanishes at precision pi^" + std::to_string(prec_));
    return v;
}

long element::valuation_or_precision() const
{
    return std::min(ring_->valuation_of(c_), prec_);
}

element element::unit_part() const
{
    return shift_down(valuation());
}

std::vector<u64> element::residue() const
{
    int fd = ring_->f();
    std::vector<u64> r(fd);
    if (prec_ < 1)
        fail(errc::precision_exhausted, "no residue digit at precision 0");
    for (int k = 0; k < fd; ++k)
        r[k] = c_[k] % static_cast<u64>(ring_->K.p);
    return r;
}

u64 element::coefficient(int i, int k) const
{
    return c_.at(static_cast<std::size_t>(i) * ring_->f() + k);
}

element element::shift_up(long k) const
{
    if (k < 0) return shift_down(-k);
    std::vector<u64> c = c_;
    for (long s = 0; s < k; ++s) c = ring_->shift1(c);
    return element(ring_, std::move(c), prec_ + k);
}

element element::shift_down(long k) const
{
    if (k < 0) return shift_up(-k);
    if (k > valuation_or_precision())
        fail(errc::non_integral_element,
             "division by pi^" + std::to_string(k) + " leaves the ring of integers");
    ring const& R = *ring_;
    int E = R.e(), fd = R.f();
    u64 p = static_cast<u64>(R.K.p);
    std::vector<u64> c = c_;
    for (long s = 0; s < k; ++s) {
        std::vector<u64> t(R.size(), 0);
        std::vector<u64> c0(fd);
        for (int j = 0; j < fd; ++j) c0[j] = c[j] / p;     // exact, top digit dropped
        for (int i = 1; i < E; ++i)
            for (int j = 0; j < fd; ++j)
                t[(i - 1) * fd + j] = c[i * fd + j];
        for (int i = 0; i < E; ++i)
            for (int j = 0; j < fd; ++j)
                if (c0[j]) t[i * fd + j] = R.add(t[i * fd + j], R.mul(c0[j], R.p_over_pi[i]));
        c = std::move(t);
    }
    return element(ring_, std::move(c), prec_ - k);
}

element element::divide_by_p() const
{
    if (valuation_or_precision() < ring_->e())
        fail(errc::non_integral_element, "element is not divisible by p");
    std::vector<u64> c = c_;
    for (auto& v : c) v /= static_cast<u64>(ring_->K.p);
    return element(ring_, std::move(c), prec_ - ring_->e());
}

element element::pow(long n) const
{
    if (n < 0)
        fail(errc::invalid_argument, "negative exponent; use inverse()");
    element result = one(ring_->K, ring_->M);
    element base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

element element::inverse() const
{
    long v = valuation();
    if (v != 0)
        fail(errc::non_integral_element, "inverse of a non-unit is not integral");
    ring const& R = *ring_;
    int fd = R.f();
    /* residue inverse: x^(p^f - 2) in F_{p^f}, via the ring arithmetic mod p */
    auto rp = detail::make_ring(R.K, 1);
    std::vector<u64> res(fd), acc(fd, 0), tmp(fd);
    for (int k = 0; k < fd; ++k) res[k] = c_[k] % static_cast<u64>(R.K.p);
    acc[0] = 1;
    integer expo = ipow(R.K.p, fd) - 2;
    for (long bit = static_cast<long>(mpz_sizeinbase(expo.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        rp->gr_mul(acc.data(), acc.data(), tmp.data());
        acc = tmp;
        if (mpz_tstbit(expo.get_mpz_t(), bit)) {
            rp->gr_mul(acc.data(), res.data(), tmp.data());
            acc = tmp;
        }
    }
    std::vector<u64> z(R.size(), 0);
    std::copy(acc.begin(), acc.end(), z.begin());
    /* Newton: z <- z (2 - x z), doubling the pi-adic precision */
    long full = static_cast<long>(R.e()) * R.M;
    for (int it = 0; it < 80; ++it) {
        std::vector<u64> xz = R.poly_mul(c_, z);
        std::vector<u64> corr(R.size());
        for (std::size_t i = 0; i < corr.size(); ++i) corr[i] = R.neg(xz[i]);
        corr[0] = R.add(corr[0], 1 % R.q);
        if (R.valuation_of(corr) >= full) break;
        corr[0] = R.add(corr[0], 1 % R.q);   // 2 - x z
        z = R.poly_mul(z, corr);
    }
    return element(ring_, std::move(z), prec_);
}

element element::lifted() const
{
    if (ring_->f() != 1) return *this;
    auto r = detail::make_ring(ring_->K.unramified_lift(), ring_->M);
    std::vector<u64> c(r->size(), 0);
    for (int i = 0; i < ring_->e(); ++i) c[i * r->f()] = c_[i];
    return element(r, std::move(c), prec_);
}

element element::with_precision(long n) const
{
    return element(ring_, c_, std::min(n, prec_));
}

static std::pair<element, element> coerce(element const& x, element const& y)
{
    if (!x.field().same_base(y.field()))
        fail(errc::invalid_argument, "elements of different fields");
    element a = x, b = y;
    if (a.field().residue_degree != b.field().residue_degree) {
        a = a.lifted();
        b = b.lifted();
    }
    if (a.modulus_exponent() != b.modulus_exponent()) {
        int M = std::min(a.modulus_exponent(), b.modulus_exponent());
        auto reduce = [M](element const& z) {
            std::vector<std::vector<integer>> coeffs(z.field().e);
            for (int i = 0; i < z.field().e; ++i)
                for (int k = 0; k < z.field().residue_degree; ++k)
                    coeffs[i].push_back(integer(static_cast<unsigned long>(z.coefficient(i, k))));
            return element::from_coefficients(z.field(), M, coeffs)
                .with_precision(z.precision());
        };
        if (a.modulus_exponent() > M) a = reduce(a);
        if (b.modulus_exponent() > M) b = reduce(b);
    }
    return {a, b};
}

element element::operator-() const
{
    std::vector<u64> c = c_;
    for (auto& v : c) v = ring_->neg(v);
    return element(ring_, std::move(c), prec_);
}

element operator+(element const& x0, element const& y0)
{
    auto [x, y] = coerce(x0, y0);
    std::vector<u64> c(x.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.ring_->add(x.c_[i], y.c_[i]);
    return element(x.ring_, std::move(c), std::min(x.prec_, y.prec_));
}

element operator-(element const& x, element const& y)
{
    return x + (-y);
}

element operator*(element const& x0, element const& y0)
{
    auto [x, y] = coerce(x0, y0);
    long prec = std::min(x.prec_ + y.valuation_or_precision(),
                         y.prec_ + x.valuation_or_precision());
    return element(x.ring_, x.ring_->poly_mul(x.c_, y.c_), prec);
}

bool element::equals(element const& y) const
{
    return (*this - y).is_zero();
}

std::string element::to_string() const
{
    std::ostringstream os;
    int fd = ring_->f();
    os << "[";
    for (int i = 0; i < ring_->e(); ++i) {
        if (i) os << ", ";
        if (fd == 1) {
            os << c_[i];
        } else {
            os << "(";
            for (int k = 0; k < fd; ++k) os << (k ? " " : "") << c_[i * fd + k];
            os << ")";
        }
    }
    os << "] + O(pi^" << prec_ << ")";
    return os.str();
}

element add(element const& x, element const& y) { return x + y; }
element mul(element const& x, element const& y) { return x * y; }
element inv(element const& x) { return x.inverse(); }
long valuation(element const& x) { return x.valuation(); }

namespace {

/* all residues of F_{p^f} in digit order */
std::vector<std::vector<u64>> residue_field(long p, int f)
{
    std::vector<std::vector<u64>> out;
    std::vector<u64> d(f, 0);
    for (;;) {
        out.push_back(d);
        int k = 0;
        while (k < f && ++d[k] == static_cast<u64>(p)) d[k++] = 0;
        if (k == f) break;
    }
    return out;
}

element constant(element const& like, std::vector<u64> const& digits)
{
    std::vector<std::vector<integer>> coeffs(1);
    for (u64 v : digits) coeffs[0].push_back(integer(static_cast<unsigned long>(v)));
    return element::from_coefficients(like.field(), like.modulus_exponent(), coeffs);
}

}

element pth_root(element const& u0)
{
    local_field const K = u0.field();
    long const p = K.p;
    int const M = u0.modulus_exponent();
    long const N = u0.precision();
    long const m = K.e / (p - 1);                 // v(zeta_p - 1)
    long const bound = K.pth_power_bound();       // e + m

    element one = element::one(K, M);
    element t = u0 - one;
    long vt = t.valuation_or_precision();
    if (vt < bound)
        fail(errc::not_a_pth_power,
             "v(u - 1) = " + std::to_string(vt) + " is below p e/(p-1) = " + std::to_string(bound));
    if (N <= K.e)
        fail(errc::precision_exhausted, "precision too small to certify a p-th root");

    /* work at full storage precision, certify below */
    long const full = static_cast<long>(K.e) * M;
    element u = element(u0.ring_, u0.c_, full);
    element r = element::one(u.field(), M);

    if (vt == bound && vt < N) {
        element lambda = (element::zeta(K, M)).pow(m) - element::one(K, M);
        element lp = lambda.pow(p);
        /* d = residue of t / lambda^p */
        element tt = (u - element::one(K, M)).shift_down(bound);
        element q = tt * lp.shift_down(bound).inverse();
        std::vector<u64> d = q.residue();
        bool d_zero = std::all_of(d.begin(), d.end(), [](u64 v) { return v == 0; });
        if (!d_zero) {
            auto solve = [&](element const& like) -> std::optional<std::vector<u64>> {
                int f = like.field().residue_degree;
                std::vector<u64> dd(f, 0);
                std::copy(d.begin(), d.end(), dd.begin());
                element target = constant(like, dd);
                for (auto const& x : residue_field(p, f)) {
                    element xe = constant(like, x);
                    element lhs = xe.pow(p) - xe - target;
                    bool ok = true;
                    for (int k = 0; k < f; ++k)
                        if (lhs.coefficient(0, k) % p) ok = false;
                    if (ok) return x;
                }
                return std::nullopt;
            };
            auto sol = solve(u);
            if (!sol) {
                if (u.field().residue_degree != 1)
                    fail(errc::not_a_pth_power,
                         "residue equation x^p - x = d has no solution in the modelled residue field");
                u = u.lifted();
                sol = solve(u);
                if (!sol)
                    fail(errc::not_a_pth_power, "residue equation unsolvable after lifting");
            }
            element x = constant(u, *sol);
            r = element::one(u.field(), M) + lambda * x;
        }
    }

    element const unit = element::one(u.field(), M);
    for (long it = 0; it <= full + 2; ++it) {
        element eps = (u * r.pow(p).inverse()).with_precision(N) - unit;
        if (eps.is_zero()) break;
        if (eps.valuation() <= bound)
            fail(errc::precision_exhausted, "p-th root iteration failed to converge");
        r = r * (unit + eps.divide_by_p().with_precision(full));
        r = r.with_precision(full);
        r = element(r.ring_, r.c_, full);
    }
    element root(r.ring_, r.c_, N - K.e);
    if (!root.pow(p).equals(u0))
        fail(errc::precision_exhausted, "p-th root could not be certified");
    return root;
}

namespace {

class parser {
    std::string_view s_;
    std::size_t i_ = 0;
    local_field K_;
    int M_;

    void skip() { while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_; }
    bool eat(char c) { skip(); if (i_ < s_.size() && s_[i_] == c) { ++i_; return true; } return false; }
    [[noreturn]] void error(std::string const& what) {
        fail(errc::syntax_error, what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
    }

    integer number() {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) error("expected a number");
        return integer(std::string(s_.substr(start, i_ - start)));
    }

    element atom() {
        skip();
        if (eat('(')) {
            element x = expr();
            if (!eat(')')) error("expected ')'");
            return x;
        }
        if (i_ < s_.size() && s_[i_] == 'z') { ++i_; return element::zeta(K_, M_); }
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            return element::from_integer(K_, number(), M_);
        error("unexpected input");
    }

    element power() {
        element base = atom();
        if (!eat('^')) return base;
        bool negative = false;
        if (eat('-')) negative = true; else eat('+');
        integer n = number();
        if (!n.fits_slong_p()) error("exponent too large");
        element r = base.pow(n.get_si());
        return negative ? divide(element::one(K_, M_), r) : r;
    }

    element unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    static element divide(element const& x, element const& y) {
        long v = y.valuation();
        if (x.valuation_or_precision() < v)
            fail(errc::non_integral_element, "quotient is not integral");
        return x.shift_down(v) * y.shift_down(v).inverse();
    }

    element term() {
        element x = unary();
        for (;;) {
            if (eat('*')) x = x * unary();
            else if (eat('/')) x = divide(x, unary());
            else return x;
        }
    }

    element expr() {
        element x = term();
        for (;;) {
            if (eat('+')) x = x + term();
            else if (eat('-')) x = x - term();
            else return x;
        }
    }

public:
    parser(std::string_view s, local_field K, int M) : s_(s), K_(K), M_(M) {}
    element run() {
        element x = expr();
        skip();
        if (i_ != s_.size()) error("trailing input");
        return x;
    }
};

}

element parse(std::string_view expr, local_field const& K, int M)
{
    return parser(expr, K, M).run();
}

}
