#include "vci/bipoly.hpp"

#include <algorithm>
#include <map>

#include "vci/geometry.hpp"

namespace vci {

int mono_cmp(const Monomial& a, const Monomial& b) {
    if (a.e[0] != b.e[0]) return a.e[0] < b.e[0] ? -1 : 1;
    int da = a.xdeg() + a.ydeg();
    int db = b.xdeg() + b.ydeg();
    if (da != db) return da < db ? -1 : 1;
    // grevlex tie-break: last nonzero entry of a-b negative => a > b
    for (int i = 4; i >= 1; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

namespace {
struct MonoDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) > 0; }
};
}  // namespace

Poly Poly::constant(Scalar c) {
    Poly p(c.field());
    if (!c.is_zero()) p.terms_.push_back({Monomial::unit(), std::move(c)});
    return p;
}

Poly Poly::term(Monomial m, Scalar c) {
    Poly p(c.field());
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
}

Poly Poly::variable(int i, FieldDesc fd) {
    return term(Monomial::var(i), Scalar::one(fd));
}

Poly Poly::from_terms(std::vector<Term> ts, FieldDesc fd) {
    std::map<Monomial, Scalar, MonoDesc> acc;
    for (auto& t : ts) {
        auto it = acc.find(t.mono);
        if (it == acc.end()) acc.emplace(t.mono, std::move(t.coeff));
        else it->second += t.coeff;
    }
    Poly p(fd);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
}

const Term& Poly::leading() const {
    if (terms_.empty()) throw FieldError("leading term of zero polynomial");
    return terms_.front();
}

bool Poly::has_aux() const {
    for (const auto& t : terms_)
        if (t.mono.e[Monomial::kAux] > 0) return true;
    return false;
}

bool Poly::is_bihomogeneous() const {
    if (terms_.empty()) return true;
    if (has_aux()) return false;
    int a = terms_[0].mono.xdeg(), b = terms_[0].mono.ydeg();
    for (const auto& t : terms_)
        if (t.mono.xdeg() != a || t.mono.ydeg() != b) return false;
    return true;
}

std::optional<Bidegree> Poly::bidegree() const {
    if (terms_.empty() || !is_bihomogeneous()) return std::nullopt;
    return Bidegree{terms_[0].mono.xdeg(), terms_[0].mono.ydeg()};
}

int Poly::deg_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.e[var]);
    return d;
}

Poly Poly::coeff_of(int var, int k) const {
    Poly p(fd_);
    for (const auto& t : terms_) {
        if (t.mono.e[var] == k) {
            Monomial m = t.mono;
            m.e[var] = 0;
            p.terms_.push_back({m, t.coeff});
        }
    }
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return mono_cmp(a.mono, b.mono) > 0; });
    return p;
}

Poly Poly::operator-() const {
    Poly p(fd_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    if (terms_.empty()) return o.terms_.empty() ? *this : o;
    if (o.terms_.empty()) return *this;
    Poly p(fd_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) p.terms_.push_back(terms_[i++]);
        else if (c < 0) p.terms_.push_back(o.terms_[j++]);
        else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) p.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    std::map<Monomial, Scalar, MonoDesc> acc;
    for (const auto& s : terms_) {
        for (const auto& t : o.terms_) {
            Monomial m = s.mono * t.mono;
            Scalar c = s.coeff * t.coeff;
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(m, std::move(c));
            else it->second += c;
        }
    }
    Poly p(terms_.empty() ? o.fd_ : fd_);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
}

Poly Poly::operator*(const Scalar& c) const {
    if (c.is_zero()) return Poly(fd_);
    Poly p(fd_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
    return p;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return *this * leading_coeff().inverse();
}

Scalar Poly::evaluate(const BiProjPoint& p) const {
    Scalar acc = Scalar::zero(fd_);
    const Scalar* vals[5] = {nullptr, &p.x.c0, &p.x.c1, &p.y.c0, &p.y.c1};
    for (const auto& t : terms_) {
        if (t.mono.e[Monomial::kAux] > 0)
            throw FieldError("evaluate: auxiliary variable present");
        Scalar c = t.coeff;
        for (int v = 1; v <= 4; ++v)
            for (int i = 0; i < t.mono.e[v]; ++i) c *= *vals[v];
        acc += c;
    }
    return acc;
}

Poly Poly::substitute_pair(BinaryForm::Pair pair, const Scalar& c0, const Scalar& c1) const {
    int v0 = pair == BinaryForm::Pair::X ? Monomial::kX0 : Monomial::kY0;
    int v1 = v0 + 1;
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        for (int i = 0; i < t.mono.e[v0]; ++i) c *= c0;
        for (int i = 0; i < t.mono.e[v1]; ++i) c *= c1;
        Monomial m = t.mono;
        m.e[v0] = m.e[v1] = 0;
        ts.push_back({m, std::move(c)});
    }
    return from_terms(std::move(ts), fd_);
}

namespace {
const char* kVarNames[5] = {"t", "x0", "x1", "y0", "y1"};
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { out += "-"; cs = cs.substr(1); }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        first = false;
        std::string vars;
        for (int i = 0; i < 5; ++i) {
            if (t.mono.e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += kVarNames[i];
            if (t.mono.e[i] > 1) vars += "^" + std::to_string(t.mono.e[i]);
        }
        if (vars.empty()) out += cs;
        else if (cs == "1") out += vars;
        else out += cs + "*" + vars;
    }
    return out;
}

Poly bihom_add(const Poly& f, const Poly& g) {
    if (!f.is_zero() && !g.is_zero()) {
        auto df = f.bidegree(), dg = g.bidegree();
        if (!df || !dg || !(*df == *dg))
            throw FieldError("bihom_add: bidegree mismatch");
    }
    return f + g;
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) return std::nullopt;
    Poly r = f;
    std::vector<Term> q;
    while (!r.is_zero()) {
        if (!g.leading_mono().divides(r.leading_mono())) return std::nullopt;
        Monomial m = r.leading_mono().quotient(g.leading_mono());
        Scalar c = r.leading_coeff() / g.leading_coeff();
        q.push_back({m, c});
        r = r - Poly::term(m, c) * g;
    }
    return Poly::from_terms(std::move(q), f.field());
}

// Primitive pseudo-remainder sequence gcd.
static Poly gcd_rec(const Poly& f, const Poly& g);

static Poly content_in(const Poly& f, int v) {
    // gcd of the coefficients of powers of v
    Poly c = Poly::zero(f.field());
    for (int k = 0; k <= f.deg_in(v); ++k) {
        Poly ck = f.coeff_of(v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : gcd_rec(c, ck);
        if (c.is_unit()) break;
    }
    return c;
}

static Poly prem(Poly a, const Poly& b, int v) {
    int db = b.deg_in(v);
    Poly lcb = b.coeff_of(v, db);
    while (!a.is_zero() && a.deg_in(v) >= db) {
        int da = a.deg_in(v);
        Poly lca = a.coeff_of(v, da);
        Monomial shift = Monomial::var(v, da - db);
        a = a * lcb - b * Poly::term(shift, Scalar::one(a.field())) * lca;
    }
    return a;
}

static Poly gcd_rec(const Poly& f, const Poly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.is_constant() || g.is_constant()) return Poly::constant(Scalar::one(f.field()));
    int v = -1;
    for (int i = 4; i >= 0; --i) {
        if (f.deg_in(i) > 0 || g.deg_in(i) > 0) { v = i; break; }
    }
    if (v < 0) return Poly::constant(Scalar::one(f.field()));

    Poly cf = content_in(f, v);
    Poly cg = content_in(g, v);
    Poly a = *exact_divide(f, cf);
    Poly b = *exact_divide(g, cg);
    Poly cont = gcd_rec(cf, cg);

    if (a.deg_in(v) < b.deg_in(v)) std::swap(a, b);
    while (true) {
        Poly r = prem(a, b, v);
        if (r.is_zero()) return cont * b;
        if (r.deg_in(v) == 0) return cont;
        a = b;
        b = *exact_divide(r, content_in(r, v));
    }
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) return f;
    return gcd_rec(f, g).monic();
}

BinaryForm restrict_to_ruling(const Poly& f, const Ruling& ruling) {
    auto bd = f.bidegree();
    BinaryForm out;
    bool vertical = ruling.axis == Ruling::Axis::Vertical;
    out.pair = vertical ? BinaryForm::Pair::Y : BinaryForm::Pair::X;
    if (!bd) {
        if (!f.is_zero()) throw FieldError("restrict_to_ruling: not bihomogeneous");
        return out;
    }
    Poly sub = f.substitute_pair(vertical ? BinaryForm::Pair::X : BinaryForm::Pair::Y,
                                 ruling.coordinate.c0, ruling.coordinate.c1);
    int d = vertical ? bd->b : bd->a;
    int v0 = vertical ? Monomial::kY0 : Monomial::kX0;
    out.coeffs.assign(d + 1, Scalar::zero(f.field()));
    for (const auto& t : sub.terms()) {
        int i = t.mono.e[v0 + 1];  // exponent of u1
        out.coeffs[i] = t.coeff;
    }
    if (sub.is_zero()) out.coeffs.assign(d + 1, Scalar::zero(f.field()));
    return out;
}

bool BinaryForm::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

FieldDesc BinaryForm::field() const {
    return coeffs.empty() ? FieldDesc::rationals() : coeffs[0].field();
}

Scalar BinaryForm::evaluate(const ProjPoint& p) const {
    FieldDesc fd = field();
    Scalar acc = Scalar::zero(fd);
    int d = degree();
    for (int i = 0; i <= d; ++i) {
        if (coeffs[i].is_zero()) continue;
        Scalar term = coeffs[i];
        for (int k = 0; k < d - i; ++k) term *= p.c0;
        for (int k = 0; k < i; ++k) term *= p.c1;
        acc += term;
    }
    return acc;
}

Poly BinaryForm::to_poly() const {
    FieldDesc fd = field();
    int v0 = pair == Pair::X ? Monomial::kX0 : Monomial::kY0;
    std::vector<Term> ts;
    int d = degree();
    for (int i = 0; i <= d; ++i) {
        if (coeffs[i].is_zero()) continue;
        Monomial m;
        m.e[v0] = d - i;
        m.e[v0 + 1] = i;
        ts.push_back({m, coeffs[i]});
    }
    return Poly::from_terms(std::move(ts), fd);
}

namespace {

// Dehomogenized coefficients c[j] of z^j for q(z,1).
std::vector<Scalar> dehomogenize(const BinaryForm& q, int low) {
    int d = q.degree();
    std::vector<Scalar> p(d - low + 1, Scalar::zero(q.field()));
    for (int i = low; i <= d; ++i) p[d - i] = q.coeffs[i];
    return p;
}

Scalar eval_poly(const std::vector<Scalar>& p, const Scalar& z) {
    Scalar acc = Scalar::zero(z.field());
    for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j) acc = acc * z + p[j];
    return acc;
}

// Divides p by (z - root); p must vanish at root.
std::vector<Scalar> deflate(const std::vector<Scalar>& p, const Scalar& root) {
    std::vector<Scalar> q(p.size() - 1, Scalar::zero(root.field()));
    Scalar carry = p.back();
    for (int j = static_cast<int>(p.size()) - 2; j >= 0; --j) {
        q[j] = carry;
        carry = p[j] + carry * root;
    }
    return q;
}

std::vector<mpz_class> divisors_of(const mpz_class& n_in, std::size_t cap = 8192) {
    mpz_class n = abs(n_in);
    std::vector<std::pair<mpz_class, int>> factors;
    for (mpz_class d = 2; d * d <= n && d < 1000000; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            factors.push_back({d, e});
        }
    }
    if (n > 1) factors.push_back({n, 1});
    std::vector<mpz_class> divs{1};
    for (auto& [pr, e] : factors) {
        std::size_t sz = divs.size();
        mpz_class pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= pr;
            for (std::size_t j = 0; j < sz && divs.size() < cap; ++j)
                divs.push_back(divs[j] * pw);
        }
        if (divs.size() >= cap) break;
    }
    return divs;
}

std::vector<Scalar> root_candidates_q(const std::vector<Scalar>& p) {
    // primitive integer model
    mpz_class den = 1;
    for (const auto& c : p) den = lcm(den, c.rational().get_den());
    std::vector<mpz_class> ip;
    for (const auto& c : p) {
        mpq_class v = c.rational() * den;
        ip.push_back(v.get_num());
    }
    // strip trailing zeros (z = 0 handled by caller via candidates including 0)
    std::size_t lo = 0;
    while (lo < ip.size() && ip[lo] == 0) ++lo;
    std::vector<Scalar> out;
    out.push_back(Scalar::from_int(0));
    if (lo >= ip.size()) return out;
    auto nd = divisors_of(ip[lo]);
    auto dd = divisors_of(ip.back());
    for (const auto& a : nd) {
        for (const auto& b : dd) {
            mpq_class r(a, b);
            r.canonicalize();
            out.push_back(Scalar::from_rational(r));
            out.push_back(Scalar::from_rational(-r));
        }
    }
    return out;
}

}  // namespace

BinaryRootResult binary_roots(const BinaryForm& q) {
    BinaryRootResult res;
    if (q.is_zero()) throw FieldError("binary_roots: zero form");
    FieldDesc fd = q.field();
    int d = q.degree();
    int low = 0;
    while (q.coeffs[low].is_zero()) ++low;
    if (low > 0)
        res.roots.push_back({Scalar::one(fd), Scalar::zero(fd), low});  // [1:0]

    std::vector<Scalar> p = dehomogenize(q, low);
    // roots of p(z); canonical representative [alpha:1]
    std::vector<Scalar> candidates;
    if (fd.is_rational()) {
        candidates = root_candidates_q(p);
    } else {
        candidates.reserve(fd.p);
        for (std::int64_t z = 0; z < fd.p; ++z) candidates.push_back(Scalar::from_residue(z, fd.p));
    }
    for (const auto& z : candidates) {
        if (p.size() <= 1) break;
        int mult = 0;
        while (p.size() > 1 && eval_poly(p, z).is_zero()) {
            p = deflate(p, z);
            ++mult;
        }
        if (mult > 0) res.roots.push_back({z, Scalar::one(fd), mult});
    }
    res.residual_degree = static_cast<int>(p.size()) - 1;
    (void)d;
    return res;
}

}  // namespace vci
