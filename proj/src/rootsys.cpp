#include "lagsub/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lagsub/error.hpp"

namespace lagsub {

int Root::height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
}

bool Root::is_positive() const {
    bool any = false;
    for (int c : coeffs) {
        if (c < 0) return false;
        if (c > 0) any = true;
    }
    return any;
}

bool Root::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
}

Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

Root operator-(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

bool operator<(const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
}

std::string Root::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs[i]);
    }
    return s + "]";
}

RootSystem RootSystem::build(const CartanMatrix& c) {
    RootSystem rs(c);
    const int l = c.rank();

    // Symmetrizer d_i: smallest positive integers with d_i a_ij = d_j a_ji,
    // found by propagation along the Dynkin graph.
    std::vector<Rational> d(static_cast<std::size_t>(l));
    std::vector<bool> seen(static_cast<std::size_t>(l), false);
    std::vector<int> queue{0};
    d[0] = Rational(1);
    seen[0] = true;
    while (!queue.empty()) {
        int i = queue.back();
        queue.pop_back();
        for (int j = 0; j < l; ++j) {
            if (seen[static_cast<std::size_t>(j)] || c.entry(i, j) == 0) continue;
            d[static_cast<std::size_t>(j)] =
                d[static_cast<std::size_t>(i)] * Rational(c.entry(i, j)) / Rational(c.entry(j, i));
            seen[static_cast<std::size_t>(j)] = true;
            queue.push_back(j);
        }
    }
    // d entries are among {1, 1/2, 1/3, 2, 3}; clear denominators exactly.
    long denom_lcm = 1;
    for (long mult : {1L, 2L, 3L, 6L}) {
        bool ok = true;
        for (const auto& x : d)
            if (!(x * Rational(mult)).is_integer()) { ok = false; break; }
        if (ok) { denom_lcm = mult; break; }
    }
    std::vector<long> di;
    di.reserve(static_cast<std::size_t>(l));
    long g = 0;
    for (const auto& x : d) {
        Rational v = x * Rational(denom_lcm);
        di.push_back(v.num_long());
        g = std::gcd(g, di.back());
    }
    for (auto& v : di) v /= g;
    rs.d_ = std::move(di);

    // Positive roots by closure over root strings: for a root mu and simple
    // alpha_i, the string mu - r alpha_i ... mu + q alpha_i satisfies
    // r - q = <mu, alpha_i^vee>, so mu + alpha_i is a root iff q > 0.
    std::set<Root> pos;
    std::vector<Root> frontier;
    for (int i = 0; i < l; ++i) {
        Root s = Root::simple(i, l);
        pos.insert(s);
        frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const Root& mu : frontier) {
            for (int i = 0; i < l; ++i) {
                Root alpha = Root::simple(i, l);
                int r = 0;
                Root down = mu - alpha;
                while (down.is_positive() && pos.count(down)) {
                    ++r;
                    down = down - alpha;
                }
                int pair = 0;
                for (int j = 0; j < l; ++j) pair += c.entry(i, j) * mu.coeffs[static_cast<std::size_t>(j)];
                int q = r - pair;
                if (q > 0) {
                    Root up = mu + alpha;
                    if (pos.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    rs.positive_.assign(pos.begin(), pos.end());
    std::sort(rs.positive_.begin(), rs.positive_.end());
    if (rs.positive_.size() != c.positive_root_count())
        throw InvalidCartanMatrix("positive-root closure produced " +
                                  std::to_string(rs.positive_.size()) + " roots for " +
                                  c.type_string() + ", expected " +
                                  std::to_string(c.positive_root_count()));
    for (std::size_t k = 0; k < rs.positive_.size(); ++k) rs.index_[rs.positive_[k].coeffs] = k;
    return rs;
}

long RootSystem::find_index(const Root& r) const {
    if (r.coeffs.size() != static_cast<std::size_t>(rank())) return -1;
    auto it = index_.find(r.coeffs);
    if (it != index_.end()) return static_cast<long>(it->second);
    auto it2 = index_.find((-r).coeffs);
    if (it2 != index_.end()) return static_cast<long>(it2->second + num_positive());
    return -1;
}

std::size_t RootSystem::index_of(const Root& r) const {
    long i = find_index(r);
    if (i < 0) throw NotARoot(r.str() + " is not a root of " + cartan_.type_string());
    return static_cast<std::size_t>(i);
}

Root RootSystem::root_at(std::size_t idx) const {
    if (idx < num_positive()) return positive_[idx];
    return -positive_[idx - num_positive()];
}

std::optional<Root> RootSystem::sum_as_root(const Root& lambda, const Root& mu) const {
    index_of(lambda);
    index_of(mu);
    Root s = lambda + mu;
    if (!s.is_zero() && is_root(s)) return s;
    return std::nullopt;
}

int RootSystem::root_string_p(const Root& lambda, const Root& mu) const {
    index_of(lambda);
    index_of(mu);
    if (lambda == mu || lambda == -mu)
        throw NotARoot("root string undefined for proportional roots");
    int p = 0;
    Root down = mu - lambda;
    while (!down.is_zero() && is_root(down)) {
        ++p;
        down = down - lambda;
    }
    return p;
}

int RootSystem::pairing(const Root& lambda, int i) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j)
        s += cartan_.entry(i, j) * lambda.coeffs[static_cast<std::size_t>(j)];
    return s;
}

long RootSystem::length_sq(const Root& lambda) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            s += d_[static_cast<std::size_t>(i)] * cartan_.entry(i, j) *
                 lambda.coeffs[static_cast<std::size_t>(i)] * lambda.coeffs[static_cast<std::size_t>(j)];
    return s;
}

std::vector<Rational> RootSystem::coroot_coeffs(const Root& lambda) const {
    const long len = length_sq(lambda);
    std::vector<Rational> cv(static_cast<std::size_t>(rank()));
    for (int i = 0; i < rank(); ++i)
        cv[static_cast<std::size_t>(i)] = Rational(2 * lambda.coeffs[static_cast<std::size_t>(i)] *
                                                       d_[static_cast<std::size_t>(i)],
                                                   len);
    return cv;
}

WeylElement WeylElement::identity(std::size_t num_roots) {
    std::vector<std::uint32_t> p(num_roots);
    for (std::size_t i = 0; i < num_roots; ++i) p[i] = static_cast<std::uint32_t>(i);
    return WeylElement(std::move(p));
}

Root WeylElement::apply(const RootSystem& rs, const Root& r) const {
    return rs.root_at(perm_[rs.index_of(r)]);
}

WeylElement WeylElement::compose(const WeylElement& other) const {
    std::vector<std::uint32_t> p(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) p[i] = perm_[other.perm_[i]];
    return WeylElement(std::move(p));
}

WeylElement WeylElement::inverse() const {
    std::vector<std::uint32_t> p(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) p[perm_[i]] = static_cast<std::uint32_t>(i);
    return WeylElement(std::move(p));
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
    std::vector<std::uint32_t> p(rs.num_roots());
    for (std::size_t k = 0; k < rs.num_roots(); ++k) {
        Root r = rs.root_at(k);
        Root image = r;
        image.coeffs[static_cast<std::size_t>(i)] -= rs.pairing(r, i);
        p[k] = static_cast<std::uint32_t>(rs.index_of(image));
    }
    return WeylElement(std::move(p));
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::size_t cap) {
    const unsigned long long order = rs.weyl_order();
    if (order > cap)
        throw CapExceeded("Weyl group of " + rs.cartan().type_string() + " has order " +
                          std::to_string(order) + ", exceeding the cap of " + std::to_string(cap));
    std::vector<WeylElement> gens;
    gens.reserve(static_cast<std::size_t>(rs.rank()));
    for (int i = 0; i < rs.rank(); ++i) gens.push_back(simple_reflection(rs, i));

    std::set<std::vector<std::uint32_t>> seen;
    std::vector<WeylElement> result;
    std::vector<WeylElement> frontier{WeylElement::identity(rs.num_roots())};
    seen.insert(frontier[0].perm());
    result.push_back(frontier[0]);
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier) {
            for (const auto& s : gens) {
                WeylElement ws = s.compose(w);
                if (seen.insert(ws.perm()).second) {
                    result.push_back(ws);
                    next.push_back(std::move(ws));
                }
            }
        }
        frontier = std::move(next);
    }
    if (result.size() != order)
        throw Error("Weyl closure produced " + std::to_string(result.size()) +
                    " elements, expected " + std::to_string(order));
    return result;
}

std::vector<Root> positive_system_of(const WeylElement& w, const RootSystem& rs) {
    std::vector<Root> out;
    out.reserve(rs.num_positive());
    for (const Root& r : rs.positive_roots()) out.push_back(w.apply(rs, r));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace lagsub
