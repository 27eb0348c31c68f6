#include "rees/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace rees {

XMonomial XMonomial::variable(int i, int n) {
    XMonomial m = unit(n);
    m.exponents.at(i - 1) = 1;
    return m;
}

int XMonomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

std::vector<int> XMonomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < n(); ++i)
        if (exponents[i] > 0) s.push_back(i + 1);
    return s;
}

XMonomial XMonomial::operator*(const XMonomial& o) const {
    assert(n() == o.n());
    XMonomial out = *this;
    for (int i = 0; i < n(); ++i) out.exponents[i] += o.exponents[i];
    return out;
}

bool XMonomial::divides(const XMonomial& o) const {
    assert(n() == o.n());
    for (int i = 0; i < n(); ++i)
        if (exponents[i] > o.exponents[i]) return false;
    return true;
}

XMonomial XMonomial::divide_into(const XMonomial& o) const {
    assert(divides(o));
    XMonomial out = o;
    for (int i = 0; i < n(); ++i) out.exponents[i] -= exponents[i];
    return out;
}

SMonomial::SMonomial(XMonomial x, std::vector<TVariable> t)
    : xpart(std::move(x)), tpart(std::move(t)) {
    std::sort(tpart.begin(), tpart.end());
}

SMonomial SMonomial::operator*(const SMonomial& o) const {
    SMonomial out;
    out.xpart = xpart * o.xpart;
    out.tpart.reserve(tpart.size() + o.tpart.size());
    std::merge(tpart.begin(), tpart.end(), o.tpart.begin(), o.tpart.end(),
               std::back_inserter(out.tpart));
    return out;
}

bool SMonomial::divides(const SMonomial& o) const {
    if (!xpart.divides(o.xpart)) return false;
    // Multiset inclusion over the structurally sorted T-parts.
    auto it = o.tpart.begin();
    for (const TVariable& t : tpart) {
        it = std::find(it, o.tpart.end(), t);
        if (it == o.tpart.end()) return false;
        ++it;
    }
    return true;
}

SMonomial SMonomial::divide_into(const SMonomial& o) const {
    assert(divides(o));
    SMonomial out;
    out.xpart = xpart.divide_into(o.xpart);
    auto it = tpart.begin();
    for (const TVariable& t : o.tpart) {
        if (it != tpart.end() && *it == t)
            ++it;
        else
            out.tpart.push_back(t);
    }
    return out;
}

bool SMonomial::coprime_with(const SMonomial& o) const {
    for (int i = 0; i < xpart.n(); ++i)
        if (xpart.exponents[i] > 0 && o.xpart.exponents[i] > 0) return false;
    for (const TVariable& t : tpart)
        if (std::find(o.tpart.begin(), o.tpart.end(), t) != o.tpart.end()) return false;
    return true;
}

ImageMonomial phi_eval(const SMonomial& u, int r) {
    ImageMonomial mu;
    mu.xpart = u.xpart;
    mu.tdeg.assign(r, 0);
    for (const TVariable& t : u.tpart) {
        mu.xpart = mu.xpart * t.gen;
        assert(t.block >= 1 && t.block <= r);
        mu.tdeg[t.block - 1] += 1;
    }
    return mu;
}

namespace {
constexpr std::size_t fnv_offset = 1469598103934665603ull;
constexpr std::size_t fnv_prime = 1099511628211ull;
void mix(std::size_t& h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}
std::size_t hash_ints(const std::vector<int>& v) {
    std::size_t h = fnv_offset;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x100;
        h *= fnv_prime;
    }
    return h;
}
} // namespace

std::size_t hash_value(const XMonomial& m) { return hash_ints(m.exponents); }

std::size_t hash_value(const SMonomial& m) {
    std::size_t h = hash_value(m.xpart);
    for (const TVariable& t : m.tpart) {
        mix(h, static_cast<std::size_t>(t.block));
        mix(h, hash_value(t.gen));
    }
    return h;
}

std::size_t hash_value(const ImageMonomial& m) {
    std::size_t h = hash_value(m.xpart);
    mix(h, hash_ints(m.tdeg));
    return h;
}

} // namespace rees
