#pragma once

// Slow reference implementations written straight from the definitions, using
// std::set and plain loops. They share no code with the engine beyond reading
// its tables, and are what the engine's answers are compared against.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mhr/hyperring.hpp"

namespace oracle {

using Set = std::set<int>;

struct Table
{
    int n = 0;
    std::vector<int> add;
    std::vector<Set> hyp;

    int plus(int x, int y) const { return add[x * n + y]; }
    const Set& times(int x, int y) const { return hyp[x * n + y]; }
};

inline Table from_raw(const mhr::RawTables& t)
{
    Table o;
    o.n = static_cast<int>(t.n);
    for (auto e : t.add)
        o.add.push_back(static_cast<int>(e));
    for (const auto& s : t.hyp) {
        Set x;
        for (auto e : s)
            x.insert(static_cast<int>(e));
        o.hyp.push_back(x);
    }
    return o;
}

inline Table from_ring(const mhr::Hyperring& g) { return from_raw(g.raw()); }

inline mhr::ElementSet to_bits(const Set& s)
{
    mhr::ElementSet r;
    for (int e : s)
        r.set(static_cast<mhr::Element>(e));
    return r;
}

inline Set from_bits(const mhr::ElementSet& s)
{
    Set r;
    for (auto e : s)
        r.insert(static_cast<int>(e));
    return r;
}

inline bool subset(const Set& a, const Set& b)
{
    for (int x : a)
        if (!b.count(x))
            return false;
    return true;
}

inline bool meets(const Set& a, const Set& b)
{
    for (int x : a)
        if (b.count(x))
            return true;
    return false;
}

inline Set prod(const Table& t, const Set& a, const Set& b)
{
    Set r;
    for (int x : a)
        for (int y : b)
            for (int z : t.times(x, y))
                r.insert(z);
    return r;
}

inline Set sum(const Table& t, const Set& a, const Set& b)
{
    Set r;
    for (int x : a)
        for (int y : b)
            r.insert(t.plus(x, y));
    return r;
}

inline int neg(const Table& t, int x)
{
    for (int y = 0; y < t.n; ++y)
        if (t.plus(x, y) == 0)
            return y;
    return -1;
}

/// Name of the first failing axiom in the order I, nonempty, V, II, III, IV, no-identity.
inline std::optional<std::string> first_violated_axiom(const Table& t)
{
    const int n = t.n;
    // I: closed, 0 neutral, commutative, associative, inverses.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (t.plus(x, y) < 0 || t.plus(x, y) >= n)
                return "I";
    for (int x = 0; x < n; ++x) {
        if (t.plus(0, x) != x || t.plus(x, 0) != x)
            return "I";
        if (neg(t, x) < 0)
            return "I";
        for (int y = 0; y < n; ++y) {
            if (t.plus(x, y) != t.plus(y, x))
                return "I";
            for (int z = 0; z < n; ++z)
                if (t.plus(t.plus(x, y), z) != t.plus(x, t.plus(y, z)))
                    return "I";
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (t.times(x, y).empty())
                return "nonempty";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (t.times(x, y) != t.times(y, x))
                return "V";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (prod(t, t.times(x, y), {z}) != prod(t, {x}, t.times(y, z)))
                    return "II";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Set negated;
            for (int a : t.times(x, y))
                negated.insert(neg(t, a));
            if (t.times(neg(t, x), y) != negated || t.times(x, neg(t, y)) != negated)
                return "III";
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (!subset(t.times(t.plus(y, z), x), sum(t, t.times(y, x), t.times(z, x))))
                    return "IV";
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = t.times(e, a).count(a) > 0;
        if (ok)
            return std::nullopt;
    }
    return "no-identity";
}

inline bool is_hyperideal(const Table& t, const Set& a)
{
    if (a.empty())
        return false;
    for (int x : a)
        for (int y : a)
            if (!a.count(t.plus(x, neg(t, y))))
                return false;
    for (int x : a)
        for (int r = 0; r < t.n; ++r)
            if (!subset(t.times(r, x), a))
                return false;
    return true;
}

/// All hyperideals by filtering every subset.
inline std::vector<Set> all_hyperideals(const Table& t)
{
    std::vector<Set> out;
    for (unsigned long mask = 1; mask < (1ul << t.n); ++mask) {
        Set s;
        for (int i = 0; i < t.n; ++i)
            if (mask >> i & 1)
                s.insert(i);
        if (is_hyperideal(t, s))
            out.push_back(s);
    }
    return out;
}

inline bool is_prime(const Table& t, const Set& a)
{
    if (static_cast<int>(a.size()) == t.n)
        return false;
    for (int u = 0; u < t.n; ++u)
        for (int v = 0; v < t.n; ++v)
            if (subset(t.times(u, v), a) && !a.count(u) && !a.count(v))
                return false;
    return true;
}

inline Set all(const Table& t)
{
    Set s;
    for (int i = 0; i < t.n; ++i)
        s.insert(i);
    return s;
}

/// Intersection of the prime hyperideals containing A; the carrier if there are none.
inline Set radical_primes(const Table& t, const Set& a)
{
    Set r = all(t);
    for (const Set& p : all_hyperideals(t))
        if (is_prime(t, p) && subset(a, p)) {
            Set keep;
            for (int x : r)
                if (p.count(x))
                    keep.insert(x);
            r = keep;
        }
    return r;
}

/// { x : x^k inside A for some k <= n^2 }. Powers of a finite set cycle within 2^n steps;
/// the bound here is generous for the carriers used in tests.
inline Set radical_powers(const Table& t, const Set& a)
{
    Set r;
    for (int x = 0; x < t.n; ++x) {
        Set p = {x};
        for (int k = 1; k <= 64; ++k) {
            if (subset(p, a)) {
                r.insert(x);
                break;
            }
            p = prod(t, p, {x});
        }
    }
    return r;
}

/// Every product of two or more elements meeting A lies in A.
inline bool is_c_hyperideal(const Table& t, const Set& a)
{
    // Closure of the family of product sets under multiplying by one more element.
    std::set<Set> family, frontier;
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y)
            frontier.insert(t.times(x, y));
    while (!frontier.empty()) {
        std::set<Set> next;
        for (const Set& f : frontier) {
            if (!family.insert(f).second)
                continue;
            for (int z = 0; z < t.n; ++z)
                next.insert(prod(t, f, {z}));
        }
        frontier = std::move(next);
    }
    for (const Set& f : family)
        if (meets(f, a) && !subset(f, a))
            return false;
    return true;
}

inline bool is_mcs(const Table& t, const Set& s)
{
    bool has_identity = false;
    for (int e : s) {
        bool ok = true;
        for (int a = 0; a < t.n && ok; ++a)
            ok = t.times(e, a).count(a) > 0;
        has_identity = has_identity || ok;
    }
    if (!has_identity)
        return false;
    for (int a : s)
        for (int b : s)
            if (!meets(t.times(a, b), s))
                return false;
    return true;
}

enum class Kind { SPrime, SPrimary, Quasi, Weakly, Strongly };

/// Straight reading of the five definitions; false when A meets S.
inline bool holds(const Table& t, Kind k, const Set& a, const Set& s, const Set& rad)
{
    if (meets(a, s))
        return false;
    for (int w : s) {
        bool ok = true;
        for (int u = 0; u < t.n && ok; ++u)
            for (int v = 0; v < t.n && ok; ++v) {
                const Set& uv = t.times(u, v);
                if (!subset(uv, a))
                    continue;
                if (k == Kind::Weakly && uv.count(0))
                    continue;
                const bool wu_a = subset(t.times(w, u), a);
                const bool wv_a = subset(t.times(w, v), a);
                const bool wu_r = subset(t.times(w, u), rad);
                const bool wv_r = subset(t.times(w, v), rad);
                switch (k) {
                case Kind::SPrime: ok = wu_a || wv_a; break;
                case Kind::SPrimary: ok = wu_a || wv_r; break;
                case Kind::Quasi:
                case Kind::Weakly: ok = wu_r || wv_r; break;
                case Kind::Strongly: ok = subset(prod(t, {w}, t.times(u, u)), a) || wv_r; break;
                }
            }
        if (ok)
            return true;
    }
    return false;
}

} // namespace oracle
