#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mhr/element_set.hpp"
#include "mhr/error.hpp"
#include "mhr/hyperring.hpp"

namespace mhr {

/// Bounds for the exhaustive searches. Exceeding any of them is a CapacityError,
/// never a silently truncated result.
struct SearchLimits
{
    std::size_t max_subgroups = 20000;
    std::size_t max_family = 1u << 16;
};

/// Why a set fails to be a hyperideal.
struct IdealViolation
{
    enum class Rule { Empty, Subtraction, Absorption } rule;
    Element x = 0;
    Element y = 0;
};

inline std::optional<IdealViolation> find_ideal_violation(const Hyperring& g, const ElementSet& a)
{
    if (a.empty())
        return IdealViolation{IdealViolation::Rule::Empty};
    for (Element x : a)
        for (Element y : a)
            if (!a.test(g.sub(x, y)))
                return IdealViolation{IdealViolation::Rule::Subtraction, x, y};
    const auto n = static_cast<Element>(g.size());
    for (Element x : a)
        for (Element r = 0; r < n; ++r)
            if (!g.hyp(r, x).subset_of(a))
                return IdealViolation{IdealViolation::Rule::Absorption, r, x};
    return std::nullopt;
}

inline bool is_hyperideal(const Hyperring& g, const ElementSet& a)
{
    detail::require_owned(g, a, "is_hyperideal");
    if (a.empty())
        throw PreconditionError("is_hyperideal: the empty set is never a hyperideal");
    return !find_ideal_violation(g, a).has_value();
}

namespace detail {

inline void require_ideal(const Hyperring& g, const ElementSet& a, const char* what)
{
    require_owned(g, a, what);
    if (find_ideal_violation(g, a))
        throw PreconditionError(std::string(what) + ": " + to_string(a) + " is not a hyperideal");
}

inline void require_proper_ideal(const Hyperring& g, const ElementSet& a, const char* what)
{
    require_ideal(g, a, what);
    if (a == g.carrier())
        throw PreconditionError(std::string(what) + ": hyperideal must be proper");
}

/// Additive subgroup generated by X.
inline ElementSet additive_closure(const Hyperring& g, const ElementSet& x)
{
    ElementSet s = x;
    s.set(0);
    std::vector<Element> work(s.begin(), s.end());
    while (!work.empty()) {
        Element a = work.back();
        work.pop_back();
        for (Element b : ElementSet(s)) {
            Element c = g.add(a, b);
            if (!s.test(c)) {
                s.set(c);
                work.push_back(c);
            }
        }
    }
    return s;
}

} // namespace detail

/// Least hyperideal containing X: closure under subtraction and r o x absorption.
inline ElementSet generate_hyperideal(const Hyperring& g, const ElementSet& x)
{
    detail::require_owned(g, x, "generate_hyperideal");
    detail::require_nonempty(x, "generate_hyperideal");
    const auto n = static_cast<Element>(g.size());
    ElementSet s = x;
    while (true) {
        ElementSet next = detail::additive_closure(g, s);
        for (Element a : ElementSet(next))
            for (Element r = 0; r < n; ++r)
                next |= g.hyp(r, a);
        if (next == s)
            return s;
        s = next;
    }
}

/**
 * All hyperideals of g, sorted by (size, bitmask).
 *
 * Walks the lattice of additive subgroups upward from {0} by joining one cyclic
 * subgroup at a time, then keeps the absorbing ones.
 */
inline std::vector<ElementSet> enumerate_hyperideals(const Hyperring& g, const SearchLimits& limits = {})
{
    const auto n = static_cast<Element>(g.size());
    std::vector<ElementSet> cyclic(n);
    for (Element a = 0; a < n; ++a)
        cyclic[a] = detail::additive_closure(g, ElementSet::singleton(a));

    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::deque<ElementSet> queue;
    ElementSet zero = ElementSet::singleton(0);
    seen.insert(zero);
    queue.push_back(zero);
    while (!queue.empty()) {
        ElementSet h = queue.front();
        queue.pop_front();
        for (Element a = 0; a < n; ++a) {
            if (h.test(a))
                continue;
            ElementSet k = g.plus(h, cyclic[a]);
            if (seen.insert(k).second) {
                if (seen.size() > limits.max_subgroups)
                    throw CapacityError("additive subgroup lattice exceeds " + std::to_string(limits.max_subgroups) +
                                        " subgroups");
                queue.push_back(k);
            }
        }
    }

    std::vector<ElementSet> ideals;
    for (const ElementSet& h : seen) {
        bool absorbing = true;
        for (Element x : h) {
            for (Element r = 0; r < n && absorbing; ++r)
                absorbing = g.hyp(r, x).subset_of(h);
            if (!absorbing)
                break;
        }
        if (absorbing)
            ideals.push_back(h);
    }
    std::sort(ideals.begin(), ideals.end(), size_then_mask_less);
    return ideals;
}

/// Unchecked prime test: proper, and x o y inside A forces x or y into A.
inline bool prime_scan(const Hyperring& g, const ElementSet& a)
{
    if (a == g.carrier())
        return false;
    const auto n = static_cast<Element>(g.size());
    for (Element x = 0; x < n; ++x) {
        if (a.test(x))
            continue;
        for (Element y = x; y < n; ++y)
            if (!a.test(y) && g.hyp(x, y).subset_of(a))
                return false;
    }
    return true;
}

inline bool is_prime(const Hyperring& g, const ElementSet& a)
{
    detail::require_proper_ideal(g, a, "is_prime");
    return prime_scan(g, a);
}

/// Intersection of the given primes that contain A, or the carrier when none does.
inline ElementSet radical_from_primes(const Hyperring& g, const std::vector<ElementSet>& primes, const ElementSet& a)
{
    ElementSet r = g.carrier();
    for (const ElementSet& p : primes)
        if (a.subset_of(p))
            r &= p;
    return r;
}

inline std::vector<ElementSet> prime_hyperideals(const Hyperring& g, const std::vector<ElementSet>& ideals)
{
    std::vector<ElementSet> primes;
    for (const ElementSet& i : ideals)
        if (prime_scan(g, i))
            primes.push_back(i);
    return primes;
}

/// {a : a^k inside A for some k >= 1}. The power sequence of {a} is eventually
/// periodic, so the scan stops at the first repeated power.
inline ElementSet power_radical(const Hyperring& g, const ElementSet& a)
{
    ElementSet r;
    const auto n = static_cast<Element>(g.size());
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Element x = 0; x < n; ++x) {
        seen.clear();
        const ElementSet base = ElementSet::singleton(x);
        ElementSet p = base;
        while (seen.insert(p).second) {
            if (p.subset_of(a)) {
                r.set(x);
                break;
            }
            p = g.times(p, base);
        }
    }
    return r;
}

enum class RadicalMode { Primes, Powers };

inline ElementSet radical(const Hyperring& g, const ElementSet& a, RadicalMode mode, const SearchLimits& limits = {})
{
    detail::require_ideal(g, a, "radical");
    if (mode == RadicalMode::Powers)
        return power_radical(g, a);
    return radical_from_primes(g, prime_hyperideals(g, enumerate_hyperideals(g, limits)), a);
}

inline bool is_primary(const Hyperring& g, const ElementSet& a, const ElementSet& rad)
{
    if (a == g.carrier())
        return false;
    const auto n = static_cast<Element>(g.size());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (g.hyp(x, y).subset_of(a) && !a.test(x) && !rad.test(y))
                return false;
    return true;
}

inline bool is_primary(const Hyperring& g, const ElementSet& a, const SearchLimits& limits = {})
{
    detail::require_proper_ideal(g, a, "is_primary");
    return is_primary(g, a, radical(g, a, RadicalMode::Primes, limits));
}

/// Maximality against an explicit list of all hyperideals.
inline bool is_maximal(const Hyperring& g, const ElementSet& a, const std::vector<ElementSet>& ideals)
{
    if (a == g.carrier())
        return false;
    const ElementSet all = g.carrier();
    for (const ElementSet& m : ideals)
        if (a.subset_of(m) && m != a && m != all)
            return false;
    return true;
}

inline bool is_maximal(const Hyperring& g, const ElementSet& a, const SearchLimits& limits = {})
{
    detail::require_proper_ideal(g, a, "is_maximal");
    return is_maximal(g, a, enumerate_hyperideals(g, limits));
}

inline std::vector<ElementSet> maximal_hyperideals(const Hyperring& g, const std::vector<ElementSet>& ideals)
{
    std::vector<ElementSet> out;
    for (const ElementSet& i : ideals)
        if (is_maximal(g, i, ideals))
            out.push_back(i);
    return out;
}

/// Intersection of all maximal hyperideals; the carrier when there are none.
inline ElementSet jacobson(const Hyperring& g, const SearchLimits& limits = {})
{
    ElementSet j = g.carrier();
    for (const ElementSet& m : maximal_hyperideals(g, enumerate_hyperideals(g, limits)))
        j &= m;
    return j;
}

inline bool is_local(const Hyperring& g, const SearchLimits& limits = {})
{
    return maximal_hyperideals(g, enumerate_hyperideals(g, limits)).size() == 1;
}

// ---------------------------------------------------------------------------
// Product families and the C conditions

/**
 * Every set a1 o a2 o ... o ak with k >= 2, as the least family containing the
 * pairwise products and closed under right multiplication by a singleton.
 * Sorted by (size, bitmask).
 */
inline std::vector<ElementSet> product_family(const Hyperring& g, const SearchLimits& limits = {})
{
    const auto n = static_cast<Element>(g.size());
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> work;
    auto push = [&](const ElementSet& s) {
        if (seen.insert(s).second) {
            if (seen.size() > limits.max_family)
                throw CapacityError("product family exceeds " + std::to_string(limits.max_family) + " sets");
            work.push_back(s);
        }
    };
    for (Element x = 0; x < n; ++x)
        for (Element y = x; y < n; ++y)
            push(g.hyp(x, y));
    while (!work.empty()) {
        ElementSet t = work.back();
        work.pop_back();
        for (Element a = 0; a < n; ++a)
            push(g.times(a, t));
    }
    std::vector<ElementSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), size_then_mask_less);
    return out;
}

/**
 * Finite sums of product sets, where a summand may also be a single element
 * (a product of length one). Sorted by (size, bitmask).
 */
inline std::vector<ElementSet> sum_family(const Hyperring& g, const std::vector<ElementSet>& products,
                                          const SearchLimits& limits = {})
{
    const auto n = static_cast<Element>(g.size());
    std::vector<ElementSet> base = products;
    for (Element x = 0; x < n; ++x)
        base.push_back(ElementSet::singleton(x));
    std::unordered_set<ElementSet, ElementSetHash> seen(base.begin(), base.end());
    std::vector<ElementSet> work(seen.begin(), seen.end());
    while (!work.empty()) {
        ElementSet t = work.back();
        work.pop_back();
        for (const ElementSet& b : base) {
            ElementSet s = g.plus(t, b);
            if (seen.insert(s).second) {
                if (seen.size() > limits.max_family)
                    throw CapacityError("sum family exceeds " + std::to_string(limits.max_family) + " sets");
                work.push_back(s);
            }
        }
    }
    std::vector<ElementSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), size_then_mask_less);
    return out;
}

/// First family member that meets A without lying inside it.
inline std::optional<ElementSet> c_condition_witness(const std::vector<ElementSet>& family, const ElementSet& a)
{
    for (const ElementSet& t : family)
        if (t.intersects(a) && !t.subset_of(a))
            return t;
    return std::nullopt;
}

struct CCheck
{
    bool holds = true;
    std::optional<ElementSet> witness; // offending product (or sum) set
};

inline CCheck is_c_hyperideal(const Hyperring& g, const ElementSet& a, const SearchLimits& limits = {})
{
    detail::require_ideal(g, a, "is_c_hyperideal");
    auto w = c_condition_witness(product_family(g, limits), a);
    return {!w.has_value(), w};
}

inline CCheck is_strong_c_hyperideal(const Hyperring& g, const ElementSet& a, const SearchLimits& limits = {})
{
    detail::require_ideal(g, a, "is_strong_c_hyperideal");
    auto w = c_condition_witness(sum_family(g, product_family(g, limits), limits), a);
    return {!w.has_value(), w};
}

// ---------------------------------------------------------------------------
// Derived sets

/// (A : D) = { x : x o D inside A }
inline ElementSet colon(const Hyperring& g, const ElementSet& a, const ElementSet& d)
{
    detail::require_owned(g, a, "colon");
    detail::require_owned(g, d, "colon");
    detail::require_nonempty(a, "colon");
    detail::require_nonempty(d, "colon");
    ElementSet r;
    const auto n = static_cast<Element>(g.size());
    for (Element x = 0; x < n; ++x)
        if (g.times(x, d).subset_of(a))
            r.set(x);
    return r;
}

/// B o A realized as the hyperideal generated by the union of all b o a.
inline ElementSet ideal_product(const Hyperring& g, const ElementSet& b, const ElementSet& a)
{
    detail::require_ideal(g, b, "ideal_product");
    detail::require_ideal(g, a, "ideal_product");
    return generate_hyperideal(g, g.times(b, a));
}

/// O_A = { x in A : x in x o A }
inline ElementSet pure_part(const Hyperring& g, const ElementSet& a)
{
    ElementSet o;
    for (Element x : a)
        if (g.times(x, a).test(x))
            o.set(x);
    return o;
}

inline bool is_pure(const Hyperring& g, const ElementSet& a)
{
    detail::require_ideal(g, a, "is_pure");
    return pure_part(g, a) == a;
}

} // namespace mhr
