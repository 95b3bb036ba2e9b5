#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhr/element_set.hpp"
#include "mhr/error.hpp"

namespace mhr {

/// Unvalidated input tables: an n*n addition table and an n*n table of product sets,
/// both row-major.
struct RawTables
{
    std::size_t n = 0;
    std::vector<Element> add;
    std::vector<ElementSet> hyp;

    [[nodiscard]] Element& add_at(Element x, Element y) { return add[x * n + y]; }
    [[nodiscard]] ElementSet& hyp_at(Element x, Element y) { return hyp[x * n + y]; }
    [[nodiscard]] Element add_at(Element x, Element y) const { return add[x * n + y]; }
    [[nodiscard]] const ElementSet& hyp_at(Element x, Element y) const { return hyp[x * n + y]; }

    friend bool operator==(const RawTables&, const RawTables&) = default;
};

class Hyperring;
std::optional<AxiomViolation> find_axiom_violation(const RawTables& t);
Hyperring validate(RawTables t, std::size_t capacity = kMaxCarrier);

/**
 * A validated finite commutative multiplicative hyperring.
 *
 * Instances only come out of validate() (or constructions that revalidate), so
 * every object satisfies axioms I-V and has at least one identity element.
 * Immutable after construction.
 */
class Hyperring
{
    std::size_t n_ = 0;
    std::vector<Element> add_;
    std::vector<Element> neg_;
    std::vector<ElementSet> hyp_;
    ElementSet identities_;
    bool strongly_distributive_ = false;

    Hyperring() = default;
    friend Hyperring validate(RawTables t, std::size_t capacity);

public:
    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] ElementSet carrier() const { return ElementSet::prefix(n_); }
    static constexpr Element zero() { return 0; }

    [[nodiscard]] Element add(Element x, Element y) const { return add_[x * n_ + y]; }
    [[nodiscard]] Element neg(Element x) const { return neg_[x]; }
    [[nodiscard]] Element sub(Element x, Element y) const { return add(x, neg_[y]); }
    [[nodiscard]] const ElementSet& hyp(Element x, Element y) const { return hyp_[x * n_ + y]; }

    [[nodiscard]] const ElementSet& identities() const { return identities_; }
    /// Smallest identity element; plays the role of "1".
    [[nodiscard]] Element one() const { return identities_.first(); }
    [[nodiscard]] bool strongly_distributive() const { return strongly_distributive_; }

    [[nodiscard]] bool fits(const ElementSet& s) const { return s.extent() <= n_; }

    /// x o B, unchecked.
    [[nodiscard]] ElementSet times(Element x, const ElementSet& b) const
    {
        ElementSet r;
        const ElementSet* row = &hyp_[x * n_];
        for (Element y : b)
            r |= row[y];
        return r;
    }

    /// A o B, unchecked.
    [[nodiscard]] ElementSet times(const ElementSet& a, const ElementSet& b) const
    {
        ElementSet r;
        for (Element x : a)
            r |= times(x, b);
        return r;
    }

    /// A + B, unchecked.
    [[nodiscard]] ElementSet plus(const ElementSet& a, const ElementSet& b) const
    {
        ElementSet r;
        for (Element x : a) {
            const Element* row = &add_[x * n_];
            for (Element y : b)
                r.set(row[y]);
        }
        return r;
    }

    /// -A
    [[nodiscard]] ElementSet negate(const ElementSet& a) const
    {
        ElementSet r;
        for (Element x : a)
            r.set(neg_[x]);
        return r;
    }

    [[nodiscard]] RawTables raw() const
    {
        RawTables t;
        t.n = n_;
        t.add = add_;
        t.hyp = hyp_;
        return t;
    }

    friend bool operator==(const Hyperring& a, const Hyperring& b)
    {
        return a.n_ == b.n_ && a.add_ == b.add_ && a.hyp_ == b.hyp_;
    }
};

namespace detail {

inline void require_owned(const Hyperring& g, const ElementSet& s, const char* what)
{
    if (!g.fits(s))
        throw PreconditionError(std::string(what) + ": set " + to_string(s) + " is not a subset of a carrier of size " +
                                std::to_string(g.size()));
}

inline void require_nonempty(const ElementSet& s, const char* what)
{
    if (s.empty())
        throw PreconditionError(std::string(what) + ": empty set");
}

} // namespace detail

/**
 * Exhaustive axiom scan. Returns the first violation in the order
 * I, nonempty, V, II, III, IV, no-identity, scanning witnesses in ascending
 * lexicographic order within each axiom.
 */
inline std::optional<AxiomViolation> find_axiom_violation(const RawTables& t)
{
    const std::size_t n = t.n;
    if (n == 0)
        return AxiomViolation(Axiom::AdditiveGroup, "empty carrier");
    if (t.add.size() != n * n || t.hyp.size() != n * n)
        throw PreconditionError("table dimensions do not match n=" + std::to_string(n));
    const ElementSet all = ElementSet::prefix(n);
    for (std::size_t i = 0; i < n * n; ++i)
        if (!t.hyp[i].subset_of(all))
            throw PreconditionError("product entry " + to_string(t.hyp[i]) + " outside carrier");

    auto A = [&](Element x, Element y) { return t.add[x * n + y]; };
    auto H = [&](Element x, Element y) -> const ElementSet& { return t.hyp[x * n + y]; };
    const auto N = static_cast<Element>(n);

    // I: abelian group with neutral 0.
    for (Element x = 0; x < N; ++x)
        for (Element y = 0; y < N; ++y)
            if (A(x, y) >= N)
                return AxiomViolation(Axiom::AdditiveGroup, "sum outside carrier", {x, y});
    for (Element x = 0; x < N; ++x)
        if (A(0, x) != x || A(x, 0) != x)
            return AxiomViolation(Axiom::AdditiveGroup, "0 is not neutral", {x});
    for (Element x = 0; x < N; ++x)
        for (Element y = x + 1; y < N; ++y)
            if (A(x, y) != A(y, x))
                return AxiomViolation(Axiom::AdditiveGroup, "addition not commutative", {x, y});
    for (Element x = 0; x < N; ++x)
        for (Element y = 0; y < N; ++y)
            for (Element z = 0; z < N; ++z)
                if (A(A(x, y), z) != A(x, A(y, z)))
                    return AxiomViolation(Axiom::AdditiveGroup, "addition not associative", {x, y, z});
    for (Element x = 0; x < N; ++x) {
        bool has_inverse = false;
        for (Element y = 0; y < N && !has_inverse; ++y)
            has_inverse = A(x, y) == 0;
        if (!has_inverse)
            return AxiomViolation(Axiom::AdditiveGroup, "no additive inverse", {x});
    }
    std::vector<Element> neg(n);
    for (Element x = 0; x < N; ++x)
        for (Element y = 0; y < N; ++y)
            if (A(x, y) == 0)
                neg[x] = y;

    for (Element x = 0; x < N; ++x)
        for (Element y = 0; y < N; ++y)
            if (H(x, y).empty())
                return AxiomViolation(Axiom::Nonempty, "empty product", {x, y});

    for (Element x = 0; x < N; ++x)
        for (Element y = x + 1; y < N; ++y)
            if (H(x, y) != H(y, x))
                return AxiomViolation(Axiom::Commutative, "x o y != y o x", {x, y});

    auto times_right = [&](const ElementSet& s, Element z) {
        ElementSet r;
        for (Element a : s)
            r |= H(a, z);
        return r;
    };
    auto times_left = [&](Element x, const ElementSet& s) {
        ElementSet r;
        for (Element b : s)
            r |= H(x, b);
        return r;
    };
    for (Element x = 0; x < N; ++x)
        for (Element y = 0; y < N; ++y)
            for (Element z = 0; z < N; ++z)
                if (times_right(H(x, y), z) != times_left(x, H(y, z)))
                    return AxiomViolation(Axiom::Associative, "(x o y) o z != x o (y o z)", {x, y, z});

    auto negate = [&](const ElementSet& s) {
        ElementSet r;
        for (Element a : s)
            r.set(neg[a]);
        return r;
    };
    for (Element x = 0; x < N; ++x)
        for (Element y = 0; y < N; ++y) {
            ElementSet minus = negate(H(x, y));
            if (H(neg[x], y) != minus || H(x, neg[y]) != minus)
                return AxiomViolation(Axiom::SignRule, "(-x) o y != -(x o y)", {x, y});
        }

    auto sum = [&](const ElementSet& a, const ElementSet& b) {
        ElementSet r;
        for (Element p : a)
            for (Element q : b)
                r.set(A(p, q));
        return r;
    };
    for (Element x = 0; x < N; ++x)
        for (Element y = 0; y < N; ++y)
            for (Element z = 0; z < N; ++z)
                if (!H(A(y, z), x).subset_of(sum(H(y, x), H(z, x))))
                    return AxiomViolation(Axiom::Distributive, "(y+z) o x not in y o x + z o x", {x, y, z});

    bool has_identity = false;
    for (Element e = 0; e < N && !has_identity; ++e) {
        bool ok = true;
        for (Element a = 0; a < N && ok; ++a)
            ok = H(e, a).test(a);
        has_identity = ok;
    }
    if (!has_identity)
        return AxiomViolation(Axiom::NoIdentity, "no element e with a in e o a for all a");
    return std::nullopt;
}

/// Validates raw tables into a Hyperring; throws AxiomViolation or CapacityError.
inline Hyperring validate(RawTables t, std::size_t capacity)
{
    if (t.n > capacity || t.n > kMaxCarrier)
        throw CapacityError("carrier size " + std::to_string(t.n) + " exceeds capacity " +
                            std::to_string(std::min(capacity, kMaxCarrier)));
    if (auto v = find_axiom_violation(t))
        throw *v;

    Hyperring g;
    g.n_ = t.n;
    g.add_ = std::move(t.add);
    g.hyp_ = std::move(t.hyp);
    const auto N = static_cast<Element>(g.n_);
    g.neg_.assign(g.n_, 0);
    for (Element x = 0; x < N; ++x)
        for (Element y = 0; y < N; ++y)
            if (g.add(x, y) == 0)
                g.neg_[x] = y;
    for (Element e = 0; e < N; ++e) {
        bool ok = true;
        for (Element a = 0; a < N && ok; ++a)
            ok = g.hyp(e, a).test(a);
        if (ok)
            g.identities_.set(e);
    }
    g.strongly_distributive_ = true;
    for (Element x = 0; x < N && g.strongly_distributive_; ++x)
        for (Element y = 0; y < N && g.strongly_distributive_; ++y)
            for (Element z = 0; z < N && g.strongly_distributive_; ++z)
                g.strongly_distributive_ = g.hyp(g.add(y, z), x) == g.plus(g.hyp(y, x), g.hyp(z, x));
    return g;
}

// ---------------------------------------------------------------------------
// Constructions

/// Z_n with x o y = { x*a*y mod n : a in phi }.
inline RawTables zphi_tables(std::size_t n, const std::vector<Element>& phi)
{
    if (n == 0)
        throw PreconditionError("zphi: modulus must be positive");
    if (phi.empty())
        throw PreconditionError("zphi: phi must be nonempty");
    for (Element a : phi)
        if (a >= n)
            throw PreconditionError("zphi: residue " + std::to_string(a) + " not in [0," + std::to_string(n) + ")");
    RawTables t;
    t.n = n;
    t.add.resize(n * n);
    t.hyp.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            t.add[x * n + y] = static_cast<Element>((x + y) % n);
            ElementSet s;
            for (Element a : phi)
                s.set(static_cast<Element>((x * a % n) * y % n));
            t.hyp[x * n + y] = s;
        }
    return t;
}

/// Validated Z_phi ring. Not every (n, phi) validates; rejection is an AxiomViolation.
inline Hyperring build_zphi(std::size_t n, const std::vector<Element>& phi, std::size_t capacity = kMaxCarrier)
{
    return validate(zphi_tables(n, phi), capacity);
}

/// Pair (u, v) of L x R is encoded as u * |R| + v.
inline Element encode_pair(const Hyperring& right, Element u, Element v)
{
    return static_cast<Element>(u * right.size() + v);
}

inline std::pair<Element, Element> decode_pair(const Hyperring& right, Element p)
{
    return {static_cast<Element>(p / right.size()), static_cast<Element>(p % right.size())};
}

/// S1 x S2 under the pair encoding.
inline ElementSet product_set(const Hyperring& right, const ElementSet& a, const ElementSet& b)
{
    ElementSet r;
    for (Element u : a)
        for (Element v : b)
            r.set(encode_pair(right, u, v));
    return r;
}

inline Hyperring direct_product(const Hyperring& left, const Hyperring& right, std::size_t capacity = kMaxCarrier)
{
    const std::size_t n = left.size() * right.size();
    if (n > capacity || n > kMaxCarrier)
        throw CapacityError("product carrier " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(std::min(capacity, kMaxCarrier)));
    RawTables t;
    t.n = n;
    t.add.resize(n * n);
    t.hyp.resize(n * n);
    for (Element p = 0; p < n; ++p)
        for (Element q = 0; q < n; ++q) {
            auto [u1, v1] = decode_pair(right, p);
            auto [u2, v2] = decode_pair(right, q);
            t.add[p * n + q] = encode_pair(right, left.add(u1, u2), right.add(v1, v2));
            t.hyp[p * n + q] = product_set(right, left.hyp(u1, u2), right.hyp(v1, v2));
        }
    return validate(std::move(t), capacity);
}

// ---------------------------------------------------------------------------
// Subset algebra

inline ElementSet subset_product(const Hyperring& g, const ElementSet& a, const ElementSet& b)
{
    detail::require_owned(g, a, "subset_product");
    detail::require_owned(g, b, "subset_product");
    detail::require_nonempty(a, "subset_product");
    detail::require_nonempty(b, "subset_product");
    return g.times(a, b);
}

inline ElementSet subset_sum(const Hyperring& g, const ElementSet& a, const ElementSet& b)
{
    detail::require_owned(g, a, "subset_sum");
    detail::require_owned(g, b, "subset_sum");
    return g.plus(a, b);
}

/// A^k = (((A o A) o A) ...), k >= 1.
inline ElementSet subset_power(const Hyperring& g, const ElementSet& a, unsigned k)
{
    if (k == 0)
        throw PreconditionError("subset_power: exponent must be at least 1");
    detail::require_owned(g, a, "subset_power");
    ElementSet p = a;
    for (unsigned i = 1; i < k; ++i)
        p = g.times(p, a);
    return p;
}

/// Elements x with e in x o y for some identity e and some y.
inline ElementSet units(const Hyperring& g)
{
    ElementSet u;
    const auto n = static_cast<Element>(g.size());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (g.hyp(x, y).intersects(g.identities())) {
                u.set(x);
                break;
            }
    return u;
}

struct StructureFlags
{
    bool is_hyperfield = false;
    bool is_hyperdomain = false;
    bool is_strongly_distributive = false;
};

inline StructureFlags structure_flags(const Hyperring& g)
{
    StructureFlags f;
    ElementSet nonzero = g.carrier();
    nonzero.reset(0);
    f.is_hyperfield = nonzero.subset_of(units(g));
    f.is_hyperdomain = true;
    const auto n = static_cast<Element>(g.size());
    for (Element x = 1; x < n && f.is_hyperdomain; ++x)
        for (Element y = 1; y < n && f.is_hyperdomain; ++y)
            f.is_hyperdomain = !g.hyp(x, y).test(0);
    f.is_strongly_distributive = g.strongly_distributive();
    return f;
}

} // namespace mhr
