#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mhr/classify.hpp"
#include "mhr/element_set.hpp"
#include "mhr/error.hpp"
#include "mhr/hyperring.hpp"
#include "mhr/ideals.hpp"

namespace mhr {

/// How the identity clause of a good homomorphism is read.
enum class IdentityMode {
    Corrected, // eta(1 of source) is an identity of the target
    Literal,   // "eta(1_G1) = eta(1_G2)": imposes nothing checkable across two rings
};

/// A validated good homomorphism. Holds only the element map and derived data;
/// operations take the source and target rings explicitly.
struct GoodHom
{
    std::vector<Element> map;
    std::size_t target_size = 0;
    ElementSet kernel;
    bool surjective = false;

    [[nodiscard]] Element operator()(Element x) const { return map[x]; }
    [[nodiscard]] ElementSet image(const ElementSet& s) const
    {
        ElementSet r;
        for (Element x : s)
            r.set(map[x]);
        return r;
    }
    [[nodiscard]] ElementSet preimage(const ElementSet& s) const
    {
        ElementSet r;
        for (Element x = 0; x < map.size(); ++x)
            if (s.test(map[x]))
                r.set(x);
        return r;
    }
    friend bool operator==(const GoodHom&, const GoodHom&) = default;
};

inline GoodHom validate_hom(const Hyperring& src, const Hyperring& dst, std::vector<Element> map,
                            IdentityMode mode = IdentityMode::Corrected)
{
    const auto n = static_cast<Element>(src.size());
    if (map.size() != src.size())
        throw HomViolation("totality", "map has " + std::to_string(map.size()) + " entries, source has " +
                                           std::to_string(src.size()) + " elements");
    for (Element x = 0; x < n; ++x)
        if (map[x] >= dst.size())
            throw HomViolation("totality", "image of " + std::to_string(x) + " outside target");

    GoodHom h;
    h.map = std::move(map);
    h.target_size = dst.size();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (h(src.add(a, b)) != dst.add(h(a), h(b)))
                throw HomViolation("additive", "eta(" + std::to_string(a) + "+" + std::to_string(b) +
                                                   ") != eta(a)+eta(b)");
            if (h.image(src.hyp(a, b)) != dst.hyp(h(a), h(b)))
                throw HomViolation("multiplicative", "eta(" + std::to_string(a) + " o " + std::to_string(b) +
                                                         ") != eta(a) o eta(b)");
        }
    if (mode == IdentityMode::Corrected && !dst.identities().test(h(src.one())))
        throw HomViolation("identity", "eta(" + std::to_string(src.one()) + ") = " + std::to_string(h(src.one())) +
                                           " is not an identity of the target");
    for (Element x = 0; x < n; ++x)
        if (h(x) == 0)
            h.kernel.set(x);
    h.surjective = h.image(src.carrier()) == dst.carrier();
    return h;
}

inline GoodHom identity_hom(const Hyperring& g)
{
    std::vector<Element> m(g.size());
    for (Element x = 0; x < m.size(); ++x)
        m[x] = x;
    return validate_hom(g, g, std::move(m));
}

/// Projection of left x right onto one factor (0 = left, 1 = right).
inline GoodHom product_projection(const Hyperring& left, const Hyperring& right, const Hyperring& product, int side)
{
    std::vector<Element> m(product.size());
    for (Element p = 0; p < m.size(); ++p) {
        auto [u, v] = decode_pair(right, p);
        m[p] = side == 0 ? u : v;
    }
    return validate_hom(product, side == 0 ? left : right, std::move(m));
}

struct Quotient
{
    Hyperring ring;
    GoodHom projection;
    /// Smallest element of each coset, in quotient index order.
    std::vector<Element> representatives;
};

/**
 * G/B. Cosets are numbered by their smallest element, so the coset of 0 is
 * element 0 of the quotient. The result is revalidated.
 */
inline Quotient quotient_ring(const Hyperring& g, const ElementSet& b, std::size_t capacity = kMaxCarrier)
{
    detail::require_ideal(g, b, "quotient_ring");
    const auto n = static_cast<Element>(g.size());
    std::vector<Element> coset_of(n, n);
    std::vector<Element> reps;
    for (Element x = 0; x < n; ++x) {
        if (coset_of[x] != n)
            continue;
        const auto idx = static_cast<Element>(reps.size());
        reps.push_back(x);
        for (Element y : b)
            coset_of[g.add(x, y)] = idx;
    }
    const std::size_t m = reps.size();
    RawTables t;
    t.n = m;
    t.add.resize(m * m);
    t.hyp.resize(m * m);
    for (Element i = 0; i < m; ++i)
        for (Element j = 0; j < m; ++j) {
            t.add[i * m + j] = coset_of[g.add(reps[i], reps[j])];
            ElementSet s;
            for (Element a : g.hyp(reps[i], reps[j]))
                s.set(coset_of[a]);
            t.hyp[i * m + j] = s;
        }
    Hyperring q = validate(std::move(t), capacity);
    GoodHom proj = validate_hom(g, q, coset_of);
    return {std::move(q), std::move(proj), std::move(reps)};
}

/// eta^-1(A2); always a hyperideal when A2 is one.
inline ElementSet preimage_ideal(const Hyperring& src, const Hyperring& dst, const GoodHom& h, const ElementSet& a2)
{
    detail::require_ideal(dst, a2, "preimage_ideal");
    ElementSet r = h.preimage(a2);
    if (find_ideal_violation(src, r))
        throw Error("E_INTERNAL", "preimage of a hyperideal is not a hyperideal");
    return r;
}

/// eta(A1) for surjective eta with Ker(eta) inside A1. The image is verified, not closed.
inline ElementSet image_ideal(const Hyperring& src, const Hyperring& dst, const GoodHom& h, const ElementSet& a1,
                              Mutation m = Mutation::None)
{
    detail::require_ideal(src, a1, "image_ideal");
    if (!h.surjective)
        throw PreconditionError("image_ideal: homomorphism is not surjective");
    if (!h.kernel.subset_of(a1))
        throw PreconditionError("image_ideal: kernel " + to_string(h.kernel) + " not inside " + to_string(a1));
    ElementSet r = h.image(a1);
    if (m == Mutation::ImageDropsKernel && r.count() > 1)
        r.reset(0);
    if (m == Mutation::None && find_ideal_violation(dst, r))
        throw Error("E_IMAGE_NOT_IDEAL", "image " + to_string(r) + " is not a hyperideal of the target");
    return r;
}

/// eta(S) as an MCS of the target; rejects 0 in the image and non-MCS images.
inline MCSet image_mcs(const Hyperring& dst, const GoodHom& h, const ElementSet& s)
{
    ElementSet r = h.image(s);
    if (r.test(0))
        throw PreconditionError("image_mcs: 0 lies in eta(S)");
    return make_mcs(dst, r);
}

} // namespace mhr
