#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mhr/classify.hpp"
#include "mhr/element_set.hpp"
#include "mhr/error.hpp"
#include "mhr/homs.hpp"
#include "mhr/hyperring.hpp"
#include "mhr/ideals.hpp"
#include "mhr/ring_spec.hpp"

namespace mhr {

// ---------------------------------------------------------------------------
// Catalog

enum class CheckId {
    T11,       // quasi  <=>  rad(A) is S-prime
    T12,       // quasi  =>  witness for products of hyperideals / of elements
    P_PROD,    // quasi A, B meets S  =>  B o A and A n B quasi
    P_S1S2,    // cofinal S1 in S2: quasi S1 <=> quasi S2
    P_INT,     // equal radicals  =>  intersection quasi
    T_EQ3,     // quasi + square condition <=> S-prime <=> S-primary + square condition
    P13,       // quasi  <=>  (rad(A) : t) prime for some t
    T14,       // avoidance
    T_HOMO,    // preimage / image of quasi under good homs
    T_QUOT,    // A/B quasi in G/B
    T_CART,    // quasi in G1 x G2
    T21,       // weakly + <0> quasi  =>  rad(A) S-prime
    T23,       // weakly quasi characterizations
    T24,       // weakly, A^2 != <0>  =>  quasi;  weakly, not quasi  =>  rad(A) = rad(<0>)
    T_PURE,    // weakly, not quasi, pure  =>  A = <0>
    T41,       // t o rad(A)^2 in A  =>  strongly <=> quasi
    T42,       // strongly quasi characterizations
    T_HOMO2,   // strongly quasi under good homs
    T_CART_SQ, // strongly quasi in G1 x G2
};

inline constexpr std::array kAllChecks = {
    CheckId::T11,    CheckId::T12,  CheckId::P_PROD, CheckId::P_S1S2, CheckId::P_INT,   CheckId::T_EQ3, CheckId::P13,
    CheckId::T14,    CheckId::T_HOMO, CheckId::T_QUOT, CheckId::T_CART, CheckId::T21,   CheckId::T23,   CheckId::T24,
    CheckId::T_PURE, CheckId::T41,  CheckId::T42,    CheckId::T_HOMO2, CheckId::T_CART_SQ,
};

inline std::string_view check_name(CheckId id)
{
    switch (id) {
    case CheckId::T11: return "T11";
    case CheckId::T12: return "T12";
    case CheckId::P_PROD: return "P_PROD";
    case CheckId::P_S1S2: return "P_S1S2";
    case CheckId::P_INT: return "P_INT";
    case CheckId::T_EQ3: return "T_EQ3";
    case CheckId::P13: return "P13";
    case CheckId::T14: return "T14";
    case CheckId::T_HOMO: return "T_HOMO";
    case CheckId::T_QUOT: return "T_QUOT";
    case CheckId::T_CART: return "T_CART";
    case CheckId::T21: return "T21";
    case CheckId::T23: return "T23";
    case CheckId::T24: return "T24";
    case CheckId::T_PURE: return "T_PURE";
    case CheckId::T41: return "T41";
    case CheckId::T42: return "T42";
    case CheckId::T_HOMO2: return "T_HOMO2";
    case CheckId::T_CART_SQ: return "T_CART_SQ";
    }
    return "?";
}

inline std::optional<CheckId> parse_check_id(std::string_view s)
{
    for (CheckId id : kAllChecks)
        if (check_name(id) == s)
            return id;
    return std::nullopt;
}

inline std::size_t check_index(CheckId id) { return static_cast<std::size_t>(id); }

// ---------------------------------------------------------------------------
// Instances and outcomes

enum class Status { Pass, Fail, Skip };

struct CheckOutcome
{
    Status status = Status::Skip;
    /// Counterexample on Fail, unmet hypothesis name on Skip, empty on Pass.
    std::string detail;

    static CheckOutcome pass() { return {Status::Pass, {}}; }
    static CheckOutcome fail(std::string d) { return {Status::Fail, std::move(d)}; }
    static CheckOutcome skip(std::string why) { return {Status::Skip, std::move(why)}; }
    friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

struct RingRef
{
    std::shared_ptr<const RingSpec> spec;
    std::shared_ptr<const RingContext> ctx;
};

inline RingRef make_ring_ref(RingSpec spec, const SearchLimits& limits = {}, std::size_t capacity = kMaxCarrier)
{
    auto s = std::make_shared<const RingSpec>(std::move(spec));
    auto c = std::make_shared<const RingContext>(build_ring(*s, capacity), limits);
    return {std::move(s), std::move(c)};
}

/// A subset tagged with the instance ring it lives in.
struct Member
{
    std::size_t ring = 0;
    ElementSet set;
};

struct HomRef
{
    std::size_t src = 0;
    std::size_t dst = 1;
    GoodHom hom;
};

/**
 * Everything one check needs. Which slot means what depends on the check:
 *
 *   T11 T12 T_EQ3 P13 T21 T23 T24 T_PURE T41 T42   ideals {A}, mcs {S}
 *   P_PROD                                         ideals {A, B}, mcs {S}
 *   P_INT                                          ideals {A1..Ak}, mcs {S}
 *   P_S1S2                                         ideals {A}, mcs {S1, S2}
 *   T14                                            ideals {A, cover1..coverk}, mcs {S}
 *   T_HOMO T_HOMO2                                 rings {G1, G2}, hom G1->G2, ideals {A1 in G1, A2 in G2}, mcs {S in G1}
 *   T_QUOT                                         rings {G, G/B}, hom = projection, ideals {B, A}, mcs {S}
 *   T_CART T_CART_SQ                               rings {G1, G2, G1xG2}, ideals {A1, A2}, mcs {S1, S2}
 */
struct Instance
{
    std::vector<RingRef> rings;
    std::vector<Member> ideals;
    std::vector<Member> mcs;
    std::optional<HomRef> hom;
};

// ---------------------------------------------------------------------------
// Engine helpers that honour mutations

namespace detail {

inline ElementSet engine_colon(const Hyperring& g, const ElementSet& a, const ElementSet& d, Mutation m)
{
    if (m == Mutation::ColonIsIdeal)
        return a;
    ElementSet r;
    const auto n = static_cast<Element>(g.size());
    for (Element x = 0; x < n; ++x)
        if (g.times(x, d).subset_of(a))
            r.set(x);
    return r;
}

inline ElementSet engine_ideal_product(const RingContext& ctx, const ElementSet& b, const ElementSet& a, Mutation m)
{
    if (m == Mutation::IdealProductIsZero)
        return ctx.zero_ideal();
    return generate_hyperideal(ctx.ring(), ctx.ring().times(b, a));
}

inline ElementSet engine_meet(const RingContext& ctx, const ElementSet& a, const ElementSet& b, Mutation m)
{
    return m == Mutation::IdealMeetIsZero ? ctx.zero_ideal() : (a & b);
}

/// eta(S) as the engine sees it.
inline ElementSet engine_mcs_image(const Hyperring& src, const GoodHom& h, const ElementSet& s, Mutation m)
{
    if (m == Mutation::McsImageIsIdentity) {
        const ElementSet ids = s & src.identities();
        if (!ids.empty())
            return ElementSet::singleton(h(ids.first()));
    }
    return h.image(s);
}

/// {u} o {u} o ... eventually cycles; true iff some power lies in `target`.
inline bool some_power_inside(const Hyperring& g, Element u, const ElementSet& target)
{
    std::vector<ElementSet> seen;
    const ElementSet base = ElementSet::singleton(u);
    ElementSet p = base;
    while (std::find(seen.begin(), seen.end(), p) == seen.end()) {
        if (p.subset_of(target))
            return true;
        seen.push_back(p);
        p = g.times(p, base);
    }
    return false;
}

inline std::string yn(bool b) { return b ? "true" : "false"; }

inline std::string pair_str(Element u, Element v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

/// Shared evaluation state for one check call.
struct Eval
{
    const RingContext& ctx;
    const EngineOptions& opt;

    [[nodiscard]] const Hyperring& g() const { return ctx.ring(); }
    [[nodiscard]] bool holds(HyperClass c, const ElementSet& a, const ElementSet& s) const
    {
        return class_holds(ctx, c, a, s, opt);
    }
    [[nodiscard]] bool quasi(const ElementSet& a, const ElementSet& s) const { return holds(HyperClass::Quasi, a, s); }
    [[nodiscard]] ElementSet rad(const ElementSet& a) const { return engine_radical(ctx, a, opt); }
    [[nodiscard]] ElementSet colon(const ElementSet& a, const ElementSet& d) const
    {
        return engine_colon(g(), a, d, opt.mutation);
    }
};

} // namespace detail

// ---------------------------------------------------------------------------
// Individual checks

namespace checks {

using detail::Eval;
using detail::yn;

/// Hypotheses shared by most single-ideal checks. Empty string when met.
inline std::string c_and_disjoint(const Eval& e, const ElementSet& a, const ElementSet& s)
{
    if (!e.ctx.is_c(a))
        return "A-is-c-hyperideal";
    if (a.intersects(s))
        return "A-disjoint-S";
    return {};
}

inline CheckOutcome t11(const Eval& e, const ElementSet& a, const ElementSet& s)
{
    if (auto why = c_and_disjoint(e, a, s); !why.empty())
        return CheckOutcome::skip(why);
    const bool quasi = e.quasi(a, s);
    const ElementSet rad = e.rad(a);
    const bool rad_s_prime = e.holds(HyperClass::SPrime, rad, s);
    if (quasi == rad_s_prime)
        return CheckOutcome::pass();
    return CheckOutcome::fail("quasi=" + yn(quasi) + " s_prime(rad)=" + yn(rad_s_prime) + " rad=" + to_string(rad));
}

inline CheckOutcome t12(const Eval& e, const ElementSet& a, const ElementSet& s)
{
    if (auto why = c_and_disjoint(e, a, s); !why.empty())
        return CheckOutcome::skip(why);
    if (!e.quasi(a, s))
        return CheckOutcome::skip("A-is-quasi");
    const Hyperring& g = e.g();
    const auto n = static_cast<Element>(g.size());
    const ElementSet rad = e.rad(a);
    const auto& ideals = e.ctx.ideals();
    const std::size_t h = ideals.size();

    bool ideal_form = false;
    bool element_form = false;
    for (Element t : s) {
        std::vector<char> good_ideal(h);
        for (std::size_t i = 0; i < h; ++i)
            good_ideal[i] = g.times(t, ideals[i]).subset_of(rad);
        bool ok = true;
        for (std::size_t i = 0; i < h && ok; ++i)
            for (std::size_t j = i; j < h && ok; ++j) {
                const ElementSet p2 = g.times(ideals[i], ideals[j]);
                if (p2.subset_of(a) && !good_ideal[i] && !good_ideal[j])
                    ok = false;
                for (std::size_t k = j; k < h && ok; ++k)
                    if (g.times(p2, ideals[k]).subset_of(a) && !good_ideal[i] && !good_ideal[j] && !good_ideal[k])
                        ok = false;
            }
        ideal_form = ideal_form || ok;

        ElementSet good;
        for (Element u = 0; u < n; ++u)
            if (g.hyp(t, u).subset_of(rad))
                good.set(u);
        ok = true;
        for (Element u = 0; u < n && ok; ++u)
            for (Element v = u; v < n && ok; ++v) {
                const ElementSet& uv = g.hyp(u, v);
                if (uv.subset_of(a) && !good.test(u) && !good.test(v))
                    ok = false;
                for (Element w = v; w < n && ok; ++w)
                    if (!good.test(u) && !good.test(v) && !good.test(w) && g.times(w, uv).subset_of(a))
                        ok = false;
            }
        element_form = element_form || ok;
        if (ideal_form && element_form)
            return CheckOutcome::pass();
    }
    return CheckOutcome::fail("ideal_form=" + yn(ideal_form) + " element_form=" + yn(element_form));
}

inline CheckOutcome p_prod(const Eval& e, const ElementSet& a, const ElementSet& b, const ElementSet& s)
{
    if (!e.ctx.is_c(a))
        return CheckOutcome::skip("A-is-c-hyperideal");
    if (!e.ctx.is_c(b))
        return CheckOutcome::skip("B-is-c-hyperideal");
    if (!b.intersects(s))
        return CheckOutcome::skip("B-meets-S");
    if (!e.quasi(a, s))
        return CheckOutcome::skip("A-is-quasi");
    const ElementSet ba = detail::engine_ideal_product(e.ctx, b, a, e.opt.mutation);
    const ElementSet meet = detail::engine_meet(e.ctx, a, b, e.opt.mutation);
    const bool q_prod = e.quasi(ba, s);
    const bool q_meet = e.quasi(meet, s);
    if (q_prod && q_meet)
        return CheckOutcome::pass();
    return CheckOutcome::fail("BA=" + to_string(ba) + " quasi(BA)=" + yn(q_prod) + " AnB=" + to_string(meet) +
                              " quasi(AnB)=" + yn(q_meet));
}

inline CheckOutcome p_s1s2(const Eval& e, const ElementSet& a, const ElementSet& s1, const ElementSet& s2)
{
    const Hyperring& g = e.g();
    if (!s1.subset_of(s2))
        return CheckOutcome::skip("S1-inside-S2");
    for (Element t : s2) {
        bool found = false;
        for (Element x : s1)
            if (g.hyp(t, x).intersects(s1)) {
                found = true;
                break;
            }
        if (!found)
            return CheckOutcome::skip("S2-cofinal-in-S1");
    }
    if (!e.ctx.is_c(a))
        return CheckOutcome::skip("A-is-c-hyperideal");
    if (a.intersects(s2))
        return CheckOutcome::skip("A-disjoint-S2");
    const bool q1 = e.quasi(a, s1);
    const bool q2 = e.quasi(a, s2);
    if (q1 == q2)
        return CheckOutcome::pass();
    return CheckOutcome::fail("quasi(S1)=" + yn(q1) + " quasi(S2)=" + yn(q2));
}

inline CheckOutcome p_int(const Eval& e, const std::vector<ElementSet>& parts, const ElementSet& s)
{
    if (parts.empty())
        return CheckOutcome::skip("at-least-one-ideal");
    ElementSet meet = e.g().carrier();
    const ElementSet rad0 = e.rad(parts.front());
    for (const ElementSet& p : parts) {
        if (!e.ctx.is_c(p))
            return CheckOutcome::skip("Ai-is-c-hyperideal");
        if (!e.quasi(p, s))
            return CheckOutcome::skip("Ai-is-quasi");
        if (e.rad(p) != rad0)
            return CheckOutcome::skip("equal-radicals");
        meet = detail::engine_meet(e.ctx, meet, p, e.opt.mutation);
    }
    if (e.quasi(meet, s))
        return CheckOutcome::pass();
    return CheckOutcome::fail("intersection " + to_string(meet) + " is not quasi");
}

inline CheckOutcome t_eq3(const Eval& e, const ElementSet& a, const ElementSet& s)
{
    if (auto why = c_and_disjoint(e, a, s); !why.empty())
        return CheckOutcome::skip(why);
    const Hyperring& g = e.g();
    const auto n = static_cast<Element>(g.size());
    bool side = false;
    for (Element r : s) {
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x)
            if (g.times(r, g.hyp(x, x)).subset_of(a) && !g.hyp(r, x).subset_of(a))
                ok = false;
        if (ok) {
            side = true;
            break;
        }
    }
    const bool one = e.quasi(a, s) && side;
    const bool two = e.holds(HyperClass::SPrime, a, s);
    const bool three = e.holds(HyperClass::SPrimary, a, s) && side;
    if (one == two && two == three)
        return CheckOutcome::pass();
    return CheckOutcome::fail("quasi+square=" + yn(one) + " s_prime=" + yn(two) + " s_primary+square=" + yn(three));
}

inline CheckOutcome p13(const Eval& e, const ElementSet& a, const ElementSet& s)
{
    if (auto why = c_and_disjoint(e, a, s); !why.empty())
        return CheckOutcome::skip(why);
    const bool quasi = e.quasi(a, s);
    const ElementSet rad = e.rad(a);
    std::optional<Element> prime_colon;
    for (Element t : s) {
        const ElementSet c = e.colon(rad, ElementSet::singleton(t));
        if (!find_ideal_violation(e.g(), c) && prime_scan(e.g(), c)) {
            prime_colon = t;
            break;
        }
    }
    if (quasi == prime_colon.has_value())
        return CheckOutcome::pass();
    return CheckOutcome::fail("quasi=" + yn(quasi) + " prime_colon=" + yn(prime_colon.has_value()));
}

inline CheckOutcome t14(const Eval& e, const ElementSet& a, const std::vector<ElementSet>& covers, const ElementSet& s)
{
    auto r = avoidance_witness(e.ctx, a, covers, s, e.opt);
    switch (r.status) {
    case AvoidanceResult::Status::Skipped: return CheckOutcome::skip(r.unmet);
    case AvoidanceResult::Status::Found: return CheckOutcome::pass();
    case AvoidanceResult::Status::NotFound: break;
    }
    return CheckOutcome::fail("no t in S, j with t o A inside rad(A_j)");
}

/// Shared body of T_HOMO and T_HOMO2.
inline CheckOutcome homo(const Eval& src, const Eval& dst, const GoodHom& h, HyperClass c, const ElementSet& a1,
                         const ElementSet& a2, const ElementSet& s)
{
    if (!src.ctx.is_c(a1))
        return CheckOutcome::skip("A1-is-c-hyperideal");
    if (!dst.ctx.is_c(a2))
        return CheckOutcome::skip("A2-is-c-hyperideal");
    const ElementSet image_s = detail::engine_mcs_image(src.g(), h, s, src.opt.mutation);
    if (image_s.test(0))
        return CheckOutcome::skip("zero-not-in-image-S");
    if (find_mcs_violation(dst.g(), image_s))
        return CheckOutcome::skip("image-S-is-mcs");

    bool applied = false;
    std::string failures;
    if (dst.holds(c, a2, image_s)) {
        applied = true;
        const ElementSet pre = preimage_ideal(src.g(), dst.g(), h, a2);
        if (!src.holds(c, pre, s))
            failures += "preimage " + to_string(pre) + " not " + std::string(class_name(c)) + ";";
    }
    if (h.surjective && h.kernel.subset_of(a1) && src.holds(c, a1, s)) {
        applied = true;
        const ElementSet img = image_ideal(src.g(), dst.g(), h, a1, src.opt.mutation);
        if (!dst.holds(c, img, image_s))
            failures += "image " + to_string(img) + " not " + std::string(class_name(c)) + ";";
    }
    if (!applied)
        return CheckOutcome::skip("antecedent");
    if (failures.empty())
        return CheckOutcome::pass();
    return CheckOutcome::fail(failures);
}

inline CheckOutcome t_quot(const Eval& base, const Eval& quot, const GoodHom& proj, const ElementSet& b,
                           const ElementSet& a, const ElementSet& s)
{
    if (!b.subset_of(a))
        return CheckOutcome::skip("B-inside-A");
    if (auto why = c_and_disjoint(base, a, s); !why.empty())
        return CheckOutcome::skip(why);
    if (!base.quasi(a, s))
        return CheckOutcome::skip("A-is-quasi");
    const ElementSet s_bar = detail::engine_mcs_image(base.g(), proj, s, base.opt.mutation);
    if (find_mcs_violation(quot.g(), s_bar))
        return CheckOutcome::fail("image of S " + to_string(s_bar) + " is not an MCS of G/B");
    const ElementSet a_bar = proj.image(a);
    if (quot.quasi(a_bar, s_bar))
        return CheckOutcome::pass();
    return CheckOutcome::fail("A/B=" + to_string(a_bar) + " not quasi for " + to_string(s_bar));
}

/// Shared body of T_CART and T_CART_SQ.
inline CheckOutcome cart(const Eval& left, const Eval& right, const Eval& prod, HyperClass c, const ElementSet& a1,
                         const ElementSet& a2, const ElementSet& s1, const ElementSet& s2)
{
    if (!left.ctx.is_c(a1))
        return CheckOutcome::skip("A1-is-c-hyperideal");
    if (!right.ctx.is_c(a2))
        return CheckOutcome::skip("A2-is-c-hyperideal");
    const Hyperring& r = right.g();
    const ElementSet a = product_set(r, a1, a2);
    const ElementSet s = product_set(r, s1, s2);
    const bool lhs = prod.holds(c, a, s);
    const bool rhs = (s1.intersects(a1) && right.holds(c, a2, s2)) || (s2.intersects(a2) && left.holds(c, a1, s1));
    if (lhs == rhs)
        return CheckOutcome::pass();
    return CheckOutcome::fail("product=" + yn(lhs) + " componentwise=" + yn(rhs));
}

inline std::string zero_ideal_is_c(const Eval& e)
{
    return e.ctx.is_c(e.ctx.zero_ideal()) ? std::string{} : std::string("zero-ideal-is-c-hyperideal");
}

inline CheckOutcome t21(const Eval& e, const ElementSet& a, const ElementSet& s)
{
    if (auto why = c_and_disjoint(e, a, s); !why.empty())
        return CheckOutcome::skip(why);
    if (!e.holds(HyperClass::WeaklyQuasi, a, s))
        return CheckOutcome::skip("A-weakly-quasi");
    if (auto why = zero_ideal_is_c(e); !why.empty())
        return CheckOutcome::skip(why);
    if (!e.quasi(e.ctx.zero_ideal(), s))
        return CheckOutcome::skip("zero-ideal-is-quasi");
    const ElementSet rad = e.rad(a);
    if (e.holds(HyperClass::SPrime, rad, s))
        return CheckOutcome::pass();
    return CheckOutcome::fail("rad=" + to_string(rad) + " is not S-prime");
}

inline CheckOutcome t23(const Eval& e, const ElementSet& a, const ElementSet& s)
{
    if (auto why = c_and_disjoint(e, a, s); !why.empty())
        return CheckOutcome::skip(why);
    if (auto why = zero_ideal_is_c(e); !why.empty())
        return CheckOutcome::skip(why);
    const Hyperring& g = e.g();
    const auto n = static_cast<Element>(g.size());
    const ElementSet rad = e.rad(a);
    const ElementSet zero = e.ctx.zero_ideal();
    const ElementSet zero_elem = ElementSet::singleton(0);
    const auto& ideals = e.ctx.ideals();

    const bool one = e.holds(HyperClass::WeaklyQuasi, a, s);
    bool two = false, three = false, four = false;
    for (Element t : s) {
        const ElementSet rad_t = e.colon(rad, ElementSet::singleton(t));
        if (!two) {
            bool ok = true;
            for (Element x = 0; x < n && ok; ++x) {
                if (rad_t.test(x))
                    continue;
                const ElementSet ax = e.colon(a, ElementSet::singleton(x));
                ok = ax == e.colon(zero, ElementSet::singleton(x)) || ax.subset_of(rad_t);
            }
            two = ok;
        }
        if (!three) {
            bool ok = true;
            for (Element x = 0; x < n && ok; ++x)
                for (const ElementSet& b : ideals) {
                    const ElementSet xb = g.times(x, b);
                    if (xb == zero_elem || !xb.subset_of(a))
                        continue;
                    if (!rad_t.test(x) && !b.subset_of(rad_t)) {
                        ok = false;
                        break;
                    }
                }
            three = ok;
        }
        if (!four) {
            bool ok = true;
            for (std::size_t i = 0; i < ideals.size() && ok; ++i)
                for (std::size_t j = 0; j < ideals.size() && ok; ++j) {
                    const ElementSet bd = g.times(ideals[i], ideals[j]);
                    if (bd == zero_elem || !bd.subset_of(a))
                        continue;
                    if (!ideals[i].subset_of(rad_t) && !ideals[j].subset_of(rad_t))
                        ok = false;
                }
            four = ok;
        }
    }
    if (one == two && two == three && three == four)
        return CheckOutcome::pass();
    return CheckOutcome::fail("(i)=" + yn(one) + " (ii)=" + yn(two) + " (iii)=" + yn(three) + " (iv)=" + yn(four));
}

inline CheckOutcome t24(const Eval& e, const ElementSet& a, const ElementSet& s)
{
    if (auto why = c_and_disjoint(e, a, s); !why.empty())
        return CheckOutcome::skip(why);
    if (auto why = zero_ideal_is_c(e); !why.empty())
        return CheckOutcome::skip(why);
    if (!e.holds(HyperClass::WeaklyQuasi, a, s))
        return CheckOutcome::skip("A-weakly-quasi");
    const bool quasi = e.quasi(a, s);
    const ElementSet square = detail::engine_ideal_product(e.ctx, a, a, e.opt.mutation);
    if (square != e.ctx.zero_ideal() && !quasi)
        return CheckOutcome::fail("(i): A^2=" + to_string(square) + " != <0> but A is not quasi");
    if (!quasi && e.rad(a) != e.rad(e.ctx.zero_ideal()))
        return CheckOutcome::fail("(ii): rad(A)=" + to_string(e.rad(a)) + " != rad(<0>)=" +
                                  to_string(e.rad(e.ctx.zero_ideal())));
    return CheckOutcome::pass();
}

inline CheckOutcome t_pure(const Eval& e, const ElementSet& a, const ElementSet& s)
{
    if (auto why = zero_ideal_is_c(e); !why.empty())
        return CheckOutcome::skip(why);
    if (!e.holds(HyperClass::WeaklyQuasi, a, s))
        return CheckOutcome::skip("A-weakly-quasi");
    if (e.quasi(a, s))
        return CheckOutcome::skip("A-not-quasi");
    if (pure_part(e.g(), a) != a)
        return CheckOutcome::skip("A-is-pure");
    if (a == e.ctx.zero_ideal())
        return CheckOutcome::pass();
    return CheckOutcome::fail("pure A=" + to_string(a) + " != <0>=" + to_string(e.ctx.zero_ideal()));
}

inline CheckOutcome t41(const Eval& e, const ElementSet& a, const ElementSet& s)
{
    if (auto why = c_and_disjoint(e, a, s); !why.empty())
        return CheckOutcome::skip(why);
    const Hyperring& g = e.g();
    const ElementSet rad = e.rad(a);
    const ElementSet rad_sq = g.times(rad, rad);
    bool hyp = false;
    for (Element t : s)
        if (g.times(t, rad_sq).subset_of(a)) {
            hyp = true;
            break;
        }
    if (!hyp)
        return CheckOutcome::skip("t-o-rad-squared-inside-A");
    const bool strongly = e.holds(HyperClass::StronglyQuasi, a, s);
    const bool quasi = e.quasi(a, s);
    if (strongly == quasi)
        return CheckOutcome::pass();
    return CheckOutcome::fail("strongly=" + yn(strongly) + " quasi=" + yn(quasi));
}

inline CheckOutcome t42(const Eval& e, const ElementSet& a, const ElementSet& s)
{
    if (auto why = c_and_disjoint(e, a, s); !why.empty())
        return CheckOutcome::skip(why);
    const Hyperring& g = e.g();
    const auto n = static_cast<Element>(g.size());
    const ElementSet rad = e.rad(a);
    const auto& ideals = e.ctx.ideals();

    const bool one = e.holds(HyperClass::StronglyQuasi, a, s);

    const ElementSet sat = saturate(g, s, e.opt.mutation);
    const bool two = !a.intersects(sat) &&
                     evaluate_class(g, HyperClass::StronglyQuasi, a, rad, sat, e.opt.mutation).holds();

    std::vector<ElementSet> squares_of(n); // u^2
    for (Element u = 0; u < n; ++u)
        squares_of[u] = g.hyp(u, u);
    auto squares = [&](const ElementSet& b) {
        ElementSet r;
        for (Element x : b)
            r |= squares_of[x];
        return r;
    };

    bool three = false, four = false, five = false;
    for (Element t : s) {
        const ElementSet t_set = ElementSet::singleton(t);
        const ElementSet a_t = e.colon(a, t_set);
        const ElementSet rad_t = e.colon(rad, t_set);
        if (!three) {
            bool ok = true;
            for (Element u = 0; u < n && ok; ++u)
                ok = squares_of[u].subset_of(a_t) || e.colon(a, ElementSet::singleton(u)).subset_of(rad_t);
            three = ok;
        }
        if (!four) {
            bool ok = true;
            for (const ElementSet& b : ideals) {
                for (const ElementSet& c : ideals)
                    if (g.times(b, c).subset_of(a) && !squares(b).subset_of(a_t) && !c.subset_of(rad_t)) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    break;
            }
            four = ok;
        }
        if (!five) {
            bool ok = true;
            for (Element u = 0; u < n && ok; ++u)
                ok = detail::some_power_inside(g, u, a_t) ||
                     squares(e.colon(a, ElementSet::singleton(u))).subset_of(a_t);
            five = ok;
        }
    }
    if (one == two && two == three && three == four && four == five)
        return CheckOutcome::pass();
    return CheckOutcome::fail("(i)=" + yn(one) + " (ii)=" + yn(two) + " (iii)=" + yn(three) + " (iv)=" + yn(four) +
                              " (v)=" + yn(five));
}

} // namespace checks

namespace detail {

inline void require_shape(bool ok, CheckId id)
{
    if (!ok)
        throw PreconditionError("instance does not have the shape check " + std::string(check_name(id)) + " needs");
}

} // namespace detail

/// Runs one catalog check on one instance.
inline CheckOutcome run_check(CheckId id, const Instance& inst, const EngineOptions& opt = {})
{
    using detail::Eval;
    using detail::require_shape;
    const std::size_t ni = inst.ideals.size();
    const std::size_t nm = inst.mcs.size();
    require_shape(!inst.rings.empty(), id);
    const Eval e{*inst.rings[0].ctx, opt};
    auto ideal = [&](std::size_t i) -> const ElementSet& { return inst.ideals[i].set; };
    auto mcs = [&](std::size_t i) -> const ElementSet& { return inst.mcs[i].set; };

    switch (id) {
    case CheckId::T11: require_shape(ni >= 1 && nm >= 1, id); return checks::t11(e, ideal(0), mcs(0));
    case CheckId::T12: require_shape(ni >= 1 && nm >= 1, id); return checks::t12(e, ideal(0), mcs(0));
    case CheckId::T_EQ3: require_shape(ni >= 1 && nm >= 1, id); return checks::t_eq3(e, ideal(0), mcs(0));
    case CheckId::P13: require_shape(ni >= 1 && nm >= 1, id); return checks::p13(e, ideal(0), mcs(0));
    case CheckId::T21: require_shape(ni >= 1 && nm >= 1, id); return checks::t21(e, ideal(0), mcs(0));
    case CheckId::T23: require_shape(ni >= 1 && nm >= 1, id); return checks::t23(e, ideal(0), mcs(0));
    case CheckId::T24: require_shape(ni >= 1 && nm >= 1, id); return checks::t24(e, ideal(0), mcs(0));
    case CheckId::T_PURE: require_shape(ni >= 1 && nm >= 1, id); return checks::t_pure(e, ideal(0), mcs(0));
    case CheckId::T41: require_shape(ni >= 1 && nm >= 1, id); return checks::t41(e, ideal(0), mcs(0));
    case CheckId::T42: require_shape(ni >= 1 && nm >= 1, id); return checks::t42(e, ideal(0), mcs(0));
    case CheckId::P_PROD: require_shape(ni >= 2 && nm >= 1, id); return checks::p_prod(e, ideal(0), ideal(1), mcs(0));
    case CheckId::P_S1S2: require_shape(ni >= 1 && nm >= 2, id); return checks::p_s1s2(e, ideal(0), mcs(0), mcs(1));
    case CheckId::P_INT: {
        require_shape(ni >= 1 && nm >= 1, id);
        std::vector<ElementSet> parts;
        for (const Member& m : inst.ideals)
            parts.push_back(m.set);
        return checks::p_int(e, parts, mcs(0));
    }
    case CheckId::T14: {
        require_shape(ni >= 2 && nm >= 1, id);
        std::vector<ElementSet> covers;
        for (std::size_t i = 1; i < ni; ++i)
            covers.push_back(ideal(i));
        return checks::t14(e, ideal(0), covers, mcs(0));
    }
    case CheckId::T_HOMO:
    case CheckId::T_HOMO2: {
        require_shape(inst.rings.size() >= 2 && inst.hom && ni >= 2 && nm >= 1, id);
        const Eval dst{*inst.rings[inst.hom->dst].ctx, opt};
        const Eval src{*inst.rings[inst.hom->src].ctx, opt};
        const HyperClass c = id == CheckId::T_HOMO ? HyperClass::Quasi : HyperClass::StronglyQuasi;
        return checks::homo(src, dst, inst.hom->hom, c, ideal(0), ideal(1), mcs(0));
    }
    case CheckId::T_QUOT: {
        require_shape(inst.rings.size() >= 2 && inst.hom && ni >= 2 && nm >= 1, id);
        const Eval quot{*inst.rings[1].ctx, opt};
        return checks::t_quot(e, quot, inst.hom->hom, ideal(0), ideal(1), mcs(0));
    }
    case CheckId::T_CART:
    case CheckId::T_CART_SQ: {
        require_shape(inst.rings.size() >= 3 && ni >= 2 && nm >= 2, id);
        const Eval right{*inst.rings[1].ctx, opt};
        const Eval prod{*inst.rings[2].ctx, opt};
        const HyperClass c = id == CheckId::T_CART ? HyperClass::Quasi : HyperClass::StronglyQuasi;
        return checks::cart(e, right, prod, c, ideal(0), ideal(1), mcs(0), mcs(1));
    }
    }
    throw PreconditionError("unknown check id");
}

} // namespace mhr
