#pragma once

#include <array>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mhr/element_set.hpp"
#include "mhr/error.hpp"
#include "mhr/hyperring.hpp"
#include "mhr/ideals.hpp"

namespace mhr {

// ---------------------------------------------------------------------------
// Engine mutations
//
// Deliberately wrong variants of individual engine steps. They exist so the
// conformance suite can prove that each catalog check is able to fail; the
// default engine never uses them.

enum class Mutation {
    None,
    QuasiIgnoresWitness,     // quasi/weakly: left factor tested as u in rad(A), t dropped
    RadicalIsIdeal,          // rad(A) replaced by A everywhere
    RadicalIsCarrier,        // rad(A) replaced by the carrier
    SPrimeUsesRadical,       // S-prime tests t o u against rad(A)
    StronglySquareIsSingle,  // strongly quasi tests t o u instead of t o u^2
    WeaklyIgnoresZeroGuard,  // weakly quasi hypothesis drops "0 not in u o v"
    WeaklyAlwaysHolds,       // weakly quasi reported true for every disjoint A
    WitnessFromCarrier,      // witnesses searched over the whole carrier
    ColonIsIdeal,            // (A : D) replaced by A
    SaturationIsSet,         // saturation returns S with 0 added
    IdealProductIsZero,      // B o A replaced by <0>
    ImageDropsKernel,        // hom image of a hyperideal loses the image of 0
    WitnessSkipsFirst,       // witness search starts at the second element of S
    IdealMeetIsZero,         // A n B replaced by <0>
    AvoidanceFirstCover,     // avoidance only tries the first cover
    McsImageIsIdentity,      // eta(S) replaced by {eta(e)} for the identity e in S
};

inline constexpr std::array kAllMutations = {
    Mutation::QuasiIgnoresWitness,   Mutation::RadicalIsIdeal,       Mutation::RadicalIsCarrier,
    Mutation::SPrimeUsesRadical,     Mutation::StronglySquareIsSingle, Mutation::WeaklyIgnoresZeroGuard,
    Mutation::WeaklyAlwaysHolds,     Mutation::WitnessFromCarrier,   Mutation::ColonIsIdeal,
    Mutation::SaturationIsSet,       Mutation::IdealProductIsZero,   Mutation::ImageDropsKernel,
    Mutation::WitnessSkipsFirst,     Mutation::IdealMeetIsZero,      Mutation::AvoidanceFirstCover,
    Mutation::McsImageIsIdentity,
};

inline std::string_view mutation_name(Mutation m)
{
    switch (m) {
    case Mutation::None: return "none";
    case Mutation::QuasiIgnoresWitness: return "quasi-ignores-witness";
    case Mutation::RadicalIsIdeal: return "radical-is-ideal";
    case Mutation::RadicalIsCarrier: return "radical-is-carrier";
    case Mutation::SPrimeUsesRadical: return "s-prime-uses-radical";
    case Mutation::StronglySquareIsSingle: return "strongly-square-is-single";
    case Mutation::WeaklyIgnoresZeroGuard: return "weakly-ignores-zero-guard";
    case Mutation::WeaklyAlwaysHolds: return "weakly-always-holds";
    case Mutation::WitnessFromCarrier: return "witness-from-carrier";
    case Mutation::ColonIsIdeal: return "colon-is-ideal";
    case Mutation::SaturationIsSet: return "saturation-is-set";
    case Mutation::IdealProductIsZero: return "ideal-product-is-zero";
    case Mutation::ImageDropsKernel: return "image-drops-kernel";
    case Mutation::WitnessSkipsFirst: return "witness-skips-first";
    case Mutation::IdealMeetIsZero: return "ideal-meet-is-zero";
    case Mutation::AvoidanceFirstCover: return "avoidance-first-cover";
    case Mutation::McsImageIsIdentity: return "mcs-image-is-identity";
    }
    return "?";
}

inline std::optional<Mutation> parse_mutation(std::string_view s)
{
    if (s == "none")
        return Mutation::None;
    for (Mutation m : kAllMutations)
        if (mutation_name(m) == s)
            return m;
    return std::nullopt;
}

struct EngineOptions
{
    SearchLimits limits;
    Mutation mutation = Mutation::None;
};

// ---------------------------------------------------------------------------
// Per-ring cache

/**
 * A validated ring together with everything the classifiers reuse: the full
 * hyperideal list, its primes, and the product family. Built once, then
 * read-only, so one context can be shared by any number of threads.
 */
class RingContext
{
    Hyperring ring_;
    SearchLimits limits_;
    std::vector<ElementSet> ideals_;
    std::vector<ElementSet> primes_;
    std::vector<ElementSet> products_;
    ElementSet zero_ideal_;

    mutable std::once_flag sums_once_;
    mutable std::vector<ElementSet> sums_;

public:
    explicit RingContext(Hyperring g, const SearchLimits& limits = {})
        : ring_(std::move(g)), limits_(limits), ideals_(enumerate_hyperideals(ring_, limits)),
          primes_(prime_hyperideals(ring_, ideals_)), products_(product_family(ring_, limits)),
          zero_ideal_(generate_hyperideal(ring_, ElementSet::singleton(0)))
    {
    }

    RingContext(const RingContext&) = delete;
    RingContext& operator=(const RingContext&) = delete;

    [[nodiscard]] const Hyperring& ring() const { return ring_; }
    [[nodiscard]] const SearchLimits& limits() const { return limits_; }
    [[nodiscard]] const std::vector<ElementSet>& ideals() const { return ideals_; }
    [[nodiscard]] const std::vector<ElementSet>& primes() const { return primes_; }
    [[nodiscard]] const std::vector<ElementSet>& products() const { return products_; }
    /// <0>, the hyperideal generated by the additive zero.
    [[nodiscard]] const ElementSet& zero_ideal() const { return zero_ideal_; }

    [[nodiscard]] const std::vector<ElementSet>& sums() const
    {
        std::call_once(sums_once_, [this] { sums_ = sum_family(ring_, products_, limits_); });
        return sums_;
    }

    [[nodiscard]] ElementSet radical(const ElementSet& a) const { return radical_from_primes(ring_, primes_, a); }
    [[nodiscard]] bool is_c(const ElementSet& a) const { return !c_condition_witness(products_, a); }
    [[nodiscard]] bool is_strong_c(const ElementSet& a) const { return !c_condition_witness(sums(), a); }
    [[nodiscard]] bool is_ideal(const ElementSet& a) const
    {
        return std::binary_search(ideals_.begin(), ideals_.end(), a, size_then_mask_less);
    }
};

/// Radical as seen by the (possibly mutated) engine.
inline ElementSet engine_radical(const RingContext& ctx, const ElementSet& a, const EngineOptions& opt)
{
    switch (opt.mutation) {
    case Mutation::RadicalIsIdeal: return a;
    case Mutation::RadicalIsCarrier: return ctx.ring().carrier();
    default: return ctx.radical(a);
    }
}

// ---------------------------------------------------------------------------
// Multiplicative closed subsets

struct MCSet
{
    ElementSet set;
    Element identity = 0; // an identity element contained in set
};

struct MCSViolation
{
    bool missing_identity = false;
    Element s1 = 0;
    Element s2 = 0;
};

inline std::optional<MCSViolation> find_mcs_violation(const Hyperring& g, const ElementSet& s)
{
    if (!s.intersects(g.identities()))
        return MCSViolation{true};
    for (Element a : s)
        for (Element b : s)
            if (b >= a && !g.hyp(a, b).intersects(s))
                return MCSViolation{false, a, b};
    return std::nullopt;
}

inline bool is_mcs(const Hyperring& g, const ElementSet& s)
{
    detail::require_owned(g, s, "is_mcs");
    detail::require_nonempty(s, "is_mcs");
    return !find_mcs_violation(g, s);
}

inline MCSet make_mcs(const Hyperring& g, const ElementSet& s)
{
    detail::require_owned(g, s, "make_mcs");
    detail::require_nonempty(s, "make_mcs");
    if (auto v = find_mcs_violation(g, s)) {
        if (v->missing_identity)
            throw PreconditionError(to_string(s) + " is not an MCS: contains no identity element");
        throw PreconditionError(to_string(s) + " is not an MCS: " + std::to_string(v->s1) + " o " +
                                std::to_string(v->s2) + " misses the set");
    }
    return {s, (s & g.identities()).first()};
}

/// Every MCS with at most max_size elements, sorted by (size, bitmask).
inline std::vector<MCSet> enumerate_mcs(const Hyperring& g, std::size_t max_size, std::size_t max_count = 1u << 20)
{
    const auto n = static_cast<Element>(g.size());
    std::vector<MCSet> out;
    std::vector<Element> pick;
    ElementSet cur;
    // Depth-first over ascending combinations.
    auto rec = [&](auto&& self, Element start) -> void {
        if (!cur.empty() && !find_mcs_violation(g, cur)) {
            out.push_back({cur, (cur & g.identities()).first()});
            if (out.size() > max_count)
                throw CapacityError("more than " + std::to_string(max_count) + " MCSs");
        }
        if (pick.size() == max_size)
            return;
        for (Element e = start; e < n; ++e) {
            pick.push_back(e);
            cur.set(e);
            self(self, e + 1);
            cur.reset(e);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const MCSet& a, const MCSet& b) { return size_then_mask_less(a.set, b.set); });
    return out;
}

/// { a : (a o b) meets S for some b }
inline ElementSet saturate(const Hyperring& g, const ElementSet& s, Mutation m = Mutation::None)
{
    detail::require_owned(g, s, "saturate");
    if (m == Mutation::SaturationIsSet) {
        ElementSet r = s;
        r.set(0);
        return r;
    }
    ElementSet r;
    const auto n = static_cast<Element>(g.size());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (g.hyp(a, b).intersects(s)) {
                r.set(a);
                break;
            }
    return r;
}

// ---------------------------------------------------------------------------
// The five S-relative classes

enum class HyperClass { SPrime, SPrimary, Quasi, WeaklyQuasi, StronglyQuasi };

inline constexpr std::array kAllClasses = {HyperClass::SPrime, HyperClass::SPrimary, HyperClass::Quasi,
                                           HyperClass::WeaklyQuasi, HyperClass::StronglyQuasi};

inline std::string_view class_name(HyperClass c)
{
    switch (c) {
    case HyperClass::SPrime: return "s_prime";
    case HyperClass::SPrimary: return "s_primary";
    case HyperClass::Quasi: return "quasi";
    case HyperClass::WeaklyQuasi: return "weakly_quasi";
    case HyperClass::StronglyQuasi: return "strongly_quasi";
    }
    return "?";
}

enum class Verdict { Holds, Fails, Skipped };

struct ClassResult
{
    Verdict verdict = Verdict::Skipped;
    std::optional<Element> witness;
    std::optional<std::pair<Element, Element>> counterexample;

    [[nodiscard]] bool holds() const { return verdict == Verdict::Holds; }
    friend bool operator==(const ClassResult&, const ClassResult&) = default;
};

/**
 * Decides one class for ideal A with radical `rad`, searching witnesses t over
 * `candidates` in ascending order. A class holds iff a single t satisfies the
 * conclusion for every ordered pair (u, v) meeting the hypothesis. When no t
 * works, the recorded counterexample is the first pair that defeats the
 * smallest candidate.
 *
 * Disjointness of A and the candidates is the caller's business.
 */
inline ClassResult evaluate_class(const Hyperring& g, HyperClass c, const ElementSet& a, const ElementSet& rad,
                                  const ElementSet& candidates, Mutation m = Mutation::None)
{
    if (m == Mutation::WeaklyAlwaysHolds && c == HyperClass::WeaklyQuasi && !candidates.empty())
        return {Verdict::Holds, candidates.first(), std::nullopt};

    const auto n = static_cast<Element>(g.size());
    const bool weakly = c == HyperClass::WeaklyQuasi;
    std::vector<std::pair<Element, Element>> pairs;
    for (Element u = 0; u < n; ++u)
        for (Element v = 0; v < n; ++v) {
            const ElementSet& uv = g.hyp(u, v);
            if (!uv.subset_of(a))
                continue;
            if (weakly && m != Mutation::WeaklyIgnoresZeroGuard && uv.test(0))
                continue;
            pairs.emplace_back(u, v);
        }

    ElementSet cands = m == Mutation::WitnessFromCarrier ? g.carrier() : candidates;
    if (m == Mutation::WitnessSkipsFirst && !cands.empty())
        cands.reset(cands.first());
    std::optional<std::pair<Element, Element>> first_failure;
    for (Element t : cands) {
        ElementSet in_a, in_rad, square_in_a;
        for (Element u = 0; u < n; ++u) {
            const ElementSet& tu = g.hyp(t, u);
            if (tu.subset_of(a))
                in_a.set(u);
            if (tu.subset_of(rad))
                in_rad.set(u);
            if (c == HyperClass::StronglyQuasi) {
                const ElementSet sq = m == Mutation::StronglySquareIsSingle ? tu : g.times(t, g.hyp(u, u));
                if (sq.subset_of(a))
                    square_in_a.set(u);
            }
        }
        ElementSet left = in_rad, right = in_rad;
        switch (c) {
        case HyperClass::SPrime:
            left = right = m == Mutation::SPrimeUsesRadical ? in_rad : in_a;
            break;
        case HyperClass::SPrimary: left = in_a; break;
        case HyperClass::Quasi:
        case HyperClass::WeaklyQuasi:
            if (m == Mutation::QuasiIgnoresWitness)
                left = rad;
            break;
        case HyperClass::StronglyQuasi: left = square_in_a; break;
        }
        std::optional<std::pair<Element, Element>> bad;
        for (auto [u, v] : pairs)
            if (!left.test(u) && !right.test(v)) {
                bad = std::make_pair(u, v);
                break;
            }
        if (!bad)
            return {Verdict::Holds, t, std::nullopt};
        if (!first_failure)
            first_failure = bad;
    }
    return {Verdict::Fails, std::nullopt, first_failure};
}

/// True iff A is disjoint from S and the class holds for witnesses drawn from S.
inline bool class_holds(const RingContext& ctx, HyperClass c, const ElementSet& a, const ElementSet& s,
                        const EngineOptions& opt = {})
{
    if (a.intersects(s))
        return false;
    return evaluate_class(ctx.ring(), c, a, engine_radical(ctx, a, opt), s, opt.mutation).holds();
}

struct ClassificationReport
{
    ElementSet ideal;
    ElementSet mcs;
    bool disjoint = false;
    ElementSet radical;
    bool is_c = false;
    bool is_strong_c = false;
    std::array<ClassResult, kAllClasses.size()> classes{};

    [[nodiscard]] const ClassResult& operator[](HyperClass c) const { return classes[static_cast<std::size_t>(c)]; }
    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

inline ClassificationReport classify(const RingContext& ctx, const ElementSet& a, const ElementSet& s,
                                     const EngineOptions& opt = {})
{
    const Hyperring& g = ctx.ring();
    detail::require_ideal(g, a, "classify");
    make_mcs(g, s);
    ClassificationReport r;
    r.ideal = a;
    r.mcs = s;
    r.disjoint = !a.intersects(s);
    r.radical = engine_radical(ctx, a, opt);
    r.is_c = ctx.is_c(a);
    r.is_strong_c = ctx.is_strong_c(a);
    if (!r.disjoint)
        return r;
    for (std::size_t i = 0; i < kAllClasses.size(); ++i)
        r.classes[i] = evaluate_class(g, kAllClasses[i], a, r.radical, s, opt.mutation);
    return r;
}

inline ClassificationReport classify(const Hyperring& g, const ElementSet& a, const ElementSet& s,
                                     const EngineOptions& opt = {})
{
    RingContext ctx(g, opt.limits);
    return classify(ctx, a, s, opt);
}

// ---------------------------------------------------------------------------
// Avoidance

struct AvoidanceResult
{
    enum class Status { Found, NotFound, Skipped } status = Status::Skipped;
    Element t = 0;
    std::size_t cover = 0;
    std::string unmet; // precondition name when skipped
};

/**
 * Looks for t in S and a cover A_j with t o A inside rad(A_j). Requires every
 * cover to be a quasi S-primary C-hyperideal and A to lie in their union.
 */
inline AvoidanceResult avoidance_witness(const RingContext& ctx, const ElementSet& a,
                                         const std::vector<ElementSet>& covers, const ElementSet& s,
                                         const EngineOptions& opt = {})
{
    AvoidanceResult res;
    ElementSet un;
    for (const ElementSet& c : covers) {
        if (!ctx.is_c(c)) {
            res.unmet = "cover-is-c-hyperideal";
            return res;
        }
        if (!class_holds(ctx, HyperClass::Quasi, c, s, opt)) {
            res.unmet = "cover-is-quasi";
            return res;
        }
        un |= c;
    }
    if (covers.empty() || !a.subset_of(un)) {
        res.unmet = "ideal-inside-union";
        return res;
    }
    const Hyperring& g = ctx.ring();
    const std::size_t tried = opt.mutation == Mutation::AvoidanceFirstCover ? 1 : covers.size();
    for (Element t : s)
        for (std::size_t j = 0; j < tried; ++j)
            if (g.times(t, a).subset_of(engine_radical(ctx, covers[j], opt))) {
                res.status = AvoidanceResult::Status::Found;
                res.t = t;
                res.cover = j;
                return res;
            }
    res.status = AvoidanceResult::Status::NotFound;
    return res;
}

} // namespace mhr
