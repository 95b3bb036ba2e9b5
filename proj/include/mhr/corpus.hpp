#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mhr/classify.hpp"
#include "mhr/conformance.hpp"
#include "mhr/homs.hpp"
#include "mhr/hyperring.hpp"
#include "mhr/ideals.hpp"
#include "mhr/ring_spec.hpp"

namespace mhr {

/// Bitmask over CheckId.
using CheckMask = std::uint32_t;

inline constexpr CheckMask kEveryCheck = (CheckMask{1} << kAllChecks.size()) - 1;

inline constexpr CheckMask check_bit(CheckId id) { return CheckMask{1} << static_cast<unsigned>(id); }

/// One ring of a corpus together with how it was made.
struct Structure
{
    std::string origin;
    RingRef ring;
    std::shared_ptr<const RingRef> left; // set for products
    std::shared_ptr<const RingRef> right;
    CheckMask checks = kEveryCheck;
};

struct ExpansionLimits
{
    SearchLimits search;
    std::size_t max_mcs_size = 4;
    /// MCSs beyond this many per ring (in size-then-mask order) are not used.
    std::size_t max_mcs = 48;
    /// Instances per check per structure; the rest are counted as truncated.
    std::size_t max_instances = 250000;
    std::size_t capacity = kMaxCarrier;
};

// ---------------------------------------------------------------------------
// Naming

inline std::string spec_origin(const RingSpec& s)
{
    std::ostringstream os;
    switch (s.kind) {
    case RingSpec::Kind::Tables: os << "tables(n=" << s.tables.n << ")"; break;
    case RingSpec::Kind::ZPhi: {
        os << "zphi(" << s.modulus << ",{";
        for (std::size_t i = 0; i < s.phi.size(); ++i)
            os << (i ? "," : "") << s.phi[i];
        os << "})";
        break;
    }
    case RingSpec::Kind::Product: os << "product(" << spec_origin(*s.left) << "," << spec_origin(*s.right) << ")"; break;
    case RingSpec::Kind::Quotient: os << "quotient(" << spec_origin(*s.left) << "," << to_string(s.by) << ")"; break;
    }
    return os.str();
}

inline Structure make_structure(RingSpec spec, const ExpansionLimits& limits, std::string origin = {})
{
    Structure st;
    st.ring = make_ring_ref(std::move(spec), limits.search, limits.capacity);
    st.origin = origin.empty() ? spec_origin(*st.ring.spec) : std::move(origin);
    return st;
}

inline Structure make_product_structure(const RingRef& l, const RingRef& r, const ExpansionLimits& limits)
{
    Structure st;
    st.ring = make_ring_ref(RingSpec::product(l.spec, r.spec), limits.search, limits.capacity);
    st.origin = spec_origin(*st.ring.spec);
    st.left = std::make_shared<const RingRef>(l);
    st.right = std::make_shared<const RingRef>(r);
    return st;
}

// ---------------------------------------------------------------------------
// Z_Phi families

/// Every Z_Phi(n, Phi) with n <= max_n and 1 <= |Phi| <= max_phi that validates,
/// in (n, Phi) lexicographic order. Rejected pairs are counted in *rejected.
inline std::vector<RingSpec> zphi_family(std::size_t max_n, std::size_t max_phi, std::size_t* rejected = nullptr)
{
    std::vector<RingSpec> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<Element> phi;
        auto rec = [&](auto&& self, Element start) -> void {
            if (!phi.empty()) {
                if (!find_axiom_violation(zphi_tables(n, phi)))
                    out.push_back(RingSpec::zphi(n, phi));
                else if (rejected)
                    ++*rejected;
            }
            if (phi.size() == max_phi)
                return;
            for (Element a = start; a < n; ++a) {
                phi.push_back(a);
                self(self, a + 1);
                phi.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

/// Z_Phi is isomorphic to Z_{u Phi} for a unit u of Z_n; the canonical Phi is
/// the smallest sorted image.
inline std::vector<Element> canonical_phi(std::size_t n, const std::vector<Element>& phi)
{
    std::vector<Element> best = phi;
    std::sort(best.begin(), best.end());
    for (std::size_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1)
            continue;
        std::vector<Element> img;
        for (Element a : phi)
            img.push_back(static_cast<Element>((u * a) % n));
        std::sort(img.begin(), img.end());
        best = std::min(best, img);
    }
    return best;
}

/// One representative per isomorphism class of the Z_Phi family.
inline std::vector<RingSpec> zphi_representatives(std::size_t max_n, std::size_t max_phi)
{
    std::vector<RingSpec> out;
    for (RingSpec& s : zphi_family(max_n, max_phi))
        if (canonical_phi(s.modulus, s.phi) == s.phi)
            out.push_back(std::move(s));
    return out;
}

// ---------------------------------------------------------------------------
// Instance expansion

struct ExpansionStats
{
    std::size_t instances = 0;
    std::size_t truncated = 0;
    std::size_t mcs_dropped = 0;
};

namespace detail {

inline std::vector<ElementSet> mcs_list(const Hyperring& g, const ExpansionLimits& lim, ExpansionStats& stats)
{
    std::vector<ElementSet> out;
    for (const MCSet& m : enumerate_mcs(g, lim.max_mcs_size))
        out.push_back(m.set);
    if (out.size() > lim.max_mcs) {
        stats.mcs_dropped += out.size() - lim.max_mcs;
        out.resize(lim.max_mcs);
    }
    return out;
}

struct HomCase
{
    RingRef target;
    GoodHom hom;
};

} // namespace detail

/**
 * Calls fn(id, instance) for every instance of every enabled check that the
 * structure gives rise to, in a fixed order.
 */
inline ExpansionStats expand_instances(const Structure& st, const ExpansionLimits& lim,
                                       const std::function<void(CheckId, const Instance&)>& fn)
{
    ExpansionStats stats;
    const RingContext& ctx = *st.ring.ctx;
    const Hyperring& g = ctx.ring();
    const auto& ideals = ctx.ideals();
    constexpr CheckMask factor_only = check_bit(CheckId::T_CART) | check_bit(CheckId::T_CART_SQ);
    std::vector<ElementSet> mcs;
    if (st.checks & ~factor_only)
        mcs = detail::mcs_list(g, lim, stats);

    std::array<std::size_t, kAllChecks.size()> emitted{};
    auto emit = [&](CheckId id, const Instance& inst) {
        if (!(st.checks & check_bit(id)))
            return;
        if (emitted[check_index(id)]++ >= lim.max_instances) {
            ++stats.truncated;
            return;
        }
        ++stats.instances;
        fn(id, inst);
    };
    auto wants = [&](CheckId id) { return (st.checks & check_bit(id)) != 0; };

    Instance inst;
    inst.rings = {st.ring};

    static constexpr std::array single = {CheckId::T11,  CheckId::T12,    CheckId::T_EQ3, CheckId::P13,
                                          CheckId::T21,  CheckId::T23,    CheckId::T24,   CheckId::T_PURE,
                                          CheckId::T41,  CheckId::T42};
    for (const ElementSet& s : mcs)
        for (const ElementSet& a : ideals) {
            inst.ideals = {{0, a}};
            inst.mcs = {{0, s}};
            for (CheckId id : single)
                emit(id, inst);
        }

    if (wants(CheckId::P_PROD))
        for (const ElementSet& s : mcs)
            for (const ElementSet& a : ideals)
                for (const ElementSet& b : ideals) {
                    inst.ideals = {{0, a}, {0, b}};
                    inst.mcs = {{0, s}};
                    emit(CheckId::P_PROD, inst);
                }

    if (wants(CheckId::P_S1S2))
        for (const ElementSet& s1 : mcs)
            for (const ElementSet& s2 : mcs) {
                if (!s1.subset_of(s2))
                    continue;
                for (const ElementSet& a : ideals) {
                    inst.ideals = {{0, a}};
                    inst.mcs = {{0, s1}, {0, s2}};
                    emit(CheckId::P_S1S2, inst);
                }
            }

    if (wants(CheckId::P_INT)) {
        // Only families with one common radical can meet the hypothesis.
        std::map<ElementSet, std::vector<ElementSet>> by_rad;
        for (const ElementSet& a : ideals)
            by_rad[ctx.radical(a)].push_back(a);
        for (const auto& [rad, group] : by_rad) {
            (void)rad;
            for (std::size_t i = 0; i < group.size(); ++i)
                for (std::size_t j = i + 1; j < group.size(); ++j) {
                    for (const ElementSet& s : mcs) {
                        inst.ideals = {{0, group[i]}, {0, group[j]}};
                        inst.mcs = {{0, s}};
                        emit(CheckId::P_INT, inst);
                    }
                    for (std::size_t k = j + 1; k < group.size(); ++k)
                        for (const ElementSet& s : mcs) {
                            inst.ideals = {{0, group[i]}, {0, group[j]}, {0, group[k]}};
                            inst.mcs = {{0, s}};
                            emit(CheckId::P_INT, inst);
                        }
                }
        }
    }

    if (wants(CheckId::T14))
        for (const ElementSet& a : ideals)
            for (std::size_t i = 0; i < ideals.size(); ++i)
                for (std::size_t j = i; j < ideals.size(); ++j) {
                    if (!a.subset_of(ideals[i] | ideals[j]))
                        continue;
                    for (const ElementSet& s : mcs) {
                        inst.ideals = {{0, a}, {0, ideals[i]}};
                        if (j != i)
                            inst.ideals.push_back({0, ideals[j]});
                        inst.mcs = {{0, s}};
                        emit(CheckId::T14, inst);
                    }
                }

    // Homomorphisms out of this ring: identity, projections onto quotients,
    // and for products the two coordinate projections.
    const bool want_homs = wants(CheckId::T_HOMO) || wants(CheckId::T_HOMO2) || wants(CheckId::T_QUOT);
    if (want_homs) {
        std::vector<detail::HomCase> homs;
        homs.push_back({st.ring, identity_hom(g)});
        std::vector<std::pair<ElementSet, detail::HomCase>> quotients;
        for (const ElementSet& b : ideals) {
            if (b == g.carrier())
                continue;
            Quotient q = quotient_ring(g, b, lim.capacity);
            RingRef qr;
            qr.spec = std::make_shared<const RingSpec>(RingSpec::quotient(st.ring.spec, b));
            qr.ctx = std::make_shared<const RingContext>(std::move(q.ring), lim.search);
            quotients.push_back({b, {qr, q.projection}});
            homs.push_back({qr, q.projection});
        }
        if (st.left && st.right) {
            homs.push_back({*st.left, product_projection(st.left->ctx->ring(), st.right->ctx->ring(), g, 0)});
            homs.push_back({*st.right, product_projection(st.left->ctx->ring(), st.right->ctx->ring(), g, 1)});
        }

        for (const detail::HomCase& hc : homs) {
            Instance hi;
            hi.rings = {st.ring, hc.target};
            hi.hom = HomRef{0, 1, hc.hom};
            for (const ElementSet& a1 : ideals)
                for (const ElementSet& a2 : hc.target.ctx->ideals())
                    for (const ElementSet& s : mcs) {
                        hi.ideals = {{0, a1}, {1, a2}};
                        hi.mcs = {{0, s}};
                        emit(CheckId::T_HOMO, hi);
                        emit(CheckId::T_HOMO2, hi);
                    }
        }

        if (wants(CheckId::T_QUOT))
            for (const auto& [b, hc] : quotients) {
                Instance qi;
                qi.rings = {st.ring, hc.target};
                qi.hom = HomRef{0, 1, hc.hom};
                for (const ElementSet& a : ideals) {
                    if (!b.subset_of(a))
                        continue;
                    for (const ElementSet& s : mcs) {
                        qi.ideals = {{0, b}, {0, a}};
                        qi.mcs = {{0, s}};
                        emit(CheckId::T_QUOT, qi);
                    }
                }
            }
    }

    if (st.left && st.right && (wants(CheckId::T_CART) || wants(CheckId::T_CART_SQ))) {
        ExpansionStats side;
        const std::vector<ElementSet> m1 = detail::mcs_list(st.left->ctx->ring(), lim, side);
        const std::vector<ElementSet> m2 = detail::mcs_list(st.right->ctx->ring(), lim, side);
        stats.mcs_dropped += side.mcs_dropped;
        Instance ci;
        ci.rings = {*st.left, *st.right, st.ring};
        for (const ElementSet& a1 : st.left->ctx->ideals())
            for (const ElementSet& a2 : st.right->ctx->ideals())
                for (const ElementSet& s1 : m1)
                    for (const ElementSet& s2 : m2) {
                        ci.ideals = {{0, a1}, {1, a2}};
                        ci.mcs = {{0, s1}, {1, s2}};
                        emit(CheckId::T_CART, ci);
                        emit(CheckId::T_CART_SQ, ci);
                    }
    }
    return stats;
}

// ---------------------------------------------------------------------------
// Running

struct CheckTally
{
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
    std::map<std::string, std::size_t> skip_reasons;
};

struct FailRecord
{
    CheckId id = CheckId::T11;
    std::string origin;
    std::string detail;
    Instance instance;
};

struct Summary
{
    std::array<CheckTally, kAllChecks.size()> tallies{};
    std::size_t structures = 0;
    std::size_t discarded = 0;
    std::size_t instances = 0;
    std::size_t truncated = 0;
    std::size_t mcs_dropped = 0;
    std::vector<FailRecord> fails;

    [[nodiscard]] std::size_t total_fail() const
    {
        std::size_t n = 0;
        for (const CheckTally& t : tallies)
            n += t.fail;
        return n;
    }
    [[nodiscard]] const CheckTally& operator[](CheckId id) const { return tallies[check_index(id)]; }

    void merge(const Summary& o)
    {
        for (std::size_t i = 0; i < tallies.size(); ++i) {
            tallies[i].pass += o.tallies[i].pass;
            tallies[i].fail += o.tallies[i].fail;
            tallies[i].skip += o.tallies[i].skip;
            for (const auto& [k, v] : o.tallies[i].skip_reasons)
                tallies[i].skip_reasons[k] += v;
        }
        structures += o.structures;
        discarded += o.discarded;
        instances += o.instances;
        truncated += o.truncated;
        mcs_dropped += o.mcs_dropped;
        fails.insert(fails.end(), o.fails.begin(), o.fails.end());
    }
};

struct RunOptions
{
    ExpansionLimits limits;
    EngineOptions engine;
    unsigned workers = 1;
    /// Fail records kept per check id (all fails are still counted).
    std::size_t max_fail_records = 8;
};

/// Greedy element removal on a failing instance: drops MCS elements, then
/// surplus ideals of P_INT and T14, one at a time while the check still fails.
inline Instance shrink_failure(CheckId id, Instance inst, const EngineOptions& opt)
{
    auto fails = [&](const Instance& i) {
        try {
            return run_check(id, i, opt).status == Status::Fail;
        } catch (const Error&) {
            return false;
        }
    };
    const bool list = id == CheckId::P_INT || id == CheckId::T14;
    const std::size_t first = id == CheckId::T14 ? 1 : 0; // T14 keeps A in slot 0
    for (bool progress = true; progress;) {
        progress = false;
        for (Member& m : inst.mcs) {
            const Hyperring& g = inst.rings[m.ring].ctx->ring();
            for (Element e : m.set.to_vector()) {
                const ElementSet keep = m.set;
                m.set.reset(e);
                if (!m.set.empty() && !find_mcs_violation(g, m.set) && fails(inst)) {
                    progress = true;
                    continue;
                }
                m.set = keep;
            }
        }
        for (std::size_t i = inst.ideals.size(); list && i-- > first;) {
            if (inst.ideals.size() <= first + 1)
                break;
            Instance trial = inst;
            trial.ideals.erase(trial.ideals.begin() + static_cast<std::ptrdiff_t>(i));
            if (fails(trial)) {
                inst = std::move(trial);
                progress = true;
            }
        }
    }
    return inst;
}

inline Summary run_structure(const Structure& st, const RunOptions& opt)
{
    Summary sum;
    sum.structures = 1;
    std::array<std::size_t, kAllChecks.size()> kept{};
    const ExpansionStats stats = expand_instances(st, opt.limits, [&](CheckId id, const Instance& inst) {
        const CheckOutcome out = run_check(id, inst, opt.engine);
        CheckTally& t = sum.tallies[check_index(id)];
        switch (out.status) {
        case Status::Pass: ++t.pass; break;
        case Status::Skip:
            ++t.skip;
            ++t.skip_reasons[out.detail];
            break;
        case Status::Fail:
            ++t.fail;
            if (kept[check_index(id)]++ < opt.max_fail_records) {
                Instance small = shrink_failure(id, inst, opt.engine);
                std::string detail = run_check(id, small, opt.engine).detail;
                sum.fails.push_back({id, st.origin, std::move(detail), std::move(small)});
            }
            break;
        }
    });
    sum.instances = stats.instances;
    sum.truncated = stats.truncated;
    sum.mcs_dropped = stats.mcs_dropped;
    return sum;
}

/// Runs every structure; results merge in structure order whatever the worker count.
inline Summary run_all(const std::vector<Structure>& structures, const RunOptions& opt)
{
    std::vector<Summary> parts(structures.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < structures.size(); i = next++)
            parts[i] = run_structure(structures[i], opt);
    };
    const unsigned workers = std::max(1u, opt.workers);
    if (workers == 1 || structures.size() < 2) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (std::thread& t : pool)
            t.join();
    }
    Summary total;
    for (const Summary& p : parts)
        total.merge(p);
    return total;
}

/// Machine form tags every line with a record type: corpus, check, skip, fail, summary.
inline std::string render_summary(const Summary& s, bool machine = false)
{
    std::ostringstream os;
    os << (machine ? "corpus " : "") << "structures=" << s.structures << " discarded=" << s.discarded
       << " instances=" << s.instances << " truncated=" << s.truncated << " mcs_dropped=" << s.mcs_dropped << "\n";
    for (CheckId id : kAllChecks) {
        const CheckTally& t = s[id];
        os << (machine ? "check id=" : "check=") << check_name(id) << " pass=" << t.pass << " fail=" << t.fail
           << " skip=" << t.skip << "\n";
        for (const auto& [reason, count] : t.skip_reasons) {
            if (machine)
                os << "skip id=" << check_name(id) << " reason=" << reason << " count=" << count << "\n";
            else
                os << "  skip " << reason << "=" << count << "\n";
        }
    }
    for (const FailRecord& f : s.fails) {
        if (machine)
            os << "fail id=" << check_name(f.id) << " ring=" << f.origin << " detail=" << f.detail << "\n";
        else
            os << "fail check=" << check_name(f.id) << " ring=" << f.origin << " " << f.detail << "\n";
    }
    os << (machine ? "summary " : "") << "total_fail=" << s.total_fail() << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Corpora

/// The explicit 4-element table with Phi = {1,3} over Z_4, written out.
inline RawTables madar_tables() { return zphi_tables(4, {1, 3}); }

/**
 * The fixed corpus: the printed 4-element table, one representative of every
 * Z_Phi isomorphism class with n <= max_n and |Phi| <= 3, and the products of
 * ordered pairs of those representatives with n1 * n2 <= max_product (products
 * run only the product checks).
 */
inline std::vector<Structure> builtin_corpus(const ExpansionLimits& lim, std::size_t max_n = 8,
                                             std::size_t max_product = 36)
{
    std::vector<Structure> out;
    out.push_back(make_structure(RingSpec::from_tables(madar_tables()), lim, "madar"));
    std::vector<RingRef> reps;
    for (RingSpec& s : zphi_representatives(max_n, 3)) {
        out.push_back(make_structure(std::move(s), lim));
        reps.push_back(out.back().ring);
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            if (reps[i].ctx->ring().size() * reps[j].ctx->ring().size() > max_product)
                continue;
            Structure st = make_product_structure(reps[i], reps[j], lim);
            st.checks = check_bit(CheckId::T_CART) | check_bit(CheckId::T_CART_SQ);
            out.push_back(std::move(st));
        }
    return out;
}

struct GeneratorLimits
{
    std::size_t max_n = 8;
    std::size_t max_phi = 3;
    std::size_t max_product = 36;
    /// Attempts per random-table slot before falling back to a Z_Phi ring.
    std::size_t table_attempts = 64;
};

struct GeneratedStream
{
    std::vector<Structure> structures;
    std::size_t table_attempts = 0;
    std::size_t table_discards = 0;
};

namespace detail {

/// Small finite abelian groups Z_a x Z_b (b = 1 for cyclic), elements encoded i*b + j.
struct SmallGroup
{
    std::size_t a = 1;
    std::size_t b = 1;
    [[nodiscard]] std::size_t size() const { return a * b; }
    [[nodiscard]] Element add(Element x, Element y) const
    {
        return static_cast<Element>(((x / b + y / b) % a) * b + (x % b + y % b) % b);
    }
    [[nodiscard]] Element mul(Element x, Element y) const
    {
        return static_cast<Element>(((x / b) * (y / b) % a) * b + (x % b) * (y % b) % b);
    }
};

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return bound ? rng() % bound : 0; }

inline RawTables group_tables(const SmallGroup& grp)
{
    RawTables t;
    t.n = grp.size();
    t.add.resize(t.n * t.n);
    t.hyp.resize(t.n * t.n);
    for (Element x = 0; x < t.n; ++x)
        for (Element y = 0; y < t.n; ++y)
            t.add[x * t.n + y] = grp.add(x, y);
    return t;
}

/// x o y = { x * p * y : p in Phi } over the ring Z_a x Z_b.
inline RawTables generalized_phi(const SmallGroup& grp, const ElementSet& phi)
{
    RawTables t = group_tables(grp);
    for (Element x = 0; x < t.n; ++x)
        for (Element y = 0; y < t.n; ++y) {
            ElementSet s;
            for (Element p : phi)
                s.set(grp.mul(grp.mul(x, p), y));
            t.hyp[x * t.n + y] = s;
        }
    return t;
}

/// Symmetric table with 0 absorbing and each other entry a random nonempty subset.
inline RawTables random_symmetric(const SmallGroup& grp, std::mt19937_64& rng)
{
    RawTables t = group_tables(grp);
    const std::size_t n = t.n;
    for (Element x = 0; x < n; ++x)
        for (Element y = x; y < n; ++y) {
            ElementSet s;
            if (x == 0)
                s.set(0);
            else
                while (s.empty())
                    s = ElementSet::from_mask(draw(rng, std::uint64_t{1} << n));
            t.hyp[x * n + y] = s;
            t.hyp[y * n + x] = s;
        }
    return t;
}

} // namespace detail

/**
 * Deterministic structure stream. The first three slots are the worked
 * example rings; afterwards slots rotate through random Z_Phi rings, products
 * of two random Z_Phi rings, quotients of a random Z_Phi ring by one of its
 * hyperideals, and random tables over small abelian groups.
 */
inline GeneratedStream generate_structures(std::uint64_t seed, std::size_t count, const ExpansionLimits& lim,
                                           const GeneratorLimits& gen = {})
{
    GeneratedStream out;
    std::mt19937_64 rng(seed);
    const std::vector<RingSpec> family = zphi_family(gen.max_n, gen.max_phi);
    auto random_zphi = [&] { return family[detail::draw(rng, family.size())]; };

    const std::array<RingSpec, 3> fixed = {RingSpec::zphi(4, {1, 3}), RingSpec::zphi(6, {1, 2, 3, 4, 5}),
                                           RingSpec::zphi(5, {1, 2, 3})};
    const std::vector<detail::SmallGroup> groups = {{2, 1}, {3, 1}, {4, 1}, {2, 2}, {5, 1}, {6, 1},
                                                    {7, 1}, {8, 1}, {4, 2}, {2, 4}};

    for (std::size_t i = 0; i < count; ++i) {
        if (i < fixed.size()) {
            out.structures.push_back(make_structure(fixed[i], lim));
            continue;
        }
        switch (i % 4) {
        case 0: out.structures.push_back(make_structure(random_zphi(), lim)); break;
        case 1: {
            RingSpec l = random_zphi();
            RingSpec r = random_zphi();
            while (l.modulus * r.modulus > gen.max_product)
                r = random_zphi();
            out.structures.push_back(make_product_structure(make_ring_ref(std::move(l), lim.search, lim.capacity),
                                                            make_ring_ref(std::move(r), lim.search, lim.capacity),
                                                            lim));
            break;
        }
        case 2: {
            RingSpec base = random_zphi();
            const RingRef ref = make_ring_ref(base, lim.search, lim.capacity);
            const auto& ideals = ref.ctx->ideals();
            const ElementSet by = ideals[detail::draw(rng, ideals.size())];
            out.structures.push_back(make_structure(RingSpec::quotient(ref.spec, by), lim));
            break;
        }
        default: {
            std::optional<RawTables> found;
            for (std::size_t k = 0; k < gen.table_attempts && !found; ++k) {
                const detail::SmallGroup grp = groups[detail::draw(rng, groups.size())];
                if (grp.size() > gen.max_n)
                    continue;
                ++out.table_attempts;
                RawTables t;
                if (k % 2 == 0) {
                    t = detail::random_symmetric(grp, rng);
                } else {
                    ElementSet phi;
                    const std::size_t size = 1 + detail::draw(rng, gen.max_phi);
                    for (std::size_t m = 0; m < size; ++m)
                        phi.set(static_cast<Element>(detail::draw(rng, grp.size())));
                    t = detail::generalized_phi(grp, phi);
                }
                if (find_axiom_violation(t))
                    ++out.table_discards;
                else
                    found = std::move(t);
            }
            if (found)
                out.structures.push_back(make_structure(RingSpec::from_tables(std::move(*found)), lim,
                                                        "random#" + std::to_string(i)));
            else
                out.structures.push_back(make_structure(random_zphi(), lim));
            break;
        }
        }
    }
    return out;
}

} // namespace mhr
