#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mhr/classify.hpp"
#include "mhr/corpus.hpp"
#include "mhr/hyperring.hpp"
#include "mhr/ideals.hpp"

// Line-oriented reports. The plain form is key=value lines; the machine form
// puts a fixed record word first on every line and never omits a key, so a
// line splits on single spaces into the record word and key=value pairs.

namespace mhr {

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline std::string class_line(HyperClass c, const ClassResult& r, bool machine)
{
    std::ostringstream os;
    os << (machine ? "class name=" : "class=") << class_name(c) << " holds=" << bool_str(r.holds()) << " witness=";
    if (r.witness)
        os << *r.witness;
    else
        os << "-";
    os << " counterexample=";
    if (r.counterexample)
        os << "(" << r.counterexample->first << "," << r.counterexample->second << ")";
    else
        os << "-";
    return os.str();
}

inline std::string classify_report(const ClassificationReport& rep, bool machine = false)
{
    std::ostringstream os;
    if (machine)
        os << "classify ideal=" << to_string(rep.ideal) << " mcs=" << to_string(rep.mcs) << "\n";
    for (HyperClass c : kAllClasses)
        os << class_line(c, rep[c], machine) << "\n";
    if (machine) {
        os << "radical set=" << to_string(rep.radical) << "\n";
        os << "flags c_hyperideal=" << bool_str(rep.is_c) << " strong_c=" << bool_str(rep.is_strong_c)
           << " disjoint=" << bool_str(rep.disjoint) << "\n";
    } else {
        os << "radical=" << to_string(rep.radical) << "\n";
        os << "c_hyperideal=" << bool_str(rep.is_c) << "\n";
        os << "strong_c=" << bool_str(rep.is_strong_c) << "\n";
        os << "disjoint=" << bool_str(rep.disjoint) << "\n";
    }
    return os.str();
}

inline std::string ring_report(const std::string& name, const RingContext& ctx, bool machine = false)
{
    const Hyperring& g = ctx.ring();
    const StructureFlags f = structure_flags(g);
    std::ostringstream os;
    os << (machine ? "ring name=" : "ring=") << name << " n=" << g.size() << " identities=" << to_string(g.identities())
       << " units=" << to_string(units(g)) << " hyperideals=" << ctx.ideals().size()
       << " strongly_distributive=" << bool_str(f.is_strongly_distributive)
       << " hyperfield=" << bool_str(f.is_hyperfield) << " hyperdomain=" << bool_str(f.is_hyperdomain) << "\n";
    return os.str();
}

inline std::string ideals_report(const RingContext& ctx, bool machine = false)
{
    const Hyperring& g = ctx.ring();
    const auto& ideals = ctx.ideals();
    std::ostringstream os;
    for (const ElementSet& a : ideals) {
        const bool proper = a != g.carrier();
        const ElementSet rad = ctx.radical(a);
        os << (machine ? "ideal set=" : "ideal=") << to_string(a)
           << " prime=" << bool_str(proper && prime_scan(g, a))
           << " primary=" << bool_str(proper && is_primary(g, a, rad))
           << " maximal=" << bool_str(is_maximal(g, a, ideals)) << " c=" << bool_str(ctx.is_c(a))
           << " strong_c=" << bool_str(ctx.is_strong_c(a)) << " pure=" << bool_str(is_pure(g, a))
           << " radical=" << to_string(rad) << "\n";
    }
    os << (machine ? "count value=" : "count=") << ideals.size() << "\n";
    return os.str();
}

inline std::string radical_report(const RingContext& ctx, const ElementSet& a, bool machine = false)
{
    std::ostringstream os;
    const ElementSet p = ctx.radical(a);
    const ElementSet w = power_radical(ctx.ring(), a);
    if (machine)
        os << "radical primes=" << to_string(p) << " powers=" << to_string(w) << " c_hyperideal=" << bool_str(ctx.is_c(a))
           << "\n";
    else
        os << "radical=" << to_string(p) << "\nradical_powers=" << to_string(w)
           << "\nc_hyperideal=" << bool_str(ctx.is_c(a)) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Worked examples

struct ExampleRow
{
    std::string example;
    std::string subject;  // what the property is about, e.g. "ideal={0,2} mcs={1,3}"
    std::string property;
    std::string expected;
    std::string computed;

    [[nodiscard]] bool match() const { return expected == computed; }
};

/// The hand-written 4-element table, entry by entry.
inline RawTables madar_printed_tables()
{
    RawTables t;
    t.n = 4;
    t.add = {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2};
    const ElementSet z{0}, two{2}, i{1, 3};
    t.hyp = {z, z, z, z, z, i, two, i, z, two, z, two, z, i, two, i};
    return t;
}

namespace detail {

inline void add_class_rows(std::vector<ExampleRow>& rows, const std::string& example, const RingContext& ctx,
                           const ElementSet& a, const ElementSet& s,
                           std::initializer_list<std::pair<HyperClass, bool>> expected)
{
    const ClassificationReport rep = classify(ctx, a, s);
    const std::string subject = "ideal=" + to_string(a) + " mcs=" + to_string(s);
    for (auto [c, want] : expected)
        rows.push_back({example, subject, std::string(class_name(c)), bool_str(want), bool_str(rep[c].holds())});
}

/// First (A, S) in the Z_Phi family, n <= 8, with A quasi S-primary but not primary.
inline std::optional<std::string> quasi_not_primary()
{
    for (const RingSpec& spec : zphi_family(8, 3)) {
        const RingContext ctx(build_ring(spec));
        const Hyperring& g = ctx.ring();
        for (const MCSet& m : enumerate_mcs(g, 3))
            for (const ElementSet& a : ctx.ideals()) {
                if (a == g.carrier() || a.intersects(m.set))
                    continue;
                if (class_holds(ctx, HyperClass::Quasi, a, m.set) && !is_primary(g, a, ctx.radical(a)))
                    return spec_origin(spec) + " ideal=" + to_string(a) + " mcs=" + to_string(m.set);
            }
    }
    return std::nullopt;
}

/// First pair of Z_Phi rings with quasi A1, A2 (each disjoint from its MCS) whose product is not quasi.
inline std::optional<std::string> product_not_quasi()
{
    const std::vector<RingSpec> fam = zphi_family(4, 2);
    for (const RingSpec& l : fam)
        for (const RingSpec& r : fam) {
            const RingRef lr = make_ring_ref(l), rr = make_ring_ref(r);
            const RingRef pr = make_ring_ref(RingSpec::product(lr.spec, rr.spec));
            const Hyperring& right = rr.ctx->ring();
            for (const MCSet& s1 : enumerate_mcs(lr.ctx->ring(), 2))
                for (const MCSet& s2 : enumerate_mcs(right, 2))
                    for (const ElementSet& a1 : lr.ctx->ideals())
                        for (const ElementSet& a2 : rr.ctx->ideals()) {
                            if (a1.intersects(s1.set) || a2.intersects(s2.set))
                                continue;
                            if (!class_holds(*lr.ctx, HyperClass::Quasi, a1, s1.set) ||
                                !class_holds(*rr.ctx, HyperClass::Quasi, a2, s2.set))
                                continue;
                            const ElementSet a = product_set(right, a1, a2);
                            const ElementSet s = product_set(right, s1.set, s2.set);
                            if (!class_holds(*pr.ctx, HyperClass::Quasi, a, s))
                                return spec_origin(l) + " x " + spec_origin(r) + " A1=" + to_string(a1) +
                                       " S1=" + to_string(s1.set) + " A2=" + to_string(a2) + " S2=" + to_string(s2.set);
                        }
        }
    return std::nullopt;
}

} // namespace detail

struct ExampleReport
{
    std::vector<ExampleRow> rows;
    std::vector<std::string> notes;

    [[nodiscard]] std::size_t mismatches() const
    {
        std::size_t n = 0;
        for (const ExampleRow& r : rows)
            n += !r.match();
        return n;
    }
};

inline ExampleReport paper_examples()
{
    ExampleReport rep;
    auto& rows = rep.rows;

    // Z_4 with the printed tables.
    const RawTables printed = madar_printed_tables();
    rows.push_back({"madar", "tables", "equals_zphi(4,{1,3})", "true", bool_str(printed == zphi_tables(4, {1, 3}))});
    {
        const RingContext ctx(validate(printed));
        const ElementSet s{1, 3}, a{0, 2};
        rows.push_back({"madar", "mcs=" + to_string(s), "is_mcs", "true", bool_str(is_mcs(ctx.ring(), s))});
        rows.push_back({"madar", "ideal=" + to_string(a), "is_hyperideal", "true", bool_str(ctx.is_ideal(a))});
        detail::add_class_rows(rows, "madar", ctx, a, s, {{HyperClass::Quasi, true}});
    }

    // Z_6, x o y = {xy, 2xy, ..., 5xy}.
    {
        const RingContext ctx(build_zphi(6, {1, 2, 3, 4, 5}));
        const ElementSet s{1, 5};
        const ElementSet zero = ctx.zero_ideal();
        rows.push_back({"weak", "mcs=" + to_string(s), "is_mcs", "true", bool_str(is_mcs(ctx.ring(), s))});
        rows.push_back({"weak", "ideal=<0>", "equals", "{0}", to_string(zero)});
        detail::add_class_rows(rows, "weak", ctx, zero, s,
                               {{HyperClass::WeaklyQuasi, true}, {HyperClass::Quasi, false},
                                {HyperClass::StronglyQuasi, false}});
        const ClassResult q = classify(ctx, zero, s)[HyperClass::Quasi];
        rows.push_back({"weak", "ideal=<0> mcs=" + to_string(s), "quasi_counterexample", "(2,3)",
                        q.counterexample ? "(" + std::to_string(q.counterexample->first) + "," +
                                               std::to_string(q.counterexample->second) + ")"
                                         : "-"});
        detail::add_class_rows(rows, "weak-strongly", ctx, ElementSet{0, 3}, s, {{HyperClass::StronglyQuasi, true}});
        detail::add_class_rows(rows, "weak-strongly", ctx, ElementSet{0, 2, 4}, s, {{HyperClass::StronglyQuasi, true}});
    }

    // Z_5 with Phi = {1,2,3}.
    {
        const RingContext ctx(build_zphi(5, {1, 2, 3}));
        const ElementSet s{1, 3};
        rows.push_back({"haji", "mcs=" + to_string(s), "is_mcs", "true", bool_str(is_mcs(ctx.ring(), s))});
        detail::add_class_rows(rows, "haji", ctx, ctx.zero_ideal(), s,
                               {{HyperClass::StronglyQuasi, true}, {HyperClass::Quasi, true},
                                {HyperClass::WeaklyQuasi, true}});
        rows.push_back({"haji", "ring", "units", "{1,2,3,4}", to_string(units(ctx.ring()))});
    }

    const auto qnp = detail::quasi_not_primary();
    rep.notes.push_back("OUT-OF-SCOPE salami: polynomial hyperring over Z_Phi has an infinite carrier; finite analogue "
                        "(quasi S-primary but not primary): " + (qnp ? *qnp : std::string("none found")));
    rows.push_back({"salami-analogue", "zphi n<=8", "quasi_not_primary_exists", "true", bool_str(qnp.has_value())});

    const auto pnq = detail::product_not_quasi();
    rep.notes.push_back("OUT-OF-SCOPE cart222: integer hyperrings have infinite carriers; finite analogue "
                        "(quasi factors, disjoint MCSs, product not quasi): " + (pnq ? *pnq : std::string("none found")));
    rows.push_back({"cart222-analogue", "zphi n<=4 pairs", "product_not_quasi_exists", "true", bool_str(pnq.has_value())});
    return rep;
}

inline std::string render_examples(const ExampleReport& rep, bool machine = false)
{
    std::ostringstream os;
    for (const ExampleRow& r : rep.rows) {
        if (machine)
        {
            std::string subject = r.subject;
            std::replace(subject.begin(), subject.end(), ' ', ';');
            os << "example name=" << r.example << " subject=" << subject << " property=" << r.property
               << " expected=" << r.expected << " computed=" << r.computed << " match=" << bool_str(r.match()) << "\n";
        } else {
            os << r.example << " " << r.subject << " " << r.property << " expected=" << r.expected
               << " computed=" << r.computed << (r.match() ? "" : " MISMATCH") << "\n";
        }
    }
    for (const std::string& n : rep.notes)
        os << (machine ? "note text=" : "") << n << "\n";
    os << (machine ? "summary mismatches=" : "mismatches=") << rep.mismatches() << "\n";
    return os.str();
}

} // namespace mhr
