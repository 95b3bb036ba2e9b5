#include <gtest/gtest.h>

#include "mhr/mhr.hpp"
#include "oracle.hpp"

using namespace mhr;

namespace {

Hyperring madar() { return validate(madar_printed_tables()); }
Hyperring weak() { return build_zphi(6, {1, 2, 3, 4, 5}); }
Hyperring haji() { return build_zphi(5, {1, 2, 3}); }

} // namespace

TEST(ElementSet, BasicsAndOrdering)
{
    ElementSet s{3, 0, 5};
    EXPECT_EQ(to_string(s), "{0,3,5}");
    EXPECT_EQ(s.count(), 3u);
    EXPECT_EQ(s.first(), 0u);
    EXPECT_EQ(s.next(0), 3u);
    EXPECT_EQ(s.extent(), 6u);
    EXPECT_EQ(s.to_vector(), (std::vector<Element>{0, 3, 5}));
    EXPECT_TRUE(ElementSet({0, 3}).subset_of(s));
    EXPECT_FALSE(ElementSet({1}).intersects(s));
    EXPECT_EQ(ElementSet{}.first(), ElementSet::capacity);
    EXPECT_EQ(to_string(ElementSet{}), "{}");
    EXPECT_EQ(ElementSet::prefix(4), ElementSet({0, 1, 2, 3}));
    EXPECT_EQ(ElementSet::from_mask(0b1010), ElementSet({1, 3}));

    // smaller sets first, then by bitmask
    EXPECT_TRUE(size_then_mask_less(ElementSet{5}, ElementSet{0, 1}));
    EXPECT_TRUE(size_then_mask_less(ElementSet{0, 1}, ElementSet{0, 2}));
    EXPECT_FALSE(size_then_mask_less(ElementSet{0, 2}, ElementSet{0, 2}));
}

TEST(ElementSet, HighElementsBeyondFirstWord)
{
    if (ElementSet::capacity <= 64)
        GTEST_SKIP() << "single-word build";
    ElementSet s{1, 63, 64, ElementSet::capacity - 1};
    EXPECT_EQ(s.count(), 4u);
    EXPECT_EQ(s.next(63), 64u);
    EXPECT_EQ(s.extent(), ElementSet::capacity);
    EXPECT_EQ(s.to_vector().back(), ElementSet::capacity - 1);
}

TEST(Validate, TrivialRing)
{
    RawTables t;
    t.n = 1;
    t.add = {0};
    t.hyp = {ElementSet{0}};
    const Hyperring g = validate(t);
    EXPECT_EQ(g.size(), 1u);
    EXPECT_EQ(g.identities(), ElementSet{0});
    EXPECT_EQ(g.one(), 0u);
}

TEST(Validate, PrintedFourElementTable)
{
    const Hyperring g = madar();
    EXPECT_TRUE(ElementSet({1}).subset_of(g.identities()));
    EXPECT_EQ(g.identities(), ElementSet({1, 3}));
    EXPECT_EQ(madar_printed_tables(), zphi_tables(4, {1, 3}));
    EXPECT_FALSE(g.strongly_distributive());
}

TEST(Validate, BrokenCellNamesAxiom)
{
    RawTables t = madar_printed_tables();
    t.hyp_at(2, 2) = ElementSet{1};
    try {
        validate(t);
        FAIL() << "expected rejection";
    } catch (const AxiomViolation& e) {
        // naive checker: first failure is associativity
        EXPECT_EQ(e.axiom(), Axiom::Associative);
        EXPECT_EQ(e.code(), "E_AXIOM_II");
        EXPECT_FALSE(e.witness().empty());
    }
}

TEST(Validate, StructuralErrors)
{
    RawTables t = madar_printed_tables();
    t.add.pop_back();
    EXPECT_THROW(validate(t), PreconditionError);

    RawTables u = madar_printed_tables();
    u.hyp_at(1, 1) = ElementSet{7};
    EXPECT_THROW(validate(u), PreconditionError);

    RawTables e = madar_printed_tables();
    e.hyp_at(1, 2) = ElementSet{};
    e.hyp_at(2, 1) = ElementSet{};
    try {
        validate(e);
        FAIL();
    } catch (const AxiomViolation& v) {
        EXPECT_EQ(v.code(), "E_AXIOM_nonempty");
    }

    RawTables z;
    z.n = 0;
    try {
        validate(z);
        FAIL();
    } catch (const AxiomViolation& v) {
        EXPECT_EQ(v.axiom(), Axiom::AdditiveGroup);
    }
}

TEST(Validate, NoIdentity)
{
    // Z_4 with Phi = {2}: every product lands in {0,2}.
    EXPECT_THROW(build_zphi(4, {2}), AxiomViolation);
    try {
        build_zphi(4, {2});
    } catch (const AxiomViolation& v) {
        EXPECT_EQ(v.axiom(), Axiom::NoIdentity);
    }
}

TEST(Validate, Capacity)
{
    EXPECT_THROW(validate(zphi_tables(8, {1}), 4), CapacityError);
    EXPECT_THROW(direct_product(build_zphi(8, {1}), build_zphi(8, {1}), 32), CapacityError);
    try {
        validate(zphi_tables(8, {1}), 4);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "E_CAPACITY");
    }
}

TEST(ZPhi, MatchesDefiningFormula)
{
    for (auto [n, phi] : std::vector<std::pair<std::size_t, std::vector<Element>>>{
             {4, {1, 3}}, {6, {1, 2, 3, 4, 5}}, {5, {1, 2, 3}}, {8, {1, 3, 5}}}) {
        const Hyperring g = build_zphi(n, phi);
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) {
                ElementSet want;
                for (Element a : phi)
                    want.set(static_cast<Element>(x * a * y % n));
                EXPECT_EQ(g.hyp(x, y), want);
                EXPECT_EQ(g.add(x, y), (x + y) % n);
            }
    }
}

// Z_Phi always satisfies I-V; only the identity requirement can fail. The
// validator must agree with the naive checker on every (n, Phi).
TEST(ZPhi, ValidatorAgreesWithNaiveCheckerOnAllPhi)
{
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 7; ++n)
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<Element> phi;
            for (Element a = 0; a < n; ++a)
                if (mask >> a & 1)
                    phi.push_back(a);
            const RawTables t = zphi_tables(n, phi);
            const auto naive = oracle::first_violated_axiom(oracle::from_raw(t));
            const auto ours = find_axiom_violation(t);
            ASSERT_EQ(naive.has_value(), ours.has_value()) << "n=" << n << " mask=" << mask;
            if (naive) {
                EXPECT_EQ(*naive, "no-identity");
                EXPECT_EQ(ours->code(), "E_AXIOM_" + *naive);
            }
            ++checked;
        }
    EXPECT_EQ(checked, 247u);
}

TEST(SubsetAlgebra, Products)
{
    const Hyperring w = weak();
    EXPECT_EQ(subset_product(w, ElementSet{2}, ElementSet{3}), ElementSet{0});
    const Hyperring m = madar();
    EXPECT_EQ(subset_product(m, ElementSet{1}, ElementSet{1, 3}), ElementSet({1, 3}));
    for (Element x = 0; x < w.size(); ++x)
        EXPECT_TRUE(ElementSet{x}.subset_of(subset_product(w, ElementSet{x}, w.identities())));

    EXPECT_THROW(subset_product(w, ElementSet{}, ElementSet{1}), PreconditionError);
    EXPECT_THROW(subset_product(w, ElementSet{9}, ElementSet{1}), PreconditionError);
}

TEST(SubsetAlgebra, SumsAndPowers)
{
    const Hyperring m = madar();
    const Hyperring w = weak();
    EXPECT_EQ(subset_sum(m, ElementSet{0}, ElementSet{1, 2}), ElementSet({1, 2}));
    EXPECT_EQ(subset_sum(m, ElementSet{1}, ElementSet{1}), ElementSet{2});
    EXPECT_EQ(subset_sum(w, ElementSet{0, 3}, ElementSet{0, 3}), ElementSet({0, 3}));

    EXPECT_EQ(subset_power(m, ElementSet{2}, 2), ElementSet{0});
    EXPECT_EQ(subset_power(w, ElementSet{3}, 2), ElementSet({0, 3}));
    EXPECT_EQ(subset_power(w, ElementSet{2, 3}, 1), ElementSet({2, 3}));
    EXPECT_THROW(subset_power(w, ElementSet{3}, 0), PreconditionError);
}

TEST(SubsetAlgebra, AgreesWithOracleOnRandomSubsets)
{
    const Hyperring g = build_zphi(8, {1, 3, 5});
    const oracle::Table t = oracle::from_ring(g);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        ElementSet a = ElementSet::from_mask(rng() % 255 + 1);
        ElementSet b = ElementSet::from_mask(rng() % 255 + 1);
        EXPECT_EQ(oracle::from_bits(subset_product(g, a, b)), oracle::prod(t, oracle::from_bits(a), oracle::from_bits(b)));
        EXPECT_EQ(oracle::from_bits(subset_sum(g, a, b)), oracle::sum(t, oracle::from_bits(a), oracle::from_bits(b)));
        // commutativity and associativity of set products
        ElementSet c = ElementSet::from_mask(rng() % 255 + 1);
        EXPECT_EQ(subset_product(g, a, b), subset_product(g, b, a));
        EXPECT_EQ(subset_product(g, subset_product(g, a, b), c), subset_product(g, a, subset_product(g, b, c)));
    }
}

TEST(DirectProduct, TrivialAndEncoding)
{
    const Hyperring z1 = build_zphi(1, {0});
    EXPECT_EQ(direct_product(z1, z1).size(), 1u);

    const Hyperring w = weak();
    for (Element u = 0; u < 4; ++u)
        for (Element v = 0; v < 6; ++v) {
            const Element p = encode_pair(w, u, v);
            EXPECT_EQ(p, u * 6 + v);
            EXPECT_EQ(decode_pair(w, p), std::make_pair(u, v));
        }
}

TEST(DirectProduct, FourTimesSix)
{
    const Hyperring m = madar();
    const Hyperring w = weak();
    const Hyperring p = direct_product(m, w);
    EXPECT_EQ(p.size(), 24u);
    for (Element a = 0; a < 24; ++a)
        for (Element b = 0; b < 24; ++b) {
            auto [u1, v1] = decode_pair(w, a);
            auto [u2, v2] = decode_pair(w, b);
            EXPECT_EQ(p.hyp(a, b), product_set(w, m.hyp(u1, u2), w.hyp(v1, v2)));
            EXPECT_EQ(p.add(a, b), encode_pair(w, m.add(u1, u2), w.add(v1, v2)));
        }
    EXPECT_EQ(p.identities(), product_set(w, m.identities(), w.identities()));
}

TEST(Quotient, Examples)
{
    const Hyperring w = weak();
    const Quotient all = quotient_ring(w, w.carrier());
    EXPECT_EQ(all.ring.size(), 1u);

    const Quotient q = quotient_ring(w, ElementSet{0, 3});
    EXPECT_EQ(q.ring.size(), 3u);
    EXPECT_EQ(q.projection.map, (std::vector<Element>{0, 1, 2, 0, 1, 2}));
    EXPECT_EQ(q.representatives, (std::vector<Element>{0, 1, 2}));
    EXPECT_EQ(q.ring.hyp(1, 1), ElementSet({0, 1, 2}));
    EXPECT_EQ(q.ring.hyp(1, 0), ElementSet{0});
    EXPECT_EQ(q.ring.identities(), ElementSet({1, 2}));
    EXPECT_TRUE(q.projection.surjective);
    EXPECT_EQ(q.projection.kernel, ElementSet({0, 3}));

    // <0> = {0}: cosets are singletons and the tables come back unchanged
    const Hyperring h = haji();
    EXPECT_EQ(quotient_ring(h, ElementSet{0}).ring.raw(), h.raw());

    EXPECT_THROW(quotient_ring(w, ElementSet{0, 1}), PreconditionError);
}

TEST(Units, Examples)
{
    EXPECT_EQ(units(haji()), ElementSet({1, 2, 3, 4}));
    EXPECT_EQ(units(weak()), ElementSet({1, 5}));
    for (const RingSpec& s : zphi_family(7, 3)) {
        const Hyperring g = build_ring(s);
        EXPECT_TRUE(g.identities().subset_of(units(g)));
    }
}

TEST(StructureFlags, HyperfieldExample)
{
    const StructureFlags f = structure_flags(haji());
    EXPECT_TRUE(f.is_hyperfield);
    EXPECT_TRUE(f.is_hyperdomain);
    EXPECT_FALSE(structure_flags(weak()).is_hyperdomain);
    EXPECT_TRUE(structure_flags(build_zphi(5, {1})).is_strongly_distributive);
}
