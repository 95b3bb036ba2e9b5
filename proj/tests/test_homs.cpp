#include <gtest/gtest.h>

#include "mhr/mhr.hpp"

using namespace mhr;

namespace {

Hyperring madar() { return validate(madar_printed_tables()); }
Hyperring weak() { return build_zphi(6, {1, 2, 3, 4, 5}); }
Hyperring haji() { return build_zphi(5, {1, 2, 3}); }

std::vector<Hyperring> small_rings()
{
    std::vector<Hyperring> out;
    for (const RingSpec& s : zphi_family(8, 2))
        out.push_back(build_ring(s));
    return out;
}

} // namespace

TEST(Homs, Identity)
{
    const Hyperring w = weak();
    const GoodHom id = identity_hom(w);
    EXPECT_EQ(id.kernel, ElementSet{0});
    EXPECT_TRUE(id.surjective);
    EXPECT_EQ(id.image(ElementSet{2, 3}), ElementSet({2, 3}));
    EXPECT_EQ(id.preimage(ElementSet{2, 3}), ElementSet({2, 3}));
}

TEST(Homs, ZeroMapFailsIdentityCondition)
{
    const Hyperring w = weak();
    const std::vector<Element> zero(6, 0);
    try {
        validate_hom(w, w, zero);
        FAIL();
    } catch (const HomViolation& e) {
        EXPECT_EQ(e.condition(), "identity");
        EXPECT_EQ(e.code(), "E_HOM");
    }
    const GoodHom lit = validate_hom(w, w, zero, IdentityMode::Literal);
    EXPECT_EQ(lit.kernel, w.carrier());
    EXPECT_FALSE(lit.surjective);
}

TEST(Homs, Rejections)
{
    const Hyperring w = weak();
    try {
        validate_hom(w, w, {0, 1, 2});
        FAIL();
    } catch (const HomViolation& e) {
        EXPECT_EQ(e.condition(), "totality");
    }
    try {
        validate_hom(w, w, {0, 1, 2, 3, 4, 9});
        FAIL();
    } catch (const HomViolation& e) {
        EXPECT_EQ(e.condition(), "totality");
    }
    try {
        validate_hom(w, w, {0, 2, 1, 3, 4, 5});
        FAIL();
    } catch (const HomViolation& e) {
        EXPECT_EQ(e.condition(), "additive");
    }
    // x -> 2x on Z_4 is additive but sends 1 o 1 = {1,3} to {2} while 2 o 2 = {0}
    const Hyperring m = madar();
    try {
        validate_hom(m, m, {0, 2, 0, 2});
        FAIL();
    } catch (const HomViolation& e) {
        EXPECT_EQ(e.condition(), "multiplicative");
    }
    // x -> 5x is an automorphism: Phi = {1..5} is closed under negation
    const GoodHom neg = validate_hom(w, w, {0, 5, 4, 3, 2, 1});
    EXPECT_TRUE(neg.surjective);
}

TEST(Homs, QuotientProjection)
{
    const Hyperring w = weak();
    const Quotient q = quotient_ring(w, ElementSet{0, 3});
    const GoodHom& p = q.projection;
    EXPECT_EQ(preimage_ideal(w, q.ring, p, ElementSet{0}), ElementSet({0, 3}));
    EXPECT_EQ(preimage_ideal(w, q.ring, p, q.ring.carrier()), w.carrier());
    EXPECT_EQ(image_ideal(w, q.ring, p, ElementSet{0, 3}), ElementSet{0});
    EXPECT_EQ(image_ideal(w, q.ring, p, w.carrier()), q.ring.carrier());
    EXPECT_THROW(image_ideal(w, q.ring, p, ElementSet{0, 2, 4}), PreconditionError);
    EXPECT_THROW(image_ideal(w, q.ring, p, ElementSet{0, 1}), PreconditionError);

    const MCSet img = image_mcs(q.ring, p, ElementSet{1, 5});
    EXPECT_EQ(img.set, ElementSet({1, 2}));
    EXPECT_TRUE(is_mcs(q.ring, img.set));
    EXPECT_EQ(image_mcs(q.ring, p, ElementSet{1}).set, ElementSet{1});
    EXPECT_THROW(image_mcs(q.ring, p, ElementSet{1, 3}), PreconditionError);
}

TEST(Homs, ImageNeedsSurjection)
{
    const Hyperring w = weak();
    const GoodHom lit = validate_hom(w, w, std::vector<Element>(6, 0), IdentityMode::Literal);
    EXPECT_THROW(image_ideal(w, w, lit, w.carrier()), PreconditionError);
}

TEST(Homs, ProductProjections)
{
    const Hyperring m = madar(), h = haji();
    const Hyperring p = direct_product(m, h);
    const GoodHom l = product_projection(m, h, p, 0);
    const GoodHom r = product_projection(m, h, p, 1);
    EXPECT_TRUE(l.surjective);
    EXPECT_TRUE(r.surjective);
    EXPECT_EQ(l.kernel, product_set(h, ElementSet{0}, h.carrier()));
    EXPECT_EQ(r.kernel, product_set(h, m.carrier(), ElementSet{0}));
    EXPECT_EQ(preimage_ideal(p, m, l, ElementSet{0, 2}), product_set(h, ElementSet{0, 2}, h.carrier()));
}

TEST(Homs, QuotientsOfCorpusAreValid)
{
    std::size_t quotients = 0;
    for (const Hyperring& g : small_rings()) {
        const RingContext ctx(g);
        for (const ElementSet& b : ctx.ideals()) {
            const Quotient q = quotient_ring(g, b);
            EXPECT_TRUE(q.projection.surjective);
            EXPECT_EQ(q.projection.kernel, b);
            EXPECT_EQ(q.projection.map[0], 0u);
            EXPECT_EQ(q.representatives.size(), q.ring.size());
            ++quotients;
        }
    }
    EXPECT_GT(quotients, 50u);
}

TEST(Homs, PreimageProperties)
{
    for (const Hyperring& g : small_rings()) {
        const RingContext src(g);
        for (const ElementSet& b : src.ideals()) {
            const Quotient q = quotient_ring(g, b);
            const RingContext dst(q.ring);
            const GoodHom& h = q.projection;
            for (const ElementSet& a2 : dst.ideals()) {
                const ElementSet pre = preimage_ideal(g, q.ring, h, a2);
                EXPECT_TRUE(src.is_ideal(pre));
                EXPECT_TRUE(h.preimage(dst.radical(a2)).subset_of(src.radical(pre)));
                if (dst.is_c(a2)) {
                    EXPECT_TRUE(src.is_c(pre)) << to_string(a2) << " over " << to_string(b);
                }
                for (const ElementSet& c2 : dst.ideals())
                    EXPECT_EQ(h.preimage(a2 & c2), pre & h.preimage(c2));
                // transport back and forth over a surjection with kernel inside
                EXPECT_EQ(image_ideal(g, q.ring, h, pre), a2);
            }
        }
    }
}
