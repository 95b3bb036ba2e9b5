#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mhr/mhr.hpp"

using namespace mhr;

namespace {

std::string shipped()
{
    std::ifstream in(std::string(MHR_SOURCE_DIR) + "/data/paper_examples.mhr");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Parses text that must be rejected; returns the error.
ParseError reject(const std::string& text)
{
    try {
        parse_workspace(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "accepted:\n" << text;
    return ParseError("none", 0, 0, "");
}

} // namespace

TEST(Workspace, ShippedFileLoads)
{
    const Workspace ws = parse_workspace(shipped());
    EXPECT_EQ(ws.rings.size(), 5u);
    EXPECT_EQ(ws.ideals.size(), 5u);
    EXPECT_EQ(ws.mcs.size(), 3u);
    EXPECT_EQ(ws.homs.size(), 1u);
    EXPECT_EQ(ws.ring("madar")->ref.ctx->ring().raw(), madar_printed_tables());
    EXPECT_EQ(ws.ring("weak_mod3")->ref.ctx->ring().size(), 3u);
    EXPECT_EQ(ws.ring("madar_x_haji")->ref.ctx->ring().size(), 20u);
    EXPECT_EQ(ws.ideal("weak_A2")->set, ElementSet({0, 2, 4}));
    EXPECT_EQ(ws.mcs_set("haji_S")->ring, "haji");
    EXPECT_EQ(ws.hom("weak_to_mod3")->hom.kernel, ElementSet({0, 3}));
    EXPECT_FALSE(ws.ring("nope"));
}

TEST(Workspace, EmptyAndCommentOnly)
{
    const Workspace a = parse_workspace("");
    EXPECT_TRUE(a.rings.empty());
    EXPECT_TRUE(a.instances.empty());
    EXPECT_TRUE(parse_workspace("# nothing here\n\n   # still nothing").rings.empty());
}

TEST(Workspace, SeparatorsAndWhitespace)
{
    const Workspace ws = parse_workspace("ring g{kind=zphi;n=4,phi={3,1,1}}ideal a in g={2,0}");
    EXPECT_EQ(ws.ring("g")->ref.spec->phi, (std::vector<Element>{1, 3}));
    EXPECT_EQ(ws.ideal("a")->set, ElementSet({0, 2}));
}

TEST(Workspace, RoundTrip)
{
    const Workspace ws = parse_workspace(shipped());
    const std::string text = render_workspace(ws);
    const Workspace back = parse_workspace(text);
    EXPECT_EQ(render_workspace(back), text);
    ASSERT_EQ(back.rings.size(), ws.rings.size());
    for (std::size_t i = 0; i < ws.rings.size(); ++i) {
        EXPECT_EQ(back.rings[i].name, ws.rings[i].name);
        EXPECT_EQ(back.rings[i].ref.ctx->ring(), ws.rings[i].ref.ctx->ring());
    }
    for (std::size_t i = 0; i < ws.ideals.size(); ++i)
        EXPECT_EQ(back.ideals[i].set, ws.ideals[i].set);
    EXPECT_EQ(back.homs[0].hom, ws.homs[0].hom);
}

TEST(Workspace, InstancesResolve)
{
    const std::string text = shipped() + R"(
instance first {
  check = T11
  rings = [madar]
  ideals = [madar_A]
  mcs = [madar_S]
}
instance mutated { check = T24  mutation = weakly-always-holds  rings = [weak]  ideals = [weak_zero]  mcs = [weak_S] }
instance proj {
  check = T_QUOT  rings = [weak, weak_mod3]  hom = weak_to_mod3
  ideals = [weak_A1, weak_A1]  mcs = [weak_S]
}
)";
    const Workspace ws = parse_workspace(text);
    ASSERT_EQ(ws.instances.size(), 3u);
    EXPECT_EQ(ws.instance("mutated")->mutation, Mutation::WeaklyAlwaysHolds);
    const Instance first = resolve_instance(ws, *ws.instance("first"));
    EXPECT_EQ(run_check(CheckId::T11, first), CheckOutcome::pass());
    const Instance proj = resolve_instance(ws, *ws.instance("proj"));
    ASSERT_TRUE(proj.hom);
    EXPECT_EQ(proj.hom->src, 0u);
    EXPECT_EQ(proj.hom->dst, 1u);
    EXPECT_NE(run_check(CheckId::T_QUOT, proj).status, Status::Fail);
    EXPECT_EQ(parse_workspace(render_workspace(ws)).instances.size(), 3u);
}

TEST(Workspace, UnnamedOperandsGetNames)
{
    Workspace ws;
    const RingRef l = make_ring_ref(RingSpec::zphi(2, {1}));
    const RingRef r = make_ring_ref(RingSpec::zphi(3, {1, 2}));
    ws.rings.push_back({"p", make_ring_ref(RingSpec::product(l.spec, r.spec))});
    const std::string text = render_workspace(ws);
    EXPECT_NE(text.find("ring ring0"), std::string::npos) << text;
    EXPECT_NE(text.find("ring ring1"), std::string::npos) << text;
    EXPECT_EQ(parse_workspace(text).ring("p")->ref.ctx->ring().size(), 6u);
}

TEST(Diagnostics, UnknownRingReference)
{
    const ParseError e = reject("ring g { kind = zphi n = 4 phi = {1} }\n\nideal a in h = {0}\n");
    EXPECT_EQ(e.code(), "E_REFERENCE");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 12u);
    EXPECT_NE(std::string(e.what()).find("3:12: E_REFERENCE"), std::string::npos);
}

TEST(Diagnostics, Codes)
{
    const std::string g = "ring g { kind = zphi n = 6 phi = {1,2,3,4,5} }\n";
    EXPECT_EQ(reject("ring g { kind = zphi n = 4 phi = {1} ").code(), "E_SYNTAX");
    EXPECT_EQ(reject("ring g { kind = zphi n = 4 phi = {1} colour = 3 }").code(), "E_SYNTAX");
    EXPECT_EQ(reject("ring g { kind = lattice }").code(), "E_SYNTAX");
    EXPECT_EQ(reject("ring g { kind = zphi n = 4 phi = {1} } @").code(), "E_SYNTAX");
    EXPECT_EQ(reject("widget w").code(), "E_SYNTAX");
    EXPECT_EQ(reject(g + g).code(), "E_DUPLICATE");
    EXPECT_EQ(reject(g + "ideal g in g = {0}").code(), "E_DUPLICATE");
    EXPECT_EQ(reject(g + "ideal a in g = {0,9}").code(), "E_RANGE");
    EXPECT_EQ(reject("ring g { kind = zphi n = 4 phi = {7} }").code(), "E_RANGE");
    EXPECT_EQ(reject(g + "ideal a in g = {0,2}").code(), "E_NOT_IDEAL");
    EXPECT_EQ(reject(g + "ring q { kind = quotient base = g by = {0,1} }").code(), "E_NOT_IDEAL");
    EXPECT_EQ(reject(g + "mcs s in g = {2,4}").code(), "E_NOT_MCS");
    EXPECT_EQ(reject(g + "mcs s in g = {}").code(), "E_NOT_MCS");
    EXPECT_EQ(reject("ring g { kind = zphi n = 100 phi = {1} }").code(), "E_CAPACITY");
    EXPECT_EQ(reject("ring g { kind = zphi n = 4 phi = {2} }").code(), "E_AXIOM_no-identity");
    EXPECT_EQ(reject(g + "hom h : g -> g = [0,0,0,0,0,0]").code(), "E_HOM");
    EXPECT_EQ(reject(g + "instance i { check = T99 rings = [g] }").code(), "E_UNKNOWN_CHECK");
    EXPECT_EQ(reject(g + "instance i { check = T11 mutation = bogus rings = [g] }").code(), "E_SYNTAX");
    EXPECT_EQ(reject(g + "ring h { kind = zphi n = 5 phi = {1} } ideal a in h = {0}\n"
                         "instance i { check = T11 rings = [g] ideals = [a] }")
                  .code(),
              "E_REFERENCE");
}

TEST(Diagnostics, AxiomFailureNamesAxiomAndPosition)
{
    const std::string text = R"(# broken
ring bad {
  kind = tables
  n = 2
  add = [[0,1],[1,0]]
  hyp = [[{0},{0}],[{1},{1}]]
}
)";
    const ParseError e = reject(text);
    EXPECT_EQ(e.code(), "E_AXIOM_V");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("axiom V"), std::string::npos);
}

TEST(Diagnostics, TableShape)
{
    const ParseError e = reject("ring t { kind = tables n = 2 add = [[0,1]] hyp = [[{0},{0}],[{0},{1}]] }");
    EXPECT_EQ(e.code(), "E_SYNTAX");
    EXPECT_EQ(e.line(), 1u);
}

TEST(Tokens, HyphenatedNamesAndArrows)
{
    std::vector<std::string> text;
    for (const auto& t : detail::tokenize("a-b -> c->d"))
        text.push_back(t.text);
    EXPECT_EQ(text, (std::vector<std::string>{"a-b", "->", "c", "->", "d", ""}));
    EXPECT_THROW(detail::tokenize("x-"), ParseError);
}
