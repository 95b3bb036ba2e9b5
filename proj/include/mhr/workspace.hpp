#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mhr/classify.hpp"
#include "mhr/conformance.hpp"
#include "mhr/corpus.hpp"
#include "mhr/element_set.hpp"
#include "mhr/error.hpp"
#include "mhr/homs.hpp"
#include "mhr/hyperring.hpp"
#include "mhr/ideals.hpp"
#include "mhr/ring_spec.hpp"

// Text format for rings, hyperideals, MCSs, homomorphisms and conformance
// instances:
//
//   # comment
//   ring madar { kind = tables  n = 4
//                add = [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]
//                hyp = [[{0},{0},{0},{0}], ...] }
//   ring weak  { kind = zphi  n = 6  phi = {1,2,3,4,5} }
//   ring both  { kind = product  left = madar  right = weak }
//   ring bar   { kind = quotient  base = weak  by = {0,3} }
//   ideal A in madar = {0,2}
//   mcs S in madar = {1,3}
//   hom h : weak -> bar = [0,1,2,0,1,2]
//   instance x { check = T11  rings = [madar]  ideals = [A]  mcs = [S] }
//
// Fields may be separated by whitespace, ',' or ';'.

namespace mhr {

/// Load error with a source position. what() is "line:col: CODE: message".
class ParseError : public Error
{
    std::size_t line_;
    std::size_t col_;

public:
    ParseError(const std::string& code, std::size_t line, std::size_t col, const std::string& msg)
        : Error(code, std::to_string(line) + ":" + std::to_string(col) + ": " + code + ": " + msg), line_(line),
          col_(col)
    {
    }
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return col_; }
};

struct NamedRing
{
    std::string name;
    RingRef ref;
};

struct NamedSet
{
    std::string name;
    std::string ring;
    ElementSet set;
};

struct NamedHom
{
    std::string name;
    std::string src;
    std::string dst;
    GoodHom hom;
};

struct NamedInstance
{
    std::string name;
    CheckId check = CheckId::T11;
    Mutation mutation = Mutation::None;
    std::vector<std::string> rings;
    std::vector<std::string> ideals;
    std::vector<std::string> mcs;
    std::optional<std::string> hom;
};

struct Workspace
{
    std::vector<NamedRing> rings;
    std::vector<NamedSet> ideals;
    std::vector<NamedSet> mcs;
    std::vector<NamedHom> homs;
    std::vector<NamedInstance> instances;

    template<class T>
    static const T* lookup(const std::vector<T>& v, std::string_view name)
    {
        auto it = std::find_if(v.begin(), v.end(), [&](const T& x) { return x.name == name; });
        return it == v.end() ? nullptr : &*it;
    }
    [[nodiscard]] const NamedRing* ring(std::string_view n) const { return lookup(rings, n); }
    [[nodiscard]] const NamedSet* ideal(std::string_view n) const { return lookup(ideals, n); }
    [[nodiscard]] const NamedSet* mcs_set(std::string_view n) const { return lookup(mcs, n); }
    [[nodiscard]] const NamedHom* hom(std::string_view n) const { return lookup(homs, n); }
    [[nodiscard]] const NamedInstance* instance(std::string_view n) const { return lookup(instances, n); }
};

namespace detail {

struct Token
{
    enum class Kind { Name, Int, Symbol, End } kind = Kind::End;
    std::string text;
    std::size_t line = 1;
    std::size_t col = 1;
};

inline std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        std::size_t j = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            auto word = [&](std::size_t k) {
                return k < src.size() && (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '_' || src[k] == '.');
            };
            // '-' joins words (mutation names) but never starts "->"
            while (word(j) || (j < src.size() && src[j] == '-' && word(j + 1)))
                ++j;
            t.kind = Token::Kind::Name;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            t.kind = Token::Kind::Int;
        } else if (src.substr(i, 2) == "->") {
            j = i + 2;
            t.kind = Token::Kind::Symbol;
        } else if (std::string_view("{}[]=,;:").find(c) != std::string_view::npos) {
            j = i + 1;
            t.kind = Token::Kind::Symbol;
        } else {
            throw ParseError("E_SYNTAX", line, col, std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(src.substr(i, j - i));
        advance(j - i);
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

/// Field value: integer, name, {set}, or [list].
struct Value
{
    enum class Kind { Int, Name, Set, List } kind = Kind::Int;
    std::size_t number = 0;
    std::string name;
    std::vector<Element> elems;
    std::vector<Value> items;
    std::size_t line = 0;
    std::size_t col = 0;
};

struct Field
{
    std::string key;
    Value value;
    std::size_t line = 0;
    std::size_t col = 0;
};

class Parser
{
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t capacity_;
    Workspace ws_;

    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] static void fail(const std::string& code, const Token& t, const std::string& msg)
    {
        throw ParseError(code, t.line, t.col, msg);
    }
    [[noreturn]] static void fail(const std::string& code, const Value& v, const std::string& msg)
    {
        throw ParseError(code, v.line, v.col, msg);
    }

    static std::string describe(const Token& t)
    {
        return t.kind == Token::Kind::End ? std::string("end of input") : "'" + t.text + "'";
    }

    bool accept(std::string_view sym)
    {
        if (peek().kind == Token::Kind::Symbol && peek().text == sym) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(std::string_view sym)
    {
        if (!accept(sym))
            fail("E_SYNTAX", peek(), "expected '" + std::string(sym) + "', found " + describe(peek()));
    }
    Token expect_name()
    {
        if (peek().kind != Token::Kind::Name)
            fail("E_SYNTAX", peek(), "expected a name, found " + describe(peek()));
        return take();
    }
    Element parse_element()
    {
        const Token& t = peek();
        if (t.kind != Token::Kind::Int)
            fail("E_SYNTAX", t, "expected an element index, found " + describe(t));
        if (t.text.size() > 9)
            fail("E_SYNTAX", t, "element index " + t.text + " out of range");
        take();
        return static_cast<Element>(std::stoul(t.text));
    }

    std::vector<Element> parse_set_elems()
    {
        expect("{");
        std::vector<Element> out;
        if (accept("}"))
            return out;
        do
            out.push_back(parse_element());
        while (accept(","));
        expect("}");
        return out;
    }

    Value parse_value()
    {
        Value v;
        const Token& t = peek();
        v.line = t.line;
        v.col = t.col;
        if (t.kind == Token::Kind::Int) {
            v.kind = Value::Kind::Int;
            v.number = parse_element();
        } else if (t.kind == Token::Kind::Name) {
            v.kind = Value::Kind::Name;
            v.name = take().text;
        } else if (t.kind == Token::Kind::Symbol && t.text == "{") {
            v.kind = Value::Kind::Set;
            v.elems = parse_set_elems();
        } else if (t.kind == Token::Kind::Symbol && t.text == "[") {
            take();
            v.kind = Value::Kind::List;
            if (!accept("]")) {
                do
                    v.items.push_back(parse_value());
                while (accept(","));
                expect("]");
            }
        } else {
            fail("E_SYNTAX", t, "expected a value, found " + describe(t));
        }
        return v;
    }

    std::vector<Field> parse_block()
    {
        expect("{");
        std::vector<Field> fields;
        while (!accept("}")) {
            const Token key = expect_name();
            for (const Field& f : fields)
                if (f.key == key.text)
                    fail("E_SYNTAX", key, "field '" + key.text + "' given twice");
            expect("=");
            Field f;
            f.key = key.text;
            f.line = key.line;
            f.col = key.col;
            f.value = parse_value();
            fields.push_back(std::move(f));
            while (accept(",") || accept(";")) {
            }
        }
        return fields;
    }

    void claim_name(const Token& t)
    {
        if (ws_.ring(t.text) || ws_.ideal(t.text) || ws_.mcs_set(t.text) || ws_.hom(t.text) || ws_.instance(t.text))
            fail("E_DUPLICATE", t, "name '" + t.text + "' already defined");
    }

    // -- field helpers ----------------------------------------------------

    struct Fields
    {
        const std::vector<Field>& fields;
        const Token& where;

        const Field* find(std::string_view k) const
        {
            for (const Field& f : fields)
                if (f.key == k)
                    return &f;
            return nullptr;
        }
        const Value& need(std::string_view k) const
        {
            if (const Field* f = find(k))
                return f->value;
            fail("E_SYNTAX", where, "missing field '" + std::string(k) + "'");
        }
        void only(std::initializer_list<std::string_view> allowed) const
        {
            for (const Field& f : fields)
                if (std::find(allowed.begin(), allowed.end(), f.key) == allowed.end())
                    throw ParseError("E_SYNTAX", f.line, f.col, "unknown field '" + f.key + "'");
        }
    };

    static std::size_t as_int(const Value& v)
    {
        if (v.kind != Value::Kind::Int)
            fail("E_SYNTAX", v, "expected an integer");
        return v.number;
    }
    static const std::string& as_name(const Value& v)
    {
        if (v.kind != Value::Kind::Name)
            fail("E_SYNTAX", v, "expected a name");
        return v.name;
    }
    static std::vector<Element> as_elems(const Value& v)
    {
        if (v.kind == Value::Kind::Set)
            return v.elems;
        if (v.kind == Value::Kind::List) {
            std::vector<Element> out;
            for (const Value& x : v.items)
                out.push_back(static_cast<Element>(as_int(x)));
            return out;
        }
        fail("E_SYNTAX", v, "expected {elements} or [elements]");
    }
    static std::vector<std::string> as_names(const Value& v)
    {
        if (v.kind != Value::Kind::List)
            fail("E_SYNTAX", v, "expected [names]");
        std::vector<std::string> out;
        for (const Value& x : v.items)
            out.push_back(as_name(x));
        return out;
    }

    ElementSet to_set(const std::vector<Element>& elems, std::size_t n, const Value& where) const
    {
        ElementSet s;
        for (Element e : elems) {
            if (e >= n)
                fail("E_RANGE", where, "element " + std::to_string(e) + " outside carrier of size " + std::to_string(n));
            s.set(e);
        }
        return s;
    }

    const NamedRing& ring_ref(const Value& v) const
    {
        const std::string& name = as_name(v);
        const NamedRing* r = ws_.ring(name);
        if (!r)
            fail("E_REFERENCE", v, "unknown ring '" + name + "'");
        return *r;
    }

    // -- declarations -----------------------------------------------------

    void parse_ring()
    {
        const Token name = expect_name();
        claim_name(name);
        const std::vector<Field> fields = parse_block();
        const Fields f{fields, name};
        const Value& kind_v = f.need("kind");
        const std::string& kind = as_name(kind_v);

        RingSpec spec;
        if (kind == "tables") {
            f.only({"kind", "n", "add", "hyp"});
            const std::size_t n = as_int(f.need("n"));
            if (n == 0)
                fail("E_SYNTAX", f.need("n"), "carrier size must be at least 1");
            if (n > capacity_)
                fail("E_CAPACITY", f.need("n"), "carrier size " + std::to_string(n) + " exceeds capacity " +
                                                     std::to_string(capacity_));
            RawTables t;
            t.n = n;
            const Value& add = f.need("add");
            const Value& hyp = f.need("hyp");
            auto rows = [&](const Value& v) -> const std::vector<Value>& {
                if (v.kind != Value::Kind::List || v.items.size() != n)
                    fail("E_SYNTAX", v, "expected " + std::to_string(n) + " rows");
                for (const Value& r : v.items)
                    if (r.kind != Value::Kind::List || r.items.size() != n)
                        fail("E_SYNTAX", r, "expected a row of " + std::to_string(n) + " entries");
                return v.items;
            };
            for (const Value& r : rows(add))
                for (const Value& x : r.items) {
                    const std::size_t e = as_int(x);
                    if (e >= n)
                        fail("E_RANGE", x, "entry " + std::to_string(e) + " outside carrier");
                    t.add.push_back(static_cast<Element>(e));
                }
            for (const Value& r : rows(hyp))
                for (const Value& x : r.items) {
                    if (x.kind != Value::Kind::Set)
                        fail("E_SYNTAX", x, "expected a set {..}");
                    t.hyp.push_back(to_set(x.elems, n, x));
                }
            spec = RingSpec::from_tables(std::move(t));
        } else if (kind == "zphi") {
            f.only({"kind", "n", "phi"});
            const std::size_t n = as_int(f.need("n"));
            if (n == 0)
                fail("E_SYNTAX", f.need("n"), "modulus must be at least 1");
            if (n > capacity_)
                fail("E_CAPACITY", f.need("n"), "carrier size " + std::to_string(n) + " exceeds capacity " +
                                                     std::to_string(capacity_));
            const Value& pv = f.need("phi");
            std::vector<Element> phi = as_elems(pv);
            if (phi.empty())
                fail("E_SYNTAX", pv, "phi must be nonempty");
            for (Element a : phi)
                if (a >= n)
                    fail("E_RANGE", pv, "residue " + std::to_string(a) + " outside [0, " + std::to_string(n) + ")");
            std::sort(phi.begin(), phi.end());
            phi.erase(std::unique(phi.begin(), phi.end()), phi.end());
            spec = RingSpec::zphi(n, std::move(phi));
        } else if (kind == "product") {
            f.only({"kind", "left", "right"});
            const NamedRing& l = ring_ref(f.need("left"));
            const NamedRing& r = ring_ref(f.need("right"));
            const std::size_t n = l.ref.ctx->ring().size() * r.ref.ctx->ring().size();
            if (n > capacity_)
                fail("E_CAPACITY", name, "product carrier " + std::to_string(n) + " exceeds capacity " +
                                             std::to_string(capacity_));
            spec = RingSpec::product(l.ref.spec, r.ref.spec);
        } else if (kind == "quotient") {
            f.only({"kind", "base", "by"});
            const NamedRing& b = ring_ref(f.need("base"));
            const Value& byv = f.need("by");
            const Hyperring& g = b.ref.ctx->ring();
            const ElementSet by = to_set(as_elems(byv), g.size(), byv);
            if (!b.ref.ctx->is_ideal(by))
                fail("E_NOT_IDEAL", byv, to_string(by) + " is not a hyperideal of '" + b.name + "'");
            spec = RingSpec::quotient(b.ref.spec, by);
        } else {
            fail("E_SYNTAX", kind_v, "unknown ring kind '" + kind + "'");
        }

        try {
            ws_.rings.push_back({name.text, make_ring_ref(std::move(spec), {}, capacity_)});
        } catch (const Error& e) {
            fail(e.code(), name, "ring '" + name.text + "': " + e.what());
        }
    }

    void parse_subset(bool is_ideal)
    {
        const Token name = expect_name();
        claim_name(name);
        const Token in = expect_name();
        if (in.text != "in")
            fail("E_SYNTAX", in, "expected 'in'");
        const Value rv = parse_value();
        const NamedRing& r = ring_ref(rv);
        expect("=");
        const Value sv = parse_value();
        if (sv.kind != Value::Kind::Set)
            fail("E_SYNTAX", sv, "expected a set {..}");
        const ElementSet s = to_set(sv.elems, r.ref.ctx->ring().size(), sv);
        if (is_ideal) {
            if (!r.ref.ctx->is_ideal(s))
                fail("E_NOT_IDEAL", sv, to_string(s) + " is not a hyperideal of '" + r.name + "'");
            ws_.ideals.push_back({name.text, r.name, s});
        } else {
            if (s.empty())
                fail("E_NOT_MCS", sv, "an MCS cannot be empty");
            if (auto v = find_mcs_violation(r.ref.ctx->ring(), s)) {
                if (v->missing_identity)
                    fail("E_NOT_MCS", sv, to_string(s) + " contains no identity element");
                fail("E_NOT_MCS", sv,
                     to_string(s) + ": " + std::to_string(v->s1) + " o " + std::to_string(v->s2) + " misses the set");
            }
            ws_.mcs.push_back({name.text, r.name, s});
        }
    }

    void parse_hom()
    {
        const Token name = expect_name();
        claim_name(name);
        expect(":");
        const NamedRing& src = ring_ref(parse_value());
        expect("->");
        const NamedRing& dst = ring_ref(parse_value());
        expect("=");
        const Value mv = parse_value();
        if (mv.kind != Value::Kind::List)
            fail("E_SYNTAX", mv, "expected [images]");
        std::vector<Element> map = as_elems(mv);
        try {
            ws_.homs.push_back({name.text, src.name, dst.name,
                                validate_hom(src.ref.ctx->ring(), dst.ref.ctx->ring(), std::move(map))});
        } catch (const Error& e) {
            fail(e.code(), mv, e.what());
        }
    }

    void parse_instance()
    {
        const Token name = expect_name();
        claim_name(name);
        const std::vector<Field> fields = parse_block();
        const Fields f{fields, name};
        f.only({"check", "mutation", "rings", "ideals", "mcs", "hom"});
        NamedInstance inst;
        inst.name = name.text;
        const Value& cv = f.need("check");
        auto id = parse_check_id(as_name(cv));
        if (!id)
            fail("E_UNKNOWN_CHECK", cv, "unknown check id '" + cv.name + "'");
        inst.check = *id;
        if (const Field* m = f.find("mutation")) {
            auto mut = parse_mutation(as_name(m->value));
            if (!mut)
                fail("E_SYNTAX", m->value, "unknown mutation '" + m->value.name + "'");
            inst.mutation = *mut;
        }
        const Value& rv = f.need("rings");
        for (const Value& r : rv.items)
            ring_ref(r);
        inst.rings = as_names(rv);
        if (inst.rings.empty())
            fail("E_SYNTAX", rv, "an instance needs at least one ring");
        auto members = [&](const char* key, bool ideal) {
            std::vector<std::string> out;
            const Field* fld = f.find(key);
            if (!fld)
                return out;
            for (const Value& v : fld->value.items) {
                const std::string& n = as_name(v);
                const NamedSet* s = ideal ? ws_.ideal(n) : ws_.mcs_set(n);
                if (!s)
                    fail("E_REFERENCE", v, std::string("unknown ") + (ideal ? "ideal" : "mcs") + " '" + n + "'");
                if (std::find(inst.rings.begin(), inst.rings.end(), s->ring) == inst.rings.end())
                    fail("E_REFERENCE", v, "'" + n + "' lives in ring '" + s->ring + "', which the instance does not list");
            }
            return as_names(fld->value);
        };
        inst.ideals = members("ideals", true);
        inst.mcs = members("mcs", false);
        if (const Field* h = f.find("hom")) {
            const std::string& hn = as_name(h->value);
            const NamedHom* hom = ws_.hom(hn);
            if (!hom)
                fail("E_REFERENCE", h->value, "unknown hom '" + hn + "'");
            for (const std::string* end : {&hom->src, &hom->dst})
                if (std::find(inst.rings.begin(), inst.rings.end(), *end) == inst.rings.end())
                    fail("E_REFERENCE", h->value, "hom '" + hn + "' uses ring '" + *end + "', which the instance does not list");
            inst.hom = hn;
        }
        ws_.instances.push_back(std::move(inst));
    }

public:
    Parser(std::string_view text, std::size_t capacity) : toks_(tokenize(text)), capacity_(capacity) {}

    Workspace run()
    {
        while (peek().kind != Token::Kind::End) {
            const Token kw = expect_name();
            if (kw.text == "ring")
                parse_ring();
            else if (kw.text == "ideal")
                parse_subset(true);
            else if (kw.text == "mcs")
                parse_subset(false);
            else if (kw.text == "hom")
                parse_hom();
            else if (kw.text == "instance")
                parse_instance();
            else
                fail("E_SYNTAX", kw, "expected ring, ideal, mcs, hom or instance, found '" + kw.text + "'");
        }
        return std::move(ws_);
    }
};

} // namespace detail

/// Parses and validates a workspace. Throws ParseError on the first problem.
inline Workspace parse_workspace(std::string_view text, std::size_t capacity = kMaxCarrier)
{
    return detail::Parser(text, capacity).run();
}

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline void render_elems(std::ostream& os, const std::vector<Element>& v, char open, char close)
{
    os << open;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << close;
}

inline void render_ring(std::ostream& os, const std::string& name, const RingSpec& s,
                        const std::map<const RingSpec*, std::string>& names)
{
    os << "ring " << name << " {\n  kind = " << kind_name(s.kind) << "\n";
    switch (s.kind) {
    case RingSpec::Kind::Tables: {
        const std::size_t n = s.tables.n;
        os << "  n = " << n << "\n  add = [";
        for (std::size_t x = 0; x < n; ++x) {
            std::vector<Element> row(s.tables.add.begin() + static_cast<std::ptrdiff_t>(x * n),
                                     s.tables.add.begin() + static_cast<std::ptrdiff_t>((x + 1) * n));
            os << (x ? ",\n         " : "");
            render_elems(os, row, '[', ']');
        }
        os << "]\n  hyp = [";
        for (std::size_t x = 0; x < n; ++x) {
            os << (x ? ",\n         [" : "[");
            for (std::size_t y = 0; y < n; ++y)
                os << (y ? "," : "") << to_string(s.tables.hyp[x * n + y]);
            os << "]";
        }
        os << "]\n";
        break;
    }
    case RingSpec::Kind::ZPhi:
        os << "  n = " << s.modulus << "\n  phi = ";
        render_elems(os, s.phi, '{', '}');
        os << "\n";
        break;
    case RingSpec::Kind::Product:
        os << "  left = " << names.at(s.left.get()) << "\n  right = " << names.at(s.right.get()) << "\n";
        break;
    case RingSpec::Kind::Quotient:
        os << "  base = " << names.at(s.left.get()) << "\n  by = " << to_string(s.by) << "\n";
        break;
    }
    os << "}\n";
}

inline void render_names(std::ostream& os, const std::vector<std::string>& v)
{
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    os << "]";
}

} // namespace detail

/**
 * Writes a workspace back out. Operand rings of products and quotients that
 * are not themselves named get synthetic names so the output always parses.
 */
inline std::string render_workspace(const Workspace& ws)
{
    std::ostringstream os;
    std::map<const RingSpec*, std::string> names;
    std::vector<std::string> taken;
    for (const NamedRing& r : ws.rings)
        taken.push_back(r.name);
    std::size_t fresh = 0;
    auto emit = [&](auto&& self, const RingSpec* s, const std::string* given) -> void {
        if (names.count(s))
            return;
        if (s->left)
            self(self, s->left.get(), nullptr);
        if (s->right)
            self(self, s->right.get(), nullptr);
        std::string name;
        if (given) {
            name = *given;
        } else {
            do
                name = "ring" + std::to_string(fresh++);
            while (std::find(taken.begin(), taken.end(), name) != taken.end());
            taken.push_back(name);
        }
        names[s] = name;
        detail::render_ring(os, name, *s, names);
    };
    for (const NamedRing& r : ws.rings) {
        if (names.count(r.ref.spec.get()) && names[r.ref.spec.get()] != r.name) {
            // The same spec under a second name: write it again under that name.
            detail::render_ring(os, r.name, *r.ref.spec, names);
            continue;
        }
        emit(emit, r.ref.spec.get(), &r.name);
    }
    for (const NamedSet& s : ws.ideals)
        os << "ideal " << s.name << " in " << s.ring << " = " << to_string(s.set) << "\n";
    for (const NamedSet& s : ws.mcs)
        os << "mcs " << s.name << " in " << s.ring << " = " << to_string(s.set) << "\n";
    for (const NamedHom& h : ws.homs) {
        os << "hom " << h.name << " : " << h.src << " -> " << h.dst << " = ";
        detail::render_elems(os, h.hom.map, '[', ']');
        os << "\n";
    }
    for (const NamedInstance& i : ws.instances) {
        os << "instance " << i.name << " {\n  check = " << check_name(i.check) << "\n";
        if (i.mutation != Mutation::None)
            os << "  mutation = " << mutation_name(i.mutation) << "\n";
        os << "  rings = ";
        detail::render_names(os, i.rings);
        os << "\n  ideals = ";
        detail::render_names(os, i.ideals);
        os << "\n  mcs = ";
        detail::render_names(os, i.mcs);
        os << "\n";
        if (i.hom)
            os << "  hom = " << *i.hom << "\n";
        os << "}\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Instances <-> workspaces

/// Resolves a named instance into something run_check accepts.
inline Instance resolve_instance(const Workspace& ws, const NamedInstance& ni)
{
    Instance inst;
    auto ring_index = [&](const std::string& n) {
        return static_cast<std::size_t>(std::find(ni.rings.begin(), ni.rings.end(), n) - ni.rings.begin());
    };
    for (const std::string& r : ni.rings)
        inst.rings.push_back(ws.ring(r)->ref);
    for (const std::string& n : ni.ideals) {
        const NamedSet* s = ws.ideal(n);
        inst.ideals.push_back({ring_index(s->ring), s->set});
    }
    for (const std::string& n : ni.mcs) {
        const NamedSet* s = ws.mcs_set(n);
        inst.mcs.push_back({ring_index(s->ring), s->set});
    }
    if (ni.hom) {
        const NamedHom* h = ws.hom(*ni.hom);
        inst.hom = HomRef{ring_index(h->src), ring_index(h->dst), h->hom};
    }
    return inst;
}

/// A self-contained workspace that replays one instance of one check.
inline Workspace instance_workspace(const Instance& inst, CheckId id, Mutation mutation = Mutation::None,
                                    const std::string& name = "replay")
{
    Workspace ws;
    NamedInstance ni;
    ni.name = name;
    ni.check = id;
    ni.mutation = mutation;
    for (std::size_t i = 0; i < inst.rings.size(); ++i) {
        ws.rings.push_back({"G" + std::to_string(i + 1), inst.rings[i]});
        ni.rings.push_back(ws.rings.back().name);
    }
    for (std::size_t i = 0; i < inst.ideals.size(); ++i) {
        ws.ideals.push_back({"A" + std::to_string(i + 1), ni.rings[inst.ideals[i].ring], inst.ideals[i].set});
        ni.ideals.push_back(ws.ideals.back().name);
    }
    for (std::size_t i = 0; i < inst.mcs.size(); ++i) {
        ws.mcs.push_back({"S" + std::to_string(i + 1), ni.rings[inst.mcs[i].ring], inst.mcs[i].set});
        ni.mcs.push_back(ws.mcs.back().name);
    }
    if (inst.hom) {
        ws.homs.push_back({"eta", ni.rings[inst.hom->src], ni.rings[inst.hom->dst], inst.hom->hom});
        ni.hom = "eta";
    }
    ws.instances.push_back(std::move(ni));
    return ws;
}

} // namespace mhr
