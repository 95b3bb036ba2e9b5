#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mhr/hyperring.hpp"
#include "mhr/homs.hpp"

namespace mhr {

/// How a ring was constructed. Products and quotients keep their operands so a
/// ring can be written back out in the same form it was read.
struct RingSpec
{
    enum class Kind { Tables, ZPhi, Product, Quotient };

    Kind kind = Kind::Tables;
    RawTables tables;                       // Tables
    std::size_t modulus = 0;                // ZPhi
    std::vector<Element> phi;               // ZPhi
    std::shared_ptr<const RingSpec> left;   // Product; base of a Quotient
    std::shared_ptr<const RingSpec> right;  // Product
    ElementSet by;                          // Quotient

    static RingSpec from_tables(RawTables t)
    {
        RingSpec s;
        s.kind = Kind::Tables;
        s.tables = std::move(t);
        return s;
    }
    static RingSpec zphi(std::size_t n, std::vector<Element> phi)
    {
        RingSpec s;
        s.kind = Kind::ZPhi;
        s.modulus = n;
        s.phi = std::move(phi);
        return s;
    }
    static RingSpec product(std::shared_ptr<const RingSpec> l, std::shared_ptr<const RingSpec> r)
    {
        RingSpec s;
        s.kind = Kind::Product;
        s.left = std::move(l);
        s.right = std::move(r);
        return s;
    }
    static RingSpec quotient(std::shared_ptr<const RingSpec> base, ElementSet by)
    {
        RingSpec s;
        s.kind = Kind::Quotient;
        s.left = std::move(base);
        s.by = by;
        return s;
    }
};

inline const char* kind_name(RingSpec::Kind k)
{
    switch (k) {
    case RingSpec::Kind::Tables: return "tables";
    case RingSpec::Kind::ZPhi: return "zphi";
    case RingSpec::Kind::Product: return "product";
    case RingSpec::Kind::Quotient: return "quotient";
    }
    return "?";
}

inline Hyperring build_ring(const RingSpec& s, std::size_t capacity = kMaxCarrier)
{
    switch (s.kind) {
    case RingSpec::Kind::Tables: return validate(s.tables, capacity);
    case RingSpec::Kind::ZPhi: return build_zphi(s.modulus, s.phi, capacity);
    case RingSpec::Kind::Product:
        return direct_product(build_ring(*s.left, capacity), build_ring(*s.right, capacity), capacity);
    case RingSpec::Kind::Quotient: return quotient_ring(build_ring(*s.left, capacity), s.by, capacity).ring;
    }
    throw PreconditionError("unknown ring kind");
}

} // namespace mhr
