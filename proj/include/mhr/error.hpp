#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mhr/element_set.hpp"

namespace mhr {

/// Base of every exception the library throws. `code()` is stable across releases
/// and is what the CLI prints in front of the human-readable message.
class Error : public std::runtime_error
{
    std::string code_;

public:
    Error(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
    [[nodiscard]] const std::string& code() const { return code_; }
};

/// Axioms checked by validation, in the order they are checked.
enum class Axiom {
    AdditiveGroup,  // I
    Nonempty,       // every product value nonempty
    Commutative,    // V
    Associative,    // II
    SignRule,       // III
    Distributive,   // IV
    NoIdentity,
};

inline const char* axiom_id(Axiom a)
{
    switch (a) {
    case Axiom::AdditiveGroup: return "I";
    case Axiom::Nonempty: return "nonempty";
    case Axiom::Commutative: return "V";
    case Axiom::Associative: return "II";
    case Axiom::SignRule: return "III";
    case Axiom::Distributive: return "IV";
    case Axiom::NoIdentity: return "no-identity";
    }
    return "?";
}

class AxiomViolation : public Error
{
    Axiom axiom_;
    std::vector<Element> witness_;

    static std::string describe(Axiom a, const std::string& detail, const std::vector<Element>& w)
    {
        std::string s = std::string("axiom ") + axiom_id(a) + " violated: " + detail;
        if (!w.empty()) {
            s += " (witness";
            for (Element e : w)
                s += ' ' + std::to_string(e);
            s += ')';
        }
        return s;
    }

public:
    AxiomViolation(Axiom a, const std::string& detail, std::vector<Element> witness = {})
        : Error(std::string("E_AXIOM_") + axiom_id(a), describe(a, detail, witness)), axiom_(a),
          witness_(std::move(witness))
    {
    }
    [[nodiscard]] Axiom axiom() const { return axiom_; }
    [[nodiscard]] const std::vector<Element>& witness() const { return witness_; }
};

class CapacityError : public Error
{
public:
    explicit CapacityError(const std::string& what) : Error("E_CAPACITY", what) {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error
{
public:
    explicit PreconditionError(const std::string& what) : Error("E_PRECONDITION", what) {}
};

class HomViolation : public Error
{
    std::string condition_;

public:
    HomViolation(std::string condition, const std::string& what)
        : Error("E_HOM", "hom violates " + condition + ": " + what), condition_(std::move(condition))
    {
    }
    [[nodiscard]] const std::string& condition() const { return condition_; }
};

} // namespace mhr
