#pragma once

#include <stdexcept>
#include <string>

namespace qrr {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

/// Inverting a series whose leading coefficient cannot be identified.
struct ZeroLeadingTerm : Error {
    explicit ZeroLeadingTerm(const std::string& m) : Error("ZeroLeadingTerm: " + m) {}
};

/// A factor bag carries a 1/(1-q^0)-type factor that does not cancel.
struct SingularPochhammer : Error {
    explicit SingularPochhammer(const std::string& m) : Error("SingularPochhammer: " + m) {}
};

/// Parameter outside the documented domain of a catalogue entry.
struct BadParams : Error {
    explicit BadParams(const std::string& m) : Error("BadParams: " + m) {}
};

/// Growth certificate for a sum-side alphabet could not be established.
struct UncertifiedAlphabet : Error {
    explicit UncertifiedAlphabet(const std::string& m) : Error("UncertifiedAlphabet: " + m) {}
};

/// Growth certificate for a lattice theta sum could not be established.
struct UncertifiedSpec : Error {
    explicit UncertifiedSpec(const std::string& m) : Error("UncertifiedSpec: " + m) {}
};

/// A rational evaluation hit a vanishing denominator.
struct PoleEncountered : Error {
    explicit PoleEncountered(const std::string& m) : Error("PoleEncountered: " + m) {}
};

/// Catalogue lookup with an unknown identifier.
struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& m) : Error("UnknownIdentity: " + m) {}
};

/// Symmetrisation oracle called with coincident variables.
struct RepeatedVariable : Error {
    explicit RepeatedVariable(const std::string& m) : Error("RepeatedVariable: " + m) {}
};

/// Limit sequence failed to stabilise within the row cap.
struct NoStabilisation : Error {
    explicit NoStabilisation(const std::string& m) : Error("NoStabilisation: " + m) {}
};

}  // namespace qrr
