#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace equiloc {

/// Base class for all domain errors. `name()` is a stable machine-readable
/// tag used by the CLI when reporting mathematical rejections.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct MixedBasis : Error {
    explicit MixedBasis(const std::string& what) : Error("MixedBasis", what) {}
};

struct NonInvertibleLeadingTerm : Error {
    explicit NonInvertibleLeadingTerm(const std::string& what)
        : Error("NonInvertibleLeadingTerm", what) {}
};

/// A sum that was expected to be a genuine power series in u kept a residue
/// at u^{-power}. Carries the offending power and the residue value.
struct NegativePowerResidue : Error {
    NegativePowerResidue(int power_, std::string residue_)
        : Error("NegativePowerResidue",
                "residue " + residue_ + " at u^-" + std::to_string(power_)),
          power(power_), residue(std::move(residue_)) {}

    int power;
    std::string residue;
};

struct InfeasibleParameters : Error {
    explicit InfeasibleParameters(const std::string& what)
        : Error("InfeasibleParameters", what) {}
};

struct Unbounded : Error {
    explicit Unbounded(const std::string& what) : Error("Unbounded", what) {}
};

struct Degenerate : Error {
    explicit Degenerate(const std::string& what) : Error("Degenerate", what) {}
};

struct ZeroVector : Error {
    explicit ZeroVector(const std::string& what) : Error("ZeroVector", what) {}
};

struct DegenerateWeight : Error {
    explicit DegenerateWeight(const std::string& what)
        : Error("DegenerateWeight", what) {}
};

struct BadProbe : Error {
    explicit BadProbe(const std::string& what) : Error("BadProbe", what) {}
};

struct ResidueError : Error {
    explicit ResidueError(const std::string& what) : Error("ResidueError", what) {}
};

struct TypeNotZero : Error {
    explicit TypeNotZero(const std::string& what) : Error("TypeNotZero", what) {}
};

struct ZeroComponent : Error {
    explicit ZeroComponent(const std::string& what) : Error("ZeroComponent", what) {}
};

struct NonRegular : Error {
    explicit NonRegular(const std::string& what) : Error("NonRegular", what) {}
};

struct InvalidOrbitSpec : Error {
    explicit InvalidOrbitSpec(const std::string& what)
        : Error("InvalidOrbitSpec", what) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what)
        : Error("InvalidArgument", what) {}
};

/// Input files / strings that fail to parse against the expected schema.
/// The CLI maps this to exit code 2; every other Error maps to exit code 3.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

} // namespace equiloc
