#pragma once

#include <stdexcept>
#include <string>

namespace qf {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid mathematical input: zero denominator, negative square root,
/// off-curve point, arity mismatch, malformed serialization.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Family parameters outside the valid domain (a = b for family ii,
/// a <= b for family iii, t = 0 for the chain constructions).
class DegenerateParameters : public Error {
public:
    explicit DegenerateParameters(const std::string& what) : Error(what) {}
};

/// A 2-torsion point (v = 0) was fed to a construction that needs v != 0.
class TorsionPoint : public Error {
public:
    explicit TorsionPoint(const std::string& what) : Error(what) {}
};

/// Certificate or quartic-square triple whose defining equations fail.
class InvalidCertificate : public Error {
public:
    explicit InvalidCertificate(const std::string& what) : Error(what) {}
};

/// splitting_search exhausted its bounds for a required signature.
class UnresolvedSplitting : public Error {
public:
    explicit UnresolvedSplitting(const std::string& what) : Error(what) {}
};

} // namespace qf
