#pragma once

#include <stdexcept>
#include <string>

namespace cardiomesh {

// Base class for all pipeline failures. Subclasses exist so batch drivers can
// report the failing stage precisely and tests can assert on error identity.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- file I/O ---------------------------------------------------------------
class ParseError : public Error {
  public:
    ParseError(const std::string& what, long long offset = -1, long long line = -1)
        : Error(what), byte_offset(offset), line_number(line) {}
    long long byte_offset;  // -1 if not applicable
    long long line_number;  // -1 if not applicable
};
class UnsupportedElement : public Error { using Error::Error; };
class WriteFailed : public Error { using Error::Error; };

// --- geometry ----------------------------------------------------------------
class DegenerateInput : public Error { using Error::Error; };
class NotClosed : public Error { using Error::Error; };
class NonManifoldEdge : public Error { using Error::Error; };
class EmptyResult : public Error { using Error::Error; };
class InvalidParams : public Error { using Error::Error; };

// --- labelling ----------------------------------------------------------------
class NotBiventricular : public Error { using Error::Error; };
class ValveCountMismatch : public Error { using Error::Error; };
class SeptumNotFound : public Error { using Error::Error; };
class ClusterSeparationFailed : public Error { using Error::Error; };
class BasalPlaneNotFound : public Error { using Error::Error; };
class MeshesDisjoint : public Error { using Error::Error; };

// --- mesh assembly ------------------------------------------------------------
class SelfIntersectingOffset : public Error { using Error::Error; };
class StitchFailed : public Error { using Error::Error; };

// --- fields & solver ----------------------------------------------------------
class SolverDiverged : public Error { using Error::Error; };
class EmptyBoundary : public Error { using Error::Error; };
class MissingLabel : public Error { using Error::Error; };
class MissingField : public Error { using Error::Error; };
class MissingCoordinates : public Error { using Error::Error; };
class DegenerateDirection : public Error { using Error::Error; };
class PlaneBelowApex : public Error { using Error::Error; };

// --- fibres -------------------------------------------------------------------
class UnresolvableDegenerate : public Error { using Error::Error; };

// --- bundle -------------------------------------------------------------------
class EmptySource : public Error { using Error::Error; };
class InvalidRange : public Error { using Error::Error; };
class MissingArtifact : public Error { using Error::Error; };

// --- cli ----------------------------------------------------------------------
class ConfigError : public Error { using Error::Error; };

}  // namespace cardiomesh
