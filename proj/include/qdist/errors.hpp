/**
 * Copyright 2026, the qdist developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

// Exception hierarchy shared by every qdist module.

#pragma once

#include <stdexcept>
#include <string>

namespace qdist {

// Base class for all qdist failures; everything thrown by the library
// derives from this so callers can catch one type at the boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- linear algebra ---------------------------------------------------------

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class NotHermitian : public Error {
public:
    explicit NotHermitian(const std::string& msg) : Error(msg) {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

// --- states ------------------------------------------------------------------

class TraceNotOne : public Error {
public:
    explicit TraceNotOne(const std::string& msg) : Error(msg) {}
};

class NotPositive : public Error {
public:
    explicit NotPositive(const std::string& msg) : Error(msg) {}
};

class ZeroVector : public Error {
public:
    explicit ZeroVector(const std::string& msg) : Error(msg) {}
};

class OutsideBlochBall : public Error {
public:
    explicit OutsideBlochBall(const std::string& msg) : Error(msg) {}
};

class InfeasibleSpectrum : public Error {
public:
    explicit InfeasibleSpectrum(const std::string& msg) : Error(msg) {}
};

// --- distances ---------------------------------------------------------------

class AlphaOutOfRange : public Error {
public:
    explicit AlphaOutOfRange(const std::string& msg) : Error(msg) {}
};

class BasisNotOrthonormal : public Error {
public:
    explicit BasisNotOrthonormal(const std::string& msg) : Error(msg) {}
};

// --- channels ----------------------------------------------------------------

class NotTracePreserving : public Error {
public:
    explicit NotTracePreserving(const std::string& msg) : Error(msg) {}
};

class NotUnitary : public Error {
public:
    explicit NotUnitary(const std::string& msg) : Error(msg) {}
};

class BadProbabilities : public Error {
public:
    explicit BadProbabilities(const std::string& msg) : Error(msg) {}
};

// --- analysis ----------------------------------------------------------------

class ParamOutOfRange : public Error {
public:
    explicit ParamOutOfRange(const std::string& msg) : Error(msg) {}
};

class UnitalMap : public Error {
public:
    explicit UnitalMap(const std::string& msg) : Error(msg) {}
};

class ZeroInputDistance : public Error {
public:
    explicit ZeroInputDistance(const std::string& msg) : Error(msg) {}
};

// --- io ------------------------------------------------------------------------

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace qdist
