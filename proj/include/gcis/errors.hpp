#pragma once

#include <stdexcept>
#include <string>

namespace gcis {

/// Raised when encoded data (a codec stream, a grammar, a container) is
/// internally inconsistent.
class CorruptError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Container-level parse failure. The kind distinguishes the failure modes
/// callers may want to report differently.
class FormatError : public CorruptError {
public:
    enum class Kind { BadMagic, BadVersion, BadProfile, Truncated, TruncatedLevel, Malformed };

    FormatError(Kind kind, const std::string& what) : CorruptError(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

} // namespace gcis
