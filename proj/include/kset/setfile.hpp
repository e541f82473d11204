#pragma once

// Line-oriented text format for KS sets. '#' starts a comment.
//
//   dim 4
//   ray 1  1 0 0 0          # ray ID followed by exactly `dim` scalar entries
//   ray 2  0 1 0 0
//   proj P 1 2              # groups declared rays into one higher-rank projector
//   ctx P 3 4               # members are projector ids or ungrouped ray ids
//
// A ray is a rank-1 projector unless grouped by a `proj` line. Projectors are ordered by
// the declaration of their first ray.

#include <string>
#include <string_view>

#include "kset/errors.hpp"
#include "kset/model.hpp"

namespace kset {

class ValidationError : public ParseError {
public:
    explicit ValidationError(ValidationReport report)
        : ParseError("set failed validation:\n" + report.to_string(), 0, 0), report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

struct ParseOptions {
    bool validate = true;
};

// Throws SyntaxError, UnknownRayReference, or ValidationError.
KSSet parse_set(std::string_view text, ParseOptions options = {});

// Rays first (in projector order), then proj lines, then contexts as stored.
std::string serialize(const KSSet& set);

}  // namespace kset
