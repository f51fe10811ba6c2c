#pragma once

/// Sweep-based verification of the r-Stirling/binomial identities over
/// parameter grids. Every sweep exists in two implementations: a serial
/// reference loop and an OpenMP kernel over the flattened grid. Reports are
/// order-normalized so both produce byte-identical output.

#include <string>
#include <vector>

#include "bernstir/rational.hpp"

namespace bernstir {

enum class IdentityId {
    C1_first,
    C1_second,
    C1_ex_r1_first,
    C1_ex_r1_second,
    C1_ex_k0_first,
    C1_ex_k0_second,
    C1_ex_n0,
    C5_first,
    C5_second,
    C5_ex_k0_first,
    C5_ex_k0_second,
    C5_ex_n0,
    A5,
    A6,
    Carlitz,
    Remark2,
};

/// CLI-facing name, e.g. "c1-first". Round-trips with parse_identity_id.
std::string identity_name(IdentityId id);
bool parse_identity_id(const std::string& name, IdentityId& out);
std::vector<IdentityId> all_identity_ids();

enum class SignConvention { Paper, Corrected };
enum class SweepMode { Serial, Parallel };

/// Inclusive upper bounds per parameter; p sweeps n + offset for each offset.
/// Dimensions an identity does not use are ignored.
struct Grid {
    unsigned max_n = 8;
    unsigned max_k = 4;
    unsigned max_r = 3;
    unsigned max_q = 3;
    std::vector<unsigned> p_offsets = {0, 2};
};

struct Failure {
    std::vector<std::pair<std::string, long>> params;  // in sweep order
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    IdentityId id;
    std::string grid_description;
    unsigned long checked = 0;
    unsigned long failure_count = 0;          // total over the grid
    std::vector<Failure> failures;            // first 16, lexicographic
    bool verified() const { return failure_count == 0; }
};

constexpr unsigned kMaxRecordedFailures = 16;

IdentityReport check_c1(IdentityId variant, const Grid& grid,
                        SweepMode mode = SweepMode::Parallel);
IdentityReport check_c1_examples(IdentityId which, const Grid& grid,
                                 SweepMode mode = SweepMode::Parallel);
IdentityReport check_c5(IdentityId variant, SignConvention sign, const Grid& grid,
                        SweepMode mode = SweepMode::Parallel);
IdentityReport check_c5_examples(IdentityId which, const Grid& grid,
                                 SweepMode mode = SweepMode::Parallel);
IdentityReport check_basic(IdentityId id, const Grid& grid,
                           SweepMode mode = SweepMode::Parallel);

/// Dispatch by id. `sign` only affects the C5 corollary displays.
IdentityReport check_identity(IdentityId id, const Grid& grid,
                              SignConvention sign = SignConvention::Corrected,
                              SweepMode mode = SweepMode::Parallel);

}  // namespace bernstir
