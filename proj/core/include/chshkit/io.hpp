// SPDX-License-Identifier: Apache-2.0

// File formats.
//
// Sequence CSV: a header naming each column ("a,b" for pairs,
// "a_oo,b_oo,a_bo,b_ob" for octets), then one row per trial with cells
// exactly "+1" or "-1", rows terminated by '\n'.
//
// Band-map CSV: header "theta1,theta2,theta3,lo,hi,width", numbers printed
// with 17 significant digits.
//
// Grid candidate: a JSON object
//   {"kind": "grid", "resolution": N, "values": [N^3 numbers, theta1-major]}
// with an optional "name" string.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chshkit/band.hpp"
#include "chshkit/candidate.hpp"
#include "chshkit/outcomes.hpp"
#include "chshkit/sampler.hpp"

namespace chshkit {

/// printf "%.17g".
std::string format_double(double x);

struct NamedSequences {
  std::vector<std::string> names;
  std::vector<OutcomeSequence> columns;
};

/// Throws ShapeError if names and columns disagree in count or the columns
/// differ in length.
void write_sequences_csv(std::ostream& out, const NamedSequences& seqs);
void write_pair_csv(std::ostream& out, const SequencePair& pair);
void write_octet_csv(std::ostream& out, const OctetSequences& octet);

/// Throws FormatError on a missing header, ragged rows or any cell other than
/// "+1" / "-1".
NamedSequences read_sequences_csv(std::istream& in);

void write_band_map_csv(std::ostream& out, const std::vector<BandRow>& rows);

/// Throws FormatError for malformed documents.
F4Candidate parse_grid_candidate(const std::string& text);
F4Candidate read_grid_candidate(std::istream& in);
std::string serialize_grid_candidate(const GridPayload& payload,
                                     const std::string& name = "grid");

}  // namespace chshkit
