#ifndef BKSEQ_JSON_IO_HPP
#define BKSEQ_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "bkseq/constructions.hpp"
#include "bkseq/verify.hpp"

namespace bkseq::json_io {

// Insertion-ordered JSON keeps the documented key order in emitted
// documents; parsing accepts any order.
using json = nlohmann::ordered_json;

// Sequence document schema: construction tag, the generating parameters
// (n or q, k, optional r, optional f), modulus and elements as decimal
// strings. Round-trips losslessly.
json to_json(const BkSequence& seq);

// Accepts documents with or without a construction tag; untagged or
// "custom" documents carry only elements/modulus/k.
// Throws std::invalid_argument on malformed documents.
BkSequence sequence_from_json(const json& doc);

json to_json(const verify::VerificationReport& report);
json to_json(const verify::DensityReport& report);

std::string to_text(const BkSequence& seq);
std::string to_text(const verify::VerificationReport& report);
std::string to_text(const verify::DensityReport& report);

}  // namespace bkseq::json_io

#endif
