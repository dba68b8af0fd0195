#include "bkseq/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace bkseq::json_io {

namespace {

std::uint64_t require_count(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned()) {
    throw std::invalid_argument(std::string("document: missing or bad \"") + key +
                                "\"");
  }
  return doc[key].get<std::uint64_t>();
}

Natural require_natural(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string()) {
    throw std::invalid_argument(std::string("document: missing or bad \"") + key +
                                "\" (decimal string expected)");
  }
  return arith::from_decimal(doc[key].get<std::string>());
}

}  // namespace

json to_json(const BkSequence& seq) {
  json doc;
  doc["construction"] = to_string(seq.label);
  if (seq.label == Construction::bose_chowla) {
    doc["q"] = seq.size_param;
  } else if (seq.label != Construction::custom) {
    doc["n"] = seq.size_param;
  }
  doc["k"] = seq.k;
  if (seq.r) doc["r"] = *seq.r;
  if (seq.field_poly) doc["f"] = *seq.field_poly;
  doc["modulus"] = arith::to_decimal(seq.modulus);
  json elems = json::array();
  for (const Natural& e : seq.elements) elems.push_back(arith::to_decimal(e));
  doc["elements"] = std::move(elems);
  return doc;
}

BkSequence sequence_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("document: JSON object expected");
  }
  BkSequence seq;
  if (doc.contains("construction")) {
    if (!doc["construction"].is_string()) {
      throw std::invalid_argument("document: bad \"construction\"");
    }
    seq.label = construction_from_string(doc["construction"].get<std::string>());
  }
  seq.k = static_cast<unsigned>(require_count(doc, "k"));
  seq.modulus = require_natural(doc, "modulus");
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw std::invalid_argument("document: missing or bad \"elements\"");
  }
  for (const auto& item : doc["elements"]) {
    if (!item.is_string()) {
      throw std::invalid_argument("document: elements must be decimal strings");
    }
    seq.elements.push_back(arith::from_decimal(item.get<std::string>()));
  }
  if (seq.label == Construction::bose_chowla) {
    seq.size_param = require_count(doc, "q");
  } else if (seq.label != Construction::custom) {
    seq.size_param = require_count(doc, "n");
  }
  if (doc.contains("r")) {
    seq.r = static_cast<unsigned>(require_count(doc, "r"));
  }
  if (doc.contains("f")) {
    if (!doc["f"].is_array()) {
      throw std::invalid_argument("document: bad \"f\"");
    }
    gfpk::Poly f;
    for (const auto& c : doc["f"]) {
      if (!c.is_number_unsigned()) {
        throw std::invalid_argument("document: \"f\" must hold nonnegative coefficients");
      }
      f.push_back(c.get<std::uint32_t>());
    }
    seq.field_poly = std::move(f);
  }
  return seq;
}

json to_json(const verify::VerificationReport& report) {
  json doc;
  doc["ok"] = report.ok;
  doc["sums_checked"] = report.sums_checked;
  if (report.witness) {
    json w;
    w["first"] = report.witness->first;
    w["second"] = report.witness->second;
    w["sum"] = arith::to_decimal(report.witness->sum);
    doc["witness"] = std::move(w);
  }
  doc["elapsed_seconds"] = report.elapsed.count();
  return doc;
}

json to_json(const verify::DensityReport& report) {
  json doc;
  doc["modulus"] = arith::to_decimal(report.modulus);
  doc["lower_bound"] = arith::to_decimal(report.lower_bound);
  doc["lower_ok"] = report.lower_ok;
  if (report.upper_bound) {
    doc["upper_bound"] = arith::to_decimal(*report.upper_bound);
    doc["upper_ok"] = *report.upper_ok;
  }
  doc["informational_bound"] = report.informational_bound;
  return doc;
}

std::string to_text(const BkSequence& seq) {
  std::ostringstream out;
  out << "construction: " << to_string(seq.label) << "\n";
  if (seq.label == Construction::bose_chowla) {
    out << "q: " << seq.size_param << "\n";
  } else if (seq.label != Construction::custom) {
    out << "n: " << seq.size_param << "\n";
  }
  out << "k: " << seq.k << "\n";
  if (seq.r) out << "r: " << *seq.r << "\n";
  if (seq.field_poly) {
    out << "f:";
    for (std::uint32_t c : *seq.field_poly) out << " " << c;
    out << "\n";
  }
  out << "modulus: " << arith::to_decimal(seq.modulus) << "\n";
  out << "elements:";
  for (const Natural& e : seq.elements) out << " " << arith::to_decimal(e);
  out << "\n";
  return out.str();
}

std::string to_text(const verify::VerificationReport& report) {
  std::ostringstream out;
  out << (report.ok ? "ok" : "collision") << "  sums_checked: " << report.sums_checked
      << "  elapsed_seconds: " << report.elapsed.count() << "\n";
  if (report.witness) {
    out << "witness: {";
    for (std::size_t i = 0; i < report.witness->first.size(); ++i) {
      out << (i ? "," : "") << report.witness->first[i];
    }
    out << "} vs {";
    for (std::size_t i = 0; i < report.witness->second.size(); ++i) {
      out << (i ? "," : "") << report.witness->second[i];
    }
    out << "}  sum: " << arith::to_decimal(report.witness->sum) << "\n";
  }
  return out.str();
}

std::string to_text(const verify::DensityReport& report) {
  std::ostringstream out;
  out << "modulus: " << arith::to_decimal(report.modulus) << "\n";
  out << "lower_bound: " << arith::to_decimal(report.lower_bound)
      << (report.lower_ok ? "  (holds)" : "  (VIOLATED)") << "\n";
  if (report.upper_bound) {
    out << "upper_bound: " << arith::to_decimal(*report.upper_bound)
        << (*report.upper_ok ? "  (holds)" : "  (VIOLATED)") << "\n";
  }
  out << "informational_bound: " << report.informational_bound << "\n";
  return out.str();
}

}  // namespace bkseq::json_io
