// bkseq - construct and certify dense B_k sequences.
//
// Subcommands: generate, verify, density, selftest. JSON documents flow
// through stdin/stdout so that `bkseq generate ... | bkseq verify` works.
// Exit statuses: 0 pass, 1 collision/bound violation, 2 usage or parse
// error, 3 instance too large.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bkseq/constructions.hpp"
#include "bkseq/errors.hpp"
#include "bkseq/json_io.hpp"
#include "bkseq/primes.hpp"
#include "bkseq/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCollision = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTooLarge = 3;

std::string read_input(const std::optional<std::string>& path) {
  if (path) {
    std::ifstream in(*path);
    if (!in) throw std::invalid_argument("cannot open file: " + *path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

bkseq::BkSequence parse_document(const std::optional<std::string>& path) {
  const std::string text = read_input(path);
  bkseq::json_io::json doc;
  try {
    doc = bkseq::json_io::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  return bkseq::json_io::sequence_from_json(doc);
}

int run_generate(const std::string& construction, std::uint64_t n, std::uint64_t q,
                 unsigned k, const std::string& format) {
  using namespace bkseq;
  BkSequence seq;
  const Construction label = construction_from_string(construction);
  switch (label) {
    case Construction::pow2:
      seq = constructions::construct_pow2(n, k);
      break;
    case Construction::pow3:
      seq = constructions::construct_pow3(n, k);
      break;
    case Construction::bose_chowla:
      seq = constructions::construct_bose_chowla(Natural(q), k);
      break;
    case Construction::geometric:
      seq = constructions::construct_geometric(n, k);
      break;
    case Construction::custom:
      throw std::invalid_argument("generate: custom is not a generatable construction");
  }
  if (format == "text") {
    std::cout << json_io::to_text(seq);
  } else {
    std::cout << json_io::to_json(seq).dump() << "\n";
  }
  return kExitOk;
}

int run_verify(const std::optional<std::string>& file, std::uint64_t limit,
               const std::string& format) {
  const bkseq::BkSequence seq = parse_document(file);
  const bkseq::verify::VerificationReport report = bkseq::verify::verify_bk(seq, limit);
  if (format == "text") {
    std::cout << bkseq::json_io::to_text(report);
  } else {
    std::cout << bkseq::json_io::to_json(report).dump() << "\n";
  }
  return report.ok ? kExitOk : kExitCollision;
}

int run_density(const std::optional<std::string>& file, const std::string& format) {
  const bkseq::BkSequence seq = parse_document(file);
  const bkseq::verify::DensityReport report = bkseq::verify::density_report(seq);
  if (format == "text") {
    std::cout << bkseq::json_io::to_text(report);
  } else {
    std::cout << bkseq::json_io::to_json(report).dump() << "\n";
  }
  const bool ok = report.lower_ok && report.upper_ok.value_or(true);
  return ok ? kExitOk : kExitCollision;
}

struct SelftestRow {
  std::string name;
  bool run(const bkseq::BkSequence& seq, std::uint64_t limit, double build_ms) {
    using clock = std::chrono::steady_clock;
    std::string status = "pass";
    bool ok = true;
    double verify_ms = 0.0;
    try {
      const auto t0 = clock::now();
      const auto report = bkseq::verify::verify_bk(seq, limit);
      verify_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
      const auto density = bkseq::verify::density_report(seq);
      if (!report.ok) {
        ok = false;
        status = "COLLISION";
      } else if (!density.lower_ok || !density.upper_ok.value_or(true)) {
        ok = false;
        status = "DENSITY";
      }
    } catch (const bkseq::InstanceTooLarge&) {
      status = "skipped (enumeration limit)";
    } catch (const std::exception& e) {
      ok = false;
      status = std::string("ERROR: ") + e.what();
    }
    std::printf("%-32s %10.2f %10.2f   %s\n", name.c_str(), build_ms, verify_ms,
                status.c_str());
    return ok;
  }
};

int run_selftest(std::uint64_t max_n, unsigned max_k, std::uint64_t limit) {
  using namespace bkseq;
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };

  std::printf("%-32s %10s %10s   %s\n", "case", "build_ms", "verify_ms", "status");
  bool all_ok = true;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    for (unsigned k = 1; k <= max_k; ++k) {
      {
        const auto t0 = clock::now();
        const BkSequence seq = constructions::construct_pow2(n, k);
        SelftestRow row{"pow2 n=" + std::to_string(n) + " k=" + std::to_string(k)};
        all_ok &= row.run(seq, limit, ms_since(t0));
      }
      {
        const auto t0 = clock::now();
        const BkSequence seq = constructions::construct_pow3(n, k);
        SelftestRow row{"pow3 n=" + std::to_string(n) + " k=" + std::to_string(k)};
        all_ok &= row.run(seq, limit, ms_since(t0));
      }
      if (k >= 2) {
        const auto t0 = clock::now();
        const BkSequence seq = constructions::construct_geometric(n, k);
        SelftestRow row{"geometric n=" + std::to_string(n) + " k=" + std::to_string(k)};
        all_ok &= row.run(seq, limit, ms_since(t0));
      }
    }
  }
  // Bose-Chowla over the primes q <= max_n, k >= 2.
  for (std::uint64_t q = 2; q <= max_n; ++q) {
    if (!primes::is_prime(Natural(q))) continue;
    for (unsigned k = 2; k <= max_k; ++k) {
      try {
        const auto t0 = clock::now();
        const BkSequence seq = constructions::construct_bose_chowla(Natural(q), k);
        SelftestRow row{"bose_chowla q=" + std::to_string(q) + " k=" + std::to_string(k)};
        all_ok &= row.run(seq, limit, ms_since(t0));
      } catch (const bkseq::InstanceTooLarge&) {
        std::printf("%-32s %10s %10s   skipped (field limit)\n",
                    ("bose_chowla q=" + std::to_string(q) + " k=" + std::to_string(k)).c_str(),
                    "-", "-");
      }
    }
  }
  std::printf("selftest: %s\n", all_ok ? "all pass" : "FAILURES");
  return all_ok ? kExitOk : kExitCollision;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dense B_k (Sidon-type) sequence construction and certification"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Construct a sequence document");
  std::string construction;
  generate->add_option("construction", construction,
                       "pow2 | pow3 | bose_chowla | geometric")
      ->required();
  std::uint64_t n = 0, q = 0;
  unsigned k = 0;
  std::string format = "json";
  generate->add_option("--n", n, "Sequence size (pow2, pow3, geometric)");
  generate->add_option("--q", q, "Base field size (bose_chowla)");
  generate->add_option("--k", k, "Sum order k")->required();
  generate->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Certify the B_k property");
  std::optional<std::string> verify_file;
  std::uint64_t limit = bkseq::verify::default_enumeration_limit;
  std::string verify_format = "json";
  verify_cmd->add_option("--file", verify_file, "Document path (default: stdin)");
  verify_cmd->add_option("--limit", limit, "Multiset enumeration cap");
  verify_cmd->add_option("--format", verify_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // density
  auto* density = app.add_subcommand("density", "Report density bounds");
  std::optional<std::string> density_file;
  std::string density_format = "json";
  density->add_option("--file", density_file, "Document path (default: stdin)");
  density->add_option("--format", density_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // selftest
  auto* selftest = app.add_subcommand("selftest", "Build+verify a parameter grid");
  std::uint64_t max_n = 0;
  unsigned max_k = 3;
  std::uint64_t selftest_limit = bkseq::verify::default_enumeration_limit;
  selftest->add_option("--max-n", max_n, "Largest n (and largest Bose-Chowla q)")
      ->required()
      ->check(CLI::PositiveNumber);
  selftest->add_option("--max-k", max_k, "Largest k")->check(CLI::PositiveNumber);
  selftest->add_option("--limit", selftest_limit, "Multiset enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      return app.exit(e);
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      if (construction == "bose_chowla") {
        if (q == 0) throw std::invalid_argument("generate bose_chowla: --q is required");
      } else if (n == 0) {
        throw std::invalid_argument("generate " + construction +
                                    ": --n is required and must be >= 1");
      }
      return run_generate(construction, n, q, k, format);
    }
    if (verify_cmd->parsed()) return run_verify(verify_file, limit, verify_format);
    if (density->parsed()) return run_density(density_file, density_format);
    if (selftest->parsed()) return run_selftest(max_n, max_k, selftest_limit);
  } catch (const bkseq::InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
