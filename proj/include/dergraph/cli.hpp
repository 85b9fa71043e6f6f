#pragma once

#include "dergraph/factorizer.hpp"
#include "dergraph/permutation.hpp"
#include "dergraph/spectra.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace dergraph::cli {

enum class Subcommand { dn, spectrum, poly, extremal, factorize, verify, sweep, sign };
enum class OutputMode { text, json };

struct Command {
  Subcommand subcommand = Subcommand::dn;
  OutputMode output_mode = OutputMode::text;
  int n = 0;                   // dn, spectrum, poly, extremal, verify; sign uses it as --max
  std::string permutation;     // factorize
  std::optional<int> n_hint;   // factorize --n
  int k_max = 3;               // verify --k
  bool numeric = false;        // verify --numeric
  int from = 6, to = 20;       // sweep
  bool use_cache = true;
};

enum ExitStatus : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one subcommand. Results go to `out`, diagnostics to `err`.
int run(const Command& command, std::ostream& out, std::ostream& err);

using dergraph::parse_permutation;

/// {"n":N, "entries":[{"partition":[...],"eta":"...","gamma":"...","multiplicity":"..."}]}
std::string spectrum_json(int n, const std::vector<SpectrumEntry>& table);
/// {"w":..., "sigma":..., "tau":..., "method":..., "verified":true}
std::string certificate_json(const FactorizationCertificate& cert);

}  // namespace dergraph::cli
