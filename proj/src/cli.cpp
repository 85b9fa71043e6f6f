#include "dergraph/cli.hpp"

#include "dergraph/characters.hpp"
#include "dergraph/derangements.hpp"
#include "dergraph/oracle.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace dergraph::cli {

namespace {

using nlohmann::json;

std::string join_partitions(const std::vector<Partition>& parts)
{
  std::string out;
  for (const Partition& p : parts) {
    if (!out.empty())
      out += ' ';
    out += p.to_string();
  }
  return out;
}

json extremal_value_json(const ExtremalValue& v)
{
  json parts = json::array();
  for (const Partition& p : v.achieved_by)
    parts.push_back(p.parts());
  return {{"value", to_decimal(v.value)}, {"partitions", parts}};
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

int run_dn(const Command& c, std::ostream& out)
{
  if (c.n < 0)
    throw RejectedInput("dn: n must be non-negative");
  out << to_decimal(derangement_count(c.n)) << '\n';
  return kSuccess;
}

int run_spectrum(const Command& c, std::ostream& out)
{
  const auto table = spectrum_table(c.n);
  if (c.output_mode == OutputMode::json) {
    out << spectrum_json(c.n, table) << '\n';
    return kSuccess;
  }
  out << std::left << std::setw(24) << "partition" << std::setw(16) << "eta" << std::setw(16) << "gamma"
      << "multiplicity\n";
  for (const SpectrumEntry& e : table)
    out << std::setw(24) << e.lam.to_string() << std::setw(16) << to_decimal(e.eta) << std::setw(16)
        << to_decimal(e.gamma) << to_decimal(e.multiplicity) << '\n';
  return kSuccess;
}

int run_extremal(const Command& c, std::ostream& out)
{
  const ExtremalReport r = extremal(c.n);
  const std::pair<const char*, const ExtremalValue*> rows[] = {
      {"largest", &r.largest},   {"second_largest", &r.second_largest},   {"third_largest", &r.third_largest},
      {"smallest", &r.smallest}, {"second_smallest", &r.second_smallest},
  };
  if (c.output_mode == OutputMode::json) {
    json j{{"n", c.n}};
    for (const auto& [name, v] : rows)
      j[name] = extremal_value_json(*v);
    out << j.dump() << '\n';
    return kSuccess;
  }
  for (const auto& [name, v] : rows)
    out << std::left << std::setw(18) << name << std::setw(14) << to_decimal(v->value)
        << join_partitions(v->achieved_by) << '\n';
  return kSuccess;
}

int run_factorize(const Command& c, std::ostream& out)
{
  const Permutation w = parse_permutation(c.permutation, c.n_hint);
  const FactorizationCertificate cert = factorize_two(w);
  if (c.output_mode == OutputMode::json) {
    out << certificate_json(cert) << '\n';
  } else {
    out << "w      = " << to_cycle_string(cert.w) << '\n'
        << "sigma  = " << to_cycle_string(cert.sigma) << '\n'
        << "tau    = " << to_cycle_string(cert.tau) << '\n'
        << "method = " << to_string(cert.method) << '\n'
        << "verified = " << (cert.verify() ? "true" : "false") << '\n';
  }
  return cert.verify() ? kSuccess : kVerificationFailed;
}

int run_verify(const Command& c, std::ostream& out)
{
  using namespace oracle;
  if (c.n < 4 || c.n > kMaxGraphDegree)
    throw UnsupportedDegree("verify: 4 <= n <= 8");
  bool all_ok = true;
  auto line = [&](const std::string& what, const std::string& detail, bool ok) {
    all_ok = all_ok && ok;
    out << std::left << std::setw(34) << what << std::setw(44) << detail << verdict(ok) << '\n';
  };

  const CayleyGraph g = build_graph(c.n);
  const BfsResult bfs = bfs_distances(g);
  line("diameter", std::to_string(bfs.eccentricity), bfs.connected && bfs.eccentricity == 2);
  line("valency = D_n", std::to_string(g.valency()), BigInt(static_cast<unsigned long>(g.valency())) == derangement_count(c.n));

  const CertificationReport cert = certify_all(c.n);
  line("two-derangement certificates",
       std::to_string(cert.checked - cert.failures.size()) + "/" + std::to_string(cert.checked), cert.ok());

  if (c.n > kMaxMaterializedDegree) {
    out << "(n = 8: diameter witness only)\n";
    return all_ok ? kSuccess : kVerificationFailed;
  }

  const DistanceMatrix d = distance_matrix(g, bfs);
  line("d = 2J - A", "", matrix_identity_check(g, d));

  const SpectrumVerification checked = verify_spectrum(c.n, c.k_max, c.numeric);
  for (const TraceRow& row : checked.rows)
    line("tr(d^" + std::to_string(row.k) + ")", to_decimal(row.trace) + " vs " + to_decimal(row.predicted), row.ok());
  if (checked.numeric) {
    std::ostringstream detail;
    detail << std::setprecision(3) << checked.numeric->max_abs_error << " <= " << checked.numeric->tolerance;
    out << std::left << std::setw(34) << "numeric eigenvalues (advisory)" << std::setw(44) << detail.str()
        << verdict(checked.numeric->ok()) << '\n';
  }

  const auto cache = c.use_cache ? std::optional(default_cache_dir()) : std::nullopt;
  const CharacterTable chars = load_or_build_character_table(c.n, cache);
  const CharacterSumCheck sums = check_character_sums(chars);
  line("eta = character sum", std::to_string(sums.partitions) + " partitions", sums.eta_ok);
  line("gamma = ell_D character sum", std::to_string(sums.partitions) + " partitions", sums.gamma_ok);
  return all_ok ? kSuccess : kVerificationFailed;
}

int run_sweep(const Command& c, std::ostream& out)
{
  const LemmaReport r = lemma_sweep(c.from, c.to);
  out << "lemma sweep n=" << c.from << ".." << c.to << ": " << r.instances << " instances, "
      << r.violations.size() << " violations\n";
  for (const LemmaViolation& v : r.violations)
    out << "  n=" << v.n << ' ' << v.lemma << ' ' << v.lam.to_string() << ": " << v.detail << '\n';
  return r.ok() ? kSuccess : kVerificationFailed;
}

int run_sign(const Command& c, std::ostream& out)
{
  const SignReport r = sign_check(c.n);
  out << "sign check n=2.." << c.n << ": " << r.checked << " partitions, " << r.violations.size()
      << " violations\n";
  for (const SignViolation& v : r.violations)
    out << "  " << v.lam.to_string() << ": eta = " << to_decimal(v.eta) << '\n';
  return r.ok() ? kSuccess : kVerificationFailed;
}

}  // namespace

std::string spectrum_json(int n, const std::vector<SpectrumEntry>& table)
{
  json entries = json::array();
  for (const SpectrumEntry& e : table)
    entries.push_back({{"partition", e.lam.parts()},
                       {"eta", to_decimal(e.eta)},
                       {"gamma", to_decimal(e.gamma)},
                       {"multiplicity", to_decimal(e.multiplicity)}});
  return json{{"n", n}, {"entries", entries}}.dump();
}

std::string certificate_json(const FactorizationCertificate& cert)
{
  return json{{"w", to_cycle_string(cert.w)},
              {"sigma", to_cycle_string(cert.sigma)},
              {"tau", to_cycle_string(cert.tau)},
              {"method", std::string(to_string(cert.method))},
              {"verified", cert.verify()}}
      .dump();
}

int run(const Command& command, std::ostream& out, std::ostream& err)
{
  try {
    switch (command.subcommand) {
      case Subcommand::dn: return run_dn(command, out);
      case Subcommand::spectrum: return run_spectrum(command, out);
      case Subcommand::poly: out << distance_polynomial(command.n).to_string() << '\n'; return kSuccess;
      case Subcommand::extremal: return run_extremal(command, out);
      case Subcommand::factorize: return run_factorize(command, out);
      case Subcommand::verify: return run_verify(command, out);
      case Subcommand::sweep: return run_sweep(command, out);
      case Subcommand::sign: return run_sign(command, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace dergraph::cli
