#include "augcube/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "augcube/aq.hpp"
#include "augcube/decompose.hpp"
#include "augcube/ladder.hpp"
#include "augcube/report.hpp"
#include "augcube/verify.hpp"

namespace augcube::cli {

namespace {

constexpr int kUsageError = 2;
constexpr int kVerifyError = 1;

int max_exact_dim_from_env() {
  const char* raw = std::getenv("AUGCUBE_MAX_EXACT_N");
  if (raw == nullptr || *raw == '\0') return 7;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1 || v > kMaxDim)
    throw std::runtime_error("AUGCUBE_MAX_EXACT_N must be an integer in [1," +
                             std::to_string(kMaxDim) + "]");
  return static_cast<int>(v);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + p.string());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + p.string());
  f << text;
  if (!f) throw std::runtime_error("write failed: " + p.string());
}

int cmd_generate(int n, const std::string& out_path, const std::string& format,
                 std::ostream& out) {
  const Graph g = build_aq(n);
  const std::string text = format == "dot" ? to_dot(g) : to_edge_list(g);
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
  return 0;
}

int cmd_decompose(int n, int n1, const std::string& out_dir, std::ostream& out) {
  if (n < 4 || n > kMaxDim)
    throw std::runtime_error("decompose requires 4 <= n <= " + std::to_string(kMaxDim));
  const int n2 = 2 * n - 1 - n1;
  if (n1 < 2 || n2 < 2)
    throw std::runtime_error("split out of range: need 2 <= n1 <= " + std::to_string(2 * n - 3));

  const Decomposition d = decompose(n, std::min(n1, n2));
  const Bundle b = bundle_from(d, n1 > n2);

  // Cheap structural gate before anything reaches disk; full verification is
  // the `verify` command's job.
  Report pre;
  pre.merge(verify_partition(build_aq(n), b.h, b.k, "AQ" + std::to_string(n) + "=H+K"));
  pre.merge(verify_regular(b.h, b.n1, "H"));
  pre.merge(verify_regular(b.k, b.n2, "K"));
  if (!pre.overall()) {
    out << to_text(pre);
    return kVerifyError;
  }

  write_bundle(b, out_dir);
  out << "bundle " << out_dir << ": n=" << b.n << " n1=" << b.n1 << " n2=" << b.n2
      << " |E(H)|=" << b.h.edge_count() << " |E(K)|=" << b.k.edge_count() << '\n';
  return 0;
}

int cmd_verify(const std::string& bundle_dir, const std::string& mode,
               std::optional<std::uint32_t> seed, std::optional<int> pairs, std::ostream& out) {
  const Bundle b = read_bundle(bundle_dir);
  const ConnMode conn = mode == "sampled" ? ConnMode::sampled : ConnMode::exact;
  if (conn == ConnMode::sampled && (!seed.has_value() || !pairs.has_value()))
    throw std::runtime_error("sampled mode requires both --seed and --pairs");
  if (pairs.has_value() && *pairs < 1) throw std::runtime_error("--pairs must be positive");

  const Report r =
      verify_bundle(b, conn, seed.value_or(0), pairs.value_or(0), max_exact_dim_from_env());
  out << to_text(r);
  return r.overall() ? 0 : kVerifyError;
}

int cmd_cycles(const std::string& cert_path, const std::string& host_path,
               std::optional<int> length, bool all, std::ostream& out, std::ostream& err) {
  if (all == length.has_value())
    throw std::runtime_error("pass exactly one of --length or --all");

  const LadderCert cert = parse_cert_text(read_file(cert_path));
  const Graph host = parse_edge_list(read_file(host_path));
  // Core-only: hosts that shed the two corner rungs (3-regular sides) are fine,
  // since no extracted cycle uses them and is_cycle_in rechecks every edge.
  const Report v = validate_cert(cert, host, false, /*core_only=*/true);
  if (!v.overall()) {
    err << to_text(v);
    throw std::runtime_error("certificate does not validate against the host graph");
  }

  std::vector<int> lengths;
  if (all) {
    for (int len = 4; len <= 2 * cert.m(); ++len) lengths.push_back(len);
  } else {
    if (*length < 4 || *length > 2 * cert.m())
      throw std::runtime_error("--length must lie in [4," + std::to_string(2 * cert.m()) + "]");
    lengths.push_back(*length);
  }

  for (int len : lengths) {
    const CycleSeq seq = extract_cycle(cert, len);
    if (!is_cycle_in(seq, host)) {
      err << "extracted cycle of length " << len << " is not a cycle of the host\n";
      return kVerifyError;
    }
    for (std::size_t i = 0; i < seq.verts.size(); ++i)
      out << (i > 0 ? " " : "") << to_label(seq.verts[i], seq.n);
    out << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"augmented cube construction, decomposition and verification", "augcube"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "emit AQ_n as an edge list or DOT");
  int gen_n = 0;
  std::string gen_out, gen_format = "edges";
  gen->add_option("--n", gen_n, "cube dimension")->required();
  gen->add_option("--out", gen_out, "output file (stdout when omitted)");
  gen->add_option("--format", gen_format, "edges|dot")
      ->check(CLI::IsMember({"edges", "dot"}));

  auto* dec = app.add_subcommand("decompose", "split AQ_n into regular spanning subgraphs");
  int dec_n = 0, dec_n1 = 0;
  std::string dec_out;
  dec->add_option("--n", dec_n, "cube dimension")->required();
  dec->add_option("--n1", dec_n1, "regularity of the first side")->required();
  dec->add_option("--out", dec_out, "bundle directory")->required();

  auto* ver = app.add_subcommand("verify", "check a decomposition bundle");
  std::string ver_bundle, ver_mode = "exact";
  std::uint32_t ver_seed = 0;
  int ver_pairs = 0;
  ver->add_option("bundle", ver_bundle, "bundle directory")->required();
  ver->add_option("--mode", ver_mode, "exact|sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  auto* seed_opt = ver->add_option("--seed", ver_seed, "sampling seed");
  auto* pairs_opt = ver->add_option("--pairs", ver_pairs, "sampled pairs per side");

  auto* cyc = app.add_subcommand("cycles", "print cycles read off a ladder certificate");
  std::string cyc_cert, cyc_host;
  int cyc_len = 0;
  bool cyc_all = false;
  cyc->add_option("--cert", cyc_cert, "certificate file")->required();
  cyc->add_option("--host", cyc_host, "host graph edge list")->required();
  auto* len_opt = cyc->add_option("--length", cyc_len, "single cycle length");
  cyc->add_flag("--all", cyc_all, "every length 4..2m");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("augcube");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (gen->parsed()) return cmd_generate(gen_n, gen_out, gen_format, out);
    if (dec->parsed()) return cmd_decompose(dec_n, dec_n1, dec_out, out);
    if (ver->parsed())
      return cmd_verify(ver_bundle, ver_mode,
                        seed_opt->count() ? std::optional<std::uint32_t>(ver_seed) : std::nullopt,
                        pairs_opt->count() ? std::optional<int>(ver_pairs) : std::nullopt, out);
    if (cyc->parsed())
      return cmd_cycles(cyc_cert, cyc_host,
                        len_opt->count() ? std::optional<int>(cyc_len) : std::nullopt, cyc_all,
                        out, err);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace augcube::cli
