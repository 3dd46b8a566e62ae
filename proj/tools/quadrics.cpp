// quadrics: command-line front end to the library.
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadrics/bbcells.hpp"
#include "quadrics/bruhat.hpp"
#include "quadrics/degenerate.hpp"
#include "quadrics/document.hpp"
#include "quadrics/gkm.hpp"
#include "quadrics/notation.hpp"
#include "quadrics/rs_monoid.hpp"
#include "quadrics/verify.hpp"

namespace {

using namespace quadrics;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Usage errors detected after CLI11 has accepted the arguments.
struct UsageError : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << std::flush;
    return;
  }
  const std::filesystem::path path(out_path);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<Composition> optional_mu(const std::string& text, int n) {
  if (text.empty()) return std::nullopt;
  auto mu = parse_composition(text);
  if (n >= 0 && mu.n() != n) {
    throw UsageError("--mu " + mu.to_string() + " does not sum to --n " + std::to_string(n));
  }
  return mu;
}

std::string join_weights(const std::vector<Weight>& weights) {
  std::string out;
  for (const auto& w : weights) {
    if (!out.empty()) out += "; ";
    out += w.to_string();
  }
  return out.empty() ? "(none)" : out;
}

// ------------------------------------------------------------- subcommands

struct EnumerateArgs {
  int n = -1;
  std::string mu;
  std::string kind = "mu-involutions";
};

int run_enumerate(const EnumerateArgs& args) {
  const auto mu = optional_mu(args.mu, args.n);
  if (!mu && args.n < 0) throw UsageError("enumerate needs --n or --mu");
  std::ostringstream os;
  if (args.kind == "barred") {
    const auto list = mu ? enumerate_barred_mu(*mu) : enumerate_barred(args.n);
    for (const auto& g : list) os << render(g) << "\n";
  } else {
    const auto list = mu ? enumerate_mu_involutions(*mu) : enumerate_degenerate(args.n);
    for (const auto& p : list) os << render(p) << "\n";
  }
  emit(os.str(), "");
  return kExitOk;
}

int run_count(int n) {
  const auto c = count_barred(n);
  std::ostringstream os;
  os << "n = " << n << "\n";
  os << "barred permutations (recurrence):  " << c.recurrence << "\n";
  os << "barred permutations (closed form): " << c.closed_form << "\n";
  if (n <= kDefaultEnumerationBound) {
    os << "barred permutations (enumerated):  " << enumerate_barred(n).size() << "\n";
    os << "degenerate involutions:            " << enumerate_degenerate(n).size() << "\n";
  }
  emit(os.str(), "");
  return c.recurrence == c.closed_form ? kExitOk : kExitFailed;
}

struct PosetArgs {
  std::string order;
  int n = -1;
  std::string mu;
  std::string format = "dot";
  std::string out;
};

int run_poset(const PosetArgs& args) {
  const auto kind = parse_poset_kind(args.order);
  const auto format = parse_export_format(args.format);
  const auto mu = optional_mu(args.mu, args.n);
  const int n = args.n >= 0 ? args.n : (mu ? mu->n() : -1);
  if (n < 0) throw UsageError("poset needs --n or --mu");
  const auto doc = PosetCache::from_environment().get_or_build(kind, n, mu);
  emit(export_poset(doc, format), args.out);
  return kExitOk;
}

struct WsetArgs {
  std::string pi;
  std::string rho;
  std::string direction;
};

int run_wset(const WsetArgs& args) {
  const auto pi = parse_degenerate_involution(args.pi);
  WSet result;
  if (!args.rho.empty()) {
    result = wset(pi, parse_degenerate_involution(args.rho));
  } else if (args.direction == "reverse") {
    result = rev_wset(pi);
  } else {
    result = wset_to_max(pi);
  }
  std::ostringstream os;
  for (const auto& w : result) os << render(w) << "\n";
  emit(os.str(), "");
  return kExitOk;
}

int run_cells(int n, const std::string& format) {
  const auto records = cells(n);
  if (format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& c : records) {
      ordered_json entry;
      entry["fixed_point"] = render(c.fixed_point);
      entry["dense"] = render(c.dense);
      entry["dimension"] = c.dimension;
      entry["members"] = ordered_json::array();
      for (const auto& m : c.members) entry["members"].push_back(render(m));
      j.push_back(std::move(entry));
    }
    emit(j.dump(2) + "\n", "");
    return kExitOk;
  }
  if (format != "text") throw UsageError("unknown format '" + format + "'");
  std::ostringstream os;
  os << "# tau: orbit -> fixed point\n";
  for (const auto& pi : enumerate_degenerate(n)) os << render(pi) << " -> " << render(tau(pi)) << "\n";
  os << "\n# sigma: fixed point -> dense orbit, cell dimension, members\n";
  for (const auto& c : records) {
    os << render(c.fixed_point) << " -> " << render(c.dense) << "  dim " << c.dimension << "  {";
    for (std::size_t k = 0; k < c.members.size(); ++k) os << (k ? ", " : "") << render(c.members[k]);
    os << "}\n";
  }
  emit(os.str(), "");
  return kExitOk;
}

int run_gkm(const std::string& text) {
  const auto gamma = parse_barred(text);
  const auto reduction = reduce_to_special(gamma);
  const auto I = i_of(gamma);
  std::ostringstream os;
  os << "gamma: " << render(gamma) << "\n";
  os << "I: {";
  bool first = true;
  for (int i : I.indices()) {
    os << (first ? "" : ", ") << "alpha_" << i;
    first = false;
  }
  os << "}\n";
  os << "w_I: " << render(longest_parabolic_element(I)) << "\n";
  const bool special = is_special(gamma);
  if (!special) {
    os << "special representative: " << render(reduction.special) << " (w = " << render(reduction.w) << ")\n";
  }
  const auto data = special ? tangent_weights(gamma) : translated_tangent_weights(gamma);
  os << "Phi_h: " << join_weights(data.horizontal) << "\n";
  os << "Phi_v: " << join_weights(data.vertical) << "\n";
  os << "Phi_n: " << join_weights(data.normal) << "\n";
  os << "tangent dimension: " << data.dimension() << "\n";
  if (special) {
    os << "curve endpoints:\n";
    auto list = [&](const char* label, const std::vector<Weight>& weights) {
      for (const auto& delta : weights) {
        os << "  " << label << " " << delta.to_string() << ": ";
        try {
          const auto ends = curve_other_fixed_points(gamma, delta);
          bool sep = false;
          for (const auto& e : ends) {
            os << (sep ? ", " : "") << render(e);
            sep = true;
          }
          os << "\n";
        } catch (const UnsupportedOpenProblem&) {
          os << "unknown\n";
        }
      }
    };
    list("h", data.horizontal);
    list("v", data.vertical);
    list("n", data.normal);
  }
  emit(os.str(), "");
  return kExitOk;
}

int run_verify(const std::string& suite, int max_n) {
  const auto report = run_suite(suite, max_n);
  emit(report.to_json(), "");
  return report.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of complete quadrics: orbits, orders, cells and tangent weights"};
  app.require_subcommand(1);

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List degenerate involutions or barred permutations");
  enumerate->add_option("--n", enum_args.n, "Size n")->check(CLI::Range(0, kDefaultEnumerationBound));
  enumerate->add_option("--mu", enum_args.mu, "Composition, e.g. 3,1");
  enumerate->add_option("--kind", enum_args.kind, "What to list")
      ->check(CLI::IsMember({"mu-involutions", "barred"}));

  int count_n = 0;
  auto* count = app.add_subcommand("count", "Count barred permutations (torus-fixed points)");
  count->add_option("--n", count_n, "Size n")->required()->check(CLI::Range(0, 1000));

  PosetArgs poset_args;
  auto* poset = app.add_subcommand("poset", "Export an order as DOT or JSON");
  poset->add_option("--order", poset_args.order, "Which order")
      ->required()
      ->check(CLI::IsMember({"weak", "bruhat", "reverse", "induced", "bb", "bcell"}));
  poset->add_option("--n", poset_args.n, "Size n")->check(CLI::Range(0, kDefaultPosetBound));
  poset->add_option("--mu", poset_args.mu, "Composition, e.g. 3,1");
  poset->add_option("--format", poset_args.format, "Output format")->check(CLI::IsMember({"dot", "json"}));
  poset->add_option("--out", poset_args.out, "Output path (default stdout)");

  WsetArgs wset_args;
  auto* wset_cmd = app.add_subcommand("wset", "W-sets of a degenerate involution");
  wset_cmd->add_option("--pi", wset_args.pi, "Source involution, e.g. 21|3")->required();
  auto* rho_opt = wset_cmd->add_option("--rho", wset_args.rho, "Target involution");
  wset_cmd->add_option("--direction", wset_args.direction, "forward: W(pi); reverse: W^-1(pi)")
      ->check(CLI::IsMember({"forward", "reverse"}))
      ->excludes(rho_opt);

  int cells_n = 0;
  std::string cells_format = "text";
  auto* cells_cmd = app.add_subcommand("cells", "Cells, tau/sigma tables and dimensions");
  cells_cmd->add_option("--n", cells_n, "Size n")->required()->check(CLI::Range(0, 7));
  cells_cmd->add_option("--format", cells_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string gamma_text;
  auto* gkm = app.add_subcommand("gkm", "Tangent weights and curve endpoints at a fixed point");
  gkm->add_option("--gamma", gamma_text, "Barred permutation, e.g. 21|3")->required();

  std::string suite = "all";
  int max_n = 4;
  auto* verify = app.add_subcommand("verify", "Run self-checks and print a JSON report");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", max_n, "Largest n to check")->check(CLI::Range(0, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return run_enumerate(enum_args);
    if (*count) return run_count(count_n);
    if (*poset) return run_poset(poset_args);
    if (*wset_cmd) return run_wset(wset_args);
    if (*cells_cmd) return run_cells(cells_n, cells_format);
    if (*gkm) return run_gkm(gamma_text);
    if (*verify) return run_verify(suite, max_n);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
