#include "quadrics/document.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "quadrics/bbcells.hpp"
#include "quadrics/bruhat.hpp"
#include "quadrics/rs_monoid.hpp"

namespace quadrics {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::map<std::string, PosetKind>& kind_names() {
  static const std::map<std::string, PosetKind> names{
      {"weak", PosetKind::weak},   {"bruhat", PosetKind::bruhat}, {"reverse", PosetKind::reverse},
      {"induced", PosetKind::induced}, {"bb", PosetKind::bb},     {"bcell", PosetKind::bcell},
  };
  return names;
}

const Composition& require_mu(const std::optional<Composition>& mu, PosetKind kind) {
  if (!mu) throw InvalidArgument("the " + to_string(kind) + " order needs a composition");
  return *mu;
}

std::string mu_tag(const std::optional<Composition>& mu) {
  if (!mu) return "all";
  std::string tag;
  for (std::size_t j = 0; j < mu->size(); ++j) {
    if (j) tag += '-';
    tag += std::to_string((*mu)[j]);
  }
  return tag;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_string(PosetKind kind) {
  for (const auto& [name, k] : kind_names()) {
    if (k == kind) return name;
  }
  return "unknown";
}

PosetKind parse_poset_kind(const std::string& name) {
  auto it = kind_names().find(name);
  if (it == kind_names().end()) throw InvalidArgument("unknown order '" + name + "'");
  return it->second;
}

void PosetDocument::validate() const {
  if (ranks.size() != elements.size()) throw InvalidArgument("document ranks do not match elements");
  for (auto [lo, hi] : covers) {
    if (lo >= elements.size() || hi >= elements.size() || lo == hi) {
      throw InvalidArgument("document cover index out of range");
    }
  }
  if (mu && mu->n() != n) throw InvalidArgument("document composition does not match n");
}

PosetDocument build_document(PosetKind kind, int n, const std::optional<Composition>& mu) {
  if (mu && mu->n() != n) {
    throw InvalidArgument("composition " + mu->to_string() + " does not sum to " + std::to_string(n));
  }
  switch (kind) {
    case PosetKind::weak:
      return make_document(kind, n, mu, weak_order(require_mu(mu, kind)).poset());
    case PosetKind::bruhat:
      if (mu) return make_document(kind, n, mu, bruhat_poset(*mu));
      return make_document(kind, n, mu, full_poset(n));
    case PosetKind::reverse:
      return make_document(kind, n, mu, reverse_bruhat_poset(require_mu(mu, kind)));
    case PosetKind::induced:
      return make_document(kind, n, mu, induced_order(require_mu(mu, kind)));
    case PosetKind::bb:
      if (mu) throw InvalidArgument("the bb order covers all compositions; drop --mu");
      return make_document(kind, n, mu, bb_order(n));
    case PosetKind::bcell:
      return make_document(kind, n, mu, bcell_conjecture_check(n, mu).poset);
  }
  throw InvalidArgument("unknown order");
}

std::string export_json(const PosetDocument& doc) {
  doc.validate();
  ordered_json j;
  j["kind"] = to_string(doc.kind);
  j["n"] = doc.n;
  j["mu"] = doc.mu ? ordered_json(doc.mu->parts()) : ordered_json(nullptr);
  j["elements"] = doc.elements;
  ordered_json covers = ordered_json::array();
  for (auto [lo, hi] : doc.covers) covers.push_back({lo, hi});
  j["covers"] = covers;
  j["ranks"] = doc.ranks;
  return j.dump(2) + "\n";
}

PosetDocument document_from_json(const std::string& text) {
  PosetDocument doc;
  try {
    const auto j = ordered_json::parse(text);
    doc.kind = parse_poset_kind(j.at("kind").get<std::string>());
    doc.n = j.at("n").get<int>();
    if (!j.at("mu").is_null()) doc.mu = Composition(j.at("mu").get<std::vector<int>>());
    doc.elements = j.at("elements").get<std::vector<std::string>>();
    for (const auto& c : j.at("covers")) doc.covers.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    doc.ranks = j.at("ranks").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed poset document: ") + e.what());
  }
  doc.validate();
  return doc;
}

std::string export_dot(const PosetDocument& doc) {
  doc.validate();
  std::ostringstream os;
  os << "digraph \"" << to_string(doc.kind) << "_n" << doc.n << "_" << mu_tag(doc.mu) << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t k = 0; k < doc.elements.size(); ++k) {
    os << "  n" << k << " [label=\"" << dot_escape(doc.elements[k]) << "\"];\n";
  }
  std::map<int, std::vector<std::size_t>> levels;
  for (std::size_t k = 0; k < doc.ranks.size(); ++k) levels[doc.ranks[k]].push_back(k);
  for (const auto& [rank, members] : levels) {
    os << "  { rank=same;";
    for (std::size_t k : members) os << " n" << k << ";";
    os << " }  // rank " << rank << "\n";
  }
  for (auto [lo, hi] : doc.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

ExportFormat parse_export_format(const std::string& name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  throw InvalidArgument("unknown format '" + name + "'");
}

std::string export_poset(const PosetDocument& doc, ExportFormat format) {
  return format == ExportFormat::dot ? export_dot(doc) : export_json(doc);
}

// ------------------------------------------------------------------ cache

PosetCache::PosetCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

PosetCache PosetCache::from_environment() {
  const char* env = std::getenv("QUADRICS_CACHE");
  if (env == nullptr || *env == '\0') return PosetCache(std::nullopt);
  return PosetCache(std::filesystem::path(env));
}

std::optional<std::filesystem::path> PosetCache::path_for(PosetKind kind, int n,
                                                          const std::optional<Composition>& mu) const {
  if (!dir_) return std::nullopt;
  return *dir_ / (to_string(kind) + "_n" + std::to_string(n) + "_" + mu_tag(mu) + ".json");
}

std::optional<PosetDocument> PosetCache::load(PosetKind kind, int n, const std::optional<Composition>& mu) const {
  const auto path = path_for(kind, n, mu);
  if (!path || !std::filesystem::exists(*path)) return std::nullopt;
  std::ifstream in(*path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    auto doc = document_from_json(buf.str());
    if (doc.kind != kind || doc.n != n || doc.mu != mu) return std::nullopt;
    return doc;
  } catch (const InvalidArgument&) {
    return std::nullopt;  // unreadable entries are rebuilt
  }
}

void PosetCache::store(const PosetDocument& doc) const {
  const auto path = path_for(doc.kind, doc.n, doc.mu);
  if (!path) return;
  std::filesystem::create_directories(path->parent_path());
  auto tmp = *path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << export_json(doc);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, *path);
}

PosetDocument PosetCache::get_or_build(PosetKind kind, int n, const std::optional<Composition>& mu) const {
  if (auto cached = load(kind, n, mu)) return *cached;
  auto doc = build_document(kind, n, mu);
  store(doc);
  return doc;
}

}  // namespace quadrics
