#pragma once

// Serializable poset documents, their JSON/DOT renderings and the on-disk
// cache used by the command-line tool.

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadrics/degenerate.hpp"
#include "quadrics/poset.hpp"

namespace quadrics {

enum class PosetKind { weak, bruhat, reverse, induced, bb, bcell };

std::string to_string(PosetKind kind);
PosetKind parse_poset_kind(const std::string& name);

struct PosetDocument {
  PosetKind kind = PosetKind::bruhat;
  int n = 0;
  std::optional<Composition> mu;
  std::vector<std::string> elements;
  /// (lower, upper) index pairs of the Hasse diagram.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<int> ranks;

  /// Indices in range and one rank per element.
  void validate() const;

  friend bool operator==(const PosetDocument&, const PosetDocument&) = default;
};

template <class Element>
PosetDocument make_document(PosetKind kind, int n, std::optional<Composition> mu,
                            const Poset<Element>& poset) {
  PosetDocument doc{kind, n, std::move(mu), {}, poset.covers(), poset.ranks()};
  for (const auto& e : poset.elements()) doc.elements.push_back(e.to_string());
  return doc;
}

/// Compute the document for an order. `mu` is required for weak, reverse and
/// induced; optional for bruhat (absent means all compositions) and bcell.
PosetDocument build_document(PosetKind kind, int n, const std::optional<Composition>& mu);

enum class ExportFormat { dot, json };

ExportFormat parse_export_format(const std::string& name);
std::string export_json(const PosetDocument& doc);
std::string export_dot(const PosetDocument& doc);
std::string export_poset(const PosetDocument& doc, ExportFormat format);
PosetDocument document_from_json(const std::string& text);

/// JSON documents keyed by (kind, n, mu) under a directory. A cache built
/// from an unset or empty environment variable is disabled.
class PosetCache {
 public:
  explicit PosetCache(std::optional<std::filesystem::path> dir);
  /// Reads QUADRICS_CACHE.
  static PosetCache from_environment();

  bool enabled() const { return dir_.has_value(); }
  std::optional<std::filesystem::path> path_for(PosetKind kind, int n, const std::optional<Composition>& mu) const;
  std::optional<PosetDocument> load(PosetKind kind, int n, const std::optional<Composition>& mu) const;
  /// Written to a temporary file first, then renamed into place.
  void store(const PosetDocument& doc) const;
  /// Cached document or freshly built (and stored) one.
  PosetDocument get_or_build(PosetKind kind, int n, const std::optional<Composition>& mu) const;

 private:
  std::optional<std::filesystem::path> dir_;
};

}  // namespace quadrics
