#pragma once

// JSON / CSV / DOT encodings and the on-disk canonical cache.

#include "qschur/canonical.hpp"
#include "qschur/crystal.hpp"
#include "qschur/transfer.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace qschur {

using Json = nlohmann::json;

/// {"-1":1,"1":1} for v + v^-1; coefficients beyond 64 bits become strings.
Json to_json(const Laurent& x);
Laurent laurent_from_json(const Json& j);

Json to_json(const FlagSymbol& p);
FlagSymbol flag_from_json(const Json& j);

Json to_json(const PeriodicMatrix& s);
PeriodicMatrix matrix_from_json(const Json& j);
/// "n=2;{(1,1):1,(1,2):1}" as printed by PeriodicMatrix::to_text.
PeriodicMatrix parse_matrix_text(const std::string& text);

Json to_json(const ModuleVector& x);
ModuleVector module_vector_from_json(const Json& j);

Json to_json(const SchurElement& x);
SchurElement schur_from_json(const Json& j);

/// Expansion with KL pairs per term.
Json to_json(const CanonicalT& b);
Json to_json(const CanonicalS& b);
CanonicalT canonical_t_from_json(const Json& j);
CanonicalS canonical_s_from_json(const Json& j);

/// Columns: leading, term, coefficient (JSON), kl_pairs (JSON).
std::string canonical_csv(const std::vector<CanonicalT>& table);
std::string canonical_csv(const std::vector<CanonicalS>& table);
/// Rows of a CSV text (RFC 4180 quoting).
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

Json to_json(const CrystalGraph& g);
CrystalGraph crystal_graph_from_json(const Json& j);
std::string to_dot(const CrystalGraph& g);

Json to_json(const TransferRecord& r);

/// One JSON file per (n, D, lambda) for T_D and per (n, D, lambda, mu) for S_D.
class CanonicalDiskCache {
public:
  explicit CanonicalDiskCache(std::filesystem::path root) : root_(std::move(root)) {}
  std::optional<CanonicalT> find(const FlagSymbol& p) const;
  std::optional<CanonicalS> find(const PeriodicMatrix& s) const;
  void store(const CanonicalT& b) const;
  void store(const CanonicalS& b) const;
  std::filesystem::path file_for(const FlagSymbol& p) const;
  std::filesystem::path file_for(const PeriodicMatrix& s) const;

private:
  Json load(const std::filesystem::path& f) const;
  void save(const std::filesystem::path& f, const Json& j) const;
  std::filesystem::path root_;
};

} // namespace qschur
