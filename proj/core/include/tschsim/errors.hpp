#pragma once

#include <stdexcept>
#include <string>

namespace tschsim {

/// Topology construction or validation failed (e.g. a node layout that
/// yields zero usable links).
class TopologyError : public std::runtime_error {
 public:
  explicit TopologyError(const std::string& what) : std::runtime_error(what) {}
};

/// The number of independent sets exceeds the configured catalog cap.
class CatalogOverflowError : public std::runtime_error {
 public:
  CatalogOverflowError(std::size_t cap, std::size_t n_vertices)
      : std::runtime_error("independent-set catalog exceeds cap " + std::to_string(cap) +
                           " on a collision graph with " + std::to_string(n_vertices) +
                           " vertices; reduce the topology or raise catalog_cap"),
        cap(cap),
        n_vertices(n_vertices) {}

  std::size_t cap;
  std::size_t n_vertices;
};

/// Configuration errors carry a kind so the CLI can map them to distinct
/// exit codes.
class ConfigError : public std::runtime_error {
 public:
  enum class Kind { missing_file, unknown_key, out_of_range };

  ConfigError(Kind kind, const std::string& what) : std::runtime_error(what), kind(kind) {}

  Kind kind;
};

}  // namespace tschsim
