#pragma once

#include <optional>
#include <string>

#include "sscnet/components.hpp"
#include "sscnet/graph.hpp"
#include "sscnet/placement.hpp"
#include "sscnet/ssc.hpp"

namespace sscnet {

struct ParsedDocument {
  SignedNetwork net;
  std::optional<PactusDecomposition> decomposition;
};

/// Parses a network document (JSON, version field mandatory) and validates it.
/// Throws Error(SyntaxError) for malformed text and Error(ValidationError)
/// for documents that do not describe a valid network or decomposition.
ParsedDocument parse_network(const std::string& text);

/// Inverse of parse_network; stable field order, signs written as "+"/"-".
std::string serialize_network(const SignedNetwork& net,
                              const PactusDecomposition* dec = nullptr);

/// Graph description text: undirected state edges, directed input edges,
/// signs as edge labels. With a report, SSC state nodes are filled and the
/// witness subset outlined; with a placement, its inputs are drawn dashed.
std::string export_dot(const SignedNetwork& net,
                       const SsccReport* ssc = nullptr,
                       const PlacementResult* placement = nullptr);

/// FNV-1a 64-bit content digest, as "fnv1a64:<hex>".
std::string digest(const std::string& bytes);

}  // namespace sscnet
