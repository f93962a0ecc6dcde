#include "sscnet/io.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>
#include <sstream>

namespace sscnet {

using json = nlohmann::ordered_json;

namespace {

Sign parse_sign(const std::string& s, const std::string& where) {
  if (s == "+") return Sign::Positive;
  if (s == "-" || s == "−") return Sign::Negative;
  throw Error(ErrorKind::ValidationError,
              where + ": sign must be \"+\" or \"-\", got \"" + s + "\"");
}

const json& field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorKind::ValidationError, where + ": missing field \"" + key + "\"");
  }
  return *it;
}

}  // namespace

ParsedDocument parse_network(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::SyntaxError, "document root must be an object");
  }
  if (!field(doc, "version", "document").is_string()) {
    throw Error(ErrorKind::ValidationError, "document: version must be a string");
  }

  NetworkSpec spec;
  try {
    for (const auto& v : field(doc, "state_nodes", "document")) {
      spec.state_nodes.push_back(v.get<int>());
    }
    if (doc.contains("input_nodes")) {
      for (const auto& v : doc["input_nodes"]) {
        spec.input_nodes.push_back(v.get<int>());
      }
    }
    if (doc.contains("state_edges")) {
      int k = 0;
      for (const auto& e : doc["state_edges"]) {
        std::string where = "state_edges[" + std::to_string(k++) + "]";
        spec.state_edges.push_back({field(e, "a", where).get<int>(),
                                    field(e, "b", where).get<int>(),
                                    parse_sign(field(e, "sign", where), where)});
      }
    }
    if (doc.contains("input_edges")) {
      int k = 0;
      for (const auto& e : doc["input_edges"]) {
        std::string where = "input_edges[" + std::to_string(k++) + "]";
        spec.input_edges.push_back({field(e, "input", where).get<int>(),
                                    field(e, "target", where).get<int>(),
                                    parse_sign(field(e, "sign", where), where)});
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ValidationError, e.what());
  }

  ParsedDocument out{[&] {
                       try {
                         return build_network(spec);
                       } catch (const Error& e) {
                         throw Error(ErrorKind::ValidationError, e.what());
                       }
                     }(),
                     std::nullopt};

  if (doc.contains("decomposition")) {
    const json& d = doc["decomposition"];
    PactusDecomposition dec;
    try {
      for (const auto& comp : field(d, "components", "decomposition")) {
        dec.components.push_back(comp.get<std::vector<int>>());
      }
      if (d.contains("bridges")) {
        int k = 0;
        for (const auto& b : d["bridges"]) {
          std::string where = "bridges[" + std::to_string(k++) + "]";
          BridgeGraph bg;
          bg.i = field(b, "i", where).get<int>();
          bg.j = field(b, "j", where).get<int>();
          for (const auto& e : field(b, "edges", where)) {
            int a = field(e, "a", where).get<int>();
            int bb = field(e, "b", where).get<int>();
            if (a > bb) std::swap(a, bb);
            Sign s = out.net.has_state_edge(a, bb) ? out.net.state_edge_sign(a, bb)
                                                   : Sign::Positive;
            bg.edges.push_back({a, bb, s});
          }
          dec.bridges.push_back(std::move(bg));
        }
      }
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ValidationError, e.what());
    }
    // Induce per-component edge lists and kinds from the network.
    std::map<int, int> comp_of;
    for (size_t i = 0; i < dec.components.size(); ++i) {
      for (int v : dec.components[i]) comp_of[v] = static_cast<int>(i);
    }
    dec.component_edges.resize(dec.components.size());
    for (const StateEdge& e : out.net.state_edges()) {
      auto a = comp_of.find(e.a);
      auto b = comp_of.find(e.b);
      if (a != comp_of.end() && b != comp_of.end() && a->second == b->second) {
        dec.component_edges[a->second].push_back(e);
      }
    }
    std::vector<std::string> diags;
    if (!validate_decomposition(out.net, dec, &diags)) {
      std::string msg = "invalid decomposition";
      for (const auto& s : diags) msg += "; " + s;
      throw Error(ErrorKind::ValidationError, msg);
    }
    for (const auto& comp : dec.components) {
      std::set<int> nodes(comp.begin(), comp.end());
      dec.kinds.push_back(
          classify_component(detail::induced_subnetwork(out.net, nodes, {}, {})));
    }
    out.decomposition = std::move(dec);
  }
  return out;
}

std::string serialize_network(const SignedNetwork& net,
                              const PactusDecomposition* dec) {
  json doc;
  doc["version"] = "1";
  doc["state_nodes"] = net.state_labels();
  doc["input_nodes"] = net.input_labels();
  doc["state_edges"] = json::array();
  for (const StateEdge& e : net.state_edges()) {
    doc["state_edges"].push_back(
        {{"a", e.a}, {"b", e.b}, {"sign", e.sign == Sign::Positive ? "+" : "-"}});
  }
  doc["input_edges"] = json::array();
  for (const InputEdge& e : net.input_edges()) {
    doc["input_edges"].push_back({{"input", e.input},
                                  {"target", e.target},
                                  {"sign", e.sign == Sign::Positive ? "+" : "-"}});
  }
  if (dec) {
    json d;
    d["components"] = dec->components;
    d["bridges"] = json::array();
    for (const BridgeGraph& b : dec->bridges) {
      json edges = json::array();
      for (const StateEdge& e : b.edges) {
        edges.push_back({{"a", e.a}, {"b", e.b}});
      }
      d["bridges"].push_back({{"i", b.i}, {"j", b.j}, {"edges", edges}});
    }
    doc["decomposition"] = d;
  }
  return doc.dump(2) + "\n";
}

std::string export_dot(const SignedNetwork& net, const SsccReport* ssc,
                       const PlacementResult* placement) {
  std::ostringstream os;
  os << "digraph network {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (int v : net.state_labels()) {
    os << "  \"" << v << "\"";
    std::vector<std::string> attrs;
    if (ssc && ssc->ssc_state_nodes.count(v)) {
      attrs.push_back("style=filled");
      attrs.push_back("fillcolor=lightblue");
    }
    if (ssc && ssc->witness_alpha && ssc->witness_alpha->count(v)) {
      attrs.push_back("color=red");
      attrs.push_back("penwidth=2");
    }
    if (!attrs.empty()) {
      os << " [";
      for (size_t i = 0; i < attrs.size(); ++i) {
        os << (i ? ", " : "") << attrs[i];
      }
      os << "]";
    }
    os << ";\n";
  }
  for (int u : net.input_labels()) {
    os << "  \"u" << u << "\" [shape=square];\n";
  }
  if (placement) {
    for (const auto& [u, t] : placement->attachments) {
      os << "  \"u" << u << "\" [shape=square, style=dashed];\n";
    }
  }
  for (const StateEdge& e : net.state_edges()) {
    os << "  \"" << e.a << "\" -> \"" << e.b << "\" [dir=none, label=\""
       << (e.sign == Sign::Positive ? "+" : "-") << "\"];\n";
  }
  for (const InputEdge& e : net.input_edges()) {
    os << "  \"u" << e.input << "\" -> \"" << e.target << "\" [label=\""
       << (e.sign == Sign::Positive ? "+" : "-") << "\"];\n";
  }
  if (placement) {
    for (const auto& [u, t] : placement->attachments) {
      os << "  \"u" << u << "\" -> \"" << t << "\" [label=\"+\", style=dashed];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setfill('0') << std::setw(16) << h;
  return os.str();
}

}  // namespace sscnet
