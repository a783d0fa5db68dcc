#include "wsat/graph_io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "wsat/errors.hpp"

namespace wsat {

namespace {

constexpr int kBias = 63;

void append_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw ParseError("graph6: byte out of range");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const std::size_t n = g.order();
  append_order(out, n);
  int bits = 0;
  int acc = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");
  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](int count) {
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw ParseError("graph6: truncated header");
      v = (v << 6) | static_cast<std::uint64_t>(sextet(text[pos++]));
    }
    return v;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  const std::uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes)
    throw ParseError("graph6: expected " + std::to_string(nbytes) + " data bytes, found " +
                     std::to_string(text.size() - pos));
  std::vector<Edge> es;
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  if (nbits % 6 != 0) {
    int last = sextet(text.back());
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(n, std::move(es));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: bad header, expected 'n m'");
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(is >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: endpoint out of range");
    if (u == v) throw ParseError("edge list: self-loop");
    es.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  std::string rest;
  if (is >> rest) throw ParseError("edge list: trailing content");
  try {
    return Graph(static_cast<std::size_t>(n), std::move(es));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

Graph parse_graph_text(std::string_view text) {
  std::string_view body = trim(text);
  std::string_view first = body.substr(0, body.find('\n'));
  std::istringstream line{std::string(first)};
  long long a = 0;
  long long b = 0;
  std::string extra;
  if (line >> a >> b && !(line >> extra)) return from_edge_list(body);
  return from_graph6(first);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

}  // namespace wsat
