#include "gmsrg/graph6.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

#include "gmsrg/error.hpp"

namespace gmsrg::graph6 {
namespace {

constexpr std::uint64_t small_limit = 62;
constexpr std::uint64_t medium_limit = 258047;

[[noreturn]] void parse_fail(const std::string& why) {
  throw Error(Errc::parse_error, "graph6: " + why);
}

void put_bits(std::string& out, std::uint64_t value, int groups) {
  for (int g = groups - 1; g >= 0; --g) {
    out.push_back(static_cast<char>(63 + ((value >> (6 * g)) & 0x3F)));
  }
}

std::uint64_t get_bits(std::string_view text, std::size_t pos, int groups) {
  if (pos + static_cast<std::size_t>(groups) > text.size()) parse_fail("truncated size field");
  std::uint64_t value = 0;
  for (int g = 0; g < groups; ++g) {
    const int c = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(g)]) - 63;
    if (c < 0 || c > 63) parse_fail("byte out of range");
    value = (value << 6) | static_cast<std::uint64_t>(c);
  }
  return value;
}

}  // namespace

std::string encode(const Graph& g) {
  const std::uint64_t n = g.vertex_count();
  std::string out;
  if (n <= small_limit) {
    put_bits(out, n, 1);
  } else if (n <= medium_limit) {
    out.push_back('~');
    put_bits(out, n, 3);
  } else {
    out.append("~~");
    put_bits(out, n, 6);
  }
  int filled = 0;
  unsigned acc = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) parse_fail("empty input");
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = get_bits(text, 0, 1);
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    n = get_bits(text, 2, 6);
    pos = 8;
  } else {
    n = get_bits(text, 1, 3);
    pos = 4;
  }
  if (n > medium_limit) parse_fail("graph too large");
  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t groups = (bits + 5) / 6;
  if (text.size() - pos != groups) parse_fail("body has the wrong length");

  std::vector<BitVec> adj(n, BitVec(n));
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int c = static_cast<unsigned char>(text[pos + k / 6]) - 63;
      if (c < 0 || c > 63) parse_fail("byte out of range");
      if ((c >> (5 - k % 6)) & 1) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) parse_fail("nonzero padding bits");
  }
  std::vector<Point> labels;
  labels.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) labels.push_back(Point{static_cast<std::uint32_t>(i + 1)});
  return Graph(std::move(labels), std::move(adj));
}

std::string encode_labels(const Graph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    out += std::to_string(i) + ' ' + std::to_string(g.label(i).bits) + '\n';
  }
  return out;
}

Graph decode_with_labels(std::string_view graph6_text, std::string_view labels_text) {
  const Graph plain = decode(graph6_text);
  std::vector<Point> labels(plain.vertex_count());
  std::vector<bool> seen(plain.vertex_count(), false);
  std::size_t lines = 0;
  while (!labels_text.empty()) {
    const auto eol = labels_text.find('\n');
    std::string_view line = labels_text.substr(0, eol);
    labels_text.remove_prefix(eol == std::string_view::npos ? labels_text.size() : eol + 1);
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    if (sp == std::string_view::npos) parse_fail("label line without separator");
    std::size_t index = 0;
    std::uint32_t point = 0;
    auto r1 = std::from_chars(line.data(), line.data() + sp, index);
    auto r2 = std::from_chars(line.data() + sp + 1, line.data() + line.size(), point);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r2.ptr != line.data() + line.size()) {
      parse_fail("malformed label line");
    }
    if (index >= labels.size() || seen[index]) parse_fail("bad or repeated vertex index");
    seen[index] = true;
    labels[index] = Point{point};
    ++lines;
  }
  if (lines != labels.size()) parse_fail("label count differs from vertex count");
  return Graph(std::move(labels), std::vector<BitVec>(plain.rows().begin(), plain.rows().end()));
}

}  // namespace gmsrg::graph6
