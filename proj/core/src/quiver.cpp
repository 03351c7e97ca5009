#include "nqr/quiver.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "nqr/error.hpp"

namespace nqr {
namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h * 0x100000001b3ull;
}

std::uint64_t hash_string(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) h = mix(h, c);
  return mix(h, 0xff);
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '.' || c == '\'';
  });
}

}  // namespace

Quiver::Quiver(std::string name, std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : name_(std::move(name)), vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!valid_name(v)) throw QuiverError(fmt::format("invalid vertex name '{}'", v));
    if (!seen.insert(v).second) throw QuiverError(fmt::format("duplicate vertex '{}'", v));
  }
  for (const auto& a : arrows_) {
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw QuiverError(fmt::format("arrow '{}' refers to an unknown vertex", a.name));
    if (a.name.empty()) throw QuiverError("empty arrow name");
  }
  compute_fingerprint();
}

void Quiver::compute_fingerprint() {
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = mix(h, doubled_ ? 1 : 0);
  for (const auto& v : vertices_) h = hash_string(h, v);
  for (const auto& a : arrows_) {
    h = hash_string(h, a.name);
    h = mix(mix(h, a.source), a.target);
  }
  fingerprint_ = h == 0 ? 1 : h;
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return static_cast<VertexId>(i);
  return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return static_cast<ArrowId>(i);
  return std::nullopt;
}

ArrowId Quiver::star(ArrowId a) const {
  if (!doubled_) throw QuiverError("star requires a doubled quiver");
  return a ^ 1u;
}

std::vector<ArrowId> Quiver::original_arrows() const {
  std::vector<ArrowId> out;
  for (std::size_t i = 0; i < original_arrow_count(); ++i)
    out.push_back(static_cast<ArrowId>(doubled_ ? 2 * i : i));
  return out;
}

int Quiver::pairing(ArrowId x, ArrowId y) const {
  if (!doubled_ || (x ^ 1u) != y) return 0;
  return is_star(x) ? -1 : 1;
}

Quiver Quiver::doubled() const {
  if (doubled_) throw QuiverError("quiver is already doubled");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.name.find('*') != std::string::npos)
      throw QuiverError(fmt::format("arrow name '{}' collides with generated star names", a.name));
    if (!names.insert(a.name).second)
      throw QuiverError(fmt::format("duplicate arrow name '{}'", a.name));
  }
  for (const auto& v : vertices_)
    if (names.count(v)) throw QuiverError(fmt::format("name '{}' used for a vertex and an arrow", v));
  Quiver d;
  d.name_ = name_;
  d.vertices_ = vertices_;
  d.doubled_ = true;
  for (const auto& a : arrows_) {
    d.arrows_.push_back(a);
    d.arrows_.push_back(Arrow{a.name + "*", a.target, a.source});
  }
  d.compute_fingerprint();
  return d;
}

Quiver Quiver::undoubled() const {
  if (!doubled_) return *this;
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < arrows_.size(); i += 2) arrows.push_back(arrows_[i]);
  return Quiver(name_, vertices_, std::move(arrows));
}

Quiver double_quiver(const Quiver& q) { return q.doubled(); }

DimVector::DimVector(std::vector<int> v) : d(std::move(v)) {
  for (int x : d)
    if (x < 0) throw DimensionMismatch("dimension vector entries must be nonnegative");
}

int DimVector::total() const noexcept {
  int t = 0;
  for (int x : d) t += x;
  return t;
}

std::string DimVector::str() const { return fmt::format("{}", fmt::join(d, ",")); }

DimVector DimVector::parse(std::string_view text) {
  std::vector<int> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto part = text.substr(pos, comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    int x = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
    if (ec != std::errc() || p != part.data() + part.size() || part.empty())
      throw DimensionMismatch(fmt::format("malformed dimension vector '{}'", text));
    v.push_back(x);
    pos = comma + 1;
  }
  return DimVector(std::move(v));
}

void check_dimension(const Quiver& q, const DimVector& alpha) {
  if (alpha.size() != q.vertex_count())
    throw DimensionMismatch(fmt::format("dimension vector has {} entries, quiver has {} vertices",
                                        alpha.size(), q.vertex_count()));
}

long long p_value(const Quiver& q, const DimVector& alpha) {
  check_dimension(q, alpha);
  long long p = 1;
  for (ArrowId a : q.original_arrows())
    p += static_cast<long long>(alpha[q.source(a)]) * alpha[q.target(a)];
  for (int x : alpha.d) p -= static_cast<long long>(x) * x;
  return p;
}

VertexId validate_cycle(const Quiver& q, std::span<const ArrowId> word) {
  if (word.empty()) throw InvalidCycle("empty word is not a cycle; use an idempotent");
  for (ArrowId a : word)
    if (a >= q.arrow_count()) throw InvalidCycle(fmt::format("unknown arrow id {}", a));
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (q.target(word[i]) != q.source(word[i + 1]))
      throw InvalidCycle(fmt::format("arrows '{}' and '{}' do not compose",
                                     q.arrow(word[i]).name, q.arrow(word[i + 1]).name));
  }
  if (q.target(word.back()) != q.source(word.front()))
    throw InvalidCycle(fmt::format("word does not close: '{}' ends at '{}', '{}' starts at '{}'",
                                   q.arrow(word.back()).name,
                                   q.vertex_name(q.target(word.back())),
                                   q.arrow(word.front()).name,
                                   q.vertex_name(q.source(word.front()))));
  return q.source(word.front());
}

std::vector<ArrowId> word_from_names(const Quiver& q, const std::vector<std::string>& names) {
  std::vector<ArrowId> w;
  for (const auto& n : names) {
    auto a = q.find_arrow(n);
    if (!a) throw QuiverError(fmt::format("unknown arrow '{}'", n));
    w.push_back(*a);
  }
  return w;
}

Quiver jordan_quiver() { return Quiver("jordan", {"v"}, {Arrow{"a", 0, 0}}); }

Quiver a2_quiver() { return Quiver("a2", {"v1", "v2"}, {Arrow{"a", 0, 1}}); }

std::optional<Quiver> builtin_quiver(std::string_view name) {
  if (name == "jordan") return jordan_quiver();
  if (name == "a2") return a2_quiver();
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  enum class Section { None, Quiver, Vertices, Arrows } section = Section::None;
  std::string name = "quiver";
  bool doubled = false;
  std::vector<std::string> vertices;
  struct PendingArrow {
    std::string name, source, target;
    int line;
  };
  std::vector<PendingArrow> pending;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    auto hash = raw.find('#');
    auto line = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    auto err = [&](const std::string& what) { return ParseError(what, lineno, 1); };
    if (line.front() == '[') {
      if (line.back() != ']') throw err("unterminated section header");
      auto s = trim(line.substr(1, line.size() - 2));
      if (s == "quiver") section = Section::Quiver;
      else if (s == "vertices") section = Section::Vertices;
      else if (s == "arrows") section = Section::Arrows;
      else throw err(fmt::format("unknown section '{}'", s));
      continue;
    }
    switch (section) {
      case Section::None:
        throw err("content outside of a section");
      case Section::Quiver: {
        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw err("expected 'key = value'");
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (key == "name") {
          name = std::string(value);
        } else if (key == "doubled") {
          if (value == "yes") doubled = true;
          else if (value == "no") doubled = false;
          else throw err("doubled must be 'yes' or 'no'");
        } else {
          throw err(fmt::format("unknown key '{}'", key));
        }
        break;
      }
      case Section::Vertices:
        vertices.emplace_back(line);
        break;
      case Section::Arrows: {
        auto eq = line.find('=');
        auto arrow = line.find("->");
        if (eq == std::string_view::npos || arrow == std::string_view::npos || arrow < eq)
          throw err("expected 'name = source -> target'");
        pending.push_back(PendingArrow{std::string(trim(line.substr(0, eq))),
                                       std::string(trim(line.substr(eq + 1, arrow - eq - 1))),
                                       std::string(trim(line.substr(arrow + 2))), lineno});
        break;
      }
    }
  }
  std::vector<Arrow> arrows;
  auto find = [&](const std::string& v, int line) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return static_cast<VertexId>(i);
    throw ParseError(fmt::format("unknown vertex '{}'", v), line, 1);
  };
  for (const auto& p : pending) arrows.push_back(Arrow{p.name, find(p.source, p.line), find(p.target, p.line)});
  Quiver q(name, std::move(vertices), std::move(arrows));
  return doubled ? q.doubled() : q;
}

std::string serialize_quiver(const Quiver& q) {
  std::ostringstream out;
  out << "[quiver]\nname = " << q.name() << "\ndoubled = " << (q.is_doubled() ? "yes" : "no")
      << "\n\n[vertices]\n";
  for (const auto& v : q.vertex_names()) out << v << "\n";
  out << "\n[arrows]\n";
  for (ArrowId a : q.original_arrows())
    out << q.arrow(a).name << " = " << q.vertex_name(q.source(a)) << " -> "
        << q.vertex_name(q.target(a)) << "\n";
  return out.str();
}

Quiver load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw QuiverError(fmt::format("cannot open quiver file '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

}  // namespace nqr
