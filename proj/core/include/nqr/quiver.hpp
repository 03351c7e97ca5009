#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nqr {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

struct Arrow {
  std::string name;
  VertexId source = 0;
  VertexId target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A finite quiver. Doubling produces a new quiver in which the arrow with
// id 2i is the i-th original arrow and 2i+1 is its star.
class Quiver {
 public:
  Quiver(std::string name, std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::string& name() const noexcept { return name_; }
  bool is_doubled() const noexcept { return doubled_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  std::size_t original_arrow_count() const noexcept {
    return doubled_ ? arrows_.size() / 2 : arrows_.size();
  }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  VertexId source(ArrowId a) const { return arrows_[a].source; }
  VertexId target(ArrowId a) const { return arrows_[a].target; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  // doubled quivers only
  ArrowId star(ArrowId a) const;
  bool is_star(ArrowId a) const { return doubled_ && (a & 1u); }
  // id of the underlying arrow of Q inside this quiver (a itself if undoubled)
  ArrowId base_arrow(ArrowId a) const { return doubled_ ? (a & ~1u) : a; }
  // index of the underlying arrow of Q in 0..original_arrow_count()-1
  std::size_t original_index(ArrowId a) const { return doubled_ ? a / 2 : a; }
  // ids (in this quiver) of the arrows of Q
  std::vector<ArrowId> original_arrows() const;

  // {x, y} on generators: 1 if y = x* with x original, -1 if x = y* with y
  // original, 0 otherwise
  int pairing(ArrowId x, ArrowId y) const;

  Quiver doubled() const;
  // the underlying undoubled quiver
  Quiver undoubled() const;

  // structural hash, used to tag algebra elements
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.name_ == b.name_ && a.doubled_ == b.doubled_ && a.vertices_ == b.vertices_ &&
           a.arrows_ == b.arrows_;
  }

 private:
  Quiver() = default;
  void compute_fingerprint();

  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  bool doubled_ = false;
  std::uint64_t fingerprint_ = 0;
};

Quiver double_quiver(const Quiver& q);

struct DimVector {
  std::vector<int> d;

  DimVector() = default;
  explicit DimVector(std::vector<int> v);
  std::size_t size() const noexcept { return d.size(); }
  int operator[](std::size_t i) const { return d.at(i); }
  int total() const noexcept;
  std::string str() const;  // "2" or "1,1"
  static DimVector parse(std::string_view text);
  friend bool operator==(const DimVector&, const DimVector&) = default;
};

// throws DimensionMismatch unless alpha has one entry per vertex
void check_dimension(const Quiver& q, const DimVector& alpha);

// 1 + sum_a alpha_s(a) alpha_t(a) - sum_i alpha_i^2 over the arrows of Q
long long p_value(const Quiver& q, const DimVector& alpha);

// base vertex s(w_1) of a closed composable word; throws InvalidCycle
VertexId validate_cycle(const Quiver& q, std::span<const ArrowId> word);

// arrow names to ids; throws QuiverError on unknown names
std::vector<ArrowId> word_from_names(const Quiver& q, const std::vector<std::string>& names);

Quiver jordan_quiver();
Quiver a2_quiver();
std::optional<Quiver> builtin_quiver(std::string_view name);

// Text format:
//   [quiver]            optional; keys: name, doubled (yes|no)
//   [vertices]          one vertex name per line
//   [arrows]            lines "name = source -> target"
// '#' starts a comment. Arrow names of the doubled quiver are never written.
Quiver parse_quiver(std::string_view text);
std::string serialize_quiver(const Quiver& q);
Quiver load_quiver_file(const std::string& path);

}  // namespace nqr
