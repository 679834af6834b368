#ifndef HOCHSCHILD_QUIVER_HPP_
#define HOCHSCHILD_QUIVER_HPP_

// Finite quivers and their paths.
//
// Paths compose diagram-style: compose(p, q) is "p then q" and is defined
// when target(p) == source(q). Reported slices follow the usual convention
// in which slice (y, x) is spanned by the paths from x to y.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"

namespace hochschild {

  enum class VertexId : std::size_t {};
  enum class ArrowId : std::size_t {};

  constexpr std::size_t index(VertexId v) noexcept {
    return static_cast<std::size_t>(v);
  }
  constexpr std::size_t index(ArrowId a) noexcept {
    return static_cast<std::size_t>(a);
  }

  struct Arrow {
    std::string name;
    VertexId    source;
    VertexId    target;

    bool operator==(Arrow const&) const = default;
  };

  //! Unvalidated arrow description, endpoints given by vertex name.
  struct ArrowSpec {
    std::string name;
    std::string source;
    std::string target;
  };

  struct QuiverDescription {
    std::vector<std::string> vertices;
    std::vector<ArrowSpec>   arrows;
  };

  //! Throws Error on a dangling endpoint, a duplicate vertex or arrow name,
  //! an empty name, or an empty vertex set.
  inline void validate(QuiverDescription const& d) {
    if (d.vertices.empty()) {
      throw Error(ErrorKind::empty_vertex_set);
    }
    std::unordered_set<std::string> seen;
    for (auto const& v : d.vertices) {
      if (v.empty()) {
        throw Error(ErrorKind::invalid_argument, "empty vertex name");
      }
      if (!seen.insert(v).second) {
        throw Error(ErrorKind::duplicate_name, "vertex " + v);
      }
    }
    std::unordered_set<std::string> arrow_names;
    for (auto const& a : d.arrows) {
      if (a.name.empty()) {
        throw Error(ErrorKind::invalid_argument, "empty arrow name");
      }
      if (!arrow_names.insert(a.name).second) {
        throw Error(ErrorKind::duplicate_name, "arrow " + a.name);
      }
      if (!seen.contains(a.source)) {
        throw Error(ErrorKind::dangling_endpoint,
                    "arrow " + a.name + " has unknown source " + a.source);
      }
      if (!seen.contains(a.target)) {
        throw Error(ErrorKind::dangling_endpoint,
                    "arrow " + a.name + " has unknown target " + a.target);
      }
    }
  }

  //! A finite directed multigraph with named vertices and arrows. Immutable
  //! once built; iteration follows insertion order.
  class Quiver {
   public:
    explicit Quiver(QuiverDescription const& d) {
      validate(d);
      _vertices = d.vertices;
      for (std::size_t i = 0; i < _vertices.size(); ++i) {
        _vertex_index.emplace(_vertices[i], i);
      }
      _out.resize(_vertices.size());
      _in.resize(_vertices.size());
      for (auto const& spec : d.arrows) {
        ArrowId id{_arrows.size()};
        VertexId s{_vertex_index.at(spec.source)};
        VertexId t{_vertex_index.at(spec.target)};
        _arrows.push_back(Arrow{spec.name, s, t});
        _arrow_index.emplace(spec.name, index(id));
        _out[index(s)].push_back(id);
        _in[index(t)].push_back(id);
      }
    }

    Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows)
        : Quiver(QuiverDescription{std::move(vertices), std::move(arrows)}) {}

    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return _vertices.size();
    }
    [[nodiscard]] std::size_t arrow_count() const noexcept {
      return _arrows.size();
    }

    [[nodiscard]] std::vector<std::string> const& vertex_names() const noexcept {
      return _vertices;
    }
    [[nodiscard]] std::vector<Arrow> const& arrows() const noexcept {
      return _arrows;
    }

    [[nodiscard]] std::string const& name(VertexId v) const {
      return _vertices.at(index(v));
    }
    [[nodiscard]] Arrow const& arrow(ArrowId a) const {
      return _arrows.at(index(a));
    }

    [[nodiscard]] std::optional<VertexId> find_vertex(std::string const& n) const {
      auto it = _vertex_index.find(n);
      if (it == _vertex_index.end()) {
        return std::nullopt;
      }
      return VertexId{it->second};
    }
    [[nodiscard]] std::optional<ArrowId> find_arrow(std::string const& n) const {
      auto it = _arrow_index.find(n);
      if (it == _arrow_index.end()) {
        return std::nullopt;
      }
      return ArrowId{it->second};
    }
    [[nodiscard]] VertexId vertex(std::string const& n) const {
      if (auto v = find_vertex(n)) {
        return *v;
      }
      throw Error(ErrorKind::unresolved_name, "vertex " + n);
    }
    [[nodiscard]] ArrowId arrow_id(std::string const& n) const {
      if (auto a = find_arrow(n)) {
        return *a;
      }
      throw Error(ErrorKind::unresolved_name, "arrow " + n);
    }

    [[nodiscard]] std::vector<ArrowId> const& out_arrows(VertexId v) const {
      return _out.at(index(v));
    }
    [[nodiscard]] std::vector<ArrowId> const& in_arrows(VertexId v) const {
      return _in.at(index(v));
    }

    [[nodiscard]] std::vector<VertexId> vertex_ids() const {
      std::vector<VertexId> out;
      out.reserve(_vertices.size());
      for (std::size_t i = 0; i < _vertices.size(); ++i) {
        out.push_back(VertexId{i});
      }
      return out;
    }
    [[nodiscard]] std::vector<ArrowId> arrow_ids() const {
      std::vector<ArrowId> out;
      out.reserve(_arrows.size());
      for (std::size_t i = 0; i < _arrows.size(); ++i) {
        out.push_back(ArrowId{i});
      }
      return out;
    }

    [[nodiscard]] QuiverDescription description() const {
      QuiverDescription d;
      d.vertices = _vertices;
      for (auto const& a : _arrows) {
        d.arrows.push_back({a.name, name(a.source), name(a.target)});
      }
      return d;
    }

    bool operator==(Quiver const& that) const {
      return _vertices == that._vertices && _arrows == that._arrows;
    }

   private:
    std::vector<std::string>                     _vertices;
    std::vector<Arrow>                           _arrows;
    std::unordered_map<std::string, std::size_t> _vertex_index;
    std::unordered_map<std::string, std::size_t> _arrow_index;
    std::vector<std::vector<ArrowId>>            _out;
    std::vector<std::vector<ArrowId>>            _in;
  };

  //! Re-checks the invariants of an already constructed quiver.
  inline void validate(Quiver const& q) {
    validate(q.description());
  }

  //! A composable sequence of arrows. The empty sequence is the trivial path
  //! at its source vertex.
  class Path {
   public:
    static Path trivial(VertexId v) {
      return Path(v, v, {});
    }

    static Path of_arrow(Quiver const& q, ArrowId a) {
      auto const& arr = q.arrow(a);
      return Path(arr.source, arr.target, {a});
    }

    //! Throws invalid_argument unless consecutive arrows compose.
    static Path from_arrows(Quiver const& q, std::vector<ArrowId> arrows) {
      if (arrows.empty()) {
        throw Error(ErrorKind::invalid_argument,
                    "a trivial path needs an explicit vertex");
      }
      for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
        if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source) {
          throw Error(ErrorKind::invalid_argument,
                      "arrows " + q.arrow(arrows[i]).name + " and "
                          + q.arrow(arrows[i + 1]).name + " do not compose");
        }
      }
      VertexId s = q.arrow(arrows.front()).source;
      VertexId t = q.arrow(arrows.back()).target;
      return Path(s, t, std::move(arrows));
    }

    static Path from_names(Quiver const& q, std::vector<std::string> const& names) {
      std::vector<ArrowId> ids;
      ids.reserve(names.size());
      for (auto const& n : names) {
        ids.push_back(q.arrow_id(n));
      }
      return from_arrows(q, std::move(ids));
    }

    [[nodiscard]] VertexId source() const noexcept {
      return _source;
    }
    [[nodiscard]] VertexId target() const noexcept {
      return _target;
    }
    [[nodiscard]] std::vector<ArrowId> const& arrows() const noexcept {
      return _arrows;
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return _arrows.size();
    }
    [[nodiscard]] bool is_trivial() const noexcept {
      return _arrows.empty();
    }

    //! True if this path is parallel to that one.
    [[nodiscard]] bool parallel_to(Path const& that) const noexcept {
      return _source == that._source && _target == that._target;
    }

    //! True if needle occurs as a contiguous run of arrows. Trivial needles
    //! occur iff their vertex is visited.
    [[nodiscard]] bool contains(Path const& needle) const {
      return !occurrences(needle).empty();
    }

    //! Start positions of every occurrence of a non-trivial needle.
    [[nodiscard]] std::vector<std::size_t> occurrences(Path const& needle) const {
      std::vector<std::size_t> out;
      auto const& n = needle._arrows;
      if (n.empty() || n.size() > _arrows.size()) {
        return out;
      }
      for (std::size_t i = 0; i + n.size() <= _arrows.size(); ++i) {
        if (std::equal(n.begin(), n.end(), _arrows.begin() + i)) {
          out.push_back(i);
        }
      }
      return out;
    }

    bool operator==(Path const&) const = default;

   private:
    friend std::optional<Path> compose(Path const& p, Path const& q);

    Path(VertexId s, VertexId t, std::vector<ArrowId> arrows)
        : _source(s), _target(t), _arrows(std::move(arrows)) {}

    VertexId             _source;
    VertexId             _target;
    std::vector<ArrowId> _arrows;
  };

  struct PathHash {
    std::size_t operator()(Path const& p) const noexcept {
      std::size_t h = index(p.source()) * 0x9e3779b97f4a7c15ULL;
      for (auto a : p.arrows()) {
        h ^= index(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  //! Concatenation "p then q", or nullopt when target(p) != source(q).
  inline std::optional<Path> compose(Path const& p, Path const& q) {
    if (p.target() != q.source()) {
      return std::nullopt;
    }
    if (p.is_trivial()) {
      return q;
    }
    if (q.is_trivial()) {
      return p;
    }
    auto arrows = p.arrows();
    arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
    return Path(p.source(), q.target(), std::move(arrows));
  }

  inline std::string to_string(Quiver const& q, Path const& p) {
    if (p.is_trivial()) {
      return "e_" + q.name(p.source());
    }
    if (p.length() == 1) {
      return q.arrow(p.arrows().front()).name;
    }
    std::string out = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += q.arrow(p.arrows()[i]).name;
    }
    return out + "]";
  }

  //! Orders paths by length, then lexicographically by arrow names (trivial
  //! paths by vertex name).
  class PathOrder {
   public:
    explicit PathOrder(Quiver const& q) : _q(&q) {}

    bool operator()(Path const& a, Path const& b) const {
      if (a.length() != b.length()) {
        return a.length() < b.length();
      }
      if (a.is_trivial()) {
        return _q->name(a.source()) < _q->name(b.source());
      }
      for (std::size_t i = 0; i < a.length(); ++i) {
        auto const& na = _q->arrow(a.arrows()[i]).name;
        auto const& nb = _q->arrow(b.arrows()[i]).name;
        if (na != nb) {
          return na < nb;
        }
      }
      return false;
    }

   private:
    Quiver const* _q;
  };

  inline void sort_paths(Quiver const& q, std::vector<Path>& paths) {
    std::stable_sort(paths.begin(), paths.end(), PathOrder(q));
  }

  struct ParallelPair {
    Path left;
    Path right;

    bool operator==(ParallelPair const&) const = default;
  };

  //! Kahn's algorithm; nullopt when the quiver has an oriented cycle
  //! (loops included).
  inline std::optional<std::vector<VertexId>> topological_order(Quiver const& q) {
    std::vector<std::size_t> indegree(q.vertex_count(), 0);
    for (auto const& a : q.arrows()) {
      ++indegree[index(a.target)];
    }
    std::vector<VertexId> order;
    std::vector<VertexId> ready;
    for (auto v : q.vertex_ids()) {
      if (indegree[index(v)] == 0) {
        ready.push_back(v);
      }
    }
    // Pop from the front so that ties keep insertion order.
    std::size_t head = 0;
    while (head < ready.size()) {
      VertexId v = ready[head++];
      order.push_back(v);
      for (auto a : q.out_arrows(v)) {
        auto t = q.arrow(a).target;
        if (--indegree[index(t)] == 0) {
          ready.push_back(t);
        }
      }
    }
    if (order.size() != q.vertex_count()) {
      return std::nullopt;
    }
    return order;
  }

  inline bool is_acyclic(Quiver const& q) {
    return topological_order(q).has_value();
  }

  //! A connected component as a quiver in its own right, with the maps back
  //! to the parent's vertex and arrow ids.
  struct Component {
    Quiver                quiver;
    std::vector<VertexId> vertices;  // parent ids, by local index
    std::vector<ArrowId>  arrows;    // parent ids, by local index

    //! Translates a path of the parent quiver lying in this component.
    [[nodiscard]] Path localize(Path const& p) const {
      if (p.is_trivial()) {
        auto it = std::find(vertices.begin(), vertices.end(), p.source());
        if (it == vertices.end()) {
          throw Error(ErrorKind::invalid_argument, "path outside component");
        }
        return Path::trivial(VertexId{
            static_cast<std::size_t>(std::distance(vertices.begin(), it))});
      }
      std::vector<ArrowId> local;
      for (auto a : p.arrows()) {
        auto it = std::find(arrows.begin(), arrows.end(), a);
        if (it == arrows.end()) {
          throw Error(ErrorKind::invalid_argument, "path outside component");
        }
        local.push_back(ArrowId{
            static_cast<std::size_t>(std::distance(arrows.begin(), it))});
      }
      return Path::from_arrows(quiver, std::move(local));
    }
  };

  //! Components of the underlying undirected graph, ordered by their
  //! smallest vertex (in insertion order).
  inline std::vector<Component> connected_components(Quiver const& q) {
    std::vector<std::size_t> parent(q.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (auto const& a : q.arrows()) {
      auto r1 = find(index(a.source));
      auto r2 = find(index(a.target));
      if (r1 != r2) {
        parent[std::max(r1, r2)] = std::min(r1, r2);
      }
    }
    std::vector<std::size_t> slot(q.vertex_count(),
                                  std::numeric_limits<std::size_t>::max());
    std::vector<std::vector<VertexId>> groups;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      auto r = find(v);
      if (slot[r] == std::numeric_limits<std::size_t>::max()) {
        slot[r] = groups.size();
        groups.emplace_back();
      }
      groups[slot[r]].push_back(VertexId{v});
    }
    std::vector<Component> out;
    out.reserve(groups.size());
    for (auto const& g : groups) {
      QuiverDescription d;
      std::vector<ArrowId> arrows;
      for (auto v : g) {
        d.vertices.push_back(q.name(v));
      }
      for (auto a : q.arrow_ids()) {
        auto const& arr = q.arrow(a);
        if (slot[find(index(arr.source))] == out.size()) {
          d.arrows.push_back({arr.name, q.name(arr.source), q.name(arr.target)});
          arrows.push_back(a);
        }
      }
      out.push_back(Component{Quiver(d), g, std::move(arrows)});
    }
    return out;
  }

  //! All paths of length at most max_length (every path when max_length is
  //! absent, which requires an acyclic quiver), trivial paths included,
  //! ordered by PathOrder.
  inline std::vector<Path> enumerate_paths(Quiver const&              q,
                                           std::optional<std::size_t> max_length
                                           = std::nullopt) {
    if (!max_length && !is_acyclic(q)) {
      throw Error(ErrorKind::infinite_path_set,
                  "unbounded enumeration on a quiver with an oriented cycle");
    }
    std::vector<Path> out;
    std::vector<Path> frontier;
    for (auto v : q.vertex_ids()) {
      frontier.push_back(Path::trivial(v));
    }
    std::size_t length = 0;
    while (!frontier.empty()) {
      sort_paths(q, frontier);
      out.insert(out.end(), frontier.begin(), frontier.end());
      if (max_length && length == *max_length) {
        break;
      }
      std::vector<Path> next;
      for (auto const& p : frontier) {
        for (auto a : q.out_arrows(p.target())) {
          next.push_back(*compose(p, Path::of_arrow(q, a)));
        }
      }
      frontier = std::move(next);
      ++length;
    }
    return out;
  }

  //! All (l, r) with l from lefts and r from rights sharing both endpoints,
  //! in lefts-major order.
  inline std::vector<ParallelPair> parallel_pairs(std::vector<Path> const& lefts,
                                                  std::vector<Path> const& rights) {
    std::vector<ParallelPair> out;
    for (auto const& l : lefts) {
      for (auto const& r : rights) {
        if (l.parallel_to(r)) {
          out.push_back({l, r});
        }
      }
    }
    return out;
  }

  inline std::vector<Path> arrow_paths(Quiver const& q) {
    std::vector<Path> out;
    for (auto a : q.arrow_ids()) {
      out.push_back(Path::of_arrow(q, a));
    }
    return out;
  }

  //! True iff every ordered pair of vertices is joined by at most one path.
  inline bool is_narrow(Quiver const& q) {
    auto order = topological_order(q);
    if (!order) {
      throw Error(ErrorKind::narrowness_requires_acyclicity);
    }
    // count[x][y] = number of paths x -> y, saturated at 2.
    std::size_t const n = q.vertex_count();
    std::vector<std::vector<unsigned>> count(n, std::vector<unsigned>(n, 0));
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
      auto x = index(*it);
      count[x][x] = 1;
      for (auto a : q.out_arrows(*it)) {
        auto t = index(q.arrow(a).target);
        for (std::size_t y = 0; y < n; ++y) {
          count[x][y] = std::min(2u, count[x][y] + count[t][y]);
        }
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (count[x][y] > 1) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace hochschild

#endif  // HOCHSCHILD_QUIVER_HPP_
