#include "eac/multigraph.hpp"

#include <algorithm>
#include <array>

#include "eac/error.hpp"

namespace eac {

std::vector<int> Multigraph::degrees() const {
  std::vector<int> out(n, 0);
  for (const Edge& e : edges) {
    ++out[e.u];
    ++out[e.v];
  }
  return out;
}

std::unordered_map<std::uint64_t, int> Multigraph::multiplicities() const {
  std::unordered_map<std::uint64_t, int> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) ++out[e.key()];
  return out;
}

std::size_t Multigraph::loop_count() const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const Edge& e) { return e.loop(); }));
}

bool Multigraph::is_simple() const {
  if (loop_count() != 0) return false;
  for (const auto& [key, count] : multiplicities())
    if (count > 1) return false;
  return true;
}

std::vector<Edge> Multigraph::sorted_edges() const {
  std::vector<Edge> out = edges;
  std::sort(out.begin(), out.end());
  return out;
}

std::string Multigraph::canonical_key() const {
  std::string key;
  key.reserve(edges.size() * 6);
  for (const Edge& e : sorted_edges()) {
    if (!key.empty()) key += ';';
    key += std::to_string(e.u);
    key += ' ';
    key += std::to_string(e.v);
  }
  return key;
}

std::string to_string(BadnessMode mode) { return mode == BadnessMode::classic ? "classic" : "modified"; }

BadnessMode parse_badness_mode(const std::string& text) {
  if (text == "classic") return BadnessMode::classic;
  if (text == "modified") return BadnessMode::modified;
  throw InvalidInput("badness must be 'classic' or 'modified'");
}

Grade badness(const Multigraph& graph, BadnessMode) {
  // Without history the taint set is exactly the pairs of multiplicity >= 2,
  // so both modes agree here.
  Grade total = 0;
  for (const auto& [key, count] : graph.multiplicities()) {
    const bool loop = (key >> 32) == (key & 0xffffffffu);
    if (loop || count >= 2) total += count;
  }
  return total;
}

BadEdgeTracker::BadEdgeTracker(const Multigraph& graph, BadnessMode mode)
    : n_(graph.n), mode_(mode), edges_(graph.edges) {
  pairs_.reserve(edges_.size() * 2);
  for (const Edge& e : edges_) {
    if (e.v >= n_) throw InvalidInput("edge endpoint out of range");
    ++pairs_[e.key()].multiplicity;
  }
  if (mode_ == BadnessMode::modified)
    for (auto& [key, info] : pairs_) info.tainted = info.multiplicity >= 2;

  const auto is_bad = [this](const Edge& e) { return bad(e, pairs_.at(e.key())); };
  const auto split = std::stable_partition(edges_.begin(), edges_.end(), is_bad);
  bad_end_ = static_cast<std::size_t>(split - edges_.begin());
  for (std::size_t i = 0; i < edges_.size(); ++i) pairs_[edges_[i].key()].positions.push_back(static_cast<std::uint32_t>(i));
}

int BadEdgeTracker::multiplicity(Vertex a, Vertex b) const {
  const auto it = pairs_.find(Edge(a, b).key());
  return it == pairs_.end() ? 0 : it->second.multiplicity;
}

bool BadEdgeTracker::tainted(Vertex a, Vertex b) const {
  const auto it = pairs_.find(Edge(a, b).key());
  return it != pairs_.end() && it->second.tainted;
}

namespace {

struct PairChange {
  Edge pair;
  int removed = 0;
  int added = 0;
};

// Copies removed and added per distinct pair touched by a replacement.
// Removal happens first, so a pair whose copies all go is cleared of taint
// even if the swap adds it back.
class ChangeSet {
 public:
  ChangeSet(std::span<const Edge> removed, std::span<const Edge> added) {
    for (const Edge& e : removed) slot(e).removed += 1;
    for (const Edge& e : added) slot(e).added += 1;
  }
  std::span<const PairChange> items() const { return {items_.data(), size_}; }

 private:
  PairChange& slot(const Edge& pair) {
    for (std::size_t i = 0; i < size_; ++i)
      if (items_[i].pair == pair) return items_[i];
    items_[size_] = {pair, 0, 0};
    return items_[size_++];
  }
  std::array<PairChange, 8> items_{};
  std::size_t size_ = 0;
};

}  // namespace

Grade BadEdgeTracker::badness_after(std::span<const std::size_t> positions, std::span<const Edge> added) const {
  std::array<Edge, 3> removed{};
  for (std::size_t i = 0; i < positions.size(); ++i) removed[i] = edges_[positions[i]];
  const ChangeSet changes({removed.data(), positions.size()}, added);
  auto total = static_cast<Grade>(bad_end_);
  for (const PairChange& item : changes.items()) {
    const auto it = pairs_.find(item.pair.key());
    const int before = it == pairs_.end() ? 0 : it->second.multiplicity;
    const bool was_tainted = it != pairs_.end() && it->second.tainted;
    const int middle = before - item.removed;
    const int after = middle + item.added;
    const bool now_tainted = mode_ == BadnessMode::modified && after > 0 && ((was_tainted && middle > 0) || after >= 2);
    const bool loop = item.pair.loop();
    if (loop || before >= 2 || was_tainted) total -= before;
    if (loop || after >= 2 || now_tainted) total += after;
  }
  return total;
}

bool BadEdgeTracker::adds_only_good(std::span<const std::size_t> positions, std::span<const Edge> added) const {
  std::array<Edge, 3> removed{};
  for (std::size_t i = 0; i < positions.size(); ++i) removed[i] = edges_[positions[i]];
  const ChangeSet changes({removed.data(), positions.size()}, added);
  for (const PairChange& item : changes.items()) {
    if (item.added == 0) continue;
    if (item.pair.loop()) return false;
    const auto it = pairs_.find(item.pair.key());
    const int before = it == pairs_.end() ? 0 : it->second.multiplicity;
    const bool was_tainted = it != pairs_.end() && it->second.tainted;
    const int middle = before - item.removed;
    if (middle + item.added != 1 || (was_tainted && middle > 0)) return false;
  }
  return true;
}

void BadEdgeTracker::swap_positions(std::size_t i, std::size_t j) {
  if (i == j) return;
  const Edge a = edges_[i];
  const Edge b = edges_[j];
  if (a == b) return;
  auto& pa = pairs_.at(a.key()).positions;
  auto& pb = pairs_.at(b.key()).positions;
  *std::find(pa.begin(), pa.end(), static_cast<std::uint32_t>(i)) = static_cast<std::uint32_t>(j);
  *std::find(pb.begin(), pb.end(), static_cast<std::uint32_t>(j)) = static_cast<std::uint32_t>(i);
  edges_[i] = b;
  edges_[j] = a;
}

void BadEdgeTracker::settle(const Edge& pair) {
  const auto it = pairs_.find(pair.key());
  if (it == pairs_.end()) return;
  PairInfo& info = it->second;
  const bool should_be_bad = bad(pair, info);
  for (std::size_t k = 0; k < info.positions.size(); ++k) {
    while (is_bad_position(info.positions[k]) != should_be_bad) {
      if (should_be_bad) {
        swap_positions(info.positions[k], bad_end_);
        ++bad_end_;
      } else {
        swap_positions(info.positions[k], bad_end_ - 1);
        --bad_end_;
      }
    }
  }
}

void BadEdgeTracker::replace(std::span<const std::size_t> positions, std::span<const Edge> added) {
  std::array<Edge, 16> touched{};
  std::size_t touched_count = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const std::size_t p = positions[i];
    const Edge old = edges_[p];
    PairInfo& info = pairs_.at(old.key());
    if (--info.multiplicity == 0) info.tainted = false;
    info.positions.erase(std::find(info.positions.begin(), info.positions.end(), static_cast<std::uint32_t>(p)));
    touched[touched_count++] = old;
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const std::size_t p = positions[i];
    edges_[p] = added[i];
    PairInfo& info = pairs_[added[i].key()];
    ++info.multiplicity;
    info.positions.push_back(static_cast<std::uint32_t>(p));
    touched[touched_count++] = added[i];
  }
  for (std::size_t i = 0; i < touched_count; ++i) {
    const auto it = pairs_.find(touched[i].key());
    if (it == pairs_.end()) continue;
    if (it->second.multiplicity == 0) {
      pairs_.erase(it);
    } else if (mode_ == BadnessMode::modified && it->second.multiplicity >= 2) {
      it->second.tainted = true;
    }
  }
  for (std::size_t i = 0; i < touched_count; ++i) settle(touched[i]);
}

Multigraph BadEdgeTracker::graph() const { return Multigraph{n_, edges_}; }

bool BadEdgeTracker::coherent() const {
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) seen[edges_[i].key()].push_back(static_cast<std::uint32_t>(i));
  if (seen.size() != pairs_.size()) return false;
  std::size_t bad_total = 0;
  for (const auto& [key, positions] : seen) {
    const auto it = pairs_.find(key);
    if (it == pairs_.end()) return false;
    const PairInfo& info = it->second;
    if (info.multiplicity != static_cast<int>(positions.size())) return false;
    auto sorted = info.positions;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != positions) return false;
    if (mode_ == BadnessMode::classic && info.tainted) return false;
    if (mode_ == BadnessMode::modified && info.multiplicity >= 2 && !info.tainted) return false;
    const bool is_bad = bad(edges_[positions.front()], info);
    for (auto p : positions)
      if (is_bad_position(p) != is_bad) return false;
    if (is_bad) bad_total += positions.size();
  }
  if (bad_total != bad_end_) return false;
  if (mode_ == BadnessMode::classic && static_cast<Grade>(bad_end_) != badness(graph())) return false;
  return true;
}

}  // namespace eac
