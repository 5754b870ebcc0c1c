#pragma once

// Shared helpers and brute-force oracles for the unit tests.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "msk/core_complex.hpp"
#include "msk/io.hpp"
#include "msk/moves.hpp"
#include "msk/persistence.hpp"
#include "msk/slices.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(MSK_FIXTURES) + "/" + name; }

inline msk::MSGraph graph(const std::string& name) { return msk::io::graph_from_json(msk::io::load(fixture(name))); }
inline msk::DecoratedMSGraph decorated(const std::string& name) {
  return msk::io::decorated_from_json(msk::io::load(fixture(name)));
}
inline msk::EmbeddingHistory history(const std::string& name) {
  return msk::io::history_from_json(msk::io::load(fixture(name)));
}
inline msk::Barcode barcode(const std::string& name) { return msk::io::barcode_from_json(msk::io::load(fixture(name))); }

/// Orientation-preserving isomorphism by trying every image of dart 0 and
/// propagating along twin and next_around.  Connected graphs only.
inline bool brute_isomorphic(const msk::MSGraph& a, const msk::MSGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (auto idx : {msk::MorseIndex::Minimum, msk::MorseIndex::Saddle, msk::MorseIndex::Maximum}) {
    if (a.count(idx) != b.count(idx)) return false;
  }
  if (a.edge_count() == 0) return true;
  for (std::size_t start = 0; start < b.dart_count(); ++start) {
    std::vector<std::size_t> f(a.dart_count(), msk::kNoDart);
    std::vector<std::size_t> inv(b.dart_count(), msk::kNoDart);
    std::vector<std::size_t> stack{0};
    f[0] = start;
    inv[start] = 0;
    bool ok = true;
    while (ok && !stack.empty()) {
      const std::size_t d = stack.back();
      stack.pop_back();
      const std::size_t e = f[d];
      if (a.index(a.dart_vertex(d)) != b.index(b.dart_vertex(e))) {
        ok = false;
        break;
      }
      const std::pair<std::size_t, std::size_t> next[] = {{msk::MSGraph::twin(d), msk::MSGraph::twin(e)},
                                                          {a.next_around(d), b.next_around(e)}};
      for (auto [x, y] : next) {
        if (f[x] == msk::kNoDart && inv[y] == msk::kNoDart) {
          f[x] = y;
          inv[y] = x;
          stack.push_back(x);
        } else if (f[x] != y) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Values with every minimum below every saddle below every maximum.
inline msk::DecoratedMSGraph random_decoration(const msk::MSGraph& g, std::mt19937_64& rng) {
  std::vector<double> values(g.vertex_count());
  std::vector<std::size_t> order(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t v = order[k];
    values[v] = 100.0 * static_cast<int>(g.index(v)) + static_cast<double>(k);
  }
  return msk::decorate(g, values);
}

}  // namespace testing
