#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "msk/persistence.hpp"
#include "msk/slices.hpp"

namespace msk {

/// Default cap on the number of bars accepted by the enumerator; the
/// environment variable MSK_MAX_BARS overrides it.
inline constexpr std::size_t kDefaultMaxBars = 8;
std::size_t max_bars_from_env();

/// Distinct endpoint values, finite bars except the essential bar of a
/// sublevel barcode.  Throws DomainError otherwise.
void check_barcode_input(const Barcode& b);

/// Number of bars strictly containing bar j (values only).
std::size_t mu(const Barcode& b, std::size_t j);

/// Bars sorted by decreasing length, ties by birth value.
std::vector<Bar> bars_by_length(const Barcode& b);

/// 2^(N-1) * prod_{j>=2} mu(I_j), bars taken largest first.
std::uint64_t lower_bound(const Barcode& b);

struct Realizability {
  bool ok = false;
  std::string reason;  // empty when ok
};
Realizability is_realizable(const Barcode& b);

struct EnumerateOptions {
  EndpointMode mode = EndpointMode::Insensitive;  // how candidates are checked against the input
  std::size_t max_bars = kDefaultMaxBars;
};

/// All embedding histories realizing a level-set barcode, one per poset
/// equivalence class, sorted by canonical code.
std::vector<EmbeddingHistory> enumerate_embeddings(const Barcode& b, const EnumerateOptions& opt = {});

struct ClassCount {
  std::size_t count = 0;
  std::uint64_t lower_bound = 0;
  bool bound_respected = false;
};
ClassCount count_classes(const Barcode& b, const EnumerateOptions& opt = {});

/// Reeb graph built bar by bar: every bar hangs off the branch of the
/// smallest bar strictly containing it.
HeightGraph reeb_from_barcode(const Barcode& b);
/// Sweep the Reeb graph upward, every circle in the outer region
/// (non-nesting events only).
EmbeddingHistory history_from_reeb(const HeightGraph& r);

/// N distinct-valued bars forming a realizable level-set barcode.
Barcode random_realizable_barcode(std::mt19937_64& rng, std::size_t n);

}  // namespace msk
