#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "nucleus/clique_index.hpp"

namespace nucleus {

struct LambdaTable {
  std::vector<std::uint32_t> lambda;
  std::uint32_t max_lambda = 0;
};

/// Min-bucket queue over K_r ids keyed by their current K_s-degree.
/// Extraction returns the lowest id among the minimum-value entries.
/// Decrements relocate lazily: stale entries are skipped at pop time, so
/// every operation is O(log bucket) with O(1) bucket bookkeeping.
class BucketQueue {
 public:
  BucketQueue(std::uint32_t max_value, KrId capacity)
      : buckets_(static_cast<std::size_t>(max_value) + 1),
        value_(capacity, 0),
        extracted_(capacity, 0) {}

  void insert(KrId u, std::uint32_t value) {
    value_[u] = value;
    buckets_[value].push(u);
    ++live_;
  }

  void decrement(KrId u) {
    std::uint32_t nv = --value_[u];
    buckets_[nv].push(u);
    if (nv < cursor_) cursor_ = nv;  // defensive; peeling never goes below
  }

  std::uint32_t value(KrId u) const { return value_[u]; }
  bool extracted(KrId u) const { return extracted_[u] != 0; }

  std::optional<std::pair<KrId, std::uint32_t>> pop_min() {
    if (live_ == 0) return std::nullopt;
    while (cursor_ < buckets_.size()) {
      auto& b = buckets_[cursor_];
      while (!b.empty()) {
        KrId t = b.top();
        b.pop();
        if (!extracted_[t] && value_[t] == cursor_) {
          extracted_[t] = 1;
          --live_;
          return std::make_pair(t, cursor_);
        }
      }
      ++cursor_;
    }
    return std::nullopt;
  }

 private:
  using MinHeap = std::priority_queue<KrId, std::vector<KrId>, std::greater<KrId>>;
  std::vector<MinHeap> buckets_;
  std::vector<std::uint32_t> value_;
  std::vector<char> extracted_;
  std::uint32_t cursor_ = 0;
  std::uint64_t live_ = 0;
};

/// Peel every K_r in ascending K_s-degree order and record lambda values.
/// K_rs contained in no K_s keep lambda = 0 and never enter the queue.
/// If extraction_order is given, the processed K_r ids are appended in
/// extraction order.
LambdaTable set_lambda(const Graph& g, const CliqueIndex& idx, int r, int s,
                       std::vector<KrId>* extraction_order = nullptr);

/// min lambda over the constituents of a K_s.
inline std::uint32_t lambda_rs(KsClique ks, const LambdaTable& t) {
  std::uint32_t mn = 0xFFFFFFFFu;
  for (KrId c : ks)
    if (t.lambda[c] < mn) mn = t.lambda[c];
  return mn;
}

}  // namespace nucleus
