#include "kzeck/minimality.hpp"

#include <algorithm>

#include "kzeck/errors.hpp"
#include "kzeck/statistics.hpp"

namespace kzeck {

namespace {

std::vector<long long> to_machine(const VecZ& v) {
  std::vector<long long> out;
  out.reserve(v.dim());
  for (const BigInt& e : v.entries()) {
    if (!e.fits_slong_p()) throw ValidationError("vector entry too large for the bounded search");
    out.push_back(e.get_si());
  }
  return out;
}

}  // namespace

MultisetSumTable::MultisetSumTable(const KBonacciContext& ctx, long max_index, int half)
    : max_index_(max_index), half_(half) {
  if (max_index < 1 || max_index > 40) throw ValidationError("max_index must lie in [1, 40]");
  if (half < 0 || half > 8) throw ValidationError("half budget must lie in [0, 8]");
  vectors_.reserve(static_cast<std::size_t>(max_index) + 1);
  for (long i = 0; i <= max_index; ++i) vectors_.push_back(to_machine(ctx.vector(i)));
  std::vector<long> chosen;
  Key sum(ctx.dim(), 0);
  build(1, chosen, sum);
}

void MultisetSumTable::build(std::size_t depth, std::vector<long>& chosen, Key& sum) {
  const int size = static_cast<int>(chosen.size());
  auto [it, inserted] = table_.try_emplace(sum, Entry{size, chosen});
  if (!inserted && size < it->second.size) it->second = Entry{size, chosen};
  if (size == half_) return;
  // Nondecreasing depths enumerate each multiset once.
  for (std::size_t d = depth; d <= static_cast<std::size_t>(max_index_); ++d) {
    const Key& x = vectors_[d];
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += x[c];
    chosen.push_back(static_cast<long>(d));
    build(d, chosen, sum);
    chosen.pop_back();
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] -= x[c];
  }
}

std::optional<std::vector<long>> MultisetSumTable::smallest(const VecZ& v, int budget) const {
  if (budget < 0) return std::nullopt;
  if (budget > 2 * half_) throw ValidationError("budget exceeds twice the table's half size");
  const Key target = to_machine(v);
  std::optional<std::vector<long>> best;
  Key rest(target.size());
  for (const auto& [sum, entry] : table_) {
    if (entry.size > budget / 2) continue;
    for (std::size_t c = 0; c < target.size(); ++c) rest[c] = target[c] - sum[c];
    auto other = table_.find(rest);
    if (other == table_.end()) continue;
    const int total = entry.size + other->second.size;
    if (total > budget || (best && static_cast<int>(best->size()) <= total)) continue;
    std::vector<long> depths = entry.depths;
    depths.insert(depths.end(), other->second.depths.begin(), other->second.depths.end());
    std::sort(depths.begin(), depths.end());
    best = std::move(depths);
  }
  return best;
}

std::optional<int> vector_min_summands_bounded(const KBonacciContext& ctx, const VecZ& v, long max_index,
                                               int budget) {
  ctx.check_dim(v);
  if (budget < 0 || budget > 8) throw ValidationError("budget must lie in [0, 8]");
  if (v.is_zero()) return 0;
  const MultisetSumTable table(ctx, max_index, (budget + 1) / 2);
  auto found = table.smallest(v, budget);
  if (!found) return std::nullopt;
  return static_cast<int>(found->size());
}

MinimalityReport verify_layer_minimality(const KBonacciContext& ctx, int n, long max_index) {
  if (n < 1 || n > 12) throw ValidationError("layer minimality is limited to 1 <= n <= 12");
  MinimalityReport report{ctx.k(), n, max_index, 1, {}};  // v = 0 is trivially minimal
  // Largest SR below depth n has fewer than n terms, so budgets stay below n.
  const MultisetSumTable table(ctx, max_index, n / 2);
  for (int layer = 1; layer <= n; ++layer) {
    for_each_layer_word(ctx.k(), layer, [&](std::uint32_t mask) {
      const IndexSet sr = mask_to_index_set(mask);
      const VecZ v = evaluate_vector(ctx, sr);
      ++report.vectors_checked;
      if (auto cheaper = table.smallest(v, static_cast<int>(sr.size()) - 1)) {
        report.counterexamples.push_back({sr, std::move(*cheaper)});
      }
    });
  }
  return report;
}

void to_json(nlohmann::json& j, const MinimalityReport& r) {
  nlohmann::json examples = nlohmann::json::array();
  for (const auto& c : r.counterexamples) examples.push_back({{"sr", c.sr}, {"cheaper", c.cheaper}});
  j = {{"k", r.k},
       {"layer", r.layer},
       {"bound", {{"max_index", r.max_index}, {"budget", "|SR(v)| - 1"}}},
       {"vectors_checked", r.vectors_checked},
       {"counterexamples", examples}};
}

}  // namespace kzeck
