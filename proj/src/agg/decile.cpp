#include "gridshed/agg/decile.hpp"

#include <algorithm>

#include "gridshed/errors.hpp"

namespace gridshed::agg {

std::map<std::string, int> assign_deciles(
    std::vector<std::pair<std::string, double>> eligible) {
    if (eligible.size() < 10)
        throw Error(ErrorCode::too_few_eligible,
                    std::to_string(eligible.size()) + " eligible entries (need 10)");
    std::sort(eligible.begin(), eligible.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second < b.second;
                  return a.first < b.first;
              });

    const std::size_t n = eligible.size();
    const std::size_t base = n / 10;
    const std::size_t extra = n % 10;  // first `extra` bins take one more

    std::map<std::string, int> out;
    std::size_t idx = 0;
    for (int bin = 1; bin <= 10; ++bin) {
        const std::size_t size = base + (static_cast<std::size_t>(bin) <= extra ? 1 : 0);
        for (std::size_t k = 0; k < size; ++k, ++idx)
            out[eligible[idx].first] = bin;
    }
    return out;
}

}  // namespace gridshed::agg
