#include <algorithm>
#include <chrono>
#include <cstdint>
#include <json.hpp>
#include <thread>

#include "threshspec/errors.hpp"
#include "threshspec/reconstruct.hpp"

namespace threshspec {

namespace {

constexpr std::size_t kMaxCensusOrder = 40;

std::string creation_string(std::size_t order, std::uint64_t index) {
  std::string s(order, '0');
  s.back() = '1';
  for (std::size_t k = 0; k + 2 < order; ++k)
    if ((index >> (order - 3 - k)) & 1) s[k + 1] = '1';
  return s;
}

struct Keyed {
  std::string key;
  std::uint64_t index;
};

}  // namespace

CensusReport verify_distinct(std::size_t order, std::size_t workers) {
  if (order < 2) throw InvalidArgument("census order must be at least 2");
  if (order > kMaxCensusOrder) throw InvalidArgument("census order too large");
  workers = std::max<std::size_t>(workers, 1);
  const auto start = std::chrono::steady_clock::now();

  const std::uint64_t total = std::uint64_t{1} << (order - 2);
  const std::uint64_t used_workers = std::min<std::uint64_t>(workers, total);
  std::vector<std::vector<Keyed>> partials(used_workers);
  {
    std::vector<std::jthread> threads;
    for (std::uint64_t w = 0; w < used_workers; ++w) {
      threads.emplace_back([&, w] {
        const std::uint64_t begin = total * w / used_workers;
        const std::uint64_t end = total * (w + 1) / used_workers;
        auto& out = partials[w];
        out.reserve(end - begin);
        for (std::uint64_t idx = begin; idx < end; ++idx)
          out.push_back({to_text(char_poly(parse_binary(creation_string(order, idx)))), idx});
      });
    }
  }

  std::vector<Keyed> all;
  all.reserve(total);
  for (auto& part : partials) std::ranges::move(part, std::back_inserter(all));
  std::ranges::stable_sort(all, {}, &Keyed::key);

  CensusReport report;
  report.order = order;
  report.count = all.size();
  report.workers = workers;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i + 1;
    while (j < all.size() && all[j].key == all[i].key) ++j;
    ++report.distinct;
    if (j - i > 1) {
      Collision c{parse_polynomial(all[i].key), {}};
      for (std::size_t k = i; k < j; ++k) c.sequences.push_back(creation_string(order, all[k].index));
      report.collisions.push_back(std::move(c));
    }
    i = j;
  }
  // Order collisions by their first sequence so the report follows string order.
  std::ranges::sort(report.collisions, {}, [](const Collision& c) { return c.sequences.front(); });

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string census_to_json(const CensusReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["order"] = report.order;
  j["count"] = report.count;
  j["collisions"] = nlohmann::ordered_json::array();
  for (const auto& c : report.collisions) {
    nlohmann::ordered_json entry;
    entry["polynomial"] = nlohmann::ordered_json::array();
    for (const auto& coef : c.polynomial.coefficients()) entry["polynomial"].push_back(coef.get_str());
    entry["sequences"] = c.sequences;
    j["collisions"].push_back(std::move(entry));
  }
  j["elapsed_ms"] = include_timing ? report.elapsed_ms : 0.0;
  j["workers"] = report.workers;
  return j.dump();
}

}  // namespace threshspec
