#include "tirs/canonical.hpp"

#include <algorithm>
#include <map>

namespace tirs {
namespace {

struct Adjacency {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> in;
};

Adjacency adjacency_lists(const std::vector<Bits>& relation) {
  const auto n = relation.size();
  Adjacency adj{std::vector<std::vector<std::size_t>>(n), std::vector<std::vector<std::size_t>>(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (auto j = relation[i].find_first(); j != Bits::npos; j = relation[i].find_next(j)) {
      adj.out[i].push_back(j);
      adj.in[j].push_back(i);
    }
  return adj;
}

std::size_t colour_count(const std::vector<std::size_t>& colours) {
  return colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
}

// Renumbers colours densely, ordered by signature. The signature starts with the old
// colour, so cells only ever split and keep their relative order.
std::vector<std::size_t> refine(const Adjacency& adj, std::vector<std::size_t> colours) {
  const auto n = colours.size();
  auto distinct = colours;
  std::sort(distinct.begin(), distinct.end());
  auto count = static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
  for (;;) {
    std::vector<std::vector<std::size_t>> signature(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.push_back(colours[v]);
      std::vector<std::size_t> outs, ins;
      for (auto w : adj.out[v]) outs.push_back(colours[w]);
      for (auto w : adj.in[v]) ins.push_back(colours[w]);
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      sig.push_back(outs.size());
      sig.insert(sig.end(), outs.begin(), outs.end());
      sig.push_back(ins.size());
      sig.insert(sig.end(), ins.begin(), ins.end());
    }
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (const auto& sig : signature) index.emplace(sig, 0);
    std::size_t next = 0;
    for (auto& [sig, id] : index) id = next++;
    for (std::size_t v = 0; v < n; ++v) colours[v] = index.at(signature[v]);
    if (next == count) return colours;
    count = next;
  }
}

struct Search {
  const std::vector<Bits>& relation;
  Adjacency adj;
  CanonicalForm best;
  bool have_best = false;

  void run(std::vector<std::size_t> colours) {
    colours = refine(adj, std::move(colours));
    const auto n = colours.size();
    const auto cells = colour_count(colours);
    if (cells == n) {
      std::vector<std::size_t> order(n);
      for (std::size_t v = 0; v < n; ++v) order[colours[v]] = v;
      auto code = relation_code(relation, order);
      if (!have_best || code < best.code) {
        best = CanonicalForm{std::move(order), std::move(code)};
        have_best = true;
      }
      return;
    }
    std::vector<std::size_t> size(cells, 0);
    for (auto c : colours) ++size[c];
    std::size_t target = 0;
    while (size[target] == 1) ++target;
    for (std::size_t v = 0; v < n; ++v) {
      if (colours[v] != target) continue;
      std::vector<std::size_t> split(n);
      for (std::size_t w = 0; w < n; ++w) split[w] = 2 * colours[w] + (w == v ? 0 : 1);
      run(std::move(split));
    }
  }
};

}  // namespace

std::string relation_code(const std::vector<Bits>& relation, const std::vector<std::size_t>& order) {
  const auto n = order.size();
  std::string code(n * n, '0');
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (relation[order[i]][order[j]]) code[i * n + j] = '1';
  return code;
}

CanonicalForm canonical_form(const std::vector<Bits>& relation) {
  Search search{relation, adjacency_lists(relation), {}, false};
  if (relation.empty()) return {};
  search.run(std::vector<std::size_t>(relation.size(), 0));
  return std::move(search.best);
}

}  // namespace tirs
