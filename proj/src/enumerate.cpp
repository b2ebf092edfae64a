#include "nsg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <cstdio>
#include <mutex>
#include <string>
#include <thread>

#include "nsg/classify.hpp"

namespace nsg {

namespace {

constexpr int kWidth = 4 * (kGenusLimit + 1);
constexpr int kWords = (kWidth + 63) / 64;
constexpr int kMaxFrontier = kGenusLimit + 2;

struct Bits {
  uint64_t w[kWords];

  bool test(int n) const { return (w[n >> 6] >> (n & 63)) & 1; }
  void set(int n) { w[n >> 6] |= uint64_t{1} << (n & 63); }
  void clear(int n) { w[n >> 6] &= ~(uint64_t{1} << (n & 63)); }

  int next_set(int from) const {
    int word = from >> 6;
    uint64_t cur = w[word] & (~uint64_t{0} << (from & 63));
    for (;;) {
      if (cur) return (word << 6) + std::countr_zero(cur);
      if (++word >= kWords) return kWidth;
      cur = w[word];
    }
  }
};

struct Node {
  Bits bits;
  int16_t conductor;
  int16_t multiplicity;
  int16_t genus;
  int16_t frontier_len;
  uint16_t frontier[kMaxFrontier];
};

// y can be written as a sum of two positive members?
bool decomposable(const Bits& b, int y, int mult) {
  for (int s = mult; 2 * s <= y; s = b.next_set(s + 1)) {
    if (b.test(y - s)) return true;
  }
  return false;
}

Node make_root() {
  Node n;
  for (auto& word : n.bits.w) word = ~uint64_t{0};
  n.conductor = 0;
  n.multiplicity = 1;
  n.genus = 0;
  n.frontier_len = 1;
  n.frontier[0] = 1;
  return n;
}

// Child obtained by removing frontier generator x = parent.frontier[idx].
// Inherited generators above x stay minimal; new generators can only be
// x + b for a parent member b <= the child's multiplicity (anything larger
// would sit past conductor + multiplicity and decompose).
void make_child(const Node& parent, int idx, Node& child) {
  const int x = parent.frontier[idx];
  child.bits = parent.bits;
  child.bits.clear(x);
  child.conductor = static_cast<int16_t>(x + 1);
  child.genus = static_cast<int16_t>(parent.genus + 1);
  child.multiplicity = (x == parent.multiplicity)
                           ? static_cast<int16_t>(child.bits.next_set(x + 1))
                           : parent.multiplicity;
  // width sufficiency: conductor + multiplicity <= 4*(genus+1)
  if (child.conductor + child.multiplicity > kWidth) std::abort();

  uint16_t fresh[4];
  int fresh_len = 0;
  for (int b = parent.multiplicity; b <= child.multiplicity;
       b = parent.bits.next_set(b + 1)) {
    const int y = x + b;
    if (!decomposable(child.bits, y, child.multiplicity)) {
      fresh[fresh_len++] = static_cast<uint16_t>(y);
    }
  }

  int out = 0;
  int f = 0;
  for (int t = idx + 1; t < parent.frontier_len; ++t) {
    while (f < fresh_len && fresh[f] < parent.frontier[t]) {
      child.frontier[out++] = fresh[f++];
    }
    child.frontier[out++] = parent.frontier[t];
  }
  while (f < fresh_len) child.frontier[out++] = fresh[f++];
  child.frontier_len = static_cast<int16_t>(out);
}

NumericalSemigroup materialize(const Node& n) {
  std::vector<int64_t> gaps;
  for (int v = 1; v < n.conductor; ++v) {
    if (!n.bits.test(v)) gaps.push_back(v);
  }
  return NumericalSemigroup::from_gaps(gaps);
}

// Depth-first driver. Handler::visit(node, slot) runs for every node of
// genus <= G; when Handler::kCountLeavesOnly is set, nodes at depth G are
// not built and visit_leaf_batch(parent, slot) receives the parent instead.
template <typename Handler>
void dfs(std::vector<Node>& stack, int genus_limit, Handler& handler, int slot) {
  while (!stack.empty()) {
    Node node = stack.back();
    stack.pop_back();
    handler.visit(node, slot);
    if (node.genus >= genus_limit) continue;
    if constexpr (Handler::kCountLeavesOnly) {
      if (node.genus + 1 == genus_limit) {
        handler.visit_leaf_batch(node, slot);
        continue;
      }
    }
    for (int i = 0; i < node.frontier_len; ++i) {
      stack.emplace_back();
      make_child(node, i, stack.back());
    }
  }
}

int resolve_workers(const WalkOptions& options) {
  if (options.workers > 0) return options.workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename Handler>
void run_tree(int genus_limit, const WalkOptions& options, Handler& handler) {
  if (genus_limit < 0 || genus_limit > kGenusLimit) {
    throw LimitExceeded("genus " + std::to_string(genus_limit) +
                        " exceeds the configured bitmap width (limit " +
                        std::to_string(kGenusLimit) + ")");
  }
  const int workers = resolve_workers(options);
  const int cutoff = std::clamp(options.cutoff_depth, 0, genus_limit);

  // Phase 1: expand serially above the cutoff, collecting subtree roots.
  std::vector<Node> tasks;
  {
    std::vector<Node> stack;
    stack.push_back(make_root());
    while (!stack.empty()) {
      Node node = stack.back();
      stack.pop_back();
      if (node.genus == cutoff && node.genus < genus_limit) {
        tasks.push_back(node);
        continue;
      }
      handler.visit(node, 0);
      if (node.genus >= genus_limit) continue;
      for (int i = 0; i < node.frontier_len; ++i) {
        stack.emplace_back();
        make_child(node, i, stack.back());
      }
    }
  }
  if (tasks.empty()) return;

  // Phase 2: subtree tasks, claimed by atomic index.
  std::atomic<size_t> next{0};
  std::atomic<size_t> done{0};
  auto worker_loop = [&](int slot) {
    std::vector<Node> stack;
    stack.reserve(static_cast<size_t>(genus_limit + 2) * kMaxFrontier);
    for (;;) {
      const size_t t = next.fetch_add(1);
      if (t >= tasks.size()) break;
      stack.push_back(tasks[t]);
      dfs(stack, genus_limit, handler, slot);
      if (options.progress) {
        const size_t d = done.fetch_add(1) + 1;
        if (d % 256 == 0 || d == tasks.size()) {
          std::fprintf(stderr, "\r%zu/%zu subtrees", d, tasks.size());
          if (d == tasks.size()) std::fprintf(stderr, "\n");
        }
      }
    }
  };

  if (workers == 1) {
    worker_loop(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker_loop, w);
  for (auto& th : pool) th.join();
}

struct CountHandler {
  static constexpr bool kCountLeavesOnly = true;
  int genus_limit;
  std::vector<std::vector<uint64_t>> slots;  // per worker: counts by genus

  CountHandler(int g, int workers)
      : genus_limit(g),
        slots(static_cast<size_t>(workers),
              std::vector<uint64_t>(static_cast<size_t>(g) + 1, 0)) {}

  void visit(const Node& n, int slot) { ++slots[static_cast<size_t>(slot)][n.genus]; }
  void visit_leaf_batch(const Node& n, int slot) {
    slots[static_cast<size_t>(slot)][n.genus + 1] += static_cast<uint64_t>(n.frontier_len);
  }

  std::vector<uint64_t> total() const {
    std::vector<uint64_t> out(static_cast<size_t>(genus_limit) + 1, 0);
    for (const auto& local : slots) {
      for (size_t g = 0; g < out.size(); ++g) out[g] += local[g];
    }
    return out;
  }
};

struct VisitorHandler {
  static constexpr bool kCountLeavesOnly = false;
  const std::function<void(const NumericalSemigroup&)>* visitor;
  std::mutex* serial;  // nullptr: concurrent delivery

  void visit(const Node& n, int) {
    NumericalSemigroup s = materialize(n);
    if (serial) {
      std::lock_guard<std::mutex> lock(*serial);
      (*visitor)(s);
    } else {
      (*visitor)(s);
    }
  }
  void visit_leaf_batch(const Node&, int) {}
};

struct WilfHandler {
  static constexpr bool kCountLeavesOnly = false;
  std::mutex out_mutex;
  std::vector<NumericalSemigroup>* offenders;

  void visit(const Node& n, int) {
    const int c = n.conductor;
    const int g = n.genus;
    // Symmetric shortcut: c = 2g needs e >= 2, granted by any multiplicity
    // >= 2; the trivial semigroup satisfies 1 * 0 >= 0.
    if (c == 2 * g) return;
    int64_t e = n.frontier_len;
    for (int y = n.multiplicity; y < c; y = n.bits.next_set(y + 1)) {
      if (!decomposable(n.bits, y, n.multiplicity)) ++e;
    }
    if (e * (c - g) < c) {
      std::lock_guard<std::mutex> lock(out_mutex);
      offenders->push_back(materialize(n));
    }
  }
  void visit_leaf_batch(const Node&, int) {}
};

struct ClassCountHandler {
  static constexpr bool kCountLeavesOnly = false;
  std::vector<std::vector<uint64_t>> counts;       // per worker
  std::vector<std::vector<ClassCounts>> classes;   // per worker, per genus

  ClassCountHandler(int g, int workers)
      : counts(static_cast<size_t>(workers),
               std::vector<uint64_t>(static_cast<size_t>(g) + 1, 0)),
        classes(static_cast<size_t>(workers),
                std::vector<ClassCounts>(static_cast<size_t>(g) + 1)) {}

  void visit(const Node& n, int slot) {
    ++counts[static_cast<size_t>(slot)][n.genus];
    const auto r = classify(materialize(n));
    auto& c = classes[static_cast<size_t>(slot)][n.genus];
    c.ordinary += r.ordinary;
    c.symmetric += r.symmetric;
    c.pseudo_symmetric += r.pseudo_symmetric;
    c.irreducible += r.irreducible;
    c.arf += r.arf;
    c.acute += r.acute;
    c.near_acute += r.near_acute;
    c.sparse += r.sparse;
    c.hyperelliptic += r.hyperelliptic;
    c.interval_generated += r.interval_generated;
  }
  void visit_leaf_batch(const Node&, int) {}
};

}  // namespace

GenusCensus count_by_genus(int genus, const WalkOptions& options) {
  CountHandler handler(genus, resolve_workers(options));
  run_tree(genus, options, handler);
  GenusCensus census;
  census.counts = handler.total();
  return census;
}

GenusCensus count_by_genus_with_classes(int genus, const WalkOptions& options) {
  const int workers = resolve_workers(options);
  ClassCountHandler handler(genus, workers);
  run_tree(genus, options, handler);
  GenusCensus census;
  census.counts.assign(static_cast<size_t>(genus) + 1, 0);
  census.classes.emplace(static_cast<size_t>(genus) + 1);
  for (int w = 0; w < workers; ++w) {
    for (size_t g = 0; g < census.counts.size(); ++g) {
      census.counts[g] += handler.counts[static_cast<size_t>(w)][g];
      const auto& src = handler.classes[static_cast<size_t>(w)][g];
      auto& dst = (*census.classes)[g];
      dst.ordinary += src.ordinary;
      dst.symmetric += src.symmetric;
      dst.pseudo_symmetric += src.pseudo_symmetric;
      dst.irreducible += src.irreducible;
      dst.arf += src.arf;
      dst.acute += src.acute;
      dst.near_acute += src.near_acute;
      dst.sparse += src.sparse;
      dst.hyperelliptic += src.hyperelliptic;
      dst.interval_generated += src.interval_generated;
    }
  }
  return census;
}

void walk(int genus, const std::function<void(const NumericalSemigroup&)>& visitor,
          const WalkOptions& options) {
  std::mutex serial;
  VisitorHandler handler;
  handler.visitor = &visitor;
  handler.serial =
      (options.serialize_visitor && resolve_workers(options) > 1) ? &serial : nullptr;
  run_tree(genus, options, handler);
}

std::vector<NumericalSemigroup> verify_wilf(int genus, const WalkOptions& options) {
  std::vector<NumericalSemigroup> offenders;
  WilfHandler handler;
  handler.offenders = &offenders;
  run_tree(genus, options, handler);
  return offenders;
}

std::vector<RatioRow> ratio_report(const GenusCensus& census) {
  std::vector<RatioRow> rows;
  rows.reserve(census.counts.size());
  for (size_t g = 0; g < census.counts.size(); ++g) {
    RatioRow row;
    row.genus = static_cast<int>(g);
    row.count = census.counts[g];
    if (g >= 1 && census.counts[g - 1] > 0) {
      row.growth_ratio = static_cast<double>(census.counts[g]) /
                         static_cast<double>(census.counts[g - 1]);
    }
    if (g >= 2) {
      const uint64_t fib = census.counts[g - 1] + census.counts[g - 2];
      row.fibonacci_sum = fib;
      row.fibonacci_ratio =
          static_cast<double>(fib) / static_cast<double>(census.counts[g]);
      row.fibonacci_holds = census.counts[g] >= fib;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nsg
