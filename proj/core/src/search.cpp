#include "trigon/search.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstddef>
#include <string>
#include <thread>
#include <utility>

#include "sweep.hpp"

namespace trigon {

namespace {

// Rows that may carry a cross in the next column: the wires meeting
// there have not crossed yet, and (beyond the first column) a cross at
// row r-1, r or r+1 in the previous column blocks the leftward move.
std::vector<int> candidate_rows(const detail::Sweep& s, const Column* last) {
  const int n = s.n();
  std::vector<int> rows;
  for (int r = 1; r <= n - 1; ++r) {
    if (s.crossed(s.wire_at(r), s.wire_at(r + 1))) continue;
    if (last) {
      bool blocked = false;
      for (int p : last->rows) {
        if (p >= r - 1 && p <= r + 1) {
          blocked = true;
          break;
        }
      }
      if (!blocked) continue;
    }
    rows.push_back(r);
  }
  return rows;
}

// Non-empty subsets of the ascending candidate rows with no two
// entries adjacent, emitted prefix-first, i.e. in lexicographic order.
void subsets_rec(const std::vector<int>& rows, std::size_t start, Column& cur,
                 std::vector<Column>& out) {
  for (std::size_t i = start; i < rows.size(); ++i) {
    cur.rows.push_back(rows[i]);
    out.push_back(cur);
    std::size_t j = i + 1;
    while (j < rows.size() && rows[j] <= rows[i] + 1) ++j;
    subsets_rec(rows, j, cur, out);
    cur.rows.pop_back();
  }
}

std::vector<Column> children_from(const detail::Sweep& s, const Column* last) {
  const std::vector<int> rows = candidate_rows(s, last);
  std::vector<Column> out;
  Column cur;
  subsets_rec(rows, 0, cur, out);
  return out;
}

struct Shared {
  std::atomic<long> best{LONG_MIN};
  std::atomic<bool> cancel{false};
  bool use_target = false;
  long target = 0;
  long long budget = 0;
  int max_columns = 0;
};

struct Local {
  long best = -1;
  std::optional<WiringDiagram> witness;
  unsigned long long nodes = 0;
  bool complete = true;
};

void record_complete(const detail::Sweep& s, const std::vector<Column>& stack,
                     Shared& sh, Local& lo) {
  const long count = static_cast<long>(s.closed_triangles());
  if (count <= lo.best) return;
  lo.best = count;
  lo.witness = WiringDiagram::from_columns(s.n(), stack);
  long prev = sh.best.load(std::memory_order_relaxed);
  while (count > prev && !sh.best.compare_exchange_weak(prev, count)) {
  }
  if (sh.use_target && count >= sh.target)
    sh.cancel.store(true, std::memory_order_relaxed);
}

void dfs(detail::Sweep& s, std::vector<Column>& stack, Shared& sh, Local& lo) {
  if (sh.cancel.load(std::memory_order_relaxed)) {
    lo.complete = false;
    return;
  }
  ++lo.nodes;
  if (s.all_crossed()) {
    record_complete(s, stack, sh, lo);
    return;
  }
  if (static_cast<int>(stack.size()) >= sh.max_columns) return;
  const Column* last = stack.empty() ? nullptr : &stack.back();
  std::vector<Column> kids = children_from(s, last);
  for (const Column& c : kids) {
    s.push(c);
    if (s.provably_unused() > sh.budget) {
      s.pop(c);
      continue;
    }
    stack.push_back(c);
    dfs(s, stack, sh, lo);
    stack.pop_back();
    s.pop(c);
    if (sh.cancel.load(std::memory_order_relaxed)) {
      lo.complete = false;
      return;
    }
  }
}

// Walks the shallow part of the tree, evaluating complete diagrams met
// on the way and cutting off subtree roots at split_depth as tasks.
void collect(detail::Sweep& s, std::vector<Column>& stack, int split_depth,
             Shared& sh, Local& lo, std::vector<std::vector<Column>>& tasks) {
  if (static_cast<int>(stack.size()) == split_depth && !s.all_crossed()) {
    tasks.push_back(stack);
    return;
  }
  ++lo.nodes;
  if (s.all_crossed()) {
    record_complete(s, stack, sh, lo);
    return;
  }
  if (static_cast<int>(stack.size()) >= sh.max_columns) return;
  const Column* last = stack.empty() ? nullptr : &stack.back();
  std::vector<Column> kids = children_from(s, last);
  for (const Column& c : kids) {
    s.push(c);
    if (s.provably_unused() > sh.budget) {
      s.pop(c);
      continue;
    }
    stack.push_back(c);
    collect(s, stack, split_depth, sh, lo, tasks);
    stack.pop_back();
    s.pop(c);
  }
}

}  // namespace

std::vector<Column> enumerate_children(const WiringDiagram& d) {
  if (is_complete(d))
    throw Error(Errc::precondition_failed, "diagram is already complete");
  detail::Sweep s(d.n(), /*record_details=*/false);
  for (const Column& c : d.columns()) s.push(c);
  const Column* last = d.columns().empty() ? nullptr : &d.columns().back();
  return children_from(s, last);
}

SearchResult depth_first_search(const SearchConfig& cfg) {
  if (cfg.n < 1)
    throw Error(Errc::invalid_parameter, "need at least one wire");
  if (cfg.parallel_width < 1)
    throw Error(Errc::invalid_parameter, "parallel_width must be at least 1");
  const long long max_triangles =
      cfg.n >= 3 ? static_cast<long long>(cfg.n) * (cfg.n - 2) / 3 : 0;
  if (cfg.target && (*cfg.target < 0 || *cfg.target > max_triangles))
    throw Error(Errc::invalid_parameter,
                "target must be in 0.." + std::to_string(max_triangles));
  if (cfg.budget && *cfg.budget < 0)
    throw Error(Errc::invalid_parameter, "budget must be non-negative");
  if (cfg.max_columns && *cfg.max_columns < 0)
    throw Error(Errc::invalid_parameter, "max_columns must be non-negative");

  Shared sh;
  sh.use_target = cfg.target.has_value() && !cfg.exhaustive;
  sh.target = cfg.target.value_or(0);
  if (cfg.budget) {
    sh.budget = *cfg.budget;
  } else if (cfg.target) {
    const long long segments = static_cast<long long>(cfg.n) * (cfg.n - 2);
    sh.budget = std::max<long long>(0, segments - 3 * *cfg.target);
  } else {
    sh.budget = LLONG_MAX;
  }
  sh.max_columns = cfg.max_columns.value_or(cfg.n * (cfg.n - 1) / 2);

  SearchResult res;
  if (cfg.parallel_width == 1) {
    detail::Sweep s(cfg.n, /*record_details=*/false);
    std::vector<Column> stack;
    Local lo;
    dfs(s, stack, sh, lo);
    res.best_count = std::max(lo.best, 0L);
    res.witness = std::move(lo.witness);
    res.nodes_visited = lo.nodes;
    res.complete = lo.complete;
    return res;
  }

  const int split_depth = std::min(2, sh.max_columns);
  std::vector<std::vector<Column>> tasks;
  Local collector;
  {
    detail::Sweep s(cfg.n, /*record_details=*/false);
    std::vector<Column> stack;
    collect(s, stack, split_depth, sh, collector, tasks);
  }

  std::vector<Local> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= tasks.size()) return;
      detail::Sweep s(cfg.n, /*record_details=*/false);
      std::vector<Column> stack;
      for (const Column& c : tasks[i]) {
        s.push(c);
        stack.push_back(c);
      }
      dfs(s, stack, sh, results[i]);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(cfg.parallel_width);
  for (int t = 0; t < cfg.parallel_width; ++t) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();

  // Merge in frontier order; strict improvement keeps the witness from
  // the lexicographically earliest subtree, matching sequential order.
  long best = collector.best;
  res.witness = std::move(collector.witness);
  res.nodes_visited = collector.nodes;
  bool complete = collector.complete;
  for (Local& lo : results) {
    res.nodes_visited += lo.nodes;
    complete = complete && lo.complete;
    if (lo.best > best) {
      best = lo.best;
      res.witness = std::move(lo.witness);
    }
  }
  if (sh.cancel.load()) complete = false;
  res.best_count = std::max(best, 0L);
  res.complete = complete;
  return res;
}

bool verify_witness(const WiringDiagram& d, long claimed) {
  return is_complete(d) && count_triangles(d).triangle_count == claimed;
}

}  // namespace trigon
