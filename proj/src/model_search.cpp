#include "loops/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "loops/errors.hpp"
#include "loops/invariants.hpp"

namespace loops {

namespace {

// One evaluation chain of an equational instance: each step multiplies the
// running value into a table cell whose row/column is either a constant
// element or the previous step's value (encoded as -1).
struct Step {
  std::int16_t r, c;
};

struct Instance {
  std::array<Step, 3> left, right;
  std::int8_t llen, rlen;
};

struct ChainState {
  bool complete;
  int value;    // when complete
  int fu, fv;   // frontier cell otherwise
  bool at_last; // frontier is the final step
  int step;     // index of the frontier step
};

struct PendingAssign {
  std::int16_t u, v, w;
};

struct TrailEntry {
  std::int16_t kind;  // 0 assignment, 1 dynamic watch, 2 domain prune
  std::int16_t u, v;
  std::uint32_t bits;  // pruned values for kind 2
};

class Solver {
 public:
  Solver(const SearchSpec& spec) : spec_(spec) {
    n_ = spec.order;
    m_ = n_ / 3;
    if (n_ <= 0 || n_ % 3 != 0 || n_ > 30)
      fail(errc::inconsistent_spec, "order must be 3m with m <= 10");
    if ((int)spec.m_table.size() != m_)
      fail(errc::inconsistent_spec, "prescribed subloop table has wrong size");
    try {
      LoopTable::validate(spec.m_table);
    } catch (const loop_error& e) {
      fail(errc::inconsistent_spec,
           std::string("prescribed subloop is not a loop: ") + e.what());
    }
    if (spec.n_elems.empty() || spec.n_elems[0] != 0 ||
        !std::is_sorted(spec.n_elems.begin(), spec.n_elems.end()))
      fail(errc::inconsistent_spec, "nucleus subloop must be sorted and contain 0");
    for (Elt e : spec.n_elems) {
      if (e < 0 || e >= m_)
        fail(errc::inconsistent_spec, "nucleus subloop must lie inside the subloop");
      for (Elt f : spec.n_elems) {
        int prod = spec.m_table[e][f];
        if (!std::binary_search(spec.n_elems.begin(), spec.n_elems.end(), prod))
          fail(errc::inconsistent_spec, "nucleus elements must form a subloop");
      }
    }

    cells_.assign((size_t)n_ * n_, -1);
    row_used_.assign(n_, 0);
    col_used_.assign(n_, 0);
    touched_.assign(n_, 0);
    stat_.assign((size_t)n_ * n_, {});
    dyn_.assign((size_t)n_ * n_, {});
    dompr_.assign((size_t)n_ * n_, 0);
    // static branching order: column-major, columns outside the prescribed
    // block first — right Bol composes right translations, so completed
    // columns force further whole columns through the watched instances
    order_.clear();
    for (int c0 = 0; c0 < n_; ++c0) {
      int c = (c0 + m_) % n_;
      for (int r = 0; r < n_; ++r) order_.push_back(r * n_ + c);
    }

    build_instances();
    prescribe();
  }

  // Exhaustive DFS from the current state.  Decisions beyond `prefix` are
  // explored fully; with split_depth >= 0, reaching that many decisions
  // instead records the decision stack via on_task.
  void run(const std::vector<PendingAssign>& prefix, int split_depth,
           const std::function<void(const std::vector<int>&)>& on_model,
           const std::function<void(const std::vector<PendingAssign>&)>& on_task) {
    reset();
    for (const PendingAssign& d : prefix) {
      if (!propagate(d.u, d.v, d.w))
        fail(errc::ill_defined, "search prefix replay failed");
    }
    decisions_ = prefix;
    dfs((int)prefix.size(), split_depth, on_model, on_task);
  }

 private:
  void build_instances() {
    // right Bol: ((x y) z) y = x ((y z) y); trivial when x = 0 or y = 0
    for (int x = 1; x < n_; ++x)
      for (int y = 1; y < n_; ++y)
        for (int z = 0; z < n_; ++z) {
          Instance in;
          in.left = {Step{(std::int16_t)x, (std::int16_t)y},
                     Step{-1, (std::int16_t)z}, Step{-1, (std::int16_t)y}};
          in.llen = 3;
          in.right = {Step{(std::int16_t)y, (std::int16_t)z},
                      Step{-1, (std::int16_t)y}, Step{(std::int16_t)x, -1}};
          in.rlen = 3;
          insts_.push_back(in);
        }
    // left nucleus membership of N: e (y z) = (e y) z; trivial when y or z = 0
    for (Elt e : spec_.n_elems) {
      if (e == 0) continue;
      for (int y = 1; y < n_; ++y)
        for (int z = 1; z < n_; ++z) {
          Instance in;
          in.left = {Step{(std::int16_t)y, (std::int16_t)z},
                     Step{(std::int16_t)e, -1}, Step{0, 0}};
          in.llen = 2;
          in.right = {Step{(std::int16_t)e, (std::int16_t)y},
                      Step{-1, (std::int16_t)z}, Step{0, 0}};
          in.rlen = 2;
          insts_.push_back(in);
        }
    }
    for (size_t id = 0; id < insts_.size(); ++id) {
      const Instance& in = insts_[id];
      stat_[in.left[0].r * n_ + in.left[0].c].push_back((int)id);
      stat_[in.right[0].r * n_ + in.right[0].c].push_back((int)id);
    }
  }

  // base assignments: identity row/column and the prescribed M block; these
  // do not touch labels (they are symmetric under any coset-preserving
  // relabeling that fixes M pointwise)
  void prescribe() {
    for (int v = 0; v < n_; ++v) base_set(0, v, v);
    for (int u = 1; u < n_; ++u) base_set(u, 0, u);
    for (int i = 1; i < m_; ++i)
      for (int j = 1; j < m_; ++j) base_set(i, j, spec_.m_table[i][j]);

    // wake every instance once so chains advance past the prescribed cells
    // and registrations reach the true frontiers
    queue_.clear();
    qhead_ = 0;
    for (size_t id = 0; id < insts_.size(); ++id)
      if (!evaluate((int)id))
        fail(errc::inconsistent_spec, "prescribed cells violate the identities");
    if (!drain())
      fail(errc::inconsistent_spec, "prescribed cells admit no completion");
    base_trail_ = trail_.size();
  }

  void base_set(int u, int v, int w) {
    int b = ((u / m_ + v / m_) % 3) * m_;
    if (w < b || w >= b + m_)
      fail(errc::inconsistent_spec, "prescribed cell outside its coset block");
    if (cells_[u * n_ + v] == w) return;
    if (cells_[u * n_ + v] != -1 || (row_used_[u] >> w & 1) ||
        (col_used_[v] >> w & 1))
      fail(errc::inconsistent_spec, "prescribed cells clash");
    cells_[u * n_ + v] = w;
    row_used_[u] |= 1u << w;
    col_used_[v] |= 1u << w;
  }

  void reset() {
    undo_to(base_trail_);
    queue_.clear();
    qhead_ = 0;
  }

  std::uint32_t cand(int u, int v) const {
    int b = ((u / m_ + v / m_) % 3) * m_;
    std::uint32_t block = ((1u << m_) - 1) << b;
    return block & ~row_used_[u] & ~col_used_[v];
  }

  // candidate values minus instance-derived exclusions
  std::uint32_t avail(int u, int v) const {
    return cand(u, v) & ~dompr_[u * n_ + v];
  }

  ChainState run_chain(const Step* steps, int len) const {
    int cur = -1;
    for (int k = 0; k < len; ++k) {
      int u = steps[k].r < 0 ? cur : steps[k].r;
      int v = steps[k].c < 0 ? cur : steps[k].c;
      int w = cells_[u * n_ + v];
      if (w < 0) return {false, 0, u, v, k == len - 1, k};
      cur = w;
    }
    return {true, cur, 0, 0, false, len};
  }

  bool evaluate(int id) {
    const Instance& in = insts_[id];
    ChainState l = run_chain(in.left.data(), in.llen);
    ChainState r = run_chain(in.right.data(), in.rlen);
    if (l.complete && r.complete) return l.value == r.value;
    if (l.complete) {
      if (r.at_last) {
        queue_.push_back({(std::int16_t)r.fu, (std::int16_t)r.fv,
                          (std::int16_t)l.value});
        return true;
      }
      if (r.step == in.rlen - 2 &&
          !prune_conditional(in.right.data(), in.rlen, r, l.value))
        return false;
    } else if (r.complete) {
      if (l.at_last) {
        queue_.push_back({(std::int16_t)l.fu, (std::int16_t)l.fv,
                          (std::int16_t)r.value});
        return true;
      }
      if (l.step == in.llen - 2 &&
          !prune_conditional(in.left.data(), in.llen, l, r.value))
        return false;
    }
    if (!l.complete && !same_cell(in.left[0], l)) reg(l.fu, l.fv, id);
    if (!r.complete && !same_cell(in.right[0], r)) reg(r.fu, r.fv, id);
    return true;
  }

  // One side of the identity is complete with value V; the other side's
  // frontier cell f is followed by a single final step with one coordinate
  // fixed and the other given by f's eventual value e.  Prune from f every
  // candidate e for which the resolved final cell cannot take the value V.
  bool prune_conditional(const Step* steps, int len, const ChainState& cs,
                         int V) {
    std::uint32_t mask = avail(cs.fu, cs.fv), removed = 0;
    const Step& fin = steps[len - 1];
    while (mask) {
      int e = std::countr_zero(mask);
      mask &= mask - 1;
      int rr = fin.r < 0 ? e : fin.r;
      int cc = fin.c < 0 ? e : fin.c;
      int got = cells_[rr * n_ + cc];
      if (got != -1 ? got != V : !(avail(rr, cc) >> V & 1))
        removed |= 1u << e;
    }
    return removed ? prune(cs.fu, cs.fv, removed) : true;
  }

  bool prune(int u, int v, std::uint32_t bits) {
    int i = u * n_ + v;
    bits &= ~dompr_[i];
    if (!bits) return true;
    dompr_[i] |= bits;
    trail_.push_back({2, (std::int16_t)u, (std::int16_t)v, bits});
    pruned_bits_ += std::popcount(bits);
    std::uint32_t left = avail(u, v);
    if (!left) {
      ++prune_fails_;
      return false;
    }
    if ((left & (left - 1)) == 0) {
      ++prune_singles_;
      queue_.push_back({(std::int16_t)u, (std::int16_t)v,
                        (std::int16_t)std::countr_zero(left)});
    }
    return true;
  }

  static bool same_cell(const Step& s0, const ChainState& cs) {
    return s0.r == cs.fu && s0.c == cs.fv;  // static list already watches it
  }

  void reg(int u, int v, int id) {
    dyn_[u * n_ + v].push_back(id);
    trail_.push_back({1, (std::int16_t)u, (std::int16_t)v, 0});
  }

  // process the pending-assignment queue to a fixpoint
  bool drain() {
    while (qhead_ < queue_.size()) {
      PendingAssign pa = queue_[qhead_++];
      int u = pa.u, v = pa.v, w = pa.w;
      int& cell = cells_[u * n_ + v];
      if (cell != -1) {
        if (cell == w) continue;
        return false;
      }
      if (!(avail(u, v) >> w & 1)) return false;
      cell = w;
      row_used_[u] |= 1u << w;
      col_used_[v] |= 1u << w;
      ++touched_[u];
      ++touched_[v];
      ++touched_[w];
      trail_.push_back({0, (std::int16_t)u, (std::int16_t)v, 0});
      if (!scan_line(u, w, true) || !scan_line(v, w, false)) return false;
      for (int id : stat_[u * n_ + v])
        if (!evaluate(id)) return false;
      // registrations may append to this very list while we walk it
      auto& watchers = dyn_[u * n_ + v];
      for (size_t i = 0; i < watchers.size(); ++i)
        if (!evaluate(watchers[i])) return false;
    }
    return true;
  }

  // after a placement of value w in the given line (a row when `row` is
  // true), only w's coset block of that line is constrained; find naked and
  // hidden singles there
  bool scan_line(int line, int w, bool row) {
    int bw = w / m_;
    int other_coset = ((bw - line / m_) % 3 + 3) % 3;
    int lo = other_coset * m_;
    std::array<int, 10> count{}, last{};
    std::uint32_t missing = (((1u << m_) - 1) << (bw * m_)) &
                            ~(row ? row_used_[line] : col_used_[line]);
    if (missing == 0) return true;
    for (int t = lo; t < lo + m_; ++t) {
      int uu = row ? line : t, vv = row ? t : line;
      if (cells_[uu * n_ + vv] != -1) continue;
      std::uint32_t mask = avail(uu, vv);
      if (mask == 0) return false;
      if ((mask & (mask - 1)) == 0)
        queue_.push_back({(std::int16_t)uu, (std::int16_t)vv,
                          (std::int16_t)std::countr_zero(mask)});
      std::uint32_t avail = mask & missing;
      while (avail) {
        int val = std::countr_zero(avail);
        avail &= avail - 1;
        ++count[val - bw * m_];
        last[val - bw * m_] = t;
      }
    }
    std::uint32_t mm = missing;
    while (mm) {
      int val = std::countr_zero(mm);
      mm &= mm - 1;
      int k = val - bw * m_;
      if (count[k] == 0) return false;
      if (count[k] == 1) {
        int t = last[k];
        int uu = row ? line : t, vv = row ? t : line;
        queue_.push_back({(std::int16_t)uu, (std::int16_t)vv, (std::int16_t)val});
      }
    }
    return true;
  }

  bool propagate(int u, int v, int w) {
    queue_.clear();
    qhead_ = 0;
    queue_.push_back({(std::int16_t)u, (std::int16_t)v, (std::int16_t)w});
    return drain();
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      auto [kind, u, v, bits] = trail_.back();
      trail_.pop_back();
      if (kind == 0) {
        int& cell = cells_[u * n_ + v];
        row_used_[u] &= ~(1u << cell);
        col_used_[v] &= ~(1u << cell);
        --touched_[u];
        --touched_[v];
        --touched_[cell];
        cell = -1;
      } else if (kind == 1) {
        dyn_[u * n_ + v].pop_back();
      } else {
        dompr_[u * n_ + v] &= ~bits;
      }
    }
  }

  void dfs(int depth, int split_depth,
           const std::function<void(const std::vector<int>&)>& on_model,
           const std::function<void(const std::vector<PendingAssign>&)>& on_task) {
    if (progress_ && (++nodes_ & 0xffff) == 0) report_progress();
    // Minimum-remaining-values branching over three viewpoints:
    //   kind 0: a cell (u,v) ranging over values,
    //   kind 1: a (row, value) pair ranging over columns,
    //   kind 2: a (column, value) pair ranging over rows.
    // The coset-block structure confines a value to one m-wide band of any
    // line, so the line scans touch only m positions per missing value.
    int best_kind = 0, best_a = -1, best_b = -1, best_count = 99;
    int first_free = -1;
    for (int k = 0; k < n_ * n_; ++k) {
      int i = order_[k];
      if (cells_[i] != -1) continue;
      if (first_free == -1) first_free = i;
      int pc = std::popcount(avail(i / n_, i % n_));
      if (pc < best_count) {
        best_count = pc;
        best_a = i / n_;
        best_b = i % n_;
        if (pc <= 1) break;
      }
    }
    if (best_a == -1) {
      ++models_;
      on_model(cells_);
      return;
    }
    const std::uint32_t full = (1u << n_) - 1;
    for (int line = 0; line < n_ && best_count > 1; ++line) {
      std::uint32_t missing = full & ~row_used_[line];
      while (missing && best_count > 1) {
        int w = std::countr_zero(missing);
        missing &= missing - 1;
        int c0 = (((w / m_ - line / m_) % 3 + 3) % 3) * m_;
        int cnt = 0;
        for (int c = c0; c < c0 + m_; ++c)
          if (cells_[line * n_ + c] == -1 && (avail(line, c) >> w & 1))
            if (++cnt >= best_count) break;
        if (cnt < best_count) {
          best_count = cnt;
          best_kind = 1;
          best_a = line;
          best_b = w;
        }
      }
      missing = full & ~col_used_[line];
      while (missing && best_count > 1) {
        int w = std::countr_zero(missing);
        missing &= missing - 1;
        int r0 = (((w / m_ - line / m_) % 3 + 3) % 3) * m_;
        int cnt = 0;
        for (int r = r0; r < r0 + m_; ++r)
          if (cells_[r * n_ + line] == -1 && (avail(r, line) >> w & 1))
            if (++cnt >= best_count) break;
        if (cnt < best_count) {
          best_count = cnt;
          best_kind = 2;
          best_a = line;
          best_b = w;
        }
      }
    }
    if (best_count == 0) return;
    if (depth == split_depth) {
      on_task(decisions_);
      return;
    }
    if (best_count > 1) {
      // no forced move anywhere: branch on the first free cell in row-major
      // order, which keeps the constraint interaction local
      best_kind = 0;
      best_a = first_free / n_;
      best_b = first_free % n_;
    }
    bool skipped_untouched = false;
    auto try_branch = [&](int u, int v, int w) {
      // all untouched labels of a coset are interchangeable: only the least
      // needs to be tried (labels equal to a coordinate of the branch point
      // are pinned and always kept)
      if (spec_.symmetry_breaking >= 1) {
        int moved = best_kind == 0 ? w : (best_kind == 1 ? v : u);
        int pin1 = best_a, pin2 = best_b;
        if (touched_[moved] == 0 && moved != pin1 && moved != pin2) {
          if (skipped_untouched) return;
          skipped_untouched = true;
        }
      }
      size_t mark = trail_.size();
      decisions_.push_back({(std::int16_t)u, (std::int16_t)v, (std::int16_t)w});
      if (propagate(u, v, w)) dfs(depth + 1, split_depth, on_model, on_task);
      decisions_.pop_back();
      undo_to(mark);
    };
    if (best_kind == 0) {
      std::uint32_t mask = avail(best_a, best_b);
      while (mask) {
        int w = std::countr_zero(mask);
        mask &= mask - 1;
        try_branch(best_a, best_b, w);
      }
    } else if (best_kind == 1) {
      int r = best_a, w = best_b;
      int c0 = (((w / m_ - r / m_) % 3 + 3) % 3) * m_;
      for (int c = c0; c < c0 + m_; ++c)
        if (cells_[r * n_ + c] == -1 && (avail(r, c) >> w & 1))
          try_branch(r, c, w);
    } else {
      int c = best_a, w = best_b;
      int r0 = (((w / m_ - c / m_) % 3 + 3) % 3) * m_;
      for (int r = r0; r < r0 + m_; ++r)
        if (cells_[r * n_ + c] == -1 && (avail(r, c) >> w & 1))
          try_branch(r, c, w);
    }
  }

  void report_progress() {
    auto now = std::chrono::steady_clock::now();
    if (now - last_report_ < std::chrono::seconds(5)) return;
    last_report_ = now;
    std::string head;
    for (size_t i = 0; i < decisions_.size() && i < 6; ++i)
      head += std::to_string(decisions_[i].w) + (i + 1 < 6 ? "." : "");
    std::fprintf(stderr,
                 "[search] nodes=%llu models=%llu depth=%zu head=%s "
                 "pruned=%llu psingle=%llu pfail=%llu\n",
                 (unsigned long long)nodes_, (unsigned long long)models_,
                 decisions_.size(), head.c_str(),
                 (unsigned long long)pruned_bits_,
                 (unsigned long long)prune_singles_,
                 (unsigned long long)prune_fails_);
  }

  SearchSpec spec_;
  bool progress_ = std::getenv("LOOPS_PROGRESS") != nullptr;
  std::uint64_t nodes_ = 0, models_ = 0;
  std::uint64_t pruned_bits_ = 0, prune_singles_ = 0, prune_fails_ = 0;
  std::chrono::steady_clock::time_point last_report_ =
      std::chrono::steady_clock::now();
  int n_ = 0, m_ = 0;
  std::vector<int> cells_;
  std::vector<std::uint32_t> row_used_, col_used_;
  std::vector<int> touched_;
  std::vector<Instance> insts_;
  std::vector<std::vector<int>> stat_, dyn_;
  std::vector<std::uint32_t> dompr_;  // per-cell pruned-value masks
  std::vector<int> order_;            // static branching order of cells
  std::vector<TrailEntry> trail_;
  size_t base_trail_ = 0;
  std::vector<PendingAssign> queue_;
  size_t qhead_ = 0;
  std::vector<PendingAssign> decisions_;
};

LoopTable checked_model(const SearchSpec& spec, const std::vector<int>& flat) {
  LoopTable q = LoopTable::validate_flat(spec.order, flat);
  if (!is_right_bol(q)) fail(errc::ill_defined, "emitted model is not right Bol");
  int m = spec.order / 3;
  std::vector<Elt> msub(m);
  std::iota(msub.begin(), msub.end(), 0);
  if (restriction(q, msub).flat() !=
      LoopTable::validate(spec.m_table).flat())
    fail(errc::ill_defined, "emitted model changed the prescribed subloop");
  if (!is_normal(q, msub))
    fail(errc::ill_defined, "emitted model lost normality of the subloop");
  std::vector<Elt> nl = left_nucleus(q);
  for (Elt e : spec.n_elems)
    if (!std::binary_search(nl.begin(), nl.end(), e))
      fail(errc::ill_defined, "emitted model broke the nucleus constraint");
  return q;
}

std::string spec_signature(const SearchSpec& spec) {
  std::ostringstream os;
  os << spec.order << ':' << spec.symmetry_breaking << ':';
  for (auto& row : spec.m_table)
    for (int x : row) os << x << ',';
  os << ':';
  for (Elt e : spec.n_elems) os << e << ',';
  return std::to_string(std::hash<std::string>{}(os.str()));
}

}  // namespace

SearchSpec trivial_center_spec(MCase c) {
  SearchSpec spec;
  spec.order = 27;
  LoopTable m = c == MCase::elementary_abelian
                    ? direct_product(cyclic_group(3), cyclic_group(3))
                    : relabel(cyclic_group(9), {0, 3, 6, 1, 4, 7, 2, 5, 8});
  spec.m_table.assign(9, std::vector<int>(9));
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) spec.m_table[i][j] = m.mul(i, j);
  spec.n_elems = {0, 1, 2};
  return spec;
}

std::vector<LoopTable> model_search(const SearchSpec& spec, int jobs,
                                    const std::string& resume_file) {
  if (jobs < 1) jobs = 1;
  Solver gen(spec);

  // fast path: nothing to split or checkpoint
  if (jobs == 1 && resume_file.empty()) {
    std::vector<LoopTable> out;
    gen.run({}, -1, [&](const std::vector<int>& flat) {
      out.push_back(checked_model(spec, flat));
    }, [](const std::vector<PendingAssign>&) {});
    return out;
  }

  // enumerate the search-tree items at the split depth, in DFS order: either
  // models completed above the split or independent subtree tasks
  struct Item {
    bool is_model;
    std::vector<int> flat;
    std::vector<PendingAssign> prefix;
  };
  std::vector<Item> items;
  const int split_depth = 2;
  gen.run({}, split_depth,
          [&](const std::vector<int>& flat) { items.push_back({true, flat, {}}); },
          [&](const std::vector<PendingAssign>& pre) {
            items.push_back({false, {}, pre});
          });

  std::vector<int> task_of_item(items.size(), -1);
  int n_tasks = 0;
  for (size_t i = 0; i < items.size(); ++i)
    if (!items[i].is_model) task_of_item[i] = n_tasks++;

  std::vector<std::vector<std::vector<int>>> task_models(n_tasks);
  std::vector<char> task_done(n_tasks, 0);

  // resume bookkeeping: completed tasks and their models, guarded by a header
  std::string sig = spec_signature(spec);
  if (!resume_file.empty()) {
    std::ifstream in(resume_file);
    if (in) {
      std::string word;
      if (!(in >> word) || word != "spec")
        fail(errc::io_error, "unrecognized resume file");
      std::string got;
      in >> got;
      if (got != sig) fail(errc::io_error, "resume file from a different spec");
      int idx, cnt;
      while (in >> word >> idx >> cnt) {
        if (word != "task" || idx < 0 || idx >= n_tasks)
          fail(errc::io_error, "corrupt resume file");
        std::vector<std::vector<int>> models(cnt);
        for (auto& mrow : models) {
          mrow.resize((size_t)spec.order * spec.order);
          for (int& x : mrow)
            if (!(in >> x)) fail(errc::io_error, "corrupt resume file");
        }
        task_models[idx] = std::move(models);
        task_done[idx] = 1;
      }
    } else {
      std::ofstream out(resume_file);
      out << "spec " << sig << "\n";
    }
  }

  std::mutex io_mutex;
  std::atomic<int> next_task{0};
  auto worker = [&]() {
    Solver solver(spec);
    for (;;) {
      int t = next_task.fetch_add(1);
      if (t >= n_tasks) break;
      if (task_done[t]) continue;
      // locate the prefix of task t
      const std::vector<PendingAssign>* prefix = nullptr;
      for (size_t i = 0; i < items.size(); ++i)
        if (task_of_item[i] == t) prefix = &items[i].prefix;
      std::vector<std::vector<int>> found;
      solver.run(*prefix, -1,
                 [&](const std::vector<int>& flat) { found.push_back(flat); },
                 [](const std::vector<PendingAssign>&) {});
      std::lock_guard<std::mutex> lock(io_mutex);
      task_models[t] = std::move(found);
      task_done[t] = 1;
      if (!resume_file.empty()) {
        std::ofstream out(resume_file, std::ios::app);
        out << "task " << t << ' ' << task_models[t].size() << "\n";
        for (auto& mrow : task_models[t]) {
          for (size_t k = 0; k < mrow.size(); ++k)
            out << mrow[k] << (k + 1 == mrow.size() ? '\n' : ' ');
        }
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<LoopTable> out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (items[i].is_model) {
      out.push_back(checked_model(spec, items[i].flat));
    } else {
      for (auto& flat : task_models[task_of_item[i]])
        out.push_back(checked_model(spec, flat));
    }
  }
  return out;
}

}  // namespace loops
