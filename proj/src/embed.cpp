#include "cellembed/embed.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "cellembed/interval.hpp"

namespace cellembed {
namespace {

std::vector<Cell> cells_by_entry(const StandardTableau& t) {
  std::vector<Cell> out(t.entry_count() + 1, Cell{0, 0});
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int v = rows[r][c];
      if (v < 1 || static_cast<std::size_t>(v) >= out.size()) {
        throw TableauError("tableau entries must be exactly 1..n");
      }
      out[v] = Cell{r + 1, c + 1};
    }
  }
  return out;
}

// Runs `check`, turning any exception into a failed entry.
void guarded(Report& report, const std::string& name, const std::function<bool(std::string&)>& check) {
  std::string detail;
  try {
    const bool ok = check(detail);
    report.add(name, ok, detail);
  } catch (const std::exception& e) {
    report.add(name, false, e.what());
  }
}

bool all_steps(const EmbeddingTrace& trace, std::string& detail,
               const std::function<bool(const EmbeddingStep&)>& pred) {
  for (const auto& step : trace.steps) {
    if (!pred(step)) {
      detail = "step " + std::to_string(step.index);
      return false;
    }
  }
  return true;
}

}  // namespace

IndexSet EmbeddingStep::embedded_positions() const {
  return index_range(static_cast<std::size_t>(t) + 1, static_cast<std::size_t>(t) + n_in());
}

int agreement_level(const StandardTableau& px, const StandardTableau& py) {
  if (px.entry_count() != py.entry_count()) {
    throw TableauError("agreement_level: tableaux hold different entry sets");
  }
  const auto cx = cells_by_entry(px);
  const auto cy = cells_by_entry(py);
  for (std::size_t v = 1; v < cx.size(); ++v) {
    if (cx[v].row == 0 || cy[v].row == 0) {
      throw TableauError("agreement_level: tableaux hold different entry sets");
    }
  }
  for (std::size_t v = 1; v < cx.size(); ++v) {
    if (cx[v] != cy[v]) return static_cast<int>(v) - 1;
  }
  return static_cast<int>(px.entry_count());
}

Permutation prepend_block(const Permutation& w, int k, int t) {
  std::vector<int> out;
  out.reserve(w.size() + static_cast<std::size_t>(t));
  for (int i = 1; i <= t; ++i) out.push_back(k + i);
  for (std::size_t i = 1; i <= w.size(); ++i) out.push_back(w(i) <= k ? w(i) : w(i) + t);
  return Permutation::from_values(out);
}

EmbeddingStep prime_step(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw PermutationError("prime_step: size mismatch");
  StandardTableau px = p_symbol(x);
  StandardTableau py = p_symbol(y);
  const int k = agreement_level(px, py);
  if (k == static_cast<int>(x.size())) {
    throw std::invalid_argument("prime_step: P symbols already agree");
  }
  const int t =
      static_cast<int>(std::max(column_index(px, k + 1), column_index(py, k + 1))) - 1;
  // Both copies of k+1 in column 1 would put them in the same cell.
  if (t < 1) throw std::logic_error("prime_step: non-positive prefix length");
  return EmbeddingStep{.index = 0,
                       .k = k,
                       .t = t,
                       .x_in = x,
                       .y_in = y,
                       .x_out = prepend_block(x, k, t),
                       .y_out = prepend_block(y, k, t),
                       .p_x = std::move(px),
                       .p_y = std::move(py)};
}

EmbeddingTrace embed(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw PermutationError("embed: size mismatch");
  EmbeddingTrace trace{.x = x, .y = y, .steps = {}, .v = x, .w = y};
  // The deficiency n_i - k_i strictly decreases, so this runs at most n-1 times.
  while (p_symbol(trace.v) != p_symbol(trace.w)) {
    if (trace.steps.size() + 1 >= x.size()) {
      throw std::logic_error("embed: step limit exceeded");
    }
    EmbeddingStep step = prime_step(trace.v, trace.w);
    step.index = trace.steps.size();
    trace.v = step.x_out;
    trace.w = step.y_out;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

Report verify_trace(const EmbeddingTrace& trace, const VerifyOptions& options) {
  Report report;
  const std::size_t n = trace.x.size();
  const std::size_t big_n = trace.v.size();

  guarded(report, "input_sizes", [&](std::string& detail) {
    detail = "n=" + std::to_string(n) + " N=" + std::to_string(big_n);
    return trace.y.size() == n && trace.w.size() == big_n && big_n >= n;
  });
  guarded(report, "same_p_symbol", [&](std::string&) {
    return p_symbol(trace.v) == p_symbol(trace.w);
  });
  guarded(report, "prefix_agreement", [&](std::string& detail) {
    for (std::size_t i = 1; i + n <= big_n; ++i) {
      if (trace.v(i) != trace.w(i)) {
        detail = "position " + std::to_string(i);
        return false;
      }
    }
    return true;
  });
  guarded(report, "last_n_patterns", [&](std::string&) {
    const IndexSet tail = index_range(big_n - n + 1, big_n);
    return pattern_at(trace.v, tail) == trace.x && pattern_at(trace.w, tail) == trace.y;
  });
  guarded(report, "size_bound", [&](std::string& detail) {
    detail = "N=" + std::to_string(big_n) + " bound=" + std::to_string(n * (n + 1) / 2);
    return big_n <= n * (n + 1) / 2;
  });
  guarded(report, "step_count_bound", [&](std::string& detail) {
    detail = std::to_string(trace.steps.size()) + " steps";
    return trace.steps.size() <= (n > 0 ? n - 1 : 0);
  });
  guarded(report, "steps_chain", [&](std::string& detail) {
    const Permutation* cur_x = &trace.x;
    const Permutation* cur_y = &trace.y;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const auto& s = trace.steps[i];
      if (s.index != i || s.x_in != *cur_x || s.y_in != *cur_y) {
        detail = "step " + std::to_string(i);
        return false;
      }
      cur_x = &s.x_out;
      cur_y = &s.y_out;
    }
    detail = "result";
    return *cur_x == trace.v && *cur_y == trace.w;
  });
  guarded(report, "step_replay", [&](std::string& detail) {
    return all_steps(trace, detail, [](const EmbeddingStep& s) {
      const EmbeddingStep again = prime_step(s.x_in, s.y_in);
      return again.k == s.k && again.t == s.t && again.x_out == s.x_out &&
             again.y_out == s.y_out && again.p_x == s.p_x && again.p_y == s.p_y;
    });
  });
  guarded(report, "step_prefix_positive", [&](std::string& detail) {
    return all_steps(trace, detail, [](const EmbeddingStep& s) {
      return s.t >= 1 && s.n_out() == s.n_in() + static_cast<std::size_t>(s.t) &&
             s.y_out.size() == s.n_out();
    });
  });
  guarded(report, "step_length_difference", [&](std::string& detail) {
    return all_steps(trace, detail, [](const EmbeddingStep& s) {
      const auto before = static_cast<long>(length(s.y_in)) - static_cast<long>(length(s.x_in));
      const auto after = static_cast<long>(length(s.y_out)) - static_cast<long>(length(s.x_out));
      return before == after;
    });
  });
  guarded(report, "step_common_embedding", [&](std::string& detail) {
    return all_steps(trace, detail, [](const EmbeddingStep& s) {
      return is_common_embedding(s.x_in, s.y_in, s.x_out, s.y_out, s.embedded_positions());
    });
  });
  guarded(report, "step_agreement_growth", [&](std::string& detail) {
    return all_steps(trace, detail, [](const EmbeddingStep& s) {
      const int next = agreement_level(p_symbol(s.x_out), p_symbol(s.y_out));
      return next >= std::min(s.k + s.t + 1, static_cast<int>(s.n_out()));
    });
  });
  guarded(report, "step_column_bound", [&](std::string& detail) {
    return all_steps(trace, detail, [n](const EmbeddingStep& s) {
      const long bound = static_cast<long>(s.k) + 1 - static_cast<long>(s.n_in()) +
                         static_cast<long>(n);
      return static_cast<long>(column_index(s.p_x, s.k + 1)) <= bound &&
             static_cast<long>(column_index(s.p_y, s.k + 1)) <= bound;
    });
  });
  guarded(report, "deficiency_decrease", [&](std::string& detail) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const auto& s = trace.steps[i];
      const long before = static_cast<long>(s.n_in()) - s.k;
      const long after = i + 1 < trace.steps.size()
                             ? static_cast<long>(trace.steps[i + 1].n_in()) - trace.steps[i + 1].k
                             : 0;
      if (before <= 0 || after >= before) {
        detail = "step " + std::to_string(i);
        return false;
      }
    }
    return true;
  });
  guarded(report, "length_difference", [&](std::string& detail) {
    const auto dxy = static_cast<long>(length(trace.y)) - static_cast<long>(length(trace.x));
    const auto dvw = static_cast<long>(length(trace.w)) - static_cast<long>(length(trace.v));
    detail = std::to_string(dxy) + " vs " + std::to_string(dvw);
    return dxy == dvw;
  });

  if (!options.intervals) return report;
  bool comparable = false;
  try {
    comparable = bruhat_leq(trace.x, trace.y);
  } catch (const std::exception&) {
  }
  const char* interval_checks[] = {"comparable_vw", "interval_cardinality", "interval_rank_vector",
                                   "interval_isomorphism"};
  if (!comparable) {
    for (const char* name : interval_checks) report.skip(name, "x is not below y");
    return report;
  }
  guarded(report, "comparable_vw", [&](std::string&) { return bruhat_leq(trace.v, trace.w); });
  try {
    const BruhatInterval small = enumerate_interval(trace.x, trace.y, options.guards);
    const BruhatInterval big = enumerate_interval(trace.v, trace.w, options.guards);
    report.add("interval_cardinality", small.size() == big.size(),
               std::to_string(small.size()) + " vs " + std::to_string(big.size()));
    report.add("interval_rank_vector", small.rank_vector() == big.rank_vector());
    if (!options.full_isomorphism) {
      report.skip("interval_isomorphism", "length-difference shortcut only");
    } else {
      try {
        report.add("interval_isomorphism", posets_isomorphic(small, big, options.guards));
      } catch (const GuardExceeded& e) {
        report.skip("interval_isomorphism", e.what());
      }
    }
  } catch (const GuardExceeded& e) {
    report.skip("interval_cardinality", e.what());
    report.skip("interval_rank_vector", e.what());
    report.skip("interval_isomorphism", e.what());
  } catch (const std::exception& e) {
    report.add("interval_cardinality", false, e.what());
  }
  return report;
}

}  // namespace cellembed
