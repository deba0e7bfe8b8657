#include "cellembed/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <json.hpp>
#include <sstream>

#include "cellembed/cells.hpp"
#include "cellembed/config.hpp"
#include "cellembed/embed.hpp"
#include "cellembed/interval.hpp"
#include "cellembed/klpoly.hpp"
#include "cellembed/selftest.hpp"
#include "cellembed/tableau.hpp"
#include "cellembed/trace_json.hpp"

namespace cellembed::cli {
namespace {

using nlohmann::json;

// Raised by handlers for a well-formed request that cannot be served.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string shape_key(const std::vector<std::size_t>& shape) {
  std::string out = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(shape[i]);
  }
  return out + ")";
}

void print_report(std::ostream& out, const Report& report) {
  for (const auto& c : report.checks()) {
    out << '[' << status_name(c.status) << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << (report.ok() ? "OK" : "FAILED") << '\n';
}

json report_json(const Report& report) {
  json checks = json::array();
  for (const auto& c : report.checks()) {
    checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  }
  return {{"ok", report.ok()}, {"checks", std::move(checks)}};
}

IndexSet parse_positions(const std::string& text, std::size_t big_n) {
  // Either "lo..hi" or a verbose list of 1-based indices.
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = std::stoul(text.substr(0, dots));
    const std::size_t hi = std::stoul(text.substr(dots + 2));
    if (lo < 1 || hi > big_n || lo > hi) throw PermutationError("position range out of bounds");
    return index_range(lo, hi);
  }
  IndexSet out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::istringstream words(token);
    std::size_t i = 0;
    while (words >> i) out.push_back(i);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right-cell interval embeddings for symmetric groups", "cellembed"};
  app.require_subcommand(1);

  std::string base_text = "one";
  bool as_json = false;
  Guards guards;
  try {
    guards = Guards{}.with_env_overrides();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  app.add_option("--base", base_text, "Alphabet of permutations: one (1..n) or zero (0..n-1)")
      ->check(CLI::IsMember({"one", "zero"}));
  app.add_flag("--json", as_json, "Structured output");
  app.add_option("--max-interval", guards.interval_max, "Interval size guard");
  app.add_option("--max-iso", guards.iso_max, "Isomorphism search guard");
  app.add_option("--max-ideal", guards.ideal_max, "Order ideal guard for KL polynomials");

  std::string x_text, y_text, v_text, w_text, trace_path, positions_text, kind_text = "right";
  std::size_t n = 0;
  bool full = false, list = false, stretch = false, tamper = false, verify_intervals = false;

  auto* rsk_cmd = app.add_subcommand("rsk", "P and Q symbols by column insertion");
  rsk_cmd->add_option("w", x_text)->required();

  auto* embed_cmd = app.add_subcommand("embed", "Embed [x,y] into a pair in one right cell");
  embed_cmd->add_option("x", x_text)->required();
  embed_cmd->add_option("y", y_text)->required();
  embed_cmd->add_option("--trace", trace_path, "Write the JSON trace to FILE");
  embed_cmd->add_flag("--verify-intervals", verify_intervals,
                      "Also compare the intervals [x,y] and [v,w]");

  auto* check_cmd = app.add_subcommand("check-embedding", "Check an interval pattern embedding");
  check_cmd->add_option("x", x_text)->required();
  check_cmd->add_option("y", y_text)->required();
  check_cmd->add_option("v", v_text)->required();
  check_cmd->add_option("w", w_text)->required();
  check_cmd->add_option("--positions", positions_text,
                        "Embedding positions, \"lo..hi\" or a list (default: last n)");
  check_cmd->add_flag("--full", full, "Run the explicit poset isomorphism search");

  auto* verify_cmd = app.add_subcommand("verify-trace", "Re-check a JSON trace written by embed");
  verify_cmd->add_option("file", trace_path)->required();
  verify_cmd->add_flag("--verify-intervals", verify_intervals,
                       "Also compare the intervals [x,y] and [v,w]");

  auto* bruhat_cmd = app.add_subcommand("bruhat", "Is x <= y in Bruhat order?");
  bruhat_cmd->add_option("x", x_text)->required();
  bruhat_cmd->add_option("y", y_text)->required();

  auto* interval_cmd = app.add_subcommand("interval", "Enumerate the Bruhat interval [x,y]");
  interval_cmd->add_option("x", x_text)->required();
  interval_cmd->add_option("y", y_text)->required();
  interval_cmd->add_flag("--list", list, "List the elements");
  interval_cmd->add_option("--max-size", guards.interval_max, "Interval size guard");

  auto* cells_cmd = app.add_subcommand("cells", "Partition S_n into cells");
  cells_cmd->add_option("n", n)->required();
  cells_cmd->add_option("--kind", kind_text)->check(CLI::IsMember({"right", "left", "twosided"}));

  auto* kl_cmd = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,y}");
  kl_cmd->add_option("x", x_text)->required();
  kl_cmd->add_option("y", y_text)->required();

  auto* mu_cmd = app.add_subcommand("mu", "Leading coefficient mu(x,y)");
  mu_cmd->add_option("x", x_text)->required();
  mu_cmd->add_option("y", y_text)->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "Golden cases and exhaustive sweeps");
  selftest_cmd->add_flag("--stretch", stretch, "Also attempt the S_10 mu = 4 case");
  selftest_cmd->add_flag("--tamper", tamper)->group("");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Base base = base_text == "zero" ? Base::Zero : Base::One;
  auto perm = [base](const std::string& text) { return parse(text, base); };
  auto show = [base](const Permutation& w) { return format(w, base); };

  try {
    guards.validate();
    if (*rsk_cmd) {
      const RskPair pq = rsk(perm(x_text));
      if (as_json) {
        out << json{{"w", x_text}, {"P", tableau_to_json(pq.p)}, {"Q", tableau_to_json(pq.q)}}.dump()
            << '\n';
      } else {
        out << "P = " << render_inline(pq.p) << '\n'
            << render_text(pq.p) << "Q = " << render_inline(pq.q) << '\n'
            << render_text(pq.q);
      }
      return kExitOk;
    }

    if (*embed_cmd) {
      const EmbeddingTrace trace = embed(perm(x_text), perm(y_text));
      const Report report = verify_trace(
          trace, VerifyOptions{.intervals = verify_intervals, .full_isomorphism = true, .guards = guards});
      const json doc = trace_to_json(trace, base, report);
      if (!trace_path.empty()) {
        std::ofstream file(trace_path);
        if (!file) throw UsageError("cannot write " + trace_path);
        file << doc.dump(2) << '\n';
      }
      if (as_json) {
        out << doc.dump() << '\n';
      } else {
        out << "v = " << show(trace.v) << '\n'
            << "w = " << show(trace.w) << '\n'
            << "N = " << trace.big_n() << ", steps = " << trace.steps.size() << '\n';
        if (!report.ok()) print_report(out, report);
      }
      return report.ok() ? kExitOk : kExitFalse;
    }

    if (*verify_cmd) {
      std::ifstream file(trace_path);
      if (!file) throw UsageError("cannot read " + trace_path);
      json doc;
      try {
        doc = json::parse(file);
      } catch (const json::exception& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
      }
      const ParsedTrace parsed = trace_from_json(doc);
      const Report report = verify_trace(
          parsed.trace,
          VerifyOptions{.intervals = verify_intervals, .full_isomorphism = true, .guards = guards});
      if (as_json) {
        out << report_json(report).dump() << '\n';
      } else {
        print_report(out, report);
      }
      return report.ok() ? kExitOk : kExitFalse;
    }

    if (*check_cmd) {
      const Permutation x = perm(x_text), y = perm(y_text), v = perm(v_text), w = perm(w_text);
      if (x.size() != y.size() || v.size() != w.size() || v.size() < x.size()) {
        throw PermutationError("check-embedding: need |x| = |y| <= |v| = |w|");
      }
      const IndexSet positions = positions_text.empty()
                                     ? index_range(v.size() - x.size() + 1, v.size())
                                     : parse_positions(positions_text, v.size());
      const Report report = check_interval_embedding(
          x, y, v, w, positions, EmbeddingCheckOptions{.full = full, .guards = guards});
      if (as_json) {
        out << report_json(report).dump() << '\n';
      } else {
        print_report(out, report);
      }
      return report.ok() ? kExitOk : kExitFalse;
    }

    if (*bruhat_cmd) {
      const Permutation x = perm(x_text), y = perm(y_text);
      const bool leq = bruhat_leq(x, y);
      if (as_json) {
        out << json{{"x", x_text}, {"y", y_text}, {"leq", leq}, {"length_x", length(x)},
                    {"length_y", length(y)}}
                   .dump()
            << '\n';
      } else {
        out << (leq ? "true" : "false") << '\n';
      }
      return leq ? kExitOk : kExitFalse;
    }

    if (*interval_cmd) {
      const Permutation x = perm(x_text), y = perm(y_text);
      if (!bruhat_leq(x, y)) {
        if (as_json) {
          out << json{{"comparable", false}}.dump() << '\n';
        } else {
          out << "not comparable: " << show(x) << " is not below " << show(y) << '\n';
        }
        return kExitFalse;
      }
      const BruhatInterval interval = enumerate_interval(x, y, guards);
      if (as_json) {
        json doc{{"comparable", true},
                 {"size", interval.size()},
                 {"ranks", interval.rank_vector()},
                 {"cover_edges", interval.cover_edges().size()}};
        if (list) {
          json elems = json::array();
          for (std::size_t i = 0; i < interval.size(); ++i) {
            elems.push_back({{"w", show(interval.elements()[i])}, {"rank", interval.rank_of(i)}});
          }
          doc["elements"] = std::move(elems);
        }
        out << doc.dump() << '\n';
      } else {
        out << "size = " << interval.size() << '\n' << "ranks =";
        for (auto r : interval.rank_vector()) out << ' ' << r;
        out << '\n' << "cover edges = " << interval.cover_edges().size() << '\n';
        if (list) {
          for (std::size_t i = 0; i < interval.size(); ++i) {
            out << interval.rank_of(i) << ' ' << show(interval.elements()[i]) << '\n';
          }
        }
      }
      return kExitOk;
    }

    if (*cells_cmd) {
      const CellKind kind = parse_cell_kind(kind_text);
      Cells cells;
      try {
        cells = cell_partition(n, kind);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      auto key_of = [kind](const Permutation& w) {
        const RskPair pq = rsk(w);
        switch (kind) {
          case CellKind::Right:
            return render_inline(pq.p);
          case CellKind::Left:
            return render_inline(pq.q);
          case CellKind::TwoSided:
            break;
        }
        return shape_key(pq.p.shape());
      };
      if (as_json) {
        json doc = json::object();
        for (const auto& cell : cells) {
          json members = json::array();
          for (const auto& w : cell) members.push_back(show(w));
          doc[key_of(cell.front())] = std::move(members);
        }
        out << doc.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i > 0) out << '\n';
          out << "# " << key_of(cells[i].front()) << " (" << cells[i].size() << ")\n";
          for (const auto& w : cells[i]) out << show(w) << '\n';
        }
      }
      return kExitOk;
    }

    if (*kl_cmd || *mu_cmd) {
      const Permutation x = perm(x_text), y = perm(y_text);
      KLEngine engine(guards);
      if (*kl_cmd) {
        const KLPolynomial p = engine.polynomial(x, y);
        if (as_json) {
          out << json{{"x", x_text}, {"y", y_text}, {"coefficients", p.coefficients()}}.dump()
              << '\n';
        } else {
          out << p.to_string() << '\n';
        }
      } else {
        const auto m = engine.mu(x, y);
        if (as_json) {
          out << json{{"x", x_text}, {"y", y_text}, {"mu", m}}.dump() << '\n';
        } else {
          out << m << '\n';
        }
      }
      return kExitOk;
    }

    if (*selftest_cmd) {
      const Report report = selftest(SelftestOptions{
          .config = Config{.base = base, .guards = guards, .output = as_json ? OutputFormat::Json : OutputFormat::Text, .stretch = stretch},
          .tamper = tamper});
      if (as_json) {
        out << report_json(report).dump() << '\n';
      } else {
        print_report(out, report);
      }
      return report.ok() ? kExitOk : kExitFalse;
    }
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cellembed::cli
