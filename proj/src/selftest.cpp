#include "cellembed/selftest.hpp"

#include <functional>
#include <optional>
#include <string>

#include "cellembed/cells.hpp"
#include "cellembed/embed.hpp"
#include "cellembed/klpoly.hpp"
#include "cellembed/tableau.hpp"

namespace cellembed {
namespace {

void run_check(Report& report, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  try {
    const bool passed = body(detail);
    report.add(name, passed, detail);
  } catch (const GuardExceeded& e) {
    report.skip(name, e.what());
  } catch (const std::exception& e) {
    report.add(name, false, e.what());
  }
}

bool golden_embed(const std::string& x, const std::string& y, Base base, const std::string& v,
                  const std::string& w, std::optional<std::size_t> steps, std::string& detail) {
  const EmbeddingTrace trace = embed(parse(x, base), parse(y, base));
  const std::string got_v = format(trace.v, base);
  const std::string got_w = format(trace.w, base);
  detail = "v=" + got_v + " w=" + got_w + " steps=" + std::to_string(trace.steps.size());
  return got_v == v && got_w == w && (!steps || trace.steps.size() == *steps) &&
         verify_trace(trace, VerifyOptions{.intervals = false, .full_isomorphism = false, .guards = {}}).ok();
}

}  // namespace

Report selftest(const SelftestOptions& options) {
  const Guards& guards = options.config.guards;
  Report report;

  run_check(report, "golden_parse_compact", [](std::string&) {
    return parse("[895621a743cb]").values() ==
           std::vector<int>{8, 9, 5, 6, 2, 1, 10, 7, 4, 3, 12, 11};
  });
  run_check(report, "golden_rsk_3142", [](std::string& detail) {
    const RskPair pq = rsk(parse("[3142]"));
    detail = "P=" + render_inline(pq.p) + " Q=" + render_inline(pq.q);
    return render_inline(pq.p) == "(12/34)" && render_inline(pq.q) == "(13/24)";
  });
  run_check(report, "golden_rsk_identity_reversal", [](std::string&) {
    const RskPair id = rsk(Permutation::identity(5));
    const RskPair rev = rsk(Permutation::longest(5));
    return id.p.shape() == std::vector<std::size_t>{5} && id.p == id.q &&
           rev.p.shape() == std::vector<std::size_t>(5, 1) && rev.p == rev.q;
  });
  run_check(report, "golden_column_index", [](std::string&) {
    const StandardTableau t = p_symbol(parse("[3142]"));
    return column_index(t, 1) == 1 && column_index(t, 3) == 1 && column_index(t, 2) == 2 &&
           column_index(t, 4) == 2;
  });
  run_check(report, "golden_embed_s12", [&](std::string& detail) {
    const std::string expected_v = options.tamper ? "[895621a743bc]" : "[895621a743cb]";
    return golden_embed("[21654387]", "[62845173]", Base::One, expected_v, "[8956a2c471b3]", 2,
                        detail);
  });
  run_check(report, "golden_embed_s29", [](std::string& detail) {
    return golden_embed("[4321098765]", "[9467182350]", Base::Zero,
                        "[nopqrhijklcdef7845296310smgba]", "[nopqrhijklcdef78452s9bg1m36a0]",
                        std::nullopt, detail);
  });
  run_check(report, "golden_pattern_last8", [](std::string&) {
    return pattern_at(parse("[895621a743cb]"), index_range(5, 12)) == parse("[21654387]") &&
           pattern_at(parse("[8956a2c471b3]"), index_range(5, 12)) == parse("[62845173]");
  });
  run_check(report, "golden_same_right_cell_s12", [](std::string&) {
    return same_cell(CellKind::Right, parse("[895621a743cb]"), parse("[8956a2c471b3]"));
  });
  run_check(report, "kl_1324_3412", [&](std::string& detail) {
    const KLPolynomial p = kl_polynomial(parse("[1324]"), parse("[3412]"), guards);
    detail = p.to_string();
    return p == KLPolynomial({1, 1});
  });
  run_check(report, "sweep_s4_embed", [&](std::string& detail) {
    const auto elems = all_permutations(4);
    std::size_t pairs = 0;
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        if (!bruhat_leq(x, y)) continue;
        ++pairs;
        const Report r = verify_trace(embed(x, y), VerifyOptions{.intervals = true, .full_isomorphism = true, .guards = guards});
        if (!r.ok()) {
          detail = format(x) + " " + format(y) + ": " + r.failures().front();
          return false;
        }
      }
    }
    detail = std::to_string(pairs) + " comparable pairs";
    return true;
  });
  run_check(report, "kl_preserved_s3", [&](std::string& detail) {
    KLEngine engine(guards);
    for (const auto& x : all_permutations(3)) {
      for (const auto& y : all_permutations(3)) {
        if (x == y || !bruhat_leq(x, y)) continue;
        const EmbeddingTrace t = embed(x, y);
        if (engine.polynomial(x, y) != engine.polynomial(t.v, t.w)) {
          detail = format(x) + " " + format(y);
          return false;
        }
      }
    }
    return true;
  });
  run_check(report, "cells_kl_vs_rsk_n4", [&](std::string&) {
    return kl_cells(4, guards) == cell_partition(4, CellKind::Right);
  });

  if (options.config.stretch) {
    run_check(report, "stretch_mu_s10", [&](std::string& detail) {
      const auto m = mu(parse("[4321098765]", Base::Zero), parse("[9467182350]", Base::Zero), guards);
      detail = "mu=" + std::to_string(m);
      return m == 4;
    });
  }
  report.sort_by_name();
  return report;
}

}  // namespace cellembed
