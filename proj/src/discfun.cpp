#include "qdisc/discfun.hpp"

namespace qdisc {

namespace {

using Row = std::map<std::pair<int, int>, ExactScalar>;

}  // namespace

SpanReport span_check(int m, int maxlen) {
  ExactRing ring;
  SpanReport report;
  report.target_dim = (m + 1) * (m + 1);

  // Echelon basis: pivot position -> row with unit leading coefficient.
  std::map<std::pair<int, int>, Row> pivots;

  auto reduce = [&](Row& row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto pit = pivots.find(lead->first);
      if (pit == pivots.end()) return;
      ExactScalar c = lead->second;
      for (const auto& [key, v] : pit->second) {
        auto [it, inserted] = row.try_emplace(key, -(c * v));
        if (!inserted) {
          it->second -= c * v;
          if (it->second.is_zero()) row.erase(it);
        }
      }
    }
  };

  auto insert_row = [&](Row row) {
    reduce(row);
    if (row.empty()) return;
    auto lead = row.begin();
    ExactScalar inv = lead->second.inverse();
    Row norm;
    for (const auto& [key, v] : row) norm[key] = v * inv;
    pivots.emplace(lead->first, std::move(norm));
  };

  // Images of PBW monomials F^a E^c (a + c <= maxlen) applied to f0. K-powers
  // rescale these images without enlarging the span, so they are skipped.
  FunElement f0 = fun_f0(ring);
  for (int c = 0; c <= maxlen; ++c) {
    FunElement base = f0;
    for (int i = 0; i < c; ++i) base = act_gen_fun(ring, Gen::E, base);
    FunElement cur = base;
    for (int a = 0; a + c <= maxlen; ++a) {
      Row row(cur.fin.terms.begin(), cur.fin.terms.end());
      insert_row(std::move(row));
      ++report.vectors_used;
      if (a + c < maxlen) cur = act_gen_fun(ring, Gen::F, cur);
    }
  }
  report.achieved_rank = static_cast<int>(pivots.size());

  report.generated = true;
  for (int i = 0; i <= m && report.generated; ++i) {
    for (int j = 0; j <= m; ++j) {
      Row target;
      target[{i, j}] = ExactScalar::from_int(1);
      reduce(target);
      if (!target.empty()) {
        report.generated = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace qdisc
