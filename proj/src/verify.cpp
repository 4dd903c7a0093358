#include "txyz/verify.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "txyz/counting.hpp"
#include "txyz/relations.hpp"
#include "txyz/semigroup.hpp"
#include "txyz/structure.hpp"

namespace txyz {

namespace {

std::vector<Universe> universes_up_to(int max_n) {
  std::vector<Universe> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int k = 1; k <= m; ++k) out.emplace_back(n, m, k);
    }
  }
  return out;
}

void check_bound(int max_n, int bound) {
  if (max_n < 1 || max_n > bound) {
    throw std::invalid_argument("max_n = " + std::to_string(max_n) +
                                " outside [1, " + std::to_string(bound) + "]");
  }
}

// All n^n self-maps of [0,n), lexicographically: the independent ground
// truth the formulas and streams are checked against.
std::vector<Transformation> all_maps(int n) {
  std::vector<Transformation> out;
  PointVec digits(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(digits);
    int pos = n - 1;
    while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == n) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

struct Predicates {
  std::function<bool(const Universe&, const Transformation&)> is_regular;
  std::function<bool(const Universe&, const Transformation&)> is_idem;
  std::function<bool(const Universe&, const Transformation&, const Transformation&)> lstar;
  std::function<bool(const Universe&, const Transformation&, const Transformation&)> rstar;
};

Predicates resolve(const VerifyHooks* hooks) {
  Predicates p;
  p.is_regular = hooks && hooks->is_regular_element
                     ? hooks->is_regular_element
                     : [](const Universe& u, const Transformation& a) {
                         return is_regular_element(u, a);
                       };
  p.is_idem = hooks && hooks->is_idempotent
                  ? hooks->is_idempotent
                  : [](const Universe& u, const Transformation& a) {
                      return is_idempotent(u, a);
                    };
  p.lstar = hooks && hooks->lstar_related
                ? hooks->lstar_related
                : [](const Universe& u, const Transformation& a,
                     const Transformation& b) { return lstar_related(u, a, b); };
  p.rstar = hooks && hooks->rstar_related
                ? hooks->rstar_related
                : [](const Universe& u, const Transformation& a,
                     const Transformation& b) { return rstar_related(u, a, b); };
  return p;
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

void add_cell(std::vector<VerificationCell>& cells, const Universe& u,
              std::string check, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  cells.push_back({u, std::move(check), std::move(expected), std::move(actual), pass});
}

VerificationReport finish(std::string suite, std::vector<VerificationCell> cells,
                          std::chrono::steady_clock::time_point start) {
  std::stable_sort(cells.begin(), cells.end(),
                   [](const VerificationCell& a, const VerificationCell& b) {
                     const auto key = [](const VerificationCell& c) {
                       return std::tuple<int, int, int, const std::string&>(
                           c.universe.n(), c.universe.m(), c.universe.k(), c.check);
                     };
                     return key(a) < key(b);
                   });
  VerificationReport report;
  report.suite = std::move(suite);
  report.cells = std::move(cells);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  report.overall = std::all_of(report.cells.begin(), report.cells.end(),
                               [](const VerificationCell& c) { return c.pass; });
  return report;
}

// Partition members into classes of `related` by representative scan.
std::vector<std::vector<Transformation>> classes_under(
    const Universe& u, const std::vector<Transformation>& members,
    const std::function<bool(const Universe&, const Transformation&,
                             const Transformation&)>& related) {
  std::vector<std::vector<Transformation>> classes;
  for (const auto& a : members) {
    bool placed = false;
    for (auto& cls : classes) {
      if (related(u, cls.front(), a)) {
        cls.push_back(a);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({a});
  }
  return classes;
}

}  // namespace

std::string VerificationReport::to_json() const {
  nlohmann::json cell_array = nlohmann::json::array();
  for (const auto& c : cells) {
    cell_array.push_back({{"n", c.universe.n()},
                          {"m", c.universe.m()},
                          {"k", c.universe.k()},
                          {"check", c.check},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
  }
  nlohmann::json j{{"suite", suite}, {"cells", cell_array}, {"overall", overall}};
  return j.dump(2);
}

std::string VerificationReport::to_text() const {
  const auto universe_str = [](const Universe& u) {
    return "(" + std::to_string(u.n()) + "," + std::to_string(u.m()) + "," +
           std::to_string(u.k()) + ")";
  };
  std::size_t u_w = 0, check_w = 0, expected_w = 0, actual_w = 0;
  for (const auto& c : cells) {
    u_w = std::max(u_w, universe_str(c.universe).size());
    check_w = std::max(check_w, c.check.size());
    expected_w = std::max(expected_w, c.expected.size());
    actual_w = std::max(actual_w, c.actual.size());
  }
  const auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w + 2 - s.size(), ' ');
  };
  std::ostringstream out;
  out << "suite: " << suite << '\n';
  for (const auto& c : cells) {
    out << pad(universe_str(c.universe), u_w) << pad(c.check, check_w)
        << pad(c.expected, expected_w) << pad(c.actual, actual_w)
        << (c.pass ? "ok" : "FAIL") << '\n';
  }
  out << "overall: " << (overall ? "PASS" : "FAIL") << '\n';
  return out.str();
}

VerificationReport verify_counts(int max_n, int bound, const VerifyHooks* hooks) {
  const auto start = std::chrono::steady_clock::now();
  check_bound(max_n, bound);
  const auto preds = resolve(hooks);
  std::vector<VerificationCell> cells;

  for (int n = 1; n <= max_n; ++n) {
    const auto maps = all_maps(n);
    for (int m = 1; m <= n; ++m) {
      for (int k = 1; k <= m; ++k) {
        const Universe u(n, m, k);
        Count members = 0, regular = 0, idempotent = 0;
        std::vector<Count> strata(static_cast<std::size_t>(k) + 1, Count(0));
        for (const auto& t : maps) {
          bool in = true;
          for (Point y = 0; y < m && in; ++y) in = t[y] < k;
          if (!in) continue;
          ++members;
          if (preds.is_regular(u, t)) ++regular;
          if (compose(t, t) == t) ++idempotent;
          ++strata[static_cast<std::size_t>(image_of(t, u.y_points()).size())];
        }
        add_cell(cells, u, "order", to_decimal(order(u)), to_decimal(members));
        add_cell(cells, u, "regular_count", to_decimal(regular_count(u)),
                 to_decimal(regular));
        add_cell(cells, u, "idempotent_count", to_decimal(idempotent_count(u)),
                 to_decimal(idempotent));
        Count strata_total = 0;
        for (int r = 1; r <= k; ++r) {
          strata_total += strata[static_cast<std::size_t>(r)];
          add_cell(cells, u, "order_stratum r=" + std::to_string(r),
                   to_decimal(order_stratum(u, r)),
                   to_decimal(strata[static_cast<std::size_t>(r)]));
        }
        add_cell(cells, u, "strata_sum", to_decimal(order(u)),
                 to_decimal(strata_total));
      }
    }
  }
  return finish("counts", std::move(cells), start);
}

VerificationReport verify_relations(int max_n, int bound, const VerifyHooks* hooks) {
  const auto start = std::chrono::steady_clock::now();
  check_bound(max_n, bound);
  const auto preds = resolve(hooks);
  std::vector<VerificationCell> cells;

  for (const Universe& u : universes_up_to(max_n)) {
    const auto members = materialize(u);
    const auto llabels = lstar_oracle_labels(u, members);
    const auto rlabels = rstar_oracle_labels(u, members);
    const Count total = Count(static_cast<unsigned long>(members.size())) *
                        Count(static_cast<unsigned long>(members.size()));
    Count lagree = 0, ragree = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (preds.lstar(u, members[i], members[j]) == (llabels[i] == llabels[j])) {
          ++lagree;
        }
        if (preds.rstar(u, members[i], members[j]) == (rlabels[i] == rlabels[j])) {
          ++ragree;
        }
      }
    }
    add_cell(cells, u, "lstar_vs_oracle pairs", to_decimal(total), to_decimal(lagree));
    add_cell(cells, u, "rstar_vs_oracle pairs", to_decimal(total), to_decimal(ragree));
  }
  return finish("relations", std::move(cells), start);
}

VerificationReport verify_regularity(int max_n, int bound, const VerifyHooks* hooks) {
  const auto start = std::chrono::steady_clock::now();
  check_bound(max_n, bound);
  const auto preds = resolve(hooks);
  std::vector<VerificationCell> cells;

  for (const Universe& u : universes_up_to(max_n)) {
    const auto members = materialize(u);
    Count agree = 0, predicate_regular = 0, witness_ok = 0;
    bool all_regular = true;
    for (const auto& a : members) {
      const bool by_search =
          std::any_of(members.begin(), members.end(), [&](const Transformation& b) {
            return compose(compose(a, b), a) == a;
          });
      all_regular = all_regular && by_search;
      if (preds.is_regular(u, a) == by_search) ++agree;
      if (preds.is_regular(u, a)) {
        ++predicate_regular;
        try {
          const Transformation beta = quasi_inverse(u, a);
          if (is_member(u, beta) && compose(compose(a, beta), a) == a) ++witness_ok;
        } catch (const NotRegularError&) {
          // A poisoned predicate can send non-regular elements here; that
          // counts as a failed witness, not a crashed suite.
        }
      }
    }
    add_cell(cells, u, "predicate_vs_witness_search",
             to_decimal(Count(static_cast<unsigned long>(members.size()))),
             to_decimal(agree));
    add_cell(cells, u, "quasi_inverse_postconditions", to_decimal(predicate_regular),
             to_decimal(witness_ok));
    add_cell(cells, u, "classification_vs_all_regular",
             bool_str(is_regular_semigroup(u)), bool_str(all_regular));
  }
  return finish("regularity", std::move(cells), start);
}

VerificationReport verify_abundance(int max_n, int bound, const VerifyHooks* hooks) {
  const auto start = std::chrono::steady_clock::now();
  check_bound(max_n, bound);
  const auto preds = resolve(hooks);
  std::vector<VerificationCell> cells;

  for (const Universe& u : universes_up_to(max_n)) {
    const auto members = materialize(u);
    const AbundanceVerdict table = abundance(u, /*empirical=*/false);

    bool left = true, right = true;
    for (RelationKind kind : {RelationKind::kLstar, RelationKind::kRstar}) {
      const auto& related = kind == RelationKind::kLstar ? preds.lstar : preds.rstar;
      for (const auto& cls : classes_under(u, members, related)) {
        const bool has_idempotent =
            std::any_of(cls.begin(), cls.end(), [&](const Transformation& t) {
              return preds.is_idem(u, t);
            });
        if (!has_idempotent) {
          (kind == RelationKind::kLstar ? left : right) = false;
          break;
        }
      }
    }
    add_cell(cells, u, "left_abundant", bool_str(table.left), bool_str(left));
    add_cell(cells, u, "right_abundant", bool_str(table.right), bool_str(right));
  }
  return finish("abundance", std::move(cells), start);
}

}  // namespace txyz
