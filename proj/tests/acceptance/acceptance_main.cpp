// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Everything here is exact; there are no tolerances to tune.

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "txyz/cli.hpp"
#include "txyz/counting.hpp"
#include "txyz/relations.hpp"
#include "txyz/semigroup.hpp"
#include "txyz/structure.hpp"
#include "txyz/verify.hpp"

using namespace txyz;

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

bool cell_value(const VerificationReport& report, const Universe& u,
                const std::string& check, const std::string& expected) {
  for (const auto& c : report.cells) {
    if (c.universe == u && c.check == check) {
      return c.pass && c.expected == expected;
    }
  }
  return false;
}

// 1. Order, regular and idempotent counts match exhaustive filtered
//    enumeration for every universe with n <= 5, including the golden cells.
bool counting_exactness(const VerificationReport& counts, std::string& detail) {
  bool ok = true;
  for (const auto& c : counts.cells) {
    if (c.check == "order" || c.check == "regular_count" ||
        c.check == "idempotent_count") {
      ok = ok && c.pass;
    }
  }
  ok = ok && cell_value(counts, Universe(3, 2, 1), "order", "3");
  ok = ok && cell_value(counts, Universe(3, 2, 1), "regular_count", "2");
  ok = ok && cell_value(counts, Universe(3, 2, 1), "idempotent_count", "2");
  ok = ok && cell_value(counts, Universe(4, 3, 2), "order", "32");
  ok = ok && cell_value(counts, Universe(4, 3, 2), "regular_count", "16");
  ok = ok && cell_value(counts, Universe(4, 3, 2), "idempotent_count", "10");
  if (!ok) detail = "a count cell disagrees with enumeration";
  return ok;
}

// 2. Every stratum count matches filtered enumeration and the strata sum to
//    the order, for every universe with n <= 5.
bool stratification(const VerificationReport& counts, std::string& detail) {
  bool ok = true;
  bool saw_stratum = false;
  for (const auto& c : counts.cells) {
    if (c.check.rfind("order_stratum", 0) == 0 || c.check == "strata_sum") {
      saw_stratum = true;
      ok = ok && c.pass;
    }
  }
  ok = ok && saw_stratum;
  if (!ok) detail = "a stratum cell disagrees with enumeration";
  return ok;
}

// 3. The binomial-Stirling identity holds exactly for 1 <= k <= m <= 12, and
//    the Stirling recurrence equals the alternating sum for n <= 20.
bool stirling_identities(std::string& detail) {
  for (unsigned long m = 1; m <= 12; ++m) {
    for (unsigned long k = 1; k <= m; ++k) {
      Count sum = 0;
      for (unsigned long r = 1; r <= k; ++r) {
        sum += binomial(k, static_cast<long>(r)) * factorial(r) * stirling2(m, r);
      }
      if (sum != power(Count(k), m)) {
        detail = "identity fails at m=" + std::to_string(m) +
                 ", k=" + std::to_string(k);
        return false;
      }
    }
  }
  for (unsigned long n = 0; n <= 20; ++n) {
    for (unsigned long r = 0; r <= n; ++r) {
      if (stirling2(n, r) != stirling2_by_formula(n, r)) {
        detail = "Stirling routes disagree at (" + std::to_string(n) + "," +
                 std::to_string(r) + ")";
        return false;
      }
    }
  }
  return true;
}

// 6. Abundance table matches empirical checking everywhere, with the pinned
//    verdicts and witness for (3,2,1) and (4,3,2).
bool abundance_criterion(std::string& detail) {
  const auto report = verify_abundance(4);
  if (!report.overall) {
    detail = "table vs empirical mismatch";
    return false;
  }
  const auto v = abundance(Universe(3, 2, 1), /*empirical=*/true);
  if (v.left || !v.right) {
    detail = "(3,2,1) verdict wrong";
    return false;
  }
  if (!v.witness_class || v.witness_kind != RelationKind::kLstar ||
      *v.witness_class !=
          std::vector<Transformation>{Transformation::parse("0,0,1")}) {
    detail = "(3,2,1) witness class is not {[0,0,1]}";
    return false;
  }
  const auto w = abundance(Universe(4, 3, 2), /*empirical=*/true);
  if (w.left || w.right) {
    detail = "(4,3,2) should be neither left nor right abundant";
    return false;
  }
  return true;
}

// 7. The two witness constructions do what they claim on every applicable
//    universe with n <= 4.
bool witness_constructions(std::string& detail) {
  for (const Universe& u : universes_up_to(4)) {
    if (!is_regular_semigroup(u)) {
      const auto w = nonregular_witness(u);
      if (!is_member(u, w) || is_regular_element(u, w)) {
        detail = "nonregular_witness failed on " + to_string(u);
        return false;
      }
    }
    if (u.case_tag() == CaseTag::kProper && u.k() >= 2) {
      // f with Zf = 0 and (Y\Z)f = 1 must land in an idempotent-free
      // R*-class; its kernel admits no idempotent either.
      PointVec images(static_cast<std::size_t>(u.n()), 0);
      for (Point x = u.k(); x < u.m(); ++x) images[static_cast<std::size_t>(x)] = 1;
      const Transformation f(images);
      if (!is_member(u, f)) {
        detail = "pinned element is not a member in " + to_string(u);
        return false;
      }
      if (idempotent_with_kernel(u, kernel_of(f))) {
        detail = "kernel of pinned element admits an idempotent in " + to_string(u);
        return false;
      }
      bool found = false;
      for (const auto& cls :
           relation_classes(u, RelationKind::kRstar).classes) {
        if (std::find(cls.begin(), cls.end(), f) == cls.end()) continue;
        found = true;
        for (const auto& t : cls) {
          if (is_idempotent(u, t)) {
            detail = "R*-class of pinned element has an idempotent in " +
                     to_string(u);
            return false;
          }
        }
      }
      if (!found) {
        detail = "pinned element missing from its class partition in " +
                 to_string(u);
        return false;
      }
    }
  }
  return true;
}

// 8. The documented CLI examples produce the stated outputs and exit codes.
bool cli_contract(std::string& detail) {
  struct Example {
    std::vector<std::string> args;
    int exit_code;
    std::string output;  // empty = only the exit code is pinned
  };
  const std::vector<Example> examples = {
      {{"count", "--n", "3", "--m", "2", "--k", "1", "--what", "order"}, 0, "3\n"},
      {{"count", "--n", "4", "--m", "3", "--k", "2", "--what", "idempotent"},
       0,
       "10\n"},
      {{"count", "--n", "2", "--m", "2", "--k", "2", "--what", "order"}, 0, "4\n"},
      {{"check", "--n", "3", "--m", "2", "--k", "1", "--map", "0,0,1",
        "--property", "regular"},
       1,
       "false\n"},
      {{"check", "--n", "3", "--m", "2", "--k", "1", "--map", "0,0,2",
        "--property", "idempotent"},
       0,
       "true\n"},
      {{"check", "--n", "3", "--m", "2", "--k", "1", "--map", "0,1,0",
        "--property", "member"},
       1,
       "false\n"},
      {{"related", "--n", "3", "--m", "2", "--k", "1", "--a", "0,0,1", "--b",
        "0,0,2", "--relation", "rstar"},
       0,
       "true\n"},
      {{"abundance", "--n", "4", "--m", "3", "--k", "2"},
       1,
       "left: false, right: false\n"},
      {{"verify", "--suite", "all", "--max-n", "4"}, 0, ""},
  };
  for (const auto& example : examples) {
    std::ostringstream out, err;
    const int code = run_cli(example.args, out, err);
    if (code != example.exit_code ||
        (!example.output.empty() && out.str() != example.output)) {
      std::ostringstream what;
      what << "txyz";
      for (const auto& a : example.args) what << ' ' << a;
      what << " -> exit " << code << ", output \"" << out.str() << "\"";
      detail = what.str();
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&](int index, const std::string& name, bool ok,
                          const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << name;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << '\n';
    if (!ok) ++failures;
  };

  const auto counts = verify_counts(5);

  std::string detail;
  detail.clear();
  report(1, "counting exactness vs enumeration, n <= 5",
         counting_exactness(counts, detail), detail);
  detail.clear();
  report(2, "stratified counts vs enumeration, strata sum to order",
         stratification(counts, detail), detail);
  detail.clear();
  report(3, "binomial-Stirling identity and dual Stirling routes",
         stirling_identities(detail), detail);
  detail.clear();
  {
    const auto relations = verify_relations(4);
    report(4, "L*/R* characterizations match the oracles, all pairs, n <= 4",
           relations.overall, relations.overall ? "" : "see verify_relations(4)");
  }
  {
    const auto regularity = verify_regularity(4);
    report(5, "regularity predicate, quasi-inverses, classification, n <= 4",
           regularity.overall, regularity.overall ? "" : "see verify_regularity(4)");
  }
  detail.clear();
  report(6, "abundance verdicts vs empirical class checks, n <= 4",
         abundance_criterion(detail), detail);
  detail.clear();
  report(7, "witness constructions, n <= 4", witness_constructions(detail), detail);
  detail.clear();
  report(8, "CLI contract and full verification sweep", cli_contract(detail),
         detail);

  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
