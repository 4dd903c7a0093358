#include "txyz/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "txyz/counting.hpp"
#include "txyz/relations.hpp"
#include "txyz/semigroup.hpp"
#include "txyz/structure.hpp"
#include "txyz/verify.hpp"

namespace txyz {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

enum class OutputFormat { kTable, kJson, kCsv };

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  return OutputFormat::kTable;
}

// CSV fields holding transformation literals contain commas; quote them.
std::string csv_quote(const std::string& field) { return '"' + field + '"'; }

struct TripleFlags {
  int n = 0;
  int m = 0;
  int k = 0;
};

void add_triple(CLI::App* cmd, TripleFlags& t) {
  cmd->add_option("--n", t.n, "size of X")->required();
  cmd->add_option("--m", t.m, "size of Y")->required();
  cmd->add_option("--k", t.k, "size of Z")->required();
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
}

Transformation parse_map(const std::string& literal, int n) {
  Transformation t = Transformation::parse(literal);
  if (t.n() != n) {
    throw std::invalid_argument("map literal has " + std::to_string(t.n()) +
                                " entries, expected n = " + std::to_string(n));
  }
  return t;
}

nlohmann::json universe_json(const Universe& u) {
  return {{"n", u.n()}, {"m", u.m()}, {"k", u.k()}};
}

struct CountArgs {
  TripleFlags triple;
  std::string what;
  std::optional<int> r;
  std::string format = "table";
};

int do_count(const CountArgs& args, std::ostream& out) {
  const Universe u(args.triple.n, args.triple.m, args.triple.k);
  if ((args.what == "stratum") != args.r.has_value()) {
    throw std::invalid_argument("--r is required for --what stratum and "
                                "not allowed otherwise");
  }
  Count value;
  if (args.what == "order") {
    value = order(u);
  } else if (args.what == "regular") {
    value = regular_count(u);
  } else if (args.what == "idempotent") {
    value = idempotent_count(u);
  } else {
    value = order_stratum(u, *args.r);
  }
  const std::string rendered = to_decimal(value);
  switch (parse_format(args.format)) {
    case OutputFormat::kTable:
      out << rendered << '\n';
      break;
    case OutputFormat::kJson: {
      nlohmann::json j = universe_json(u);
      j["what"] = args.what;
      if (args.r) j["r"] = *args.r;
      j["value"] = rendered;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << "n,m,k,what,r,value\n"
          << u.n() << ',' << u.m() << ',' << u.k() << ',' << args.what << ','
          << (args.r ? std::to_string(*args.r) : "") << ',' << rendered << '\n';
      break;
  }
  return kExitOk;
}

struct CheckArgs {
  TripleFlags triple;
  std::string map;
  std::string property;
  std::string format = "table";
};

int do_check(const CheckArgs& args, std::ostream& out) {
  const Universe u(args.triple.n, args.triple.m, args.triple.k);
  const Transformation t = parse_map(args.map, u.n());
  bool value;
  if (args.property == "member") {
    value = is_member(u, t);
  } else if (args.property == "regular") {
    value = is_regular_element(u, t);  // throws NotMemberError on non-members
  } else {
    value = is_idempotent(u, t);
  }
  switch (parse_format(args.format)) {
    case OutputFormat::kTable:
      out << (value ? "true" : "false") << '\n';
      break;
    case OutputFormat::kJson: {
      nlohmann::json j = universe_json(u);
      j["map"] = args.map;
      j["property"] = args.property;
      j["value"] = value;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << "n,m,k,map,property,value\n"
          << u.n() << ',' << u.m() << ',' << u.k() << ',' << csv_quote(t.str())
          << ',' << args.property << ',' << (value ? "true" : "false") << '\n';
      break;
  }
  return value ? kExitOk : kExitFalse;
}

struct RelatedArgs {
  TripleFlags triple;
  std::string a;
  std::string b;
  std::string relation;
  bool oracle = false;
  std::string format = "table";
};

int do_related(const RelatedArgs& args, std::ostream& out) {
  const Universe u(args.triple.n, args.triple.m, args.triple.k);
  const Transformation a = parse_map(args.a, u.n());
  const Transformation b = parse_map(args.b, u.n());
  bool value;
  if (args.relation == "lambda") {
    if (args.oracle) {
      throw std::invalid_argument("the lambda relation has no oracle form");
    }
    value = lambda_related(u, a, b);
  } else if (args.relation == "lstar") {
    value = args.oracle ? lstar_oracle(u, a, b) : lstar_related(u, a, b);
  } else {
    value = args.oracle ? rstar_oracle(u, a, b) : rstar_related(u, a, b);
  }
  switch (parse_format(args.format)) {
    case OutputFormat::kTable:
      out << (value ? "true" : "false") << '\n';
      break;
    case OutputFormat::kJson: {
      nlohmann::json j = universe_json(u);
      j["a"] = a.str();
      j["b"] = b.str();
      j["relation"] = args.relation;
      j["method"] = args.oracle ? "oracle" : "characterization";
      j["related"] = value;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << "n,m,k,a,b,relation,method,related\n"
          << u.n() << ',' << u.m() << ',' << u.k() << ',' << csv_quote(a.str())
          << ',' << csv_quote(b.str()) << ',' << args.relation << ','
          << (args.oracle ? "oracle" : "characterization") << ','
          << (value ? "true" : "false") << '\n';
      break;
  }
  return value ? kExitOk : kExitFalse;
}

struct ClassesArgs {
  TripleFlags triple;
  std::string relation;
  bool oracle = false;
  std::string format = "table";
};

int do_classes(const ClassesArgs& args, std::ostream& out) {
  const Universe u(args.triple.n, args.triple.m, args.triple.k);
  const RelationKind kind = args.relation == "lambda"  ? RelationKind::kLambda
                            : args.relation == "lstar" ? RelationKind::kLstar
                                                       : RelationKind::kRstar;
  const auto result = relation_classes(
      u, kind, args.oracle ? ClassMethod::kOracle : ClassMethod::kCharacterization);
  switch (parse_format(args.format)) {
    case OutputFormat::kTable:
      for (const auto& cls : result.classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
          if (i > 0) out << ' ';
          out << cls[i].str();
        }
        out << '\n';
      }
      break;
    case OutputFormat::kJson: {
      nlohmann::json j = universe_json(u);
      j["relation"] = args.relation;
      j["method"] = std::string(to_string(result.method));
      auto classes = nlohmann::json::array();
      for (const auto& cls : result.classes) {
        auto members = nlohmann::json::array();
        for (const auto& t : cls) members.push_back(t.str());
        classes.push_back(std::move(members));
      }
      j["classes"] = std::move(classes);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << "class,member\n";
      for (std::size_t c = 0; c < result.classes.size(); ++c) {
        for (const auto& t : result.classes[c]) {
          out << c << ',' << csv_quote(t.str()) << '\n';
        }
      }
      break;
  }
  return kExitOk;
}

struct AbundanceArgs {
  TripleFlags triple;
  bool empirical = false;
  std::string format = "table";
};

int do_abundance(const AbundanceArgs& args, std::ostream& out) {
  const Universe u(args.triple.n, args.triple.m, args.triple.k);
  const AbundanceVerdict verdict = abundance(u, args.empirical);
  switch (parse_format(args.format)) {
    case OutputFormat::kTable:
      out << "left: " << (verdict.left ? "true" : "false")
          << ", right: " << (verdict.right ? "true" : "false") << '\n';
      if (verdict.witness_class) {
        out << "witness " << to_string(*verdict.witness_kind)
            << " class without idempotent:";
        for (const auto& t : *verdict.witness_class) out << ' ' << t.str();
        out << '\n';
      }
      break;
    case OutputFormat::kJson: {
      nlohmann::json j = universe_json(u);
      j["empirical"] = args.empirical;
      j["left"] = verdict.left;
      j["right"] = verdict.right;
      if (verdict.witness_class) {
        j["witness_kind"] = std::string(to_string(*verdict.witness_kind));
        auto members = nlohmann::json::array();
        for (const auto& t : *verdict.witness_class) members.push_back(t.str());
        j["witness_class"] = std::move(members);
      }
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << "n,m,k,empirical,left,right\n"
          << u.n() << ',' << u.m() << ',' << u.k() << ','
          << (args.empirical ? "true" : "false") << ','
          << (verdict.left ? "true" : "false") << ','
          << (verdict.right ? "true" : "false") << '\n';
      break;
  }
  return verdict.left && verdict.right ? kExitOk : kExitFalse;
}

struct EnumerateArgs {
  TripleFlags triple;
  std::string filter = "all";
  std::optional<int> stratum;
  std::size_t limit = 10000;
  std::string format = "table";
};

int do_enumerate(const EnumerateArgs& args, std::ostream& out) {
  const Universe u(args.triple.n, args.triple.m, args.triple.k);
  const Filter filter = args.filter == "regular"      ? Filter::kRegular
                        : args.filter == "idempotent" ? Filter::kIdempotent
                                                      : Filter::kAll;
  ElementStream stream(u, filter, args.stratum);
  std::vector<std::string> literals;
  while (literals.size() < args.limit) {
    auto t = stream.next();
    if (!t) break;
    literals.push_back(t->str());
  }
  switch (parse_format(args.format)) {
    case OutputFormat::kTable:
      for (const auto& s : literals) out << s << '\n';
      break;
    case OutputFormat::kJson: {
      nlohmann::json j = universe_json(u);
      j["filter"] = args.filter;
      if (args.stratum) j["stratum"] = *args.stratum;
      j["limit"] = args.limit;
      j["members"] = literals;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << "map\n";
      for (const auto& s : literals) out << csv_quote(s) << '\n';
      break;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  int max_n = 4;
  std::string format = "table";
};

int do_verify(const VerifyArgs& args, std::ostream& out) {
  std::vector<VerificationReport> reports;
  const auto run = [&](const std::string& name) {
    if (name == "counts") {
      reports.push_back(verify_counts(std::min(args.max_n, 5)));
    } else if (name == "relations") {
      reports.push_back(verify_relations(std::min(args.max_n, 4)));
    } else if (name == "regularity") {
      reports.push_back(verify_regularity(std::min(args.max_n, 4)));
    } else {
      reports.push_back(verify_abundance(std::min(args.max_n, 4)));
    }
  };
  if (args.suite == "all") {
    for (const char* name : {"counts", "relations", "regularity", "abundance"}) {
      run(name);
    }
  } else {
    run(args.suite);
  }

  bool overall = true;
  for (const auto& r : reports) overall = overall && r.overall;
  switch (parse_format(args.format)) {
    case OutputFormat::kTable:
      for (const auto& r : reports) out << r.to_text();
      break;
    case OutputFormat::kJson: {
      auto j = nlohmann::json::array();
      for (const auto& r : reports) j.push_back(nlohmann::json::parse(r.to_json()));
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << "suite,n,m,k,check,expected,actual,pass\n";
      for (const auto& r : reports) {
        for (const auto& c : r.cells) {
          out << r.suite << ',' << c.universe.n() << ',' << c.universe.m() << ','
              << c.universe.k() << ',' << csv_quote(c.check) << ',' << c.expected
              << ',' << c.actual << ',' << (c.pass ? "true" : "false") << '\n';
        }
      }
      break;
  }
  return overall ? kExitOk : kExitFalse;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"transformation semigroups with restricted partial range T(X,Y,Z)",
               "txyz"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* cmd_count = app.add_subcommand("count", "exact cardinalities");
  add_triple(cmd_count, count_args.triple);
  cmd_count->add_option("--what", count_args.what, "which cardinality")
      ->check(CLI::IsMember({"order", "regular", "idempotent", "stratum"}))
      ->required();
  cmd_count->add_option("--r", count_args.r, "stratum |Ya| = r (with --what stratum)");
  add_format(cmd_count, count_args.format);

  CheckArgs check_args;
  auto* cmd_check = app.add_subcommand("check", "test a property of one map");
  add_triple(cmd_check, check_args.triple);
  cmd_check->add_option("--map", check_args.map, "transformation literal")->required();
  cmd_check->add_option("--property", check_args.property, "property to test")
      ->check(CLI::IsMember({"member", "regular", "idempotent"}))
      ->required();
  add_format(cmd_check, check_args.format);

  RelatedArgs related_args;
  auto* cmd_related = app.add_subcommand("related", "test a relation on a pair");
  add_triple(cmd_related, related_args.triple);
  cmd_related->add_option("--a", related_args.a, "first map")->required();
  cmd_related->add_option("--b", related_args.b, "second map")->required();
  cmd_related->add_option("--relation", related_args.relation, "which relation")
      ->check(CLI::IsMember({"lstar", "rstar", "lambda"}))
      ->required();
  cmd_related->add_flag("--oracle", related_args.oracle,
                        "decide by the exact oracle instead of the characterization");
  add_format(cmd_related, related_args.format);

  ClassesArgs classes_args;
  auto* cmd_classes = app.add_subcommand("classes", "partition into relation classes");
  add_triple(cmd_classes, classes_args.triple);
  cmd_classes->add_option("--relation", classes_args.relation, "which relation")
      ->check(CLI::IsMember({"lstar", "rstar", "lambda"}))
      ->required();
  cmd_classes->add_flag("--oracle", classes_args.oracle, "partition by the oracle");
  add_format(cmd_classes, classes_args.format);

  AbundanceArgs abundance_args;
  auto* cmd_abundance = app.add_subcommand("abundance", "abundance verdict");
  add_triple(cmd_abundance, abundance_args.triple);
  cmd_abundance->add_flag("--empirical", abundance_args.empirical,
                          "recompute classes instead of using the verdict table");
  add_format(cmd_abundance, abundance_args.format);

  EnumerateArgs enumerate_args;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "stream members");
  add_triple(cmd_enumerate, enumerate_args.triple);
  cmd_enumerate->add_option("--filter", enumerate_args.filter, "member filter")
      ->check(CLI::IsMember({"all", "regular", "idempotent"}))
      ->capture_default_str();
  cmd_enumerate->add_option("--stratum", enumerate_args.stratum,
                            "only members with |Ya| = r");
  cmd_enumerate->add_option("--limit", enumerate_args.limit, "maximum lines")
      ->capture_default_str();
  add_format(cmd_enumerate, enumerate_args.format);

  VerifyArgs verify_args;
  auto* cmd_verify = app.add_subcommand("verify", "run a cross-validation suite");
  cmd_verify->add_option("--suite", verify_args.suite, "which suite")
      ->check(CLI::IsMember({"counts", "relations", "regularity", "abundance", "all"}))
      ->capture_default_str();
  cmd_verify->add_option("--max-n", verify_args.max_n, "verify all universes up to n")
      ->capture_default_str();
  add_format(cmd_verify, verify_args.format);

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*cmd_count) return do_count(count_args, out);
    if (*cmd_check) return do_check(check_args, out);
    if (*cmd_related) return do_related(related_args, out);
    if (*cmd_classes) return do_classes(classes_args, out);
    if (*cmd_abundance) return do_abundance(abundance_args, out);
    if (*cmd_enumerate) return do_enumerate(enumerate_args, out);
    if (*cmd_verify) return do_verify(verify_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace txyz
