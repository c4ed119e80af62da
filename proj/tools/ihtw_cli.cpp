// Command-line front end over the C interface.

#include "ihtw/ihtw.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

struct Error {
  std::string message;
};

void check(ihtw_status s) {
  if (s != IHTW_OK) throw Error{std::string(ihtw_status_name(s)) + ": " + ihtw_last_error()};
}

using ComplexHandle = std::unique_ptr<ihtw_complex, decltype(&ihtw_complex_free)>;
using GroupsHandle = std::unique_ptr<ihtw_groups, decltype(&ihtw_groups_free)>;
using ReportHandle = std::unique_ptr<ihtw_report, decltype(&ihtw_report_free)>;

struct Source {
  std::string builtin;
  std::string input;

  void add_to(CLI::App* app) {
    auto* b = app->add_option("--builtin", builtin, "built-in complex: s<n>, rp2, rp3, rp3-hex, sigma-rp3, cone:<name>, susp:<name>");
    auto* i = app->add_option("--input", input, "complex file");
    b->excludes(i);
  }

  ComplexHandle open() const {
    ihtw_complex* raw = nullptr;
    if (!builtin.empty())
      check(ihtw_complex_builtin(builtin.c_str(), &raw));
    else if (!input.empty())
      check(ihtw_complex_load(input.c_str(), &raw));
    else
      throw Error{"one of --builtin or --input is required"};
    return ComplexHandle(raw, ihtw_complex_free);
  }
};

struct Options {
  Source source;
  std::string coeffs = "Z";
  std::string perversity;
  std::vector<std::string> perversities;
  std::string degree;
  std::string format = "table";
  std::string of = "ih";
  bool details = false;
};

// "<k>" or "<a>..<b>"; empty means the default range.
std::pair<int, int> degree_range(const std::string& text, int last) {
  if (text.empty()) return {0, last};
  try {
    auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      int k = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {k, k};
    }
    int a = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    std::string rest = text.substr(dots + 2);
    int b = std::stoi(rest, &used);
    if (used != rest.size() || a > b) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw Error{"invalid degree `" + text + "`, expected <k> or <a>..<b>"};
  }
}

ihtw_kind kind_of(const std::string& name) {
  if (name == "homology") return IHTW_HOMOLOGY;
  if (name == "ih") return IHTW_IH;
  if (name == "tw") return IHTW_TW;
  if (name == "gm") return IHTW_GM;
  throw Error{"unknown group kind `" + name + "`"};
}

int top_degree(const ihtw_complex* k, ihtw_kind kind) {
  if (kind != IHTW_HOMOLOGY) return ihtw_complex_dimension(k);
  int d = 0;
  while (ihtw_complex_count(k, d + 1) > 0) ++d;
  return d;
}

int run_groups(const Options& o, ihtw_kind kind) {
  ComplexHandle k = o.source.open();
  if (kind != IHTW_HOMOLOGY && o.perversity.empty()) throw Error{"--perversity is required"};
  auto [first, last] = degree_range(o.degree, top_degree(k.get(), kind));
  ihtw_groups* raw = nullptr;
  check(ihtw_compute(k.get(), kind, o.coeffs.c_str(), o.perversity.empty() ? nullptr : o.perversity.c_str(), first,
                     last, &raw));
  GroupsHandle g(raw, ihtw_groups_free);
  if (first == last) {
    std::cout << ihtw_groups_string(g.get(), first) << "\n";
    return 0;
  }
  const bool tsv = o.format == "tsv";
  if (tsv) std::cout << "degree\tgroup\n";
  for (int d = first; d <= last; ++d) {
    if (tsv)
      std::cout << d << "\t" << ihtw_groups_string(g.get(), d) << "\n";
    else
      std::cout << d << "  " << ihtw_groups_string(g.get(), d) << "\n";
  }
  return 0;
}

int run_table(const Options& o) {
  ComplexHandle k = o.source.open();
  const ihtw_kind kind = kind_of(o.of);
  if (kind == IHTW_HOMOLOGY) throw Error{"table needs --of ih, tw or gm"};
  const int n = ihtw_complex_dimension(k.get());
  auto [first, last] = degree_range(o.degree, n);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"perversity"};
  for (int d = first; d <= last; ++d) header.push_back(std::to_string(d));
  rows.push_back(header);
  for (std::size_t i = 0; i < ihtw_gm_perversity_count(n); ++i) {
    char spec[256], values[256];
    check(ihtw_gm_perversity_spec(n, i, spec, sizeof spec));
    check(ihtw_perversity_values(spec, n, values, sizeof values));
    ihtw_groups* raw = nullptr;
    check(ihtw_compute(k.get(), kind, o.coeffs.c_str(), spec, first, last, &raw));
    GroupsHandle g(raw, ihtw_groups_free);
    std::vector<std::string> row{values};
    for (int d = first; d <= last; ++d) row.push_back(ihtw_groups_string(g.get(), d));
    rows.push_back(row);
  }
  if (o.format == "tsv") {
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "\t" : "") << row[c];
      std::cout << "\n";
    }
    return 0;
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
  return 0;
}

// Prints the whole report, or only its last line unless details are asked for.
int print_report(ihtw_report* raw, bool details) {
  ReportHandle r(raw, ihtw_report_free);
  const std::size_t count = ihtw_report_line_count(r.get());
  for (std::size_t i = details || count == 0 ? 0 : count - 1; i < count; ++i)
    std::cout << ihtw_report_line(r.get(), i) << "\n";
  return ihtw_report_passed(r.get()) ? 0 : kExitFailed;
}

int run_validate(const Options& o) {
  ComplexHandle k = o.source.open();
  ihtw_report* raw = nullptr;
  check(ihtw_complex_validate(k.get(), &raw));
  return print_report(raw, true);
}

int run_factorization(const Options& o) {
  ComplexHandle k = o.source.open();
  std::vector<const char*> specs;
  for (const auto& p : o.perversities) specs.push_back(p.c_str());
  ihtw_report* raw = nullptr;
  check(ihtw_verify_factorization(k.get(), o.coeffs.c_str(), specs.data(), specs.size(), &raw));
  ReportHandle r(raw, ihtw_report_free);
  const std::size_t count = ihtw_report_line_count(r.get());
  if (o.details)
    for (std::size_t i = 0; i < count; ++i) std::cout << ihtw_report_line(r.get(), i) << "\n";
  if (ihtw_report_passed(r.get())) {
    std::cout << "PASS: factorization commutes, cap with [X] is an isomorphism in every degree (" << count
              << " checks)\n";
    return 0;
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::string line = ihtw_report_line(r.get(), i);
    if (line.find("NOT") != std::string::npos || line.find("failure") != std::string::npos ||
        line.find("not a chain map") != std::string::npos) {
      std::cout << "FAIL: " << line << "\n";
      break;
    }
  }
  return kExitFailed;
}

int run_zero_top(const Options& o) {
  ComplexHandle k = o.source.open();
  ihtw_report* raw = nullptr;
  check(ihtw_check_zero_top(k.get(), o.coeffs.c_str(), &raw));
  return print_report(raw, o.details);
}

int run_demo() {
  ihtw_report* raw = nullptr;
  check(ihtw_demo_sigma_rp3(&raw));
  return print_report(raw, true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection homology, blown-up cochains and cap product duality on filtered complexes"};
  app.require_subcommand(1);
  Options o;

  auto with_source = [&](CLI::App* sub) {
    o.source.add_to(sub);
    sub->add_option("--coeffs", o.coeffs, "Z, Q or Zmod:<m>")->capture_default_str();
  };
  auto with_degree = [&](CLI::App* sub) {
    sub->add_option("--degree", o.degree, "<k> or <a>..<b>");
    sub->add_option("--format", o.format, "table or tsv")
        ->check(CLI::IsMember({"table", "tsv"}))
        ->capture_default_str();
  };

  auto* homology = app.add_subcommand("homology", "simplicial homology");
  with_source(homology);
  with_degree(homology);
  std::vector<std::pair<CLI::App*, ihtw_kind>> group_commands{{homology, IHTW_HOMOLOGY}};
  for (auto [name, kind, help] : {std::tuple{"ih", IHTW_IH, "intersection homology"},
                                  std::tuple{"tw", IHTW_TW, "blown-up intersection cohomology"},
                                  std::tuple{"gm", IHTW_GM, "cohomology of the dual intersection chains"}}) {
    auto* sub = app.add_subcommand(name, help);
    with_source(sub);
    with_degree(sub);
    sub->add_option("--perversity", o.perversity, "zero, top, clip:<k> or list:<v0,...,vn>");
    group_commands.push_back({sub, kind});
  }

  auto* table = app.add_subcommand("table", "groups for every GM perversity and degree");
  with_source(table);
  with_degree(table);
  table->add_option("--of", o.of, "ih, tw or gm")->check(CLI::IsMember({"ih", "tw", "gm"}))->capture_default_str();

  auto* validate = app.add_subcommand("validate", "pseudomanifold checks with witnesses");
  o.source.add_to(validate);

  auto* verify = app.add_subcommand("verify", "duality checks");
  verify->require_subcommand(1);
  auto* factorization = verify->add_subcommand("factorization", "cap products through blown-up cochains");
  with_source(factorization);
  factorization->add_option("--perversity", o.perversities, "repeatable; every GM perversity by default");
  factorization->add_flag("--details", o.details, "print every check");
  auto* zero_top = verify->add_subcommand("zero-top", "duality against the zero/top comparison");
  with_source(zero_top);
  zero_top->add_flag("--details", o.details, "print the truth table");

  auto* demo = app.add_subcommand("demo", "worked examples");
  demo->require_subcommand(1);
  auto* sigma = demo->add_subcommand("sigma-rp3", "groups around the failed factorization on the suspension of RP^3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    for (auto [sub, kind] : group_commands)
      if (sub->parsed()) return run_groups(o, kind);
    if (table->parsed()) return run_table(o);
    if (validate->parsed()) return run_validate(o);
    if (factorization->parsed()) return run_factorization(o);
    if (zero_top->parsed()) return run_zero_top(o);
    if (sigma->parsed()) return run_demo();
  } catch (const Error& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
