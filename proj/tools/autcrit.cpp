// autcrit: catalog listing, invariant summaries and criteria verification.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "autcrit.hpp"

using namespace autcrit;

namespace {

ReportFormat parse_format(const std::string& f) { return f == "json" ? ReportFormat::Json : ReportFormat::Text; }

int cmd_list() {
  for (const auto& spec : catalog()) {
    auto g = load_group(spec);
    std::cout << std::left << std::setw(12) << spec.name << " order " << std::setw(4) << g.order()
              << (g.is_abelian() ? " abelian    " : " non-abelian") << "  " << spec.recipe << '\n';
  }
  return 0;
}

int cmd_analyze(const std::string& ref, ReportFormat fmt) {
  auto spec = resolve_spec(ref);
  auto g = load_group(spec);
  auto s = summarize(g);
  if (fmt == ReportFormat::Json) {
    auto j = summary_json(s);
    j["group"] = spec.name;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << format_summary(spec.name, s);
  }
  return 0;
}

int cmd_verify(const std::string& ref, const std::vector<std::string>& ids, ReportFormat fmt, bool force) {
  auto spec = resolve_spec(ref);
  auto g = load_group(spec);
  require_p_group(g);
  if (g.is_abelian()) throw Error(ErrorCode::AbelianInput, spec.name + " is abelian; every criterion needs a non-abelian group");
  VerifyOptions opt;
  opt.force = force;
  for (const auto& id : ids) {
    auto c = parse_criterion(id);
    if (!c) throw Error(ErrorCode::ParseError, "unknown criterion '" + id + "'");
    opt.criteria.push_back(*c);
  }
  auto rep = verify_group(spec.name, g, opt);
  std::cout << format_rows(rep, fmt);
  return rep.ok() ? 0 : 1;
}

int cmd_verify_all(std::optional<std::size_t> max_order, std::optional<std::uint32_t> p, ReportFormat fmt, bool force) {
  VerifyOptions opt;
  opt.force = force;
  auto reports = verify_all({max_order, p, false}, opt);
  bool ok = true;
  std::size_t rows = 0, mismatches = 0;
  for (const auto& rep : reports) {
    ok = ok && rep.ok();
    rows += rep.rows.size();
    for (const auto& r : rep.rows) mismatches += r.match() == false;
    std::cout << (fmt == ReportFormat::Json ? format_rows(rep, fmt) : format_tally(rep));
  }
  if (fmt == ReportFormat::Text)
    std::cout << reports.size() << " groups, " << rows << " rows, " << mismatches << " mismatches\n";
  return ok ? 0 : 1;
}

int cmd_hom(const std::string& a, const std::string& b) {
  auto x = parse_partition(a);
  auto y = parse_partition(b);
  auto order = hom_order(x, y);
  std::cout << "order " << order << '\n' << "type " << hom_type(x, y).str() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Criteria for equality of automorphism subgroups of finite p-groups"};
  app.require_subcommand(1);

  std::string ref, format = "text", hom_a, hom_b;
  std::vector<std::string> criteria;
  bool force = false;
  std::optional<std::size_t> max_order;
  std::optional<std::uint32_t> prime;
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* list = app.add_subcommand("list", "List the built-in catalog");
  auto* analyze = app.add_subcommand("analyze", "Print the invariant summary of a group");
  analyze->add_option("group", ref, "Catalog name, file path or recipe")->required();
  add_format(analyze);
  auto* verify = app.add_subcommand("verify", "Check the criteria against brute-force automorphism sets");
  verify->add_option("group", ref, "Catalog name, file path or recipe")->required();
  verify->add_option("--criterion", criteria, "Criterion id, e.g. COR_2_3 (repeatable)");
  verify->add_flag("--force", force, "Confirm past the automorphism bound");
  add_format(verify);
  auto* verify_all = app.add_subcommand("verify-all", "Verify every non-abelian catalog group");
  verify_all->add_option("--max-order", max_order, "Largest group order to include");
  verify_all->add_option("--p", prime, "Restrict to one prime");
  verify_all->add_flag("--force", force, "Confirm past the automorphism bound");
  add_format(verify_all);
  auto* hom = app.add_subcommand("hom", "Order and type of Hom(A, B) for abelian p-groups, e.g. 2^[2,1]");
  hom->add_option("A", hom_a)->required();
  hom->add_option("B", hom_b)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    auto fmt = parse_format(format);
    if (*list) return cmd_list();
    if (*analyze) return cmd_analyze(ref, fmt);
    if (*verify) return cmd_verify(ref, criteria, fmt, force);
    if (*verify_all) return cmd_verify_all(max_order, prime, fmt, force);
    if (*hom) return cmd_hom(hom_a, hom_b);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
