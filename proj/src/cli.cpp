#include "freedim/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <sstream>

#include "freedim/algebras.hpp"
#include "freedim/coverlab.hpp"
#include "freedim/io.hpp"
#include "freedim/report.hpp"
#include "freedim/rng.hpp"
#include "freedim/setsys.hpp"

namespace freedim {

namespace {

struct CliContext {
  std::istream* in = nullptr;
  std::ostream* err = nullptr;
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 0;
  std::uint64_t limit = 1000000;
};

std::string read_input(const CliContext& ctx, const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << ctx.in->rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

Document load(const CliContext& ctx, const std::string& path, DocKind kind) {
  Document doc = parse_document(read_input(ctx, path), kind, path);
  for (const std::string& warning : doc.warnings) {
    *ctx.err << path << ": warning: " << warning << "\n";
  }
  return doc;
}

std::string u64(std::uint64_t value) { return std::to_string(value); }

std::string index_list_string(const std::vector<std::size_t>& indices) {
  std::string s = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(indices[i]);
  }
  return s + "}";
}

std::string yes_no(bool value) { return value ? "true" : "false"; }

GrowthWitness witness_from_doc(const CoverFamilyDoc& doc) {
  if (!doc.d || !doc.m || !doc.chi) {
    throw ParseError("witness-check needs 'd', 'M' and 'chi' in the cover family document");
  }
  return make_growth_witness(*doc.d, *doc.m, doc.covers, *doc.chi, doc.interval);
}

// Subset sizes spread evenly over [2, member count], one subset per slot.
std::vector<std::vector<std::size_t>> sample_subset_schedule(const SetFamily& family,
                                                             std::uint64_t seed,
                                                             std::size_t samples) {
  if (family.size() < 2) {
    throw std::invalid_argument("sampling needs a family with at least 2 members");
  }
  if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
  Rng rng(seed);
  std::vector<std::vector<std::size_t>> subsets;
  subsets.reserve(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    const std::size_t lo = 2;
    const std::size_t hi = family.size();
    const std::size_t size =
        samples == 1 ? hi : lo + ((hi - lo) * j + (samples - 1) / 2) / (samples - 1);
    subsets.push_back(rng.sample_indices(family.size(), size));
  }
  return subsets;
}

using CommandFn = std::function<Report(const CliContext&)>;

Report cmd_atoms(const CliContext& ctx, const std::string& file) {
  const auto family = std::get<SetFamily>(load(ctx, file, DocKind::setsystem).payload);
  Report report{"atoms", {"cell", "signature"}, {}, std::nullopt};
  for (const AtomCell& cell : atoms(family).cells) {
    report.rows.push_back({index_string(cell.points), bit_string(cell.signature)});
  }
  return report;
}

Report cmd_indep(const CliContext& ctx, const std::string& file,
                 const std::vector<std::size_t>& indices) {
  const auto family = std::get<SetFamily>(load(ctx, file, DocKind::setsystem).payload);
  const bool independent = is_independent(family, indices);
  Report report{"indep", {"indices", "independent"}, {}, independent};
  report.rows.push_back({index_list_string(indices), yes_no(independent)});
  return report;
}

Report cmd_vc(const CliContext& ctx, const std::string& file) {
  const auto family = std::get<SetFamily>(load(ctx, file, DocKind::setsystem).payload);
  const IndependenceNumber result = independence_number(family);
  Report report{"vc", {"independence_number", "witness"}, {}, std::nullopt};
  report.rows.push_back({u64(result.value), index_list_string(result.witness)});
  return report;
}

Report cmd_sauer(const CliContext& ctx, const std::string& file, std::uint64_t d) {
  const auto family = std::get<SetFamily>(load(ctx, file, DocKind::setsystem).payload);
  // The document is read as a trace set: each set is the support of one
  // 0/1 pattern over positions 0..ground_size-1.
  TraceSet trace = make_trace_set(family.ground.size, family.members);
  const auto witness = sauer_shelah_find(trace, d);
  Report report{"sauer", {"trace_size", "bound", "shattered"}, {}, std::nullopt};
  report.rows.push_back({u64(trace.size()), u64(binomial_bound(trace.width, d)),
                         witness ? index_list_string(*witness) : "none"});
  return report;
}

Report cmd_heindorf(const CliContext& ctx, const std::string& file) {
  const auto family = std::get<SetFamily>(load(ctx, file, DocKind::setsystem).payload);
  const HeindorfResult result = heindorf_check(family);
  Report report{"heindorf", {"holds", "offending_pair"}, {}, result.holds};
  report.rows.push_back({yes_no(result.holds),
                         result.offender ? "(" + u64(result.offender->first) + "," +
                                               u64(result.offender->second) + ")"
                                         : "none"});
  return report;
}

Report cmd_ica_check(const CliContext& ctx, const std::string& file,
                     const std::vector<std::size_t>& picks) {
  const auto tree = std::get<Pseudotree>(load(ctx, file, DocKind::pseudotree).payload);
  const IcaBoundReport result = ica_bound_report(tree, picks);
  Report report{"ica-check", {"atom_count", "budget", "holds"}, {}, result.holds};
  report.rows.push_back({u64(result.atom_count), u64(result.budget), yes_no(result.holds)});
  return report;
}

Report cmd_free_product(const CliContext& ctx, const std::vector<std::string>& files) {
  std::vector<SetFamily> factors;
  for (const std::string& file : files) {
    factors.push_back(std::get<SetFamily>(load(ctx, file, DocKind::setsystem).payload));
  }
  const ProductFamily product = free_product(factors);
  Report report{"free-product", {"part", "ground", "members", "atoms"}, {}, std::nullopt};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    report.rows.push_back({"factor " + u64(i), u64(factors[i].ground.size),
                           u64(factors[i].size()), u64(atoms(factors[i]).size())});
  }
  report.rows.push_back({"product", u64(product.cylinders.ground.size),
                         u64(product.cylinders.size()), u64(atoms(product.cylinders).size())});
  return report;
}

Report cmd_certify(const CliContext& ctx, const std::string& file, std::uint64_t d) {
  const auto family = std::get<SetFamily>(load(ctx, file, DocKind::setsystem).payload);
  const ClassDCertificate cert = certify_class_d(family, d);
  Report report{"certify", {"d", "verified", "counterexample"}, {}, cert.verified};
  report.rows.push_back({u64(cert.d), yes_no(cert.verified),
                         cert.counterexample ? index_list_string(*cert.counterexample) : "none"});
  return report;
}

Report cmd_growth_report(const CliContext& ctx, const std::string& file, std::uint64_t d,
                         std::size_t samples) {
  const auto family = std::get<SetFamily>(load(ctx, file, DocKind::setsystem).payload);
  const ClassDCertificate cert = certify_class_d(family, d);
  if (!cert.verified) {
    Report report{"growth-report", {"d", "verified", "counterexample"}, {}, false};
    report.rows.push_back({u64(d), "false", index_list_string(*cert.counterexample)});
    return report;
  }
  const auto subsets = sample_subset_schedule(family, ctx.seed, samples);
  Report report{"growth-report",
                {"subset", "size", "atoms", "binomial_bound", "poly_bound", "within"},
                {},
                true};
  bool all_within = true;
  for (const GrowthRow& row : growth_bound_report(family, d, subsets)) {
    all_within = all_within && row.within;
    report.rows.push_back({index_list_string(row.subset), u64(row.family_size),
                           u64(row.atom_count), u64(row.binomial), u64(row.polynomial),
                           yes_no(row.within)});
  }
  report.verdict = all_within;
  return report;
}

Report cmd_refine(const CliContext& ctx, const std::string& file) {
  const auto doc = std::get<CoverFamilyDoc>(load(ctx, file, DocKind::coverfamily).payload);
  const Cover joint = doc.interval ? interval_joint_refinement(doc.ground_size, doc.covers)
                                   : atoms_refinement(doc.covers);
  Report report{"refine", {"cell"}, {}, std::nullopt};
  for (const Bitset& cell : joint.cells) report.rows.push_back({index_string(cell)});
  return report;
}

Report cmd_push(const CliContext& ctx, const std::string& file,
                const std::vector<std::size_t>& map, std::size_t target_size) {
  const auto doc = std::get<CoverFamilyDoc>(load(ctx, file, DocKind::coverfamily).payload);
  if (target_size == 0) {
    for (std::size_t value : map) target_size = std::max(target_size, value + 1);
  }
  Report report{"push", {"cover", "cell"}, {}, std::nullopt};
  for (std::size_t i = 0; i < doc.covers.size(); ++i) {
    const Cover pushed = push_cover(map, target_size, doc.covers[i]);
    for (const Bitset& cell : pushed.cells) {
      report.rows.push_back({u64(i), index_string(cell)});
    }
  }
  return report;
}

Report cmd_restrict(const CliContext& ctx, const std::string& file,
                    const std::vector<std::size_t>& subset_indices) {
  const auto doc = std::get<CoverFamilyDoc>(load(ctx, file, DocKind::coverfamily).payload);
  const Bitset subset = bitset_of(doc.ground_size, subset_indices);
  const std::vector<std::size_t> points = indices_of(subset);
  Report report{"restrict", {"cover", "cell"}, {}, std::nullopt};
  for (std::size_t i = 0; i < doc.covers.size(); ++i) {
    const Cover traced = restrict_cover(doc.covers[i], subset);
    for (const Bitset& cell : traced.cells) {
      // Cells are reported in the ambient point labels.
      std::vector<std::size_t> ambient;
      for (std::size_t b : indices_of(cell)) ambient.push_back(points[b]);
      report.rows.push_back({u64(i), index_list_string(ambient)});
    }
  }
  return report;
}

Report cmd_witness_check(const CliContext& ctx, const std::string& file,
                         std::vector<std::vector<std::size_t>> tuples) {
  const auto doc = std::get<CoverFamilyDoc>(load(ctx, file, DocKind::coverfamily).payload);
  const GrowthWitness witness = witness_from_doc(doc);
  if (tuples.empty()) {
    std::vector<std::size_t> all(doc.covers.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    tuples.push_back(std::move(all));
  }
  Report report{"witness-check", {"tuple", "joint_size", "budget", "pass"}, {}, std::nullopt};
  bool all_pass = true;
  for (const WitnessRow& row : witness_check(witness, tuples)) {
    all_pass = all_pass && row.pass;
    report.rows.push_back(
        {index_list_string(row.tuple), u64(row.joint_size), row.budget, yes_no(row.pass)});
  }
  report.verdict = all_pass;
  return report;
}

Report cmd_separated(std::uint64_t n) {
  const SeparatedInstance inst = separated_family(n);
  Report report{"separated", {"points", "functions", "separation"}, {}, std::nullopt};
  report.rows.push_back({u64(inst.point_count), u64(inst.functions.size()), "verified"});
  return report;
}

Report cmd_grid_demo(std::uint64_t d, std::uint64_t n, std::uint64_t p) {
  const SeparatedInstance inst = build_grid_instance(d, n, p);
  Report report{"grid-demo", {"points", "functions", "separation"}, {}, std::nullopt};
  report.rows.push_back({u64(inst.point_count), u64(inst.functions.size()), "verified"});
  return report;
}

Report cmd_counting(const CountingParams& params) {
  const CountingCheck check = counting_check(params);
  Report report{"counting", {"lhs", "rhs", "holds"}, {}, check.holds};
  report.rows.push_back({u64(check.lhs), u64(check.rhs), yes_no(check.holds)});
  return report;
}

Report cmd_find_n(const CliContext& ctx, std::uint64_t d, std::uint64_t m, std::uint64_t m1,
                  std::uint64_t p) {
  const auto result = find_min_n(d, m, m1, p, ctx.limit);
  Report report{"find-n", {"min_n"}, {}, std::nullopt};
  report.rows.push_back({result ? u64(*result) : "none"});
  return report;
}

Report cmd_exponent(const CliContext& ctx, const std::string& file, std::size_t samples) {
  const auto family = std::get<SetFamily>(load(ctx, file, DocKind::setsystem).payload);
  const auto subsets = sample_subset_schedule(family, ctx.seed, samples);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  Report report{"exponent", {"kind", "budget", "joint_size", "exponent"}, {}, std::nullopt};
  for (const auto& subset : subsets) {
    SetFamily sub;
    sub.ground = family.ground;
    for (std::size_t index : subset) sub.members.push_back(family.members[index]);
    pairs.emplace_back(subset.size(), atoms(sub).size());
    report.rows.push_back({"sample", u64(pairs.back().first), u64(pairs.back().second), ""});
  }
  const double exponent = exponent_fit(pairs);
  std::ostringstream rendered;
  rendered.precision(6);
  rendered << std::fixed << exponent;
  report.rows.push_back({"fit", "", "", rendered.str()});
  return report;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CliContext ctx;
  ctx.in = &in;
  ctx.err = &err;

  CLI::App app{"finite workbench for Boolean-algebra atoms, covers and growth bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", ctx.format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", ctx.out_path, "write the report to this file instead of stdout");
  app.add_option("--seed", ctx.seed, "seed for all randomized sampling");
  app.add_option("--limit", ctx.limit, "search bound for find-n");

  CommandFn command;

  {
    auto* sub = app.add_subcommand("atoms", "atom partition of a set family");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "setsystem document")->required();
    sub->callback([&command, file] {
      command = [file](const CliContext& c) { return cmd_atoms(c, *file); };
    });
  }
  {
    auto* sub = app.add_subcommand("indep", "test Boolean independence of chosen members");
    auto file = std::make_shared<std::string>();
    auto indices = std::make_shared<std::vector<std::size_t>>();
    sub->add_option("file", *file, "setsystem document")->required();
    sub->add_option("--indices", *indices, "member indices")->delimiter(',');
    sub->callback([&command, file, indices] {
      command = [file, indices](const CliContext& c) { return cmd_indep(c, *file, *indices); };
    });
  }
  {
    auto* sub = app.add_subcommand("vc", "independence number and witness");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "setsystem document")->required();
    sub->callback([&command, file] {
      command = [file](const CliContext& c) { return cmd_vc(c, *file); };
    });
  }
  {
    auto* sub = app.add_subcommand("sauer", "find a shattered set in a trace");
    auto file = std::make_shared<std::string>();
    auto d = std::make_shared<std::uint64_t>(0);
    sub->add_option("file", *file, "setsystem document read as patterns")->required();
    sub->add_option("--d", *d, "shattering degree")->required();
    sub->callback([&command, file, d] {
      command = [file, d](const CliContext& c) { return cmd_sauer(c, *file, *d); };
    });
  }
  {
    auto* sub = app.add_subcommand("heindorf", "comparable-or-disjoint check");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "setsystem document")->required();
    sub->callback([&command, file] {
      command = [file](const CliContext& c) { return cmd_heindorf(c, *file); };
    });
  }
  {
    auto* sub = app.add_subcommand("ica-check", "initial-chain atom bound on a pseudotree");
    auto file = std::make_shared<std::string>();
    auto picks = std::make_shared<std::vector<std::size_t>>();
    sub->add_option("file", *file, "pseudotree document")->required();
    sub->add_option("--picks", *picks, "nodes whose initial chains generate")->delimiter(',');
    sub->callback([&command, file, picks] {
      command = [file, picks](const CliContext& c) { return cmd_ica_check(c, *file, *picks); };
    });
  }
  {
    auto* sub = app.add_subcommand("free-product", "cylinder family over factor grounds");
    auto files = std::make_shared<std::vector<std::string>>();
    sub->add_option("files", *files, "setsystem documents, one per factor")->required();
    sub->callback([&command, files] {
      command = [files](const CliContext& c) { return cmd_free_product(c, *files); };
    });
  }
  {
    auto* sub = app.add_subcommand("certify", "certify that no d+1 members are independent");
    auto file = std::make_shared<std::string>();
    auto d = std::make_shared<std::uint64_t>(0);
    sub->add_option("file", *file, "setsystem document")->required();
    sub->add_option("--d", *d, "class parameter")->required();
    sub->callback([&command, file, d] {
      command = [file, d](const CliContext& c) { return cmd_certify(c, *file, *d); };
    });
  }
  {
    auto* sub = app.add_subcommand("growth-report", "atom growth against the class-d budgets");
    auto file = std::make_shared<std::string>();
    auto d = std::make_shared<std::uint64_t>(0);
    auto samples = std::make_shared<std::size_t>(24);
    sub->add_option("file", *file, "setsystem document")->required();
    sub->add_option("--d", *d, "class parameter")->required();
    sub->add_option("--samples", *samples, "number of sampled subsets");
    sub->callback([&command, file, d, samples] {
      command = [file, d, samples](const CliContext& c) {
        return cmd_growth_report(c, *file, *d, *samples);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("refine", "canonical joint refinement of a cover family");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "coverfamily document")->required();
    sub->callback([&command, file] {
      command = [file](const CliContext& c) { return cmd_refine(c, *file); };
    });
  }
  {
    auto* sub = app.add_subcommand("push", "image covers under a surjection");
    auto file = std::make_shared<std::string>();
    auto map = std::make_shared<std::vector<std::size_t>>();
    auto target = std::make_shared<std::size_t>(0);
    sub->add_option("file", *file, "coverfamily document")->required();
    sub->add_option("--map", *map, "target point for each source point")
        ->delimiter(',')
        ->required();
    sub->add_option("--target-size", *target, "target ground size (default: max map value + 1)");
    sub->callback([&command, file, map, target] {
      command = [file, map, target](const CliContext& c) {
        return cmd_push(c, *file, *map, *target);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("restrict", "trace covers on a subset");
    auto file = std::make_shared<std::string>();
    auto subset = std::make_shared<std::vector<std::size_t>>();
    sub->add_option("file", *file, "coverfamily document")->required();
    sub->add_option("--subset", *subset, "points to keep")->delimiter(',')->required();
    sub->callback([&command, file, subset] {
      command = [file, subset](const CliContext& c) { return cmd_restrict(c, *file, *subset); };
    });
  }
  {
    auto* sub = app.add_subcommand("witness-check", "joint-refinement budget check");
    auto file = std::make_shared<std::string>();
    auto tuples = std::make_shared<std::vector<std::string>>();
    sub->add_option("file", *file, "coverfamily document with d, M and chi")->required();
    sub->add_option("--tuple", *tuples,
                    "comma-separated cover indices (repeatable; default: all covers)");
    sub->callback([&command, file, tuples] {
      command = [file, tuples](const CliContext& c) {
        std::vector<std::vector<std::size_t>> parsed;
        for (const std::string& tuple : *tuples) {
          std::vector<std::size_t> indices;
          std::stringstream stream(tuple);
          std::string item;
          while (std::getline(stream, item, ',')) {
            indices.push_back(static_cast<std::size_t>(std::stoull(item)));
          }
          parsed.push_back(std::move(indices));
        }
        return cmd_witness_check(c, *file, std::move(parsed));
      };
    });
  }
  {
    auto* sub = app.add_subcommand("separated", "indicator family separating n+1 points");
    auto n = std::make_shared<std::uint64_t>(0);
    sub->add_option("--n", *n, "number of functions")->required();
    sub->callback([&command, n] {
      command = [n](const CliContext&) { return cmd_separated(*n); };
    });
  }
  {
    auto* sub = app.add_subcommand("grid-demo", "separated grid instance of the counting argument");
    auto d = std::make_shared<std::uint64_t>(0);
    auto n = std::make_shared<std::uint64_t>(0);
    auto p = std::make_shared<std::uint64_t>(0);
    sub->add_option("--d", *d, "number of separated axes")->required();
    sub->add_option("--n", *n, "functions per axis")->required();
    sub->add_option("--p", *p, "disjoint-support functions on the last axis")->required();
    sub->callback([&command, d, n, p] {
      command = [d, n, p](const CliContext&) { return cmd_grid_demo(*d, *n, *p); };
    });
  }
  {
    auto* sub = app.add_subcommand("counting", "evaluate the counting inequality");
    auto file = std::make_shared<std::string>();
    auto params = std::make_shared<CountingParams>();
    auto n = std::make_shared<std::uint64_t>(0);
    auto has = std::make_shared<std::array<bool, 5>>();
    sub->add_option("--params", *file, "instanceparams document");
    sub->add_option("--d", params->d, "exponent")->each([has](const std::string&) { (*has)[0] = true; });
    sub->add_option("--m", params->m, "chi budget per separated function")
        ->each([has](const std::string&) { (*has)[1] = true; });
    sub->add_option("--m1", params->m1, "chi budget per disjoint-support function")
        ->each([has](const std::string&) { (*has)[2] = true; });
    sub->add_option("--p", params->p, "number of disjoint-support functions")
        ->each([has](const std::string&) { (*has)[3] = true; });
    sub->add_option("--n", *n, "number of separated functions per axis")
        ->each([has](const std::string&) { (*has)[4] = true; });
    sub->callback([&command, file, params, n, has] {
      command = [file, params, n, has](const CliContext& c) {
        CountingParams resolved = *params;
        resolved.n = *n;
        if (!file->empty()) {
          const auto doc = std::get<InstanceParams>(load(c, *file, DocKind::instanceparams).payload);
          if (!(*has)[0]) resolved.d = doc.d;
          if (!(*has)[1]) resolved.m = doc.m;
          if (!(*has)[2]) resolved.m1 = doc.m1;
          if (!(*has)[3]) resolved.p = doc.p;
          if (!(*has)[4]) {
            if (!doc.n) throw ParseError("counting needs 'n' (flag or document field)");
            resolved.n = *doc.n;
          }
        } else if (!(*has)[0] || !(*has)[1] || !(*has)[2] || !(*has)[3] || !(*has)[4]) {
          throw ParseError("counting needs --d, --m, --m1, --p and --n (or --params)");
        }
        return cmd_counting(resolved);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("find-n", "minimal n making the counting inequality hold");
    auto file = std::make_shared<std::string>();
    auto params = std::make_shared<CountingParams>();
    auto has = std::make_shared<std::array<bool, 4>>();
    sub->add_option("--params", *file, "instanceparams document");
    sub->add_option("--d", params->d, "exponent")->each([has](const std::string&) { (*has)[0] = true; });
    sub->add_option("--m", params->m, "chi budget per separated function")
        ->each([has](const std::string&) { (*has)[1] = true; });
    sub->add_option("--m1", params->m1, "chi budget per disjoint-support function")
        ->each([has](const std::string&) { (*has)[2] = true; });
    sub->add_option("--p", params->p, "number of disjoint-support functions")
        ->each([has](const std::string&) { (*has)[3] = true; });
    sub->callback([&command, file, params, has] {
      command = [file, params, has](const CliContext& c) {
        CountingParams resolved = *params;
        if (!file->empty()) {
          const auto doc = std::get<InstanceParams>(load(c, *file, DocKind::instanceparams).payload);
          if (!(*has)[0]) resolved.d = doc.d;
          if (!(*has)[1]) resolved.m = doc.m;
          if (!(*has)[2]) resolved.m1 = doc.m1;
          if (!(*has)[3]) resolved.p = doc.p;
        } else if (!(*has)[0] || !(*has)[1] || !(*has)[2] || !(*has)[3]) {
          throw ParseError("find-n needs --d, --m, --m1 and --p (or --params)");
        }
        return cmd_find_n(c, resolved.d, resolved.m, resolved.m1, resolved.p);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("exponent", "log-log growth exponent of sampled subsets");
    auto file = std::make_shared<std::string>();
    auto samples = std::make_shared<std::size_t>(24);
    sub->add_option("file", *file, "setsystem document")->required();
    sub->add_option("--samples", *samples, "number of sampled subsets");
    sub->callback([&command, file, samples] {
      command = [file, samples](const CliContext& c) { return cmd_exponent(c, *file, *samples); };
    });
  }

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Report report = command(ctx);
    const std::string rendered = render_report(report, parse_format(ctx.format));
    if (!ctx.out_path.empty()) {
      std::ofstream file(ctx.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot write '" << ctx.out_path << "'\n";
        return 2;
      }
      file << rendered;
    } else {
      out << rendered;
    }
    if (report.verdict && !*report.verdict) return 1;
    return 0;
  } catch (const ParseError& e) {
    err << "error: ";
    if (e.line() > 0) err << "line " << e.line() << ", column " << e.column() << ": ";
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace freedim
