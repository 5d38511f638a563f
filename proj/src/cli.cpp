#include "abext/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "abext/error.hpp"
#include "abext/extensions.hpp"
#include "abext/families.hpp"
#include "abext/lr.hpp"
#include "abext/oracle.hpp"
#include "abext/props.hpp"
#include "abext/verify.hpp"

namespace abext::cli {

  namespace {

    struct Config {
      std::string                  format = "text";
      std::string                  out_path;
      unsigned                     jobs = 0;
      std::optional<std::uint64_t> seed;

      std::vector<std::string> positional;  // fixed-arity arguments
      std::vector<std::string> groups;      // ext
      std::string              family;
      std::uint64_t            bound        = 64;
      std::uint64_t            oracle_bound = 1024;
      bool                     check        = false;
      std::string              claim;
      std::size_t              instances = 1000;
    };

    bool json_mode(Config const& c) {
      return c.format == "json";
    }

    nlohmann::json group_json(AbelianGroup const& g) {
      auto j     = to_json(g);
      j["group"] = format_group(g);
      return j;
    }

    void emit_groups(GroupSet const& set, Config const& c, std::ostream& os) {
      if (json_mode(c)) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto const& g : set) {
          arr.push_back(group_json(g));
        }
        os << arr.dump(2) << '\n';
        return;
      }
      for (auto const& g : set) {
        os << format_group(g) << '\n';
      }
    }

    int cmd_lr_expand(Config const& c, std::ostream& os) {
      auto const e = lr_expand(parse_partition(c.positional.at(0)),
                               parse_partition(c.positional.at(1)));
      if (json_mode(c)) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto const& [mu, m] : e.terms) {
          arr.push_back({{"partition", mu.parts()}, {"multiplicity", m}});
        }
        os << arr.dump(2) << '\n';
      } else {
        for (auto const& [mu, m] : e.terms) {
          os << to_string(mu) << ' ' << m << '\n';
        }
      }
      return ok;
    }

    int cmd_lr_coeff(Config const& c, std::ostream& os) {
      auto const value = lr_coefficient(parse_partition(c.positional.at(0)),
                                        parse_partition(c.positional.at(1)),
                                        parse_partition(c.positional.at(2)));
      if (json_mode(c)) {
        os << nlohmann::json{{"coefficient", value}}.dump(2) << '\n';
      } else {
        os << value << '\n';
      }
      return ok;
    }

    int cmd_ext(Config const& c, std::ostream& os, std::ostream& err) {
      if (!c.check) {
        if (c.groups.size() != 2) {
          err << "ext takes two groups H K (or --check G H K)\n";
          return usage;
        }
        emit_groups(extension_set(parse_group(c.groups[0]),
                                  parse_group(c.groups[1])),
                    c,
                    os);
        return ok;
      }
      if (c.groups.size() != 3) {
        err << "ext --check takes three groups G H K\n";
        return usage;
      }
      auto const g         = parse_group(c.groups[0]);
      auto const h         = parse_group(c.groups[1]);
      auto const k         = parse_group(c.groups[2]);
      bool const criterion = is_extension(g, h, k);
      std::optional<bool> oracle;
      std::string         skipped;
      try {
        oracle = brute_force_is_extension(g, h, k, OracleConfig{c.oracle_bound});
      } catch (ResourceLimit const& e) {
        skipped = e.what();
      }
      if (json_mode(c)) {
        nlohmann::json j{{"criterion", criterion}};
        j["oracle"] = oracle ? nlohmann::json(*oracle) : nlohmann::json();
        if (!skipped.empty()) {
          j["oracle_skipped"] = skipped;
        }
        os << j.dump(2) << '\n';
      } else {
        os << "criterion: " << (criterion ? "true" : "false") << '\n';
        if (oracle) {
          os << "oracle: " << (*oracle ? "true" : "false") << '\n';
        } else {
          os << "oracle: skipped (" << skipped << ")\n";
        }
      }
      if (oracle && *oracle != criterion) {
        err << "criterion and oracle disagree\n";
        return failed;
      }
      return criterion ? ok : failed;
    }

    int cmd_member(Config const& c, std::ostream& os) {
      auto const g      = parse_group(c.positional.at(0));
      bool const member = family_contains(g, c.family);
      if (json_mode(c)) {
        os << nlohmann::json{{"group", format_group(g)},
                             {"family", c.family},
                             {"member", member}}
                  .dump(2)
           << '\n';
      } else {
        os << (member ? "true" : "false") << '\n';
      }
      return member ? ok : failed;
    }

    int cmd_enumerate(Config const& c, std::ostream& os) {
      emit_groups(enumerate_family(builtin_family(c.family), c.bound), c, os);
      return ok;
    }

    int cmd_tables(Config const& c, std::ostream& os) {
      if (json_mode(c)) {
        os << render_tables_json().dump(2) << '\n';
      } else {
        os << render_tables_text();
      }
      return ok;
    }

    int cmd_verify(Config const& c, std::ostream& os) {
      VerifyOptions opts;
      opts.bound       = c.bound;
      opts.jobs        = c.jobs;
      auto const report = run_claim(c.claim, opts);
      if (json_mode(c)) {
        os << report.to_json().dump(2) << '\n';
      } else {
        os << report.to_text();
      }
      switch (report.verdict) {
        case Verdict::pass:
          return ok;
        case Verdict::pass_vacuous:
          return vacuous;
        case Verdict::fail:
          return failed;
      }
      return failed;
    }

    int cmd_props(Config const& c, std::ostream& os) {
      PropertyOptions opts;
      if (c.seed) {
        opts.seed = *c.seed;
      }
      opts.random_extensions = c.instances;
      opts.jobs              = c.jobs;
      auto const results     = run_properties(opts);
      if (json_mode(c)) {
        os << nlohmann::json{{"seed", opts.seed}, {"properties", to_json(results)}}
                  .dump(2)
           << '\n';
      } else {
        os << "seed: " << opts.seed << '\n' << to_text(results);
      }
      bool const all = std::all_of(results.begin(),
                                   results.end(),
                                   [](PropertyResult const& r) { return r.passed(); });
      return all ? ok : failed;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    Config   cfg;
    CLI::App app{"Abelian extensions via Littlewood-Richardson positivity",
                 "abext"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", cfg.out_path, "Write output to FILE");
    app.add_option("--jobs", cfg.jobs, "Worker threads (0: all cores)");
    app.add_option("--seed", cfg.seed, "Seed for randomized sweeps");

    auto* lr_expand_cmd
        = app.add_subcommand("lr-expand", "Expand the product of two diagrams");
    cfg.positional.resize(3);
    lr_expand_cmd->add_option("lambda", cfg.positional[0])->required();
    lr_expand_cmd->add_option("nu", cfg.positional[1])->required();

    auto* lr_coeff_cmd = app.add_subcommand(
        "lr-coeff", "Littlewood-Richardson coefficient c^MU_{LAMBDA,NU}");
    lr_coeff_cmd->add_option("lambda", cfg.positional[0])->required();
    lr_coeff_cmd->add_option("nu", cfg.positional[1])->required();
    lr_coeff_cmd->add_option("mu", cfg.positional[2])->required();

    auto* ext_cmd
        = app.add_subcommand("ext", "Extensions of K by H, or --check G H K");
    ext_cmd->add_option("groups", cfg.groups, "H K, or G H K with --check")
        ->expected(2, 3)
        ->required();
    ext_cmd->add_flag("--check", cfg.check, "Decide one extension");
    ext_cmd
        ->add_option("--oracle-bound",
                     cfg.oracle_bound,
                     "Largest p-part order for the brute-force oracle")
        ->check(CLI::PositiveNumber);

    auto* member_cmd
        = app.add_subcommand("member", "Membership in a built-in family");
    member_cmd->add_option("group", cfg.positional[0])->required();
    member_cmd->add_option("--family", cfg.family)->required();

    auto* enumerate_cmd
        = app.add_subcommand("enumerate", "Members of a family up to an order");
    enumerate_cmd->add_option("--family", cfg.family)->required();
    enumerate_cmd->add_option("--bound", cfg.bound)->check(CLI::PositiveNumber);

    app.add_subcommand("tables", "Print the appendix tables");

    auto* verify_cmd
        = app.add_subcommand("verify", "Check a claim on a bounded window");
    verify_cmd->add_option("claim", cfg.claim)
        ->required()
        ->check(CLI::IsMember(claim_names()));
    verify_cmd->add_option("--bound", cfg.bound)->check(CLI::PositiveNumber);

    auto* props_cmd
        = app.add_subcommand("props", "Randomized structural property sweep");
    props_cmd->add_option("--instances", cfg.instances, "Random extensions")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForVersion const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, err, err);
      return usage;
    }

    std::ostringstream buffer;
    int                code = ok;
    try {
      auto* sub = app.get_subcommands().front();
      auto  name = sub->get_name();
      if (name == "lr-expand") {
        code = cmd_lr_expand(cfg, buffer);
      } else if (name == "lr-coeff") {
        code = cmd_lr_coeff(cfg, buffer);
      } else if (name == "ext") {
        code = cmd_ext(cfg, buffer, err);
      } else if (name == "member") {
        code = cmd_member(cfg, buffer);
      } else if (name == "enumerate") {
        code = cmd_enumerate(cfg, buffer);
      } else if (name == "tables") {
        code = cmd_tables(cfg, buffer);
      } else if (name == "verify") {
        code = cmd_verify(cfg, buffer);
      } else {
        code = cmd_props(cfg, buffer);
      }
    } catch (ResourceLimit const& e) {
      err << "resource limit: " << e.what() << '\n';
      return resource_limit;
    } catch (OverflowError const& e) {
      err << "overflow: " << e.what() << '\n';
      return resource_limit;
    } catch (LookupError const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    } catch (InvalidInput const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }

    if (cfg.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out_path);
      if (!file) {
        err << "cannot write " << cfg.out_path << '\n';
        return usage;
      }
      file << buffer.str();
    }
    return code;
  }

}  // namespace abext::cli
