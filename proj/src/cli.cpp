#include "partalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <variant>

#include "CLI11.hpp"
#include "partalg/errors.hpp"
#include "partalg/jucys_murphy.hpp"
#include "partalg/json_io.hpp"
#include "partalg/tensor.hpp"
#include "partalg/verifier.hpp"

namespace partalg {

  namespace {

    constexpr std::string_view kTensorPrefix = "tensor:";

    struct Options {
      int                      rank = 3;
      std::optional<int>       n;
      std::optional<int>       r;
      int                      jobs = 1;
      std::string              json_path;
      bool                     all = false;
      std::string              left, right;
      std::string              family, index;
      std::vector<std::string> suites;
    };

    void write_json(std::string const& path, Json const& j) {
      std::ofstream file(path);
      if (!file) {
        throw Error("cannot open " + path + " for writing");
      }
      file << j.dump(2) << '\n';
      if (!file) {
        throw Error("failed writing " + path);
      }
    }

    void require_rank(int k) {
      if (k < 0) {
        throw IndexOutOfRange("rank must be nonnegative");
      }
      if (k > enumeration_cap()) {
        throw CapExceeded("rank " + std::to_string(k) + " exceeds the cap "
                          + std::to_string(enumeration_cap())
                          + " (raise PA_MAX_RANK)");
      }
    }

    int cmd_compose(Options const& o, std::ostream& out) {
      Diagram const top    = parse_diagram_any(o.left);
      Diagram const bottom = parse_diagram_any(o.right);
      if (top.rank() != bottom.rank()) {
        throw RankMismatch("ranks differ: " + std::to_string(top.rank())
                           + " and " + std::to_string(bottom.rank()));
      }
      CompositionResult const res = compose(top, bottom);
      out << res.diagram.to_string() << '\n';
      out << "removed blocks: " << res.removed_blocks << '\n';
      if (!o.json_path.empty()) {
        Json j;
        j["diagram"]        = diagram_to_json(res.diagram);
        j["removed_blocks"] = res.removed_blocks;
        write_json(o.json_path, j);
      }
      return kExitPass;
    }

    int cmd_expand(Options const& o, std::ostream& out) {
      require_rank(o.rank);
      HalfIndex const idx = HalfIndex::parse(o.index);
      JMCache const   cache(o.rank);
      AlgebraElement  element;
      if (o.family == "L") {
        element = cache.L(idx);
      } else if (o.family == "sigma") {
        element = cache.sigma(idx);
      } else {
        element = cache.central(idx);
      }
      out << o.family << '_' << idx.to_string() << " at rank " << o.rank
          << ": " << element.size() << " terms\n";
      out << element.to_string();
      if (!o.json_path.empty()) {
        write_json(o.json_path, element_to_json(element));
      }
      return kExitPass;
    }

    void print_report(VerificationReport const& r, std::ostream& out) {
      out << r.suite << " rank=" << r.rank;
      if (r.n) {
        out << " n=" << *r.n;
      }
      out << ": " << (r.checks.size() - r.failures()) << '/'
          << r.checks.size() << " passed";
      if (r.vacuous()) {
        out << " (vacuous)";
      }
      if (r.out_of_range > 0) {
        out << ", " << r.out_of_range << " out of range";
      }
      out << std::fixed << std::setprecision(3) << " [" << r.elapsed_seconds
          << " s]\n";
      for (CheckResult const& c : r.checks) {
        if (!c.pass) {
          out << "  FAIL " << c.id;
          for (std::string const& i : c.indices) {
            out << ' ' << i;
          }
          out << " (" << c.residual_terms << " residual terms)\n";
        }
      }
      for (std::string const& note : r.notes) {
        out << "  note: " << note << '\n';
      }
    }

    using SuiteChoice = std::variant<SuiteId, TensorSuite>;

    int cmd_verify(Options const& o, std::ostream& out) {
      std::vector<SuiteChoice> choices;
      if (o.all) {
        for (SuiteId id : kAllSuites) {
          choices.emplace_back(id);
        }
        for (TensorSuite s : kAllTensorSuites) {
          choices.emplace_back(s);
        }
      }
      for (std::string const& name : o.suites) {
        if (name.starts_with(kTensorPrefix)) {
          choices.emplace_back(
              parse_tensor_suite(name.substr(kTensorPrefix.size())));
        } else {
          choices.emplace_back(parse_suite(name));
        }
      }
      if (choices.empty()) {
        throw ParseError("no suites given (name suites or pass --all)");
      }
      if (o.n.has_value() != o.r.has_value()) {
        throw ParseError("--n and --r must be given together");
      }
      std::vector<RepConfig> grid = default_tensor_grid();
      if (o.n) {
        grid = {RepConfig{*o.n, *o.r}};
      }
      for (RepConfig cfg : grid) {
        cfg.validate();
      }

      bool const needs_cache =
          std::any_of(choices.begin(), choices.end(), [](SuiteChoice c) {
            return std::holds_alternative<SuiteId>(c);
          });
      std::optional<JMCache> cache;
      if (needs_cache) {
        require_rank(o.rank);
        cache.emplace(o.rank);
      }

      std::vector<VerificationReport> reports;
      for (SuiteChoice c : choices) {
        if (auto const* id = std::get_if<SuiteId>(&c)) {
          reports.push_back(verify_suite(*id, *cache, o.jobs));
          print_report(reports.back(), out);
        } else {
          for (RepConfig cfg : grid) {
            reports.push_back(
                verify_tensor_suite(std::get<TensorSuite>(c), cfg));
            print_report(reports.back(), out);
          }
        }
      }

      if (!o.json_path.empty()) {
        if (reports.size() == 1) {
          write_json(o.json_path, report_to_json(reports.front()));
        } else {
          Json list = Json::array();
          for (auto const& r : reports) {
            list.push_back(report_to_json(r));
          }
          write_json(o.json_path, list);
        }
      }
      bool const ok = std::all_of(reports.begin(), reports.end(),
                                  [](auto const& r) { return r.passed(); });
      return ok ? kExitPass : kExitFail;
    }

    int cmd_dims(Options const& o, std::ostream& out) {
      require_rank(o.rank);
      Json counts = Json::array();
      for (int k = 1; k <= o.rank; ++k) {
        std::size_t count = 0;
        for_each_diagram(
            k, [&](Diagram const&) { ++count; }, enumeration_cap());
        out << "k=" << k << " diagrams=" << count << '\n';
        Json entry;
        entry["k"]        = k;
        entry["diagrams"] = count;
        counts.push_back(std::move(entry));
      }
      if (!o.json_path.empty()) {
        Json j;
        j["counts"] = std::move(counts);
        write_json(o.json_path, j);
      }
      return kExitPass;
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err) {
    Options  o;
    CLI::App app{"Exact computations in the partition algebra", "partalg"};
    app.require_subcommand(1);

    auto add_json = [&](CLI::App* sub) {
      sub->add_option("--json", o.json_path, "Also write JSON to this path");
    };
    auto add_rank = [&](CLI::App* sub) {
      sub->add_option("--rank", o.rank, "Ambient rank k")
          ->capture_default_str();
    };

    CLI::App* compose_cmd = app.add_subcommand("compose", "Compose two diagrams");
    compose_cmd->add_option("top", o.left, "Upper diagram (text or JSON)")
        ->required();
    compose_cmd->add_option("bottom", o.right, "Lower diagram (text or JSON)")
        ->required();
    add_json(compose_cmd);

    CLI::App* expand_cmd =
        app.add_subcommand("expand", "Expand sigma_h, L_h or the sum Z_h");
    expand_cmd->add_option("family", o.family, "L, sigma or central")
        ->required()
        ->check(CLI::IsMember({"L", "sigma", "central"}));
    expand_cmd->add_option("index", o.index, "Index such as 3 or 5/2")
        ->required();
    add_rank(expand_cmd);
    add_json(expand_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run identity suites");
    verify_cmd->add_option("suites", o.suites,
                           "Suite names; tensor suites as tensor:<name>");
    verify_cmd->add_flag("--all", o.all, "Every algebra and tensor suite");
    add_rank(verify_cmd);
    verify_cmd->add_option("--n", o.n, "dim V for tensor suites");
    verify_cmd->add_option("--r", o.r, "Tensor power for tensor suites");
    verify_cmd->add_option("--jobs", o.jobs, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_json(verify_cmd);

    CLI::App* dims_cmd =
        app.add_subcommand("dims", "Count diagrams of rank 1..k by enumeration");
    add_rank(dims_cmd);
    add_json(dims_cmd);

    std::vector<char const*> argv{"partalg"};
    for (std::string const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kExitPass : kExitUsage;
    }

    try {
      if (compose_cmd->parsed()) {
        return cmd_compose(o, out);
      }
      if (expand_cmd->parsed()) {
        return cmd_expand(o, out);
      }
      if (verify_cmd->parsed()) {
        return cmd_verify(o, out);
      }
      return cmd_dims(o, out);
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }

}  // namespace partalg
