#include "bqalg/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bqalg/chains.hpp"
#include "bqalg/constructions.hpp"
#include "bqalg/error.hpp"
#include "bqalg/monomial.hpp"
#include "bqalg/oracle.hpp"
#include "bqalg/qv_format.hpp"
#include "bqalg/render.hpp"
#include "bqalg/report.hpp"
#include "bqalg/sqh.hpp"

namespace bqalg {

  using nlohmann::json;

  ModuleSpec parse_module_spec(Quiver const& q, std::string_view text) {
    std::vector<std::string> parts;
    std::string              part;
    std::istringstream       is{std::string(text)};
    while (std::getline(is, part, ':')) {
      parts.push_back(part);
    }
    if (!text.empty() && text.back() == ':') {
      parts.emplace_back();
    }
    if (parts.size() < 2) {
      throw InvalidInput("module \"" + std::string(text)
                         + "\" is not of the form S:i, P:i, Delta:i, Gamma:i[:m] or M:i:a,b");
    }
    Vertex i = 0;
    try {
      std::size_t used = 0;
      i                = std::stoul(parts[1], &used);
      if (used != parts[1].size()) {
        throw std::invalid_argument("trailing characters");
      }
    } catch (std::exception const&) {
      throw InvalidInput("bad vertex \"" + parts[1] + "\" in module \"" + std::string(text) + "\"");
    }
    if (!q.is_vertex(i)) {
      throw InvalidInput("vertex " + std::to_string(i) + " out of range");
    }
    std::string const& kind = parts[0];
    if (kind == "S" && parts.size() == 2) {
      return ModuleSpec::simple(q, i);
    }
    if (kind == "P" && parts.size() == 2) {
      return ModuleSpec::projective(q, i);
    }
    if (kind == "Delta" && parts.size() == 2) {
      return ModuleSpec::standard(q, i);
    }
    if (kind == "Gamma" && (parts.size() == 2 || parts.size() == 3)) {
      if (parts.size() == 3) {
        std::size_t m = 0;
        try {
          m = std::stoul(parts[2]);
        } catch (std::exception const&) {
          throw InvalidInput("bad m in module \"" + std::string(text) + "\"");
        }
        if (i >= m || m > q.vertex_count()) {
          throw InvalidInput("Gamma:i:m needs i < m <= n");
        }
      }
      return ModuleSpec::gamma(q, i);
    }
    if (kind == "M" && parts.size() == 3) {
      std::vector<ArrowIndex> killed;
      std::istringstream      ids(parts[2]);
      std::string             id;
      while (std::getline(ids, id, ',')) {
        if (!id.empty()) {
          killed.push_back(q.arrow_index(id));
        }
      }
      return ModuleSpec(q, i, std::move(killed));
    }
    throw InvalidInput("unknown module \"" + std::string(text) + "\"");
  }

  namespace {

    struct Options {
      std::string                file;
      std::optional<std::string> module;
      std::optional<std::size_t> target;
      std::optional<std::size_t> max_deg;
      std::uint32_t              field = PrimeField::default_modulus;
      std::string                format = "dot";
      bool                       json = false;
    };

    struct Input {
      std::string text;
      QuiverFile  file;
    };

    Input load(std::string const& path) {
      Input in;
      if (path == "-") {
        in.text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) {
          throw InvalidInput("cannot read \"" + path + "\"");
        }
        in.text.assign(std::istreambuf_iterator<char>(f), {});
      }
      in.file = parse_qv(in.text);
      return in;
    }

    // The algebra given by the file's relations; input errors if not admissible.
    std::unique_ptr<Algebra> algebra_of(Input const& in) {
      auto a = std::make_unique<Algebra>(in.file.quiver, reduce(in.file.relations));
      if (auto const* bad = std::get_if<NotAdmissible>(&a->admissibility())) {
        throw NotAdmissibleError("ideal is not admissible: " + bad->reason);
      }
      return a;
    }

    json header(std::string const& command, Input const& in) {
      return {{"command", command}, {"input_hash", input_hash(in.text)}};
    }

    void print(std::ostream& out, json const& j) {
      out << j.dump(2) << '\n';
    }

    std::string betti_line(VertexCounts const& degree) {
      std::string line;
      for (std::size_t k = 0; k < degree.size(); ++k) {
        if (degree[k] == 0) {
          continue;
        }
        if (!line.empty()) {
          line += ' ';
        }
        line += "P(" + std::to_string(k + 1) + ")";
        if (degree[k] != 1) {
          line += '^' + std::to_string(degree[k]);
        }
      }
      return line.empty() ? "0" : line;
    }

    int cmd_gldim(Options const& o, std::ostream& out) {
      Input const in = load(o.file);
      auto const  a  = algebra_of(in);
      auto const  pd = simple_pdims(*a);
      ExtNat      gl = 0;
      for (auto const& d : pd) {
        gl = std::max(gl, d);
      }
      if (o.json) {
        json j      = header("gldim", in);
        j["gldim"]  = to_json(gl);
        j["pdims"]  = pdims_json(pd);
        print(out, j);
      } else {
        out << gl << '\n';
        for (std::size_t k = 0; k < pd.size(); ++k) {
          out << "pdim S(" << k + 1 << ") = " << pd[k] << '\n';
        }
      }
      return exit_ok;
    }

    int cmd_resolve(Options const& o, std::ostream& out) {
      Input const      in   = load(o.file);
      auto const       a    = algebra_of(in);
      ModuleSpec const spec = parse_module_spec(a->quiver(), o.module.value());
      ExtNat const     pd   = pdim(*a, spec);
      std::optional<std::size_t> bound = o.max_deg;
      if (!bound && pd.is_infinite()) {
        bound = a->dimension() + 1;
      }
      Resolution const res = resolve(*a, spec, bound);
      if (o.json) {
        json j      = header("resolve", in);
        j["module"] = spec.name();
        j["pdim"]   = to_json(pd);
        j.update(to_json(a->quiver(), res));
        print(out, j);
      } else {
        out << "module " << spec.name() << '\n';
        out << "pdim " << pd << '\n';
        for (std::size_t d = 0; d < res.betti.size(); ++d) {
          out << d << ": " << betti_line(res.betti[d]) << '\n';
        }
        if (!res.complete) {
          out << "(truncated at degree " << res.betti.size() - 1 << ")\n";
        }
      }
      return exit_ok;
    }

    int cmd_construct(Options const& o, std::ostream& out, std::ostream& err) {
      Input const in   = load(o.file);
      Quiver const& q  = in.file.quiver;
      PlanResult const plan = achieve_gldim(q, o.target.value());
      if (!plan.certificate) {
        if (o.json) {
          json j           = header("construct", in);
          j["target"]      = *o.target;
          j["certificate"] = nullptr;
          j["diagnostic"]  = plan.diagnostic;
          print(out, j);
        } else {
          err << "target " << *o.target << ": " << plan.diagnostic << '\n';
        }
        return exit_negative;
      }
      Certificate const& c = *plan.certificate;
      if (o.json) {
        json j           = header("construct", in);
        j["target"]      = *o.target;
        j["gldim"]       = to_json(c.verified_gldim);
        j["pdims"]       = pdims_json(c.pdims);
        j["certificate"] = to_json(q, c);
        print(out, j);
        return exit_ok;
      }
      out << "# construction " << to_string(c.kind);
      if (c.m) {
        out << " with m = " << *c.m;
      }
      out << "\n# verified global dimension " << c.verified_gldim << '\n';
      if (c.embedding) {
        out << "# embedding vertices";
        for (auto v : c.embedding->vertices) {
          out << ' ' << v;
        }
        out << ", arrows " << q.word_to_string(c.embedding->arrows);
        if (c.embedding->cycle_arrow) {
          out << ", return arrow " << q.arrow(c.embedding->cycle_arrow->arrow).id;
        }
        out << '\n';
      }
      if (!c.relabeling.is_identity()) {
        out << "# relabeling";
        for (Vertex v = 1; v <= c.relabeling.size(); ++v) {
          out << ' ' << v << "->" << c.relabeling(v);
        }
        out << '\n';
      }
      out << emit_qv({q, c.ideal.generators(), true});
      return exit_ok;
    }

    int cmd_corollary(Options const& o, std::ostream& out) {
      Input const             in = load(o.file);
      Quiver const&           q  = in.file.quiver;
      CorollaryDecision const d  = decide_gldim2_exists(q);
      if (o.json) {
        json j      = header("corollary", in);
        j["exists"] = d.exists;
        if (d.witness) {
          json word = json::array();
          for (auto a : d.witness->path.word()) {
            word.push_back(q.arrow(a).id);
          }
          j["witness"] = {{"path", word}, {"relabeling", d.witness->relabeling.image()}};
        }
        print(out, j);
      } else {
        out << (d.exists ? "yes" : "no") << '\n';
        if (d.witness) {
          out << "witness path " << q.word_to_string(d.witness->path.word()) << " ("
              << q.composition_string(d.witness->path.word()) << ")\n";
        }
      }
      return d.exists ? exit_ok : exit_negative;
    }

    int cmd_check_sqh(Options const& o, std::ostream& out) {
      Input const     in = load(o.file);
      auto const      a  = algebra_of(in);
      SqhReport const r  = check_strongly_qh(*a, PrimeField(o.field));
      if (o.json) {
        json j   = header("check-sqh", in);
        j["sqh"] = to_json(r);
        print(out, j);
      } else {
        for (auto const& v : r.vertices) {
          out << "vertex " << v.vertex << ": R projective " << (v.r_projective_ok ? "yes" : "no")
              << ", rad Delta factors above " << (v.delta_factors_ok ? "yes" : "no")
              << ", Hom criterion " << (v.hom_delta_ok ? "yes" : "no") << '\n';
        }
        out << "strongly quasi-hereditary: " << (r.verdict ? "yes" : "no") << '\n';
      }
      return r.verdict ? exit_ok : exit_negative;
    }

    struct Check {
      std::string name;
      bool        ok;
      std::string detail;
    };

    std::vector<ModuleSpec> standard_modules(Quiver const& q) {
      std::vector<ModuleSpec> mods;
      for (Vertex i = 1; i <= q.vertex_count(); ++i) {
        mods.push_back(ModuleSpec::simple(q, i));
        mods.push_back(ModuleSpec::standard(q, i));
        if (i < q.vertex_count()) {
          mods.push_back(ModuleSpec::gamma(q, i));
        }
      }
      return mods;
    }

    // Without an explicit --max-deg the comparison stops early where the
    // matrix engine would face huge projective terms.
    std::vector<Check> oracle_checks(Algebra const&                 a,
                                     std::vector<ModuleSpec> const& mods,
                                     std::optional<std::size_t>     max_deg,
                                     PrimeField const&              field) {
      std::vector<Check> checks;
      for (auto const& m : mods) {
        std::size_t const d      = max_deg ? *max_deg : affordable_degree(a, m, 8);
        Resolution const  chain  = resolve(a, m, d);
        Resolution const  matrix = minimal_resolution(a, m, d, field);
        std::string       detail;
        if (chain != matrix) {
          detail = "chain and matrix Betti data differ";
        } else if (!max_deg && d < 8 && !chain.complete) {
          detail = "compared up to degree " + std::to_string(d);
        }
        checks.push_back({"oracle agreement " + m.name(), chain == matrix, detail});
      }
      return checks;
    }

    int report_checks(std::string const&        command,
                      Input const&              in,
                      std::vector<Check> const& checks,
                      bool                      as_json,
                      std::ostream&             out) {
      bool all = true;
      for (auto const& c : checks) {
        all = all && c.ok;
      }
      if (as_json) {
        json j      = header(command, in);
        json list   = json::array();
        for (auto const& c : checks) {
          list.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        }
        j["checks"] = list;
        j["ok"]     = all;
        print(out, j);
      } else {
        for (auto const& c : checks) {
          out << (c.ok ? "PASS " : "FAIL ") << c.name;
          if (!c.detail.empty()) {
            out << ": " << c.detail;
          }
          out << '\n';
        }
        out << (all ? "all checks passed" : "some checks failed") << '\n';
      }
      return all ? exit_ok : exit_negative;
    }

    int cmd_verify(Options const& o, std::ostream& out) {
      Input const    in = load(o.file);
      auto const     a  = algebra_of(in);
      Quiver const&  q  = a->quiver();
      std::size_t const max_deg = o.max_deg.value_or(8);
      std::vector<Check> checks;

      auto const& ok = std::get<AdmissibleOk>(a->admissibility());
      checks.push_back({"admissible", true,
                        "all paths of length " + std::to_string(ok.nilpotency) + " vanish"});

      auto const mods = standard_modules(q);
      for (auto const& m : mods) {
        Resolution const res = resolve(*a, m, max_deg);
        if (res.complete) {
          checks.push_back({"euler characteristic " + m.name(),
                            euler_characteristic_holds(*a, m, res), ""});
        }
      }
      auto more = oracle_checks(*a, mods, o.max_deg, PrimeField(o.field));
      checks.insert(checks.end(), more.begin(), more.end());

      if (!structure_predicates(q).has_loop && a->relations() == build_I(q)) {
        Prop1Report const p = verify_prop1_formula(*a);
        checks.push_back({"local-maximum resolution formula", p.ok(),
                          p.ok() ? "" : std::to_string(p.mismatches.size()) + " mismatches"});
      }
      SqhReport const sqh = check_strongly_qh(*a, PrimeField(o.field));
      if (sqh.verdict) {
        checks.push_back({"gldim <= n for strongly quasi-hereditary", ringel_bound_check(*a), ""});
      }
      return report_checks("verify", in, checks, o.json, out);
    }

    int cmd_oracle_check(Options const& o, std::ostream& out) {
      Input const   in = load(o.file);
      auto const    a  = algebra_of(in);
      Quiver const& q  = a->quiver();
      std::vector<ModuleSpec> mods;
      if (o.module) {
        mods.push_back(parse_module_spec(q, *o.module));
      } else {
        mods = standard_modules(q);
      }
      auto const checks = oracle_checks(*a, mods, o.max_deg, PrimeField(o.field));
      return report_checks("oracle-check", in, checks, o.json, out);
    }

    int cmd_render(Options const& o, std::ostream& out) {
      if (o.format != "dot") {
        throw InvalidInput("unsupported format \"" + o.format + "\"");
      }
      Input const      in   = load(o.file);
      auto const       a    = algebra_of(in);
      ModuleSpec const spec = parse_module_spec(a->quiver(), o.module.value());
      out << render_module_quiver(*a, spec);
      return exit_ok;
    }

  }  // namespace

  int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound quiver algebras with monomial relations", "bqalg"};
    app.require_subcommand(1);
    Options o;

    auto add_file = [&o](CLI::App* cmd) {
      cmd->add_option("file", o.file, "QV1 input file ('-' for stdin)")->required();
      cmd->add_flag("--json", o.json, "machine-readable output");
    };

    auto* gldim_cmd = app.add_subcommand("gldim", "global dimension and pdim of every simple");
    add_file(gldim_cmd);

    auto* resolve_cmd = app.add_subcommand("resolve", "minimal projective resolution of a module");
    add_file(resolve_cmd);
    resolve_cmd->add_option("--module", o.module, "S:i | P:i | Delta:i | Gamma:i[:m] | M:i:a,b")
        ->required();
    resolve_cmd->add_option("--max-deg", o.max_deg, "stop after this degree");

    auto* construct_cmd
        = app.add_subcommand("construct", "admissible ideal with a prescribed global dimension");
    add_file(construct_cmd);
    construct_cmd->add_option("--target", o.target, "requested global dimension")->required();

    auto* corollary_cmd
        = app.add_subcommand("corollary", "does an ideal with global dimension 2 exist?");
    add_file(corollary_cmd);

    auto* sqh_cmd = app.add_subcommand("check-sqh", "strongly quasi-hereditary check");
    add_file(sqh_cmd);
    sqh_cmd->add_option("--field", o.field, "prime modulus for the Hom criterion");

    auto* verify_cmd = app.add_subcommand("verify", "consistency checks of an algebra");
    add_file(verify_cmd);
    verify_cmd->add_option("--max-deg", o.max_deg, "degree bound for comparisons (default 8, lowered where projective terms grow large)");
    verify_cmd->add_option("--field", o.field, "prime modulus of the matrix engine");

    auto* render_cmd = app.add_subcommand("render", "DOT diagram of a module's quiver");
    add_file(render_cmd);
    render_cmd->add_option("--module", o.module, "S:i | P:i | Delta:i | Gamma:i[:m] | M:i:a,b")
        ->required();
    render_cmd->add_option("--format", o.format, "output format (dot)");

    auto* oracle_cmd
        = app.add_subcommand("oracle-check", "compare the chain and matrix engines");
    add_file(oracle_cmd);
    oracle_cmd->add_option("--field", o.field, "prime modulus of the matrix engine");
    oracle_cmd->add_option("--module", o.module, "a single module (default: all S, Delta, Gamma)");
    oracle_cmd->add_option("--max-deg", o.max_deg, "degree bound (default 8, lowered where projective terms grow large)");

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return exit_input;
    }

    try {
      if (gldim_cmd->parsed()) {
        return cmd_gldim(o, out);
      }
      if (resolve_cmd->parsed()) {
        return cmd_resolve(o, out);
      }
      if (construct_cmd->parsed()) {
        return cmd_construct(o, out, err);
      }
      if (corollary_cmd->parsed()) {
        return cmd_corollary(o, out);
      }
      if (sqh_cmd->parsed()) {
        return cmd_check_sqh(o, out);
      }
      if (verify_cmd->parsed()) {
        return cmd_verify(o, out);
      }
      if (render_cmd->parsed()) {
        return cmd_render(o, out);
      }
      if (oracle_cmd->parsed()) {
        return cmd_oracle_check(o, out);
      }
    } catch (InternalError const& e) {
      err << "internal error: " << e.what() << '\n';
      return exit_input;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_input;
    }
    return exit_input;
  }

}  // namespace bqalg
