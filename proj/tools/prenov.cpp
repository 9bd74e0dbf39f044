// Command-line front end: definition files in, check reports and constructed
// structures out. Exit codes: 0 pass/success, 1 failed check, 2 usage or
// parse errors.

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "prenov/bialgebra.hpp"
#include "prenov/constructions.hpp"
#include "prenov/io.hpp"
#include "prenov/yang_baxter.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace prenov;

struct Global {
  std::string format = "human";
  std::optional<std::string> window_flag;
  int witness_cap = 5;
  bool timings = false;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
};

GradedWindow parse_window_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError("window must be LO:HI, got '" + spec + "'");
  try {
    long lo = std::stol(spec.substr(0, colon));
    long hi = std::stol(spec.substr(colon + 1));
    return GradedWindow(lo, hi);
  } catch (const std::invalid_argument&) {
    throw ParseError("window must be LO:HI, got '" + spec + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("window out of range: '" + spec + "'");
  }
}

GradedWindow resolve_window(const Global& g, const std::optional<GradedWindow>& from_file) {
  if (g.window_flag) return parse_window_spec(*g.window_flag);
  if (const char* env = std::getenv("PRENOV_WINDOW")) return parse_window_spec(env);
  if (from_file) return *from_file;
  return GradedWindow(-8, 8);
}

WorkbenchFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_workbench(ss.str());
}

Json witnesses_json(const CheckReport& rep) {
  Json ws = Json::array();
  for (const auto& w : rep.witnesses())
    ws.push_back(Json{{"axiom", w.axiom}, {"tuple", w.tuple}, {"residual", w.residual}});
  return ws;
}

int emit_report(const Global& g, const std::string& command,
                const std::vector<std::string>& inputs, const CheckReport& rep,
                const Json& extra = Json::object()) {
  if (g.format == "json") {
    Json j = Json::object();
    j["command"] = command;
    j["inputs"] = inputs;
    j["passed"] = rep.passed();
    j["axiom_catalog"] = rep.axiom_catalog();
    j["witnesses"] = witnesses_json(rep);
    for (const auto& [k, v] : extra.items()) j[k] = v;
    if (g.timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - g.t0)
                    .count();
      j["timings"] = Json{{"total_ms", ms}};
    } else {
      j["timings"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (!rep.axiom_catalog().empty()) {
      std::string axioms;
      for (const auto& a : rep.axiom_catalog()) axioms += (axioms.empty() ? "" : " ") + a;
      fmt::print("axioms: {}\n", axioms);
    }
    for (const auto& [k, v] : extra.items()) {
      if (v.is_string())
        fmt::print("{}: {}\n", k, v.get<std::string>());
      else
        fmt::print("{}: {}\n", k, v.dump());
    }
    if (rep.passed()) {
      fmt::print("PASS\n");
    } else {
      fmt::print("FAIL ({} witness(es){})\n", rep.witnesses().size(),
                 rep.suppressed_witnesses()
                     ? fmt::format(", {} suppressed", rep.suppressed_witnesses())
                     : "");
      for (const auto& w : rep.witnesses()) {
        std::string tuple;
        for (const auto& t : w.tuple) tuple += (tuple.empty() ? "" : ", ") + t;
        fmt::print("  [{}] ({}): {}\n", w.axiom, tuple, w.residual);
      }
    }
  }
  return rep.passed() ? 0 : 1;
}

void write_output(const std::string& out_path, const WorkbenchFile& f) {
  const std::string text = emit_workbench(f);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << text;
  }
}

// Right factor for the induced product: a dialgebra (⊣,⊢) or a right Novikov
// operation ⋄ taken as ⊣=⊢=⋄.
DialgebraOps right_factor_ops(const WorkbenchFile& f) {
  if (f.operations.count("dashv") && f.operations.count("vdash"))
    return {f.op("dashv"), f.op("vdash")};
  return {f.op("diamond"), f.op("diamond")};
}

std::vector<Rational> parse_coeff_set(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw ParseError("empty coefficient set");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Global g;
  CLI::App app{"prenov — exact workbench for pre-Novikov and pre-Lie structures"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_option("--window", g.window_flag, "Laurent exponent window LO:HI");
  app.add_option("--witness-cap", g.witness_cap, "max witnesses reported per axiom");
  app.add_flag("--timings", g.timings, "include timings in machine reports");

  // check
  auto* check_cmd = app.add_subcommand("check", "run the declared kind's checker on a file");
  std::string check_file, check_kind;
  check_cmd->add_option("file", check_file)->required();
  check_cmd->add_option("--kind", check_kind, "override the declared kind");

  // construct
  auto* construct = app.add_subcommand("construct", "derived structures");
  construct->require_subcommand(1);
  std::string cons_a, cons_b, cons_out;
  auto* c_assoc = construct->add_subcommand("assoc-novikov", "a∘b = a◁b + a▷b");
  c_assoc->add_option("file", cons_a)->required();
  c_assoc->add_option("-o,--out", cons_out);
  auto* c_ind = construct->add_subcommand("induced-prelie",
                                          "(a⊗x)∘(b⊗y) = a▷b⊗x⊢y − b◁a⊗y⊣x");
  c_ind->add_option("fileA", cons_a)->required();
  c_ind->add_option("fileB", cons_b)->required();
  c_ind->add_option("-o,--out", cons_out);
  auto* c_cop = construct->add_subcommand("coproduct-from-form", "(Δ(x), y⊗z) = (x, y⋄z)");
  c_cop->add_option("file", cons_a)->required();
  c_cop->add_option("-o,--out", cons_out);
  auto* c_pf = construct->add_subcommand("product-form", "ω_p(a⊗x,b⊗y) = ω(a,b)(x,y)");
  c_pf->add_option("fileA", cons_a)->required();
  c_pf->add_option("fileB", cons_b)->required();
  c_pf->add_option("-o,--out", cons_out);

  // affinize
  auto* affinize = app.add_subcommand("affinize", "windowed checks on A⊗k[t,1/t]");
  std::string aff_file, aff_mode;
  affinize->add_option("file", aff_file)->required();
  affinize->add_option("--mode", aff_mode, "algebra|coalgebra|bialgebra")
      ->required()
      ->check(CLI::IsMember({"algebra", "coalgebra", "bialgebra"}));

  // bialgebra
  auto* bialg = app.add_subcommand("bialgebra", "pre-Lie bialgebra build/check");
  bialg->require_subcommand(1);
  std::string bi_a, bi_b, bi_out;
  auto* bi_build = bialg->add_subcommand("build", "tensor a pre-Novikov bialgebra with a "
                                                  "quadratic right Novikov algebra");
  bi_build->add_option("pnb", bi_a)->required();
  bi_build->add_option("qrn", bi_b)->required();
  bi_build->add_option("-o,--out", bi_out);
  auto* bi_check = bialg->add_subcommand("check", "check a pre-Lie bialgebra file");
  bi_check->add_option("file", bi_a)->required();

  // ybe
  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter equation tools");
  ybe->require_subcommand(1);
  std::string ybe_alg, ybe_r, ybe_qrn, ybe_out, ybe_coeffs = "-1,0,1", ybe_support;
  long ybe_budget = 1'000'000;
  bool ybe_laurent = false;
  auto* ybe_res = ybe->add_subcommand("residual", "r₁₂∘r₁₃ + r₂₃⊙r₁₃ − r₁₂◁r₂₃");
  ybe_res->add_option("alg", ybe_alg)->required();
  ybe_res->add_option("r", ybe_r)->required();
  auto* ybe_lift = ybe->add_subcommand("lift", "lift a solution to the induced pre-Lie algebra");
  ybe_lift->add_option("alg", ybe_alg)->required();
  ybe_lift->add_option("r", ybe_r)->required();
  ybe_lift->add_option("qrn", ybe_qrn);
  ybe_lift->add_flag("--laurent", ybe_laurent, "lift to A⊗k[t,1/t] on the window");
  ybe_lift->add_option("-o,--out", ybe_out);
  auto* ybe_search = ybe->add_subcommand("search", "enumerate symmetric solutions on a grid");
  ybe_search->add_option("alg", ybe_alg)->required();
  ybe_search->add_option("--coeffs", ybe_coeffs, "comma-separated coefficient set");
  ybe_search->add_option("--support", ybe_support,
                         "comma-separated basis labels spanning the support");
  ybe_search->add_option("--budget", ybe_budget, "max candidates");

  // examples
  auto* examples = app.add_subcommand("examples", "the embedded corpus");
  examples->require_subcommand(1);
  std::string ex_name;
  examples->add_subcommand("list", "list corpus entries");
  auto* ex_show = examples->add_subcommand("show", "print one entry as JSON");
  ex_show->add_option("name", ex_name)->required();
  examples->add_subcommand("verify-all", "run every corpus check and cross-construction");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check_cmd) {
      WorkbenchFile f = load(check_file);
      const std::string kind = check_kind.empty() ? f.kind : check_kind;
      CheckOptions opts{g.witness_cap};
      CheckReport rep = run_check(f, kind, resolve_window(g, f.window), opts);
      Json extra{{"kind", kind}};
      if (g.format == "json" && kind == "pre-novikov-bialgebra") {
        Json enc = Json::object();
        for (const auto& cond : lfd_conditions()) enc[cond.id] = render_lfd(cond);
        extra["axiom_encodings"] = enc;
      }
      return emit_report(g, "check", {check_file}, rep, extra);
    }

    if (*construct) {
      if (*c_assoc) {
        WorkbenchFile f = load(cons_a);
        BilinearOp circ = associated_novikov(f.op("lhd"), f.op("rhd"));
        WorkbenchFile out;
        out.kind = "novikov";
        out.metadata["name"] = "assoc-novikov";
        out.spaces.push_back(circ.space());
        out.operations.emplace("circ", std::move(circ));
        write_output(cons_out, out);
        return 0;
      }
      if (*c_ind) {
        WorkbenchFile fa = load(cons_a);
        WorkbenchFile fb = load(cons_b);
        DialgebraOps bops = right_factor_ops(fb);
        TensorAlgebra t = induced_pre_lie(fa.pre_novikov_ops(), bops.dashv, bops.vdash);
        WorkbenchFile out;
        out.kind = "pre-lie";
        out.metadata["name"] = "induced-prelie";
        out.spaces.push_back(t.circ.space());
        out.operations.emplace("circ", std::move(t.circ));
        write_output(cons_out, out);
        return 0;
      }
      if (*c_cop) {
        WorkbenchFile f = load(cons_a);
        CoOp delta = coproduct_from_form(f.op("diamond"), f.form("form"));
        WorkbenchFile out;
        out.kind = "right-novikov-coalgebra";
        out.metadata["name"] = "coproduct-from-form";
        out.spaces.push_back(delta.space());
        out.cooperations.emplace("Delta", std::move(delta));
        write_output(cons_out, out);
        return 0;
      }
      if (*c_pf) {
        WorkbenchFile fa = load(cons_a);
        WorkbenchFile fb = load(cons_b);
        BilinearForm p = product_form(fa.form("omega"), fb.form("form"));
        WorkbenchFile out;
        out.kind = "data";
        out.metadata["name"] = "product-form";
        out.spaces.push_back(p.space());
        out.forms.emplace("omega_p", std::move(p));
        write_output(cons_out, out);
        return 0;
      }
    }

    if (*affinize) {
      WorkbenchFile f = load(aff_file);
      const GradedWindow w = resolve_window(g, f.window);
      CheckOptions opts{g.witness_cap};
      CheckReport rep;
      if (aff_mode == "algebra")
        rep = check_affine_pre_lie(f.pre_novikov_ops(), w, opts);
      else if (aff_mode == "coalgebra")
        rep = check_affine_pre_lie_coalgebra(f.pre_novikov_coops(), w, opts);
      else
        rep = check_affine_pre_lie_bialgebra(f.pre_novikov_ops(), f.pre_novikov_coops(), w,
                                             opts);
      Json extra{{"mode", aff_mode},
                 {"window", fmt::format("{}:{}", w.lo, w.hi)}};
      return emit_report(g, "affinize", {aff_file}, rep, extra);
    }

    if (*bialg) {
      if (*bi_build) {
        WorkbenchFile fa = load(bi_a);
        WorkbenchFile fb = load(bi_b);
        PreLieBialgebra plb = build_pre_lie_bialgebra(
            {fa.pre_novikov_ops(), fa.pre_novikov_coops()}, fb.op("diamond"), fb.form("form"));
        WorkbenchFile out;
        out.kind = "pre-lie-bialgebra";
        out.metadata["name"] = "built-pre-lie-bialgebra";
        out.spaces.push_back(plb.circ.space());
        out.operations.emplace("circ", std::move(plb.circ));
        out.cooperations.emplace("delta", std::move(plb.delta));
        write_output(bi_out, out);
        return 0;
      }
      if (*bi_check) {
        WorkbenchFile f = load(bi_a);
        CheckOptions opts{g.witness_cap};
        CheckReport rep = check_pre_lie_bialgebra({f.op("circ"), f.coop("delta")}, opts);
        return emit_report(g, "bialgebra check", {bi_a}, rep);
      }
    }

    if (*ybe) {
      if (*ybe_res) {
        WorkbenchFile fa = load(ybe_alg);
        WorkbenchFile fr = load(ybe_r);
        Tensor3 res = pnybe_residual(fa.pre_novikov_ops(), fr.tensor("r"));
        CheckReport rep;
        rep.declare_axiom("yb");
        if (!res.zero())
          rep.add_witness(CheckOptions{g.witness_cap},
                          Witness{"yb", {}, to_string(res, fa.op("lhd").space())});
        return emit_report(g, "ybe residual", {ybe_alg, ybe_r}, rep,
                           Json{{"residual", to_string(res, fa.op("lhd").space())}});
      }
      if (*ybe_lift) {
        WorkbenchFile fa = load(ybe_alg);
        WorkbenchFile fr = load(ybe_r);
        const PreNovikovOps ops = fa.pre_novikov_ops();
        const Tensor2& r = fr.tensor("r");
        CheckOptions opts{g.witness_cap};
        if (ybe_laurent) {
          const GradedWindow w = resolve_window(g, fr.window);
          CheckReport rep;
          rep.declare_axiom("S-eq");
          const BasisSpace& s = ops.lhd.space();
          for (long p = w.lo; p <= w.hi; ++p)
            for (long q = w.lo; q <= w.hi; ++q) {
              const long z = -3 - p - q;
              if (!w.contains(z)) continue;
              Tensor3 comp = affine_s_equation_component(ops, r, p, q, z);
              if (!comp.zero())
                rep.add_witness(opts, Witness{"S-eq",
                                              {fmt::format("t^{}", p), fmt::format("t^{}", q),
                                               fmt::format("t^{}", z)},
                                              to_string(comp, s)});
            }
          return emit_report(g, "ybe lift --laurent", {ybe_alg, ybe_r}, rep,
                             Json{{"window", fmt::format("{}:{}", w.lo, w.hi)}});
        }
        if (ybe_qrn.empty()) throw ParseError("finite lift needs a quadratic right Novikov file");
        WorkbenchFile fq = load(ybe_qrn);
        const BilinearOp& diamond = fq.op("diamond");
        Tensor2 rl = lift_r_finite(r, fq.form("form"));
        TensorAlgebra t = induced_pre_lie(ops, diamond, diamond);
        Tensor3 res = s_equation_residual(t.circ, rl);
        CheckReport rep;
        rep.declare_axiom("S-eq");
        if (!res.zero())
          rep.add_witness(opts, Witness{"S-eq", {}, to_string(res, t.circ.space())});
        WorkbenchFile out;
        out.kind = "data";
        out.metadata["name"] = "lifted-r";
        out.spaces.push_back(t.circ.space());
        out.tensors.emplace("r_L", std::pair{t.circ.space().name(), std::move(rl)});
        if (!ybe_out.empty()) write_output(ybe_out, out);
        return emit_report(g, "ybe lift", {ybe_alg, ybe_r, ybe_qrn}, rep);
      }
      if (*ybe_search) {
        WorkbenchFile fa = load(ybe_alg);
        const PreNovikovOps ops = fa.pre_novikov_ops();
        const BasisSpace& s = ops.lhd.space();
        std::vector<std::pair<int, int>> support;
        if (ybe_support.empty()) {
          support = full_support(s.dim());
        } else {
          std::vector<int> idxs;
          std::stringstream ss(ybe_support);
          std::string item;
          while (std::getline(ss, item, ','))
            if (!item.empty()) idxs.push_back(s.index(item));
          for (size_t i = 0; i < idxs.size(); ++i)
            for (size_t j = i; j < idxs.size(); ++j)
              support.emplace_back(std::min(idxs[i], idxs[j]), std::max(idxs[i], idxs[j]));
        }
        SearchOptions sopts;
        sopts.budget = ybe_budget;
        auto sols = search_pnybe(ops, parse_coeff_set(ybe_coeffs), support, sopts);
        CheckReport rep;  // search itself always passes; solutions are data
        Json list = Json::array();
        for (const auto& sol : sols) {
          Json entries = Json::array();
          for (const auto& [k, c] : sol.t.entries())
            entries.push_back(Json::array({s.label(k[0]), s.label(k[1]), rational_str(c)}));
          list.push_back(entries);
        }
        return emit_report(g, "ybe search", {ybe_alg}, rep,
                           Json{{"solutions", list},
                                {"count", sols.size()}});
      }
    }

    if (*examples) {
      const auto& corp = corpus();
      if (examples->get_subcommand("list")->parsed()) {
        for (const auto& [name, f] : corp) fmt::print("{}\t{}\n", name, f.kind);
        return 0;
      }
      if (ex_show->parsed()) {
        auto it = corp.find(ex_name);
        if (it == corp.end()) throw ParseError("unknown example '" + ex_name + "'");
        std::cout << emit_workbench(it->second);
        return 0;
      }
      // verify-all
      const GradedWindow w = resolve_window(g, std::nullopt);
      bool all_ok = true;
      Json steps = Json::array();
      for (const auto& [name, ok] : corpus_cross_checks(w)) {
        all_ok = all_ok && ok;
        if (g.format == "json")
          steps.push_back(Json{{"step", name}, {"passed", ok}});
        else
          fmt::print("[{}] {}\n", ok ? "PASS" : "FAIL", name);
      }
      if (g.format == "json") {
        Json j{{"command", "examples verify-all"},
               {"inputs", Json::array()},
               {"passed", all_ok},
               {"steps", steps},
               {"witnesses", Json::array()}};
        j["timings"] = nullptr;
        std::cout << j.dump(2) << "\n";
      } else {
        fmt::print("{}\n", all_ok ? "PASS" : "FAIL");
      }
      return all_ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
