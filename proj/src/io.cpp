#include "prenov/io.hpp"

#include <json.hpp>

#include "prenov/axioms.hpp"
#include "prenov/bialgebra.hpp"

namespace prenov {

using Json = nlohmann::ordered_json;

const BasisSpace& WorkbenchFile::space(const std::string& name) const {
  for (const auto& s : spaces)
    if (s.name() == name) return s;
  throw ParseError("unknown space '" + name + "'");
}

const BilinearOp& WorkbenchFile::op(const std::string& name) const {
  auto it = operations.find(name);
  if (it == operations.end())
    throw ParseError("kind '" + kind + "' requires operation '" + name + "'");
  return it->second;
}

const CoOp& WorkbenchFile::coop(const std::string& name) const {
  auto it = cooperations.find(name);
  if (it == cooperations.end())
    throw ParseError("kind '" + kind + "' requires cooperation '" + name + "'");
  return it->second;
}

const BilinearForm& WorkbenchFile::form(const std::string& name) const {
  auto it = forms.find(name);
  if (it == forms.end())
    throw ParseError("kind '" + kind + "' requires form '" + name + "'");
  return it->second;
}

const Tensor2& WorkbenchFile::tensor(const std::string& name) const {
  auto it = tensors.find(name);
  if (it == tensors.end()) throw ParseError("file has no tensor '" + name + "'");
  return it->second.second;
}

PreNovikovOps WorkbenchFile::pre_novikov_ops() const { return {op("lhd"), op("rhd")}; }
PreNovikovCoops WorkbenchFile::pre_novikov_coops() const {
  return {coop("alpha"), coop("beta")};
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& member(const Json& j, const std::string& path, const std::string& key,
                   Json::value_t type) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field '" + key + "'");
  if (it->type() != type &&
      !(type == Json::value_t::number_integer && it->is_number_integer()))
    fail(path + "/" + key, "unexpected type");
  return *it;
}

std::string str_at(const Json& j, const std::string& path, const std::string& key) {
  return member(j, path, key, Json::value_t::string).get<std::string>();
}

Rational rat_at(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "scalars must be \"p/q\" strings (no floats)");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

}  // namespace

WorkbenchFile parse_workbench(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("/: expected a top-level object");
  WorkbenchFile f;
  f.kind = str_at(j, "/", "kind");

  if (j.contains("metadata")) {
    const Json& md = j["metadata"];
    if (!md.is_object()) fail("/metadata", "expected an object");
    for (const auto& [k, v] : md.items()) {
      if (!v.is_string()) fail("/metadata/" + k, "expected a string");
      f.metadata[k] = v.get<std::string>();
    }
  }

  const Json& spaces = member(j, "/", "spaces", Json::value_t::array);
  for (size_t i = 0; i < spaces.size(); ++i) {
    const std::string path = "/spaces/" + std::to_string(i);
    const Json& s = spaces[i];
    const Json& basis = member(s, path, "basis", Json::value_t::array);
    std::vector<std::string> labels;
    for (size_t b = 0; b < basis.size(); ++b) {
      if (!basis[b].is_string()) fail(path + "/basis/" + std::to_string(b), "expected a string");
      labels.push_back(basis[b].get<std::string>());
    }
    try {
      f.spaces.emplace_back(str_at(s, path, "name"), std::move(labels));
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }

  auto space_of = [&](const Json& s, const std::string& path) -> const BasisSpace& {
    const std::string name = str_at(s, path, "space");
    for (const auto& sp : f.spaces)
      if (sp.name() == name) return sp;
    fail(path + "/space", "unknown space '" + name + "'");
  };
  auto index_of = [&](const BasisSpace& sp, const Json& v, const std::string& path) -> int {
    if (!v.is_string()) fail(path, "expected a basis label");
    try {
      return sp.index(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  };

  if (j.contains("operations")) {
    const Json& ops = j["operations"];
    if (!ops.is_array()) fail("/operations", "expected an array");
    for (size_t i = 0; i < ops.size(); ++i) {
      const std::string path = "/operations/" + std::to_string(i);
      const Json& o = ops[i];
      const BasisSpace& sp = space_of(o, path);
      BilinearOp op(sp);
      const Json& table = member(o, path, "table", Json::value_t::array);
      for (size_t r = 0; r < table.size(); ++r) {
        const std::string rpath = path + "/table/" + std::to_string(r);
        const Json& row = table[r];
        if (!row.is_array() || row.size() != 3) fail(rpath, "expected [left, right, products]");
        const int li = index_of(sp, row[0], rpath + "/0");
        const int ri = index_of(sp, row[1], rpath + "/1");
        if (!row[2].is_array()) fail(rpath + "/2", "expected an array of [label, coeff]");
        for (size_t t = 0; t < row[2].size(); ++t) {
          const Json& term = row[2][t];
          const std::string tpath = rpath + "/2/" + std::to_string(t);
          if (!term.is_array() || term.size() != 2) fail(tpath, "expected [label, coeff]");
          op.add(li, ri, index_of(sp, term[0], tpath + "/0"), rat_at(term[1], tpath + "/1"));
        }
      }
      f.operations.emplace(str_at(o, path, "name"), std::move(op));
    }
  }

  if (j.contains("cooperations")) {
    const Json& coops = j["cooperations"];
    if (!coops.is_array()) fail("/cooperations", "expected an array");
    for (size_t i = 0; i < coops.size(); ++i) {
      const std::string path = "/cooperations/" + std::to_string(i);
      const Json& o = coops[i];
      const BasisSpace& sp = space_of(o, path);
      CoOp coop(sp);
      const Json& table = member(o, path, "table", Json::value_t::array);
      for (size_t r = 0; r < table.size(); ++r) {
        const std::string rpath = path + "/table/" + std::to_string(r);
        const Json& row = table[r];
        if (!row.is_array() || row.size() != 2) fail(rpath, "expected [source, image]");
        const int si = index_of(sp, row[0], rpath + "/0");
        if (!row[1].is_array()) fail(rpath + "/1", "expected an array of [l, r, coeff]");
        for (size_t t = 0; t < row[1].size(); ++t) {
          const Json& term = row[1][t];
          const std::string tpath = rpath + "/1/" + std::to_string(t);
          if (!term.is_array() || term.size() != 3) fail(tpath, "expected [l, r, coeff]");
          coop.add(si, index_of(sp, term[0], tpath + "/0"), index_of(sp, term[1], tpath + "/1"),
                   rat_at(term[2], tpath + "/2"));
        }
      }
      f.cooperations.emplace(str_at(o, path, "name"), std::move(coop));
    }
  }

  if (j.contains("forms")) {
    const Json& forms = j["forms"];
    if (!forms.is_array()) fail("/forms", "expected an array");
    for (size_t i = 0; i < forms.size(); ++i) {
      const std::string path = "/forms/" + std::to_string(i);
      const Json& o = forms[i];
      const BasisSpace& sp = space_of(o, path);
      Matrix m = Matrix::Zero(sp.dim(), sp.dim());
      const Json& entries = member(o, path, "entries", Json::value_t::array);
      for (size_t r = 0; r < entries.size(); ++r) {
        const std::string rpath = path + "/entries/" + std::to_string(r);
        const Json& row = entries[r];
        if (!row.is_array() || row.size() != 3) fail(rpath, "expected [l, r, value]");
        m(index_of(sp, row[0], rpath + "/0"), index_of(sp, row[1], rpath + "/1")) =
            rat_at(row[2], rpath + "/2");
      }
      std::optional<long> shift;
      if (o.contains("grading_shift")) {
        if (!o["grading_shift"].is_number_integer())
          fail(path + "/grading_shift", "expected an integer");
        shift = o["grading_shift"].get<long>();
      }
      f.forms.emplace(str_at(o, path, "name"), BilinearForm(sp, std::move(m), shift));
    }
  }

  if (j.contains("gradings")) {
    const Json& gs = j["gradings"];
    if (!gs.is_array()) fail("/gradings", "expected an array");
    for (size_t i = 0; i < gs.size(); ++i) {
      const std::string path = "/gradings/" + std::to_string(i);
      const Json& o = gs[i];
      const BasisSpace& sp = space_of(o, path);
      Grading g;
      g.degrees.assign(static_cast<size_t>(sp.dim()), 0);
      const Json& rows = member(o, path, "degrees", Json::value_t::array);
      for (size_t r = 0; r < rows.size(); ++r) {
        const std::string rpath = path + "/degrees/" + std::to_string(r);
        const Json& row = rows[r];
        if (!row.is_array() || row.size() != 2 || !row[1].is_number_integer())
          fail(rpath, "expected [label, degree]");
        g.degrees[static_cast<size_t>(index_of(sp, row[0], rpath + "/0"))] = row[1].get<long>();
      }
      f.gradings.emplace(str_at(o, path, "name"), std::pair{sp.name(), std::move(g)});
    }
  }

  if (j.contains("tensors")) {
    const Json& ts = j["tensors"];
    if (!ts.is_array()) fail("/tensors", "expected an array");
    for (size_t i = 0; i < ts.size(); ++i) {
      const std::string path = "/tensors/" + std::to_string(i);
      const Json& o = ts[i];
      const BasisSpace& sp = space_of(o, path);
      Tensor2 t;
      const Json& entries = member(o, path, "entries", Json::value_t::array);
      for (size_t r = 0; r < entries.size(); ++r) {
        const std::string rpath = path + "/entries/" + std::to_string(r);
        const Json& row = entries[r];
        if (!row.is_array() || row.size() != 3) fail(rpath, "expected [l, r, coeff]");
        t.add({index_of(sp, row[0], rpath + "/0"), index_of(sp, row[1], rpath + "/1")},
              rat_at(row[2], rpath + "/2"));
      }
      f.tensors.emplace(str_at(o, path, "name"), std::pair{sp.name(), std::move(t)});
    }
  }

  if (j.contains("window")) {
    const Json& w = j["window"];
    if (!w.is_object() || !w.contains("lo") || !w.contains("hi") ||
        !w["lo"].is_number_integer() || !w["hi"].is_number_integer())
      fail("/window", "expected {\"lo\": int, \"hi\": int}");
    long lo = w["lo"].get<long>(), hi = w["hi"].get<long>();
    if (lo > hi) fail("/window", "lo exceeds hi");
    f.window = GradedWindow(lo, hi);
  }
  return f;
}

std::string emit_workbench(const WorkbenchFile& f) {
  Json j = Json::object();
  j["schema"] = "prenov/1";
  j["kind"] = f.kind;
  if (!f.metadata.empty()) {
    Json md = Json::object();
    for (const auto& [k, v] : f.metadata) md[k] = v;
    j["metadata"] = md;
  }
  Json spaces = Json::array();
  for (const auto& s : f.spaces)
    spaces.push_back(Json{{"name", s.name()}, {"basis", s.labels()}});
  j["spaces"] = spaces;

  auto emit_ops = [&](const std::map<std::string, BilinearOp>& ops) {
    Json arr = Json::array();
    for (const auto& [name, op] : ops) {
      const BasisSpace& sp = op.space();
      Json table = Json::array();
      std::map<std::array<int, 2>, Json> rows;
      for (const auto& [k, c] : op.constants())
        rows[{k[0], k[1]}].push_back(Json::array({sp.label(k[2]), rational_str(c)}));
      for (const auto& [lr, terms] : rows)
        table.push_back(Json::array({sp.label(lr[0]), sp.label(lr[1]), terms}));
      arr.push_back(Json{{"name", name}, {"space", sp.name()}, {"table", table}});
    }
    return arr;
  };
  if (!f.operations.empty()) j["operations"] = emit_ops(f.operations);

  if (!f.cooperations.empty()) {
    Json arr = Json::array();
    for (const auto& [name, coop] : f.cooperations) {
      const BasisSpace& sp = coop.space();
      Json table = Json::array();
      std::map<int, Json> rows;
      for (const auto& [k, c] : coop.constants())
        rows[k[0]].push_back(Json::array({sp.label(k[1]), sp.label(k[2]), rational_str(c)}));
      for (const auto& [src, terms] : rows)
        table.push_back(Json::array({sp.label(src), terms}));
      arr.push_back(Json{{"name", name}, {"space", sp.name()}, {"table", table}});
    }
    j["cooperations"] = arr;
  }

  if (!f.forms.empty()) {
    Json arr = Json::array();
    for (const auto& [name, form] : f.forms) {
      const BasisSpace& sp = form.space();
      Json entries = Json::array();
      for (int r = 0; r < sp.dim(); ++r)
        for (int c = 0; c < sp.dim(); ++c)
          if (form.value(r, c) != 0)
            entries.push_back(
                Json::array({sp.label(r), sp.label(c), rational_str(form.value(r, c))}));
      Json o{{"name", name}, {"space", sp.name()}, {"entries", entries}};
      if (form.grading_shift()) o["grading_shift"] = *form.grading_shift();
      arr.push_back(o);
    }
    j["forms"] = arr;
  }

  if (!f.gradings.empty()) {
    Json arr = Json::array();
    for (const auto& [name, sg] : f.gradings) {
      const BasisSpace& sp = f.space(sg.first);
      Json rows = Json::array();
      for (int i = 0; i < sp.dim(); ++i)
        rows.push_back(Json::array({sp.label(i), sg.second.degrees[static_cast<size_t>(i)]}));
      arr.push_back(Json{{"name", name}, {"space", sg.first}, {"degrees", rows}});
    }
    j["gradings"] = arr;
  }

  if (!f.tensors.empty()) {
    Json arr = Json::array();
    for (const auto& [name, st] : f.tensors) {
      const BasisSpace& sp = f.space(st.first);
      Json entries = Json::array();
      for (const auto& [k, c] : st.second.entries())
        entries.push_back(Json::array({sp.label(k[0]), sp.label(k[1]), rational_str(c)}));
      arr.push_back(Json{{"name", name}, {"space", st.first}, {"entries", entries}});
    }
    j["tensors"] = arr;
  }

  if (f.window) j["window"] = Json{{"lo", f.window->lo}, {"hi", f.window->hi}};
  return j.dump(2) + "\n";
}

std::vector<std::string> known_kinds() {
  return {"pre-lie",
          "novikov",
          "right-novikov",
          "right-novikov-dialgebra",
          "pre-novikov",
          "pre-novikov-coalgebra",
          "right-novikov-coalgebra",
          "right-novikov-co-dialgebra",
          "pre-novikov-bialgebra",
          "quasi-frobenius-novikov",
          "quadratic-pre-novikov",
          "quadratic-right-novikov",
          "quadratic-pre-lie",
          "pre-lie-bialgebra",
          "lie",
          "laurent-right-novikov",
          "data"};
}

namespace {

/// Closed-form verification of the windowed Laurent instance: the right
/// Novikov axioms, the invariance identity and the graded form, evaluated
/// with exact exponent arithmetic (no truncation), plus consistency of the
/// materialized table with tⁱ⋄tʲ = i tⁱ⁺ʲ⁻¹ on the window.
CheckReport check_laurent(const WorkbenchFile& f, const CheckOptions& opts) {
  CheckReport rep;
  if (!f.window) throw ParseError("laurent-right-novikov requires a window");
  const GradedWindow w = *f.window;
  for (const char* id : {"e18", "e19", "Nov-qua", "quad", "window-table"})
    rep.declare_axiom(id);
  auto expo = [](long e) { return "t^" + std::to_string(e); };
  for (long i = w.lo; i <= w.hi; ++i)
    for (long j = w.lo; j <= w.hi; ++j) {
      for (long k = w.lo; k <= w.hi; ++k) {
        // e18: coefficient of t^{i+j+k-2} in (tⁱ⋄tʲ)⋄tᵏ − tⁱ⋄(tʲ⋄tᵏ)
        //      − (tⁱ⋄tᵏ)⋄tʲ + tⁱ⋄(tᵏ⋄tʲ)
        const long e18 = i * (i + j - 1) - j * i - (i * (i + k - 1) - k * i);
        if (e18 != 0)
          rep.add_witness(opts, Witness{"e18", {expo(i), expo(j), expo(k)},
                                        std::to_string(e18)});
        const long e19 = j * i - i * j;
        if (e19 != 0)
          rep.add_witness(opts, Witness{"e19", {expo(i), expo(j), expo(k)},
                                        std::to_string(e19)});
        Rational nq = Rational(i) * laurent_form(i + j - 1, k) +
                      Rational(j) * laurent_form(i, j + k - 1) +
                      Rational(k) * laurent_form(i, k + j - 1);
        if (nq != 0)
          rep.add_witness(opts,
                          Witness{"Nov-qua", {expo(i), expo(j), expo(k)}, rational_str(nq)});
      }
      if (laurent_form(i, j) != 0 && i + j + 1 != 0)
        rep.add_witness(opts, Witness{"quad", {expo(i), expo(j)}, "1"});
    }
  // Materialized table vs closed form.
  const BilinearOp& d = f.op("diamond");
  const BilinearForm& fo = f.form("form");
  const BasisSpace& sp = d.space();
  auto exp_index = [&](long e) { return static_cast<int>(e - w.lo); };
  for (long i = w.lo; i <= w.hi; ++i)
    for (long j = w.lo; j <= w.hi; ++j) {
      auto [coef, e] = laurent_product(i, j);
      Tensor1 expect;
      if (w.contains(e)) expect.add({exp_index(e)}, Rational(coef));
      if (!(d.of_basis(exp_index(i), exp_index(j)) == expect))
        rep.add_witness(opts, Witness{"window-table", {expo(i), expo(j)}, "table mismatch"});
      if (fo.value(exp_index(i), exp_index(j)) != laurent_form(i, j))
        rep.add_witness(opts, Witness{"window-table", {expo(i), expo(j)}, "form mismatch"});
    }
  if (sp.dim() != static_cast<int>(w.hi - w.lo + 1))
    rep.add_witness(opts, Witness{"window-table", {}, "space does not match window"});
  return rep;
}

}  // namespace

CheckReport run_check(const WorkbenchFile& f, const std::string& kind,
                      const GradedWindow& window, const CheckOptions& opts) {
  (void)window;
  if (kind == "pre-lie") return check_pre_lie(f.op("circ"), opts);
  if (kind == "novikov") return check_novikov(f.op("circ"), opts);
  if (kind == "right-novikov") return check_right_novikov(f.op("diamond"), opts);
  if (kind == "right-novikov-dialgebra")
    return check_right_novikov_dialgebra(f.op("dashv"), f.op("vdash"), opts);
  if (kind == "pre-novikov") return check_pre_novikov(f.op("lhd"), f.op("rhd"), opts);
  if (kind == "pre-novikov-coalgebra")
    return check_pre_novikov_coalgebra(f.coop("alpha"), f.coop("beta"), opts);
  if (kind == "right-novikov-coalgebra")
    return check_right_novikov_coalgebra(f.coop("Delta"), opts);
  if (kind == "right-novikov-co-dialgebra")
    return check_right_novikov_co_dialgebra(f.coop("Delta_alpha"), f.coop("Delta_beta"), opts);
  if (kind == "pre-novikov-bialgebra")
    return check_pre_novikov_bialgebra_full({f.pre_novikov_ops(), f.pre_novikov_coops()}, opts);
  if (kind == "quasi-frobenius-novikov")
    return check_quasi_frobenius(f.op("circ"), f.form("omega"), opts);
  if (kind == "quadratic-pre-novikov")
    return check_quadratic_pre_novikov(f.op("lhd"), f.op("rhd"), f.form("omega"), opts);
  if (kind == "quadratic-right-novikov")
    return check_quadratic_right_novikov(f.op("diamond"), f.form("form"), opts);
  if (kind == "quadratic-pre-lie")
    return check_quadratic_pre_lie(f.op("circ"), f.form("omega_p"), opts);
  if (kind == "pre-lie-bialgebra")
    return check_pre_lie_bialgebra({f.op("circ"), f.coop("delta")}, opts);
  if (kind == "lie") return check_jacobi(f.op("bracket"), opts);
  if (kind == "laurent-right-novikov") return check_laurent(f, opts);
  if (kind == "data") return CheckReport{};
  throw ParseError("unknown structure kind '" + kind + "'");
}

}  // namespace prenov
