#include "liegeo/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "liegeo/selftest.hpp"
#include "liegeo/soliton.hpp"

namespace liegeo {

namespace {

// Shorter scalar rendering for human-facing Markdown; JSON keeps the full
// 17 digits.
std::string md_scalar(double x) {
  if (x == 0.0) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string linear_combination(const Vec& coords, const std::vector<std::string>& labels,
                               double eps) {
  std::string out;
  for (int i = 0; i < coords.size(); ++i) {
    const double c = coords[i];
    if (std::abs(c) <= eps) continue;
    if (!out.empty()) out += c >= 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const double mag = std::abs(c);
    if (!approx_equal(mag, 1.0, eps)) out += md_scalar(mag) + " ";
    out += labels[static_cast<size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

struct Pipeline {
  InputDocument doc;
  double tolerance = kDefaultTolerance;
  MetricLieAlgebra M;
  int derived_dim = 0;
  std::optional<DerivedDecomposition> decomposition;

  explicit Pipeline(InputDocument input, const AnalyzeOptions& options)
      : doc(std::move(input)),
        tolerance(options.tolerance),
        M(make_metric_algebra()) {
    const ValidationReport validation = M.algebra().validate();
    if (validation.antisymmetry_residual > tolerance ||
        validation.jacobi_residual > tolerance) {
      std::ostringstream os;
      os << "structure constants do not define a Lie algebra (antisymmetry residual "
         << validation.antisymmetry_residual << ", Jacobi residual "
         << validation.jacobi_residual << ")";
      throw InvalidAlgebra(os.str());
    }
    derived_dim = M.algebra().derived_subalgebra(tolerance).dim1;
    if (derived_dim == 1 || derived_dim == 2) decomposition = decompose(M);
  }

private:
  MetricLieAlgebra make_metric_algebra() {
    doc.tolerance = tolerance;
    return to_metric_algebra(doc);
  }
};

// Operator given in geometry-frame coordinates, re-expressed in the report
// frame (columns of F_rep, G-orthonormal).
Mat to_report_frame(const MetricLieAlgebra& M, const Mat& frame_rep, const Mat& op_geom) {
  const Mat ambient = M.frame() * op_geom * M.frame().transpose() * M.metric();
  return frame_rep.transpose() * M.metric() * ambient * frame_rep;
}

OrderedJson method_entry(const MethodReport& m) {
  OrderedJson j;
  j["method"] = to_string(m.method);
  if (!m.note.empty()) j["variant"] = m.note;
  j["applicable"] = m.applicable;
  j["is_soliton"] = m.is_soliton;
  if (m.is_soliton) j["c"] = m.c;
  j["residual"] = m.residual;
  return j;
}

OrderedJson closed_form_1d_json(const ClosedFormVerdict1D& v) {
  OrderedJson j;
  switch (v.published_case) {
    case ClosedFormCase1D::UnimodularSteady:
      j["published_case"] = "unimodular_steady";
      break;
    case ClosedFormCase1D::NonUnimodularExpanding:
      j["published_case"] = "non_unimodular_expanding";
      break;
    case ClosedFormCase1D::None:
      j["published_case"] = "none";
      break;
  }
  j["published_c"] = v.published_c;
  j["corrected_soliton"] = v.corrected_soliton;
  j["corrected_c"] = v.corrected_c;
  OrderedJson residuals;
  for (const auto& [name, value] : v.residuals) residuals[name] = value;
  j["residuals"] = std::move(residuals);
  return j;
}

OrderedJson closed_form_2d_json(const SolitonSystemSolution& sys,
                                const DerivedDecomposition& d) {
  OrderedJson j;
  j["consistent"] = sys.consistent;
  if (sys.consistent) j["c"] = sys.c;
  j["residual"] = sys.residual;
  OrderedJson candidates = OrderedJson::array();
  std::set<std::pair<int, long long>> seen;  // dedupe per (equation, rounded c)
  for (const auto& cand : sys.candidates) {
    const double clamped = std::max(-1e9, std::min(1e9, cand.c));
    const long long key = llround(clamped * 1e6);
    if (!seen.insert({cand.equation, key}).second) continue;
    OrderedJson entry;
    entry["equation"] = cand.equation;
    if (!cand.where.empty()) entry["at"] = cand.where;
    entry["c"] = cand.c;
    candidates.push_back(std::move(entry));
  }
  j["candidates"] = std::move(candidates);
  const SolitonSystemResiduals res =
      soliton_system_residuals(d, sys.consistent ? sys.c : 0.0);
  OrderedJson eq = OrderedJson::array();
  for (double r : res.eq) eq.push_back(r);
  j["equation_residuals_at_reported_c"] = std::move(eq);
  return j;
}

OrderedJson build_report(const Pipeline& p, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const MetricLieAlgebra& M = p.M;
  const double tol = p.tolerance;
  const int n = M.dim();

  OrderedJson rep;
  rep["schema"] = 1;
  rep["tolerance"] = tol;
  rep["normalized_input"] = emit_input(p.doc);

  {
    const ValidationReport v = M.algebra().validate();
    OrderedJson validation;
    validation["antisymmetry_residual"] = v.antisymmetry_residual;
    validation["jacobi_residual"] = v.jacobi_residual;
    validation["metric_spd"] = true;
    rep["validation"] = std::move(validation);
  }
  rep["derived"] = OrderedJson{{"dim", p.derived_dim}};

  // report frame: decomposition frame when available, else geometry frame
  Mat frame_rep = M.frame();
  std::vector<std::string> labels = M.framed_algebra().labels();
  if (p.decomposition) {
    frame_rep = p.decomposition->frame();
    labels = p.decomposition->frame_labels();
  }

  if (p.decomposition) {
    const DerivedDecomposition& d = *p.decomposition;
    OrderedJson dec;
    dec["kind"] = d.kind() == DecompKind::OneDim ? "one_dim" : "two_dim";
    dec["gamma_dim"] = d.gamma_dim();
    OrderedJson frame_labels = OrderedJson::array();
    for (const auto& l : d.frame_labels()) frame_labels.push_back(l);
    dec["frame_labels"] = std::move(frame_labels);
    dec["frame_columns"] = mat_to_json(d.frame());
    if (d.kind() == DecompKind::OneDim) {
      dec["a"] = vec_to_json(d.a());
      dec["f"] = mat_to_json(d.f());
    } else {
      dec["a1"] = vec_to_json(d.a1());
      dec["a2"] = vec_to_json(d.a2());
      dec["b1"] = vec_to_json(d.b1());
      dec["b2"] = vec_to_json(d.b2());
      dec["f1"] = mat_to_json(d.f1());
      dec["f2"] = mat_to_json(d.f2());
      dec["tr_f1_sq"] = (d.f1() * d.f1()).trace();
      dec["tr_f2_sq"] = (d.f2() * d.f2()).trace();
      dec["tr_f1_f2"] = (d.f1() * d.f2()).trace();
    }
    dec["skew_residual"] = d.skew_residual();
    const UnimodularityWitness w = unimodularity_witness(d, tol);
    OrderedJson uni;
    uni["unimodular"] = w.unimodular;
    uni["witness"] = vec_to_json(w.witness);
    uni["mean_curvature"] = vec_to_json(mean_curvature_vector(M));
    dec["unimodularity"] = std::move(uni);
    rep["decomposition"] = std::move(dec);
  }

  {
    OrderedJson geo;
    OrderedJson frame_labels = OrderedJson::array();
    for (const auto& l : labels) frame_labels.push_back(l);
    geo["frame_labels"] = std::move(frame_labels);
    geo["frame_columns"] = mat_to_json(frame_rep);

    OrderedJson table = OrderedJson::array();
    for (int i = 0; i < n; ++i) {
      OrderedJson row = OrderedJson::array();
      for (int j = 0; j < n; ++j) {
        const Vec value = nabla(M, frame_rep.col(i), frame_rep.col(j));
        row.push_back(vec_to_json(frame_rep.transpose() * M.metric() * value));
      }
      table.push_back(std::move(row));
    }
    geo["connection"] = std::move(table);

    OrderedJson sections = OrderedJson::array();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        OrderedJson entry;
        entry["plane"] = OrderedJson::array(
            {labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)]});
        entry["value"] = sectional(M, frame_rep.col(i), frame_rep.col(j));
        sections.push_back(std::move(entry));
      }
    }
    geo["sectional"] = std::move(sections);

    const RicciData trace_route = ricci_trace_formula(M);
    const RicciData contraction_route = ricci_contraction(M);
    OrderedJson ric;
    ric["operator"] = mat_to_json(to_report_frame(M, frame_rep, trace_route.ric_operator));
    ric["scalar"] = trace_route.scalar_curv;
    ric["contraction_operator"] =
        mat_to_json(to_report_frame(M, frame_rep, contraction_route.ric_operator));
    ric["route_agreement_residual"] =
        (trace_route.ric_form - contraction_route.ric_form).cwiseAbs().maxCoeff();
    geo["ricci"] = std::move(ric);
    rep["geometry"] = std::move(geo);
  }

  {
    OrderedJson sol;
    const bool run_oracle = options.method != "theorem";
    const bool run_theorems = options.method != "oracle";

    if (run_oracle && run_theorems) {
      const CrossReport cross = cross_validate(M, tol);
      sol["authoritative"] = cross.authoritative;
      OrderedJson methods = OrderedJson::array();
      for (const auto& m : cross.methods) methods.push_back(method_entry(m));
      sol["methods"] = std::move(methods);

      OrderedJson oracle;
      oracle["is_soliton"] = cross.oracle.is_soliton;
      if (cross.oracle.is_soliton) {
        oracle["c"] = cross.oracle.c;
        oracle["class"] = to_string(cross.oracle.soliton_class);
        oracle["derivation_residual"] = cross.oracle.derivation_residual;
        oracle["derivation"] = mat_to_json(to_report_frame(M, frame_rep, cross.oracle.D));
      }
      OrderedJson pairs = OrderedJson::array();
      const auto& geom_labels = M.framed_algebra().labels();
      for (const auto& pc : cross.oracle.c_constraints) {
        if (!pc.defined) continue;
        OrderedJson entry;
        entry["pair"] = OrderedJson::array({geom_labels[static_cast<size_t>(pc.i)],
                                            geom_labels[static_cast<size_t>(pc.j)]});
        entry["candidate_c"] = pc.candidate_c;
        entry["fit_residual"] = pc.fit_residual;
        pairs.push_back(std::move(entry));
      }
      oracle["pair_constraints"] = std::move(pairs);
      sol["oracle"] = std::move(oracle);

      if (cross.closed_form_1d)
        sol["closed_form_1d"] = closed_form_1d_json(*cross.closed_form_1d);
      if (cross.closed_form_2d)
        sol["closed_form_2d"] = closed_form_2d_json(*cross.closed_form_2d, *p.decomposition);
      if (cross.nilpotent_closed_form) {
        OrderedJson nil;
        nil["consistent"] = cross.nilpotent_closed_form->consistent;
        if (cross.nilpotent_closed_form->consistent)
          nil["c"] = cross.nilpotent_closed_form->c;
        nil["residual"] = cross.nilpotent_closed_form->residual;
        const NilpotentSolitonResiduals both = nilpotent_soliton_residuals(
            *p.decomposition,
            cross.nilpotent_closed_form->consistent ? cross.nilpotent_closed_form->c : 0.0,
            tol);
        nil["symmetrized_residual"] = both.symmetrized;
        nil["published_form_residual"] = both.published;
        sol["nilpotent_closed_form"] = std::move(nil);
      }

      OrderedJson discrepancies = OrderedJson::array();
      for (const auto& dsc : cross.discrepancies) {
        OrderedJson entry;
        entry["between"] = OrderedJson::array({dsc.method_a, dsc.method_b});
        entry["description"] = dsc.description;
        discrepancies.push_back(std::move(entry));
      }
      sol["discrepancies"] = std::move(discrepancies);
    } else if (run_oracle) {
      const SolitonVerdict v = oracle_solve(M, tol);
      sol["authoritative"] = "oracle";
      OrderedJson oracle;
      oracle["is_soliton"] = v.is_soliton;
      if (v.is_soliton) {
        oracle["c"] = v.c;
        oracle["class"] = to_string(v.soliton_class);
        oracle["derivation_residual"] = v.derivation_residual;
      }
      sol["oracle"] = std::move(oracle);
    } else {
      sol["authoritative"] = "none";
      if (p.decomposition && p.decomposition->kind() == DecompKind::OneDim)
        sol["closed_form_1d"] = closed_form_1d_json(soliton_classify_1d(*p.decomposition, tol));
      if (p.decomposition && p.decomposition->kind() == DecompKind::TwoDim)
        sol["closed_form_2d"] = closed_form_2d_json(
            soliton_system_solve(*p.decomposition, tol), *p.decomposition);
    }
    rep["soliton"] = std::move(sol);
  }

  if (options.timing) {
    const auto stop = std::chrono::steady_clock::now();
    OrderedJson timing;
    timing["seconds"] = std::chrono::duration<double>(stop - start).count();
    rep["timing"] = std::move(timing);
  }
  return rep;
}

InputDocument document_for(const MetricLieAlgebra& M, double tolerance) {
  InputDocument doc;
  doc.dim = M.dim();
  doc.basis = M.algebra().labels();
  for (int i = 0; i < doc.dim; ++i)
    for (int j = i + 1; j < doc.dim; ++j) {
      Vec value = M.algebra().bracket_basis(i, j);
      if (value.cwiseAbs().maxCoeff() == 0.0) continue;
      doc.brackets.push_back({i, j, std::move(value)});
    }
  doc.metric = M.metric();
  doc.tolerance = tolerance;
  return doc;
}

}  // namespace

OrderedJson analyze_report(const InputDocument& doc, const AnalyzeOptions& options) {
  InputDocument effective = doc;
  effective.tolerance = options.tolerance;
  const Pipeline pipeline(effective, options);
  return build_report(pipeline, options);
}

namespace {

OrderedJson comparison_entry(const ExpectedEntry& e, const OrderedJson& computed,
                             bool match) {
  OrderedJson entry;
  entry["name"] = e.name;
  entry["published"] = e.numeric ? OrderedJson(e.value) : OrderedJson(e.text);
  entry["computed"] = computed;
  entry["match"] = match;
  entry["disputed"] = e.disputed;
  if (!e.note.empty()) entry["note"] = e.note;
  return entry;
}

}  // namespace

OrderedJson catalog_report(const FamilySpec& spec, const AnalyzeOptions& options) {
  const MetricLieAlgebra M = build(spec);
  const InputDocument doc = document_for(M, options.tolerance);
  OrderedJson report = analyze_report(doc, options);
  report["family"] = family_name(spec);

  ExpectedValues values;
  try {
    values = expected(spec);
  } catch (const NoExpectationsForFamily&) {
    return report;  // products carry no published table
  }

  // gather computed counterparts
  const double tol = options.tolerance;
  const Pipeline pipeline(doc, options);
  const SolitonVerdict oracle = oracle_solve(pipeline.M, tol);
  std::vector<double> candidates;
  for (const auto& pc : oracle.c_constraints)
    if (pc.defined && pc.fit_residual <= tol) candidates.push_back(pc.candidate_c);
  if (pipeline.decomposition && pipeline.decomposition->kind() == DecompKind::TwoDim) {
    for (const auto& cand : soliton_system_solve(*pipeline.decomposition, tol).candidates)
      candidates.push_back(cand.c);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [tol](double a, double b) { return approx_equal(a, b, tol); }),
                   candidates.end());

  auto candidate_list = [&]() {
    OrderedJson arr = OrderedJson::array();
    for (double c : candidates) arr.push_back(c);
    return arr;
  };

  OrderedJson comparison = OrderedJson::array();
  for (const auto& e : values.entries) {
    if (e.name == "verdict") {
      const std::string computed = oracle.is_soliton
                                       ? std::string("Ricci soliton")
                                       : std::string("not a Ricci soliton");
      comparison.push_back(comparison_entry(e, OrderedJson(computed), computed == e.text));
      continue;
    }
    if (e.name.rfind("candidate_c", 0) == 0) {
      bool found = false;
      for (double c : candidates)
        if (approx_equal(c, e.value, tol)) found = true;
      comparison.push_back(comparison_entry(e, candidate_list(), found));
      continue;
    }
    double computed = 0.0;
    bool have = false;
    if (pipeline.decomposition && pipeline.decomposition->kind() == DecompKind::TwoDim) {
      const DerivedDecomposition& d = *pipeline.decomposition;
      if (e.name == "tr_f1_sq") {
        computed = (d.f1() * d.f1()).trace();
        have = true;
      } else if (e.name == "tr_f2_sq") {
        computed = (d.f2() * d.f2()).trace();
        have = true;
      } else if (e.name == "tr_f1_f2") {
        computed = (d.f1() * d.f2()).trace();
        have = true;
      } else if (e.name == "ric_e1_coeff") {
        computed = ricci_coefficients(d).A1;
        have = true;
      } else if (e.name == "ric_e2_coeff") {
        computed = ricci_coefficients(d).B2;
        have = true;
      }
    }
    if (!have) continue;
    comparison.push_back(
        comparison_entry(e, OrderedJson(computed), approx_equal(computed, e.value, tol)));
  }
  report["published_comparison"] = std::move(comparison);
  return report;
}

namespace {

std::string md_table_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& cell : cells) out += " " + cell + " |";
  out += "\n";
  return out;
}

std::string md_rule(size_t cols) {
  std::string out = "|";
  for (size_t i = 0; i < cols; ++i) out += " --- |";
  out += "\n";
  return out;
}

std::string json_value_to_md(const OrderedJson& v) {
  if (v.is_number_float()) return md_scalar(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    std::string out;
    for (const auto& el : v) {
      if (!out.empty()) out += ", ";
      out += json_value_to_md(el);
    }
    return out;
  }
  return v.dump();
}

std::string render_markdown(const OrderedJson& rep) {
  std::ostringstream os;
  os << "# Left-invariant geometry report\n\n";
  os << "- tolerance: " << md_scalar(rep["tolerance"].get<double>()) << "\n";
  os << "- derived algebra dimension: " << rep["derived"]["dim"].get<int>() << "\n";
  if (rep.contains("family")) os << "- family: " << rep["family"].get<std::string>() << "\n";
  const auto& val = rep["validation"];
  os << "- Jacobi residual: " << md_scalar(val["jacobi_residual"].get<double>()) << "\n\n";

  std::vector<std::string> labels;
  for (const auto& l : rep["geometry"]["frame_labels"]) labels.push_back(l.get<std::string>());
  const double eps = rep["tolerance"].get<double>();

  if (rep.contains("decomposition")) {
    const auto& dec = rep["decomposition"];
    os << "## Decomposition (" << dec["kind"].get<std::string>() << ")\n\n";
    const auto& uni = dec["unimodularity"];
    os << "- unimodular: " << (uni["unimodular"].get<bool>() ? "yes" : "no") << "\n";
    if (dec.contains("tr_f1_sq")) {
      os << "- tr(f1^2) = " << md_scalar(dec["tr_f1_sq"].get<double>())
         << ", tr(f2^2) = " << md_scalar(dec["tr_f2_sq"].get<double>())
         << ", tr(f1 f2) = " << md_scalar(dec["tr_f1_f2"].get<double>()) << "\n";
    }
    os << "\n";
  }

  os << "## Levi-Civita connection\n\n";
  {
    std::vector<std::string> header = {"nabla"};
    header.insert(header.end(), labels.begin(), labels.end());
    os << md_table_row(header) << md_rule(header.size());
    const auto& table = rep["geometry"]["connection"];
    for (size_t i = 0; i < labels.size(); ++i) {
      std::vector<std::string> row = {labels[i]};
      for (size_t j = 0; j < labels.size(); ++j) {
        Vec coords(static_cast<int>(labels.size()));
        const auto& cell = table[i][j];
        for (int k = 0; k < coords.size(); ++k)
          coords[k] = cell[static_cast<size_t>(k)].get<double>();
        row.push_back(linear_combination(coords, labels, eps));
      }
      os << md_table_row(row);
    }
  }

  os << "\n## Sectional curvature\n\n";
  os << md_table_row({"plane", "K"}) << md_rule(2);
  for (const auto& entry : rep["geometry"]["sectional"]) {
    os << md_table_row({json_value_to_md(entry["plane"]),
                        md_scalar(entry["value"].get<double>())});
  }

  os << "\n## Ricci operator\n\n";
  {
    std::vector<std::string> header = {"Ric"};
    header.insert(header.end(), labels.begin(), labels.end());
    os << md_table_row(header) << md_rule(header.size());
    const auto& op = rep["geometry"]["ricci"]["operator"];
    // column j of the operator = Ric(label_j); print rows of the matrix
    for (size_t i = 0; i < labels.size(); ++i) {
      std::vector<std::string> row = {labels[i]};
      for (size_t j = 0; j < labels.size(); ++j)
        row.push_back(md_scalar(op[i][j].get<double>()));
      os << md_table_row(row);
    }
    os << "\n- scalar curvature: "
       << md_scalar(rep["geometry"]["ricci"]["scalar"].get<double>()) << "\n";
    os << "- dual-route agreement residual: "
       << md_scalar(rep["geometry"]["ricci"]["route_agreement_residual"].get<double>())
       << "\n";
  }

  os << "\n## Soliton verdicts\n\n";
  if (rep["soliton"].contains("methods")) {
    os << md_table_row({"method", "verdict", "c"}) << md_rule(3);
    for (const auto& m : rep["soliton"]["methods"]) {
      std::string name = m["method"].get<std::string>();
      if (m.contains("variant")) name += " (" + m["variant"].get<std::string>() + ")";
      os << md_table_row({name, m["is_soliton"].get<bool>() ? "soliton" : "no soliton",
                          m.contains("c") ? md_scalar(m["c"].get<double>()) : "-"});
    }
  }
  if (rep["soliton"].contains("discrepancies")) {
    const auto& ds = rep["soliton"]["discrepancies"];
    os << "\n- discrepancies: " << ds.size() << "\n";
    for (const auto& d : ds) os << "  - " << d["description"].get<std::string>() << "\n";
  }

  if (rep.contains("published_comparison")) {
    os << "\n## Published values vs computed\n\n";
    os << md_table_row({"name", "published", "computed", "match", "disputed"}) << md_rule(5);
    for (const auto& e : rep["published_comparison"]) {
      os << md_table_row({e["name"].get<std::string>(), json_value_to_md(e["published"]),
                          json_value_to_md(e["computed"]),
                          e["match"].get<bool>() ? "yes" : "no",
                          e["disputed"].get<bool>() ? "yes" : "no"});
    }
  }
  return os.str();
}

Mat load_metric_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open metric file " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  OrderedJson j;
  try {
    j = OrderedJson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("metric file is not valid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("metric")) return json_to_mat(j["metric"], "metric");
  return json_to_mat(j, "metric");
}

}  // namespace

std::string format_report(const OrderedJson& report, const std::string& format) {
  if (format == "md") return render_markdown(report);
  return render_json(report);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Left-invariant Riemannian geometry and algebraic Ricci soliton checker"};
  app.require_subcommand(1);

  AnalyzeOptions options;
  std::string format = "json";
  std::string metric_path;
  std::string output_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", options.tolerance, "comparison tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "md"}));
    cmd->add_option("--method", options.method, "which soliton methods to run")
        ->check(CLI::IsMember({"oracle", "theorem", "all"}));
    cmd->add_option("--metric", metric_path, "JSON file with a metric override");
    cmd->add_option("--output", output_path, "write the report to a file");
    cmd->add_flag("--timing", options.timing, "include wall-clock timing in the report");
  };

  std::string input_path;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze an algebra from a JSON file");
  analyze->add_option("input", input_path, "input document")->required();
  add_common(analyze);

  std::string family;
  int k = 0, m = 1, abelian = 0;
  std::vector<double> lambdas;
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "analyze a named family");
  catalog_cmd
      ->add_option("family", family,
                   "heisenberg | affine | indecomp5p2k | indecomp6p2k-type1 | "
                   "indecomp6p2k-type2")
      ->required();
  catalog_cmd->add_option("--k", k, "number of extra symplectic blocks");
  catalog_cmd->add_option("--m", m, "number of Heisenberg blocks");
  catalog_cmd->add_option("--abelian", abelian, "abelian factor dimension");
  catalog_cmd->add_option("--lambda", lambdas, "per-block scales (heisenberg)");
  add_common(catalog_cmd);

  uint64_t seed = 20250101;
  int trials = 200;
  double selftest_tol = 1e-8;
  CLI::App* selftest = app.add_subcommand("selftest", "run the randomized property battery");
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_option("--trials", trials, "number of randomized instances")
      ->check(CLI::PositiveNumber);
  selftest->add_option("--tolerance", selftest_tol, "residual tolerance")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto write_report = [&](const OrderedJson& report) {
    const std::string text = format_report(report, format);
    if (output_path.empty()) {
      out << text;
      return true;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << output_path << "\n";
      return false;
    }
    file << text;
    return true;
  };

  try {
    if (analyze->parsed()) {
      std::ifstream in(input_path);
      if (!in) {
        err << "error: cannot open " << input_path << "\n";
        return 2;
      }
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      InputDocument doc = parse_input_text(text);
      if (!metric_path.empty()) doc.metric = load_metric_file(metric_path);
      if (!analyze->count("--tolerance")) options.tolerance = doc.tolerance;
      return write_report(analyze_report(doc, options)) ? 0 : 2;
    }

    if (catalog_cmd->parsed()) {
      FamilySpec spec;
      if (family == "heisenberg") {
        spec.family = HeisenbergProduct{m, abelian, lambdas};
      } else if (family == "affine") {
        spec.family = AffineProduct{abelian};
      } else if (family == "indecomp5p2k") {
        spec.family = Indecomp5p2k{k};
      } else if (family == "indecomp6p2k-type1") {
        spec.family = Indecomp6p2kType1{k};
      } else if (family == "indecomp6p2k-type2") {
        spec.family = Indecomp6p2kType2{k};
      } else {
        err << "error: unknown family '" << family << "'\n";
        return 2;
      }
      if (!metric_path.empty()) spec.metric_override = load_metric_file(metric_path);
      return write_report(catalog_report(spec, options)) ? 0 : 2;
    }

    // selftest
    PropertyOptions popt;
    popt.seed = seed;
    popt.trials = trials;
    popt.tolerance = selftest_tol;
    const std::vector<PropertyResult> results = run_property_suite(popt);
    bool ok = true;
    for (const auto& r : results) {
      out << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  (checks: " << r.checks
          << ", worst residual: " << md_scalar(r.worst_residual) << ")\n";
      ok = ok && r.pass;
    }
    out << (ok ? "selftest passed" : "selftest FAILED") << "\n";
    return ok ? 0 : 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadParameters& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MetricNotSpd& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidAlgebra& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace liegeo
