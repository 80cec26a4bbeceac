#include "report.hpp"

#include <sstream>

#include "modquot.hpp"
#include "selftest.hpp"
#include "spectral.hpp"
#include "tbundle.hpp"

namespace ellmod {

namespace {

Json conventions_block() {
  Json c;
  c["weight_degree_pairing"] = WPSSignature::pairing_order;
  c["discriminant_sign"] = "Delta = 4*b2^3 + 27*b3^2 (negative of the classical cubic discriminant)";
  c["projective_normalization"] = "first nonzero coordinate scaled to 1";
  c["rr_basis_order"] = "monomials x^i y^j (j <= 1) by pole order 2i+3j: 1, x, y, x^2, xy, ...";
  c["root_coordinates"] = "integer coordinates in the simple-root basis";
  return c;
}

struct FieldSpec {
  bool rational = true;
  uint64_t p = 0;
  std::string echo() const { return rational ? "q" : "p:" + std::to_string(p); }
};

FieldSpec parse_field(const std::string& s) {
  if (s.empty() || s == "q" || s == "Q") return FieldSpec{true, 0};
  if (s.rfind("p:", 0) == 0) {
    try {
      unsigned long long p = std::stoull(s.substr(2));
      return FieldSpec{false, p};
    } catch (const std::exception&) {
      throw InputError("cannot parse field spec '" + s + "'");
    }
  }
  throw InputError("field spec must be 'q' or 'p:<prime>', got '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char delim) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, delim)) out.push_back(item);
  return out;
}

template <class F>
WeierstrassCurve<F> parse_curve(const F& field, const std::string& spec) {
  auto parts = split(spec, ',');
  require(parts.size() == 2, "curve spec must be 'b2,b3'");
  return WeierstrassCurve<F>(field, field.parse(parts[0]), field.parse(parts[1]));
}

template <class F>
std::vector<EcPoint<F>> parse_points(const F& field, const WeierstrassCurve<F>& curve,
                                     const std::string& spec) {
  std::vector<EcPoint<F>> pts;
  for (const auto& tok : split(spec, ';')) {
    if (tok == "O" || tok == "o" || tok == "inf") {
      pts.push_back(EcPoint<F>::zero());
      continue;
    }
    auto xy = split(tok, ',');
    require(xy.size() == 2, "point must be 'x,y' or 'O', got '" + tok + "'");
    auto p = EcPoint<F>::affine(field.parse(xy[0]), field.parse(xy[1]));
    require(curve.contains(p), "point (" + xy[0] + ", " + xy[1] + ") is not on the curve");
    pts.push_back(p);
  }
  return pts;
}

template <class F>
Json projective_json(const ProjectivePoint<F>& p) {
  Json arr = Json::array();
  for (const auto& c : p.coords) arr.push_back(elem_str(c));
  return arr;
}

Json int_vec_json(const std::vector<int64_t>& v) {
  Json arr = Json::array();
  for (int64_t x : v) arr.push_back(x);
  return arr;
}

}  // namespace

Json make_envelope(const std::string& command, Json input_echo, Json payload) {
  Json env;
  env["command"] = command;
  env["version"] = kVersion;
  env["input"] = std::move(input_echo);
  env["conventions"] = conventions_block();
  env["payload"] = std::move(payload);
  return env;
}

std::string CommandOutput::render(const std::string& format) const {
  require(format == "json" || format == "md", "format must be 'json' or 'md'");
  if (format == "json") return envelope.dump(2) + "\n";

  // Markdown is a readable view derived from the same payload.
  std::ostringstream md;
  const Json& payload = envelope.at("payload");
  md << "# " << envelope.at("command").get<std::string>() << "\n\n";
  if (envelope.at("command") == "wps-table") {
    md << "| type | weights | degrees | sum(w)=h^v | prod(d)=|W| | sum(d-1)=#R+ |\n";
    md << "|------|---------|---------|------------|-------------|--------------|\n";
    for (const auto& row : payload.at("rows")) {
      auto join = [](const Json& arr) {
        std::string s;
        for (const auto& v : arr) {
          if (!s.empty()) s += ",";
          s += std::to_string(v.get<int64_t>());
        }
        return s;
      };
      md << "| " << row.at("type").get<std::string>();
      if (row.value("family_pairing_unknown", false)) md << " (*)";
      md << " | " << join(row.at("weights")) << " | " << join(row.at("degrees")) << " | "
         << (row.at("identities").at("sum_weights_is_dual_coxeter").get<bool>() ? "ok" : "FAIL")
         << " | "
         << (row.at("identities").at("degree_product_is_weyl_order").get<bool>() ? "ok" : "FAIL")
         << " | "
         << (row.at("identities").at("degree_sum_is_positive_roots").get<bool>() ? "ok" : "FAIL")
         << " |\n";
    }
    md << "\n(*) family pairing not established for E8.\n";
  } else {
    std::function<void(const std::string&, const Json&, int)> walk =
        [&](const std::string& key, const Json& v, int depth) {
          std::string indent(2 * static_cast<size_t>(depth > 0 ? depth : 0), ' ');
          if (v.is_object()) {
            if (!key.empty()) md << indent << "- " << key << ":\n";
            for (auto it = v.begin(); it != v.end(); ++it) walk(it.key(), it.value(), depth + 1);
          } else {
            md << indent << "- " << key << ": " << v.dump() << "\n";
          }
        };
    walk("", payload, -1);
  }
  return md.str();
}

CommandOutput cmd_wps_table(const std::string& types, int max_rank) {
  require(max_rank >= 1 && max_rank <= 8, "max rank must be in 1..8");
  std::vector<CartanType> selected;
  if (types == "all" || types.empty()) {
    selected = all_types(max_rank);
  } else {
    for (const auto& tok : split(types, ',')) {
      require(!tok.empty(), "empty type token");
      if (tok.size() == 1) {  // a whole series up to max_rank
        bool any = false;
        for (const auto& t : all_types(max_rank))
          if (static_cast<char>(t.series) == tok[0]) {
            selected.push_back(t);
            any = true;
          }
        require(any, "no admissible type in series '" + tok + "' at this rank bound");
      } else {
        selected.push_back(CartanType::parse(tok));
      }
    }
  }

  Json rows = Json::array();
  bool all_ok = true;
  for (const auto& t : selected) {
    WPSSignature sig = wps_signature(t);
    int64_t sum_w = 0;
    for (int64_t w : sig.weights) sum_w += w;
    int64_t prod_d = 1, sum_dm1 = 0;
    for (size_t i = 1; i < sig.degrees.size(); ++i) {
      prod_d *= sig.degrees[i];
      sum_dm1 += sig.degrees[i] - 1;
    }
    Json identities;
    identities["sum_weights_is_dual_coxeter"] = (sum_w == dual_coxeter_table(t));
    identities["degree_product_is_weyl_order"] = (prod_d == weyl_order_table(t));
    identities["degree_sum_is_positive_roots"] = (sum_dm1 == positive_root_count_table(t));
    bool ok = identities["sum_weights_is_dual_coxeter"].get<bool>() &&
              identities["degree_product_is_weyl_order"].get<bool>() &&
              identities["degree_sum_is_positive_roots"].get<bool>();
    all_ok = all_ok && ok;

    Json row;
    row["type"] = t.name();
    row["weights"] = int_vec_json(sig.weights);
    row["degrees"] = int_vec_json(sig.degrees);
    Json pairs = Json::array();
    for (size_t i = 0; i < sig.weights.size(); ++i)
      pairs.push_back(Json::array({sig.weights[i], sig.degrees[i]}));
    row["weight_degree_pairs"] = pairs;
    row["cartan_determinant"] = cartan_determinant(build_root_system(t));
    row["identities"] = identities;
    if (sig.family_pairing_unknown) row["family_pairing_unknown"] = true;
    rows.push_back(row);
  }

  Json payload;
  payload["rows"] = rows;
  payload["row_count"] = rows.size();
  payload["identities_all_pass"] = all_ok;

  Json input;
  input["types"] = types.empty() ? "all" : types;
  input["max_rank"] = max_rank;
  return CommandOutput{make_envelope("wps-table", input, payload)};
}

namespace {

template <class F>
Json strata_payload(const F& field, const std::string& curve_spec, const std::string& points_spec,
                    const RootSystemData& rs) {
  WeierstrassCurve<F> curve = parse_curve(field, curve_spec);
  auto images = parse_points(field, curve, points_spec);
  require(static_cast<int>(images.size()) == rs.rank(),
          "need exactly rank = " + std::to_string(rs.rank()) + " image points");
  TBundlePoint<F> p(curve, images);
  SubsystemReport rep = kernel_subsystem(rs, p);
  auto [h0, nil] = deformation_dims(rep, rs.rank());

  Json out;
  out["type"] = rs.type.name();
  out["kernel_root_count"] = rep.roots.size();
  Json roots = Json::array();
  for (const auto& r : rep.roots) roots.push_back(int_vec_json(r));
  out["kernel_roots"] = roots;
  out["subsystem_type"] = rep.type_name;
  out["is_levi"] = rep.is_levi;
  out["h0_adP"] = h0;
  out["nilpotent_dim"] = nil;
  return out;
}

template <class F>
Json abel_jacobi_payload(const F& field, const std::string& curve_spec,
                         const std::string& points_spec) {
  WeierstrassCurve<F> curve = parse_curve(field, curve_spec);
  auto pts = parse_points(field, curve, points_spec);
  ProjectivePoint<F> image = abel_jacobi_sl(curve, pts);

  auto basis = rr_basis(static_cast<int>(pts.size()));
  Json basis_names = Json::array();
  for (const auto& m : basis) basis_names.push_back(m.name());

  // exact residuals of the vanishing conditions, echoed as proof
  Json residuals = Json::array();
  for (const auto& p : pts) {
    typename F::Elem acc = field.zero();
    if (p.inf) {
      acc = image.coords.back();
    } else {
      for (size_t j = 0; j < basis.size(); ++j)
        acc = acc + image.coords[j] * basis[j].eval(p.x, p.y);
    }
    check_internal(is_zero(acc), "Abel-Jacobi residual is nonzero");
    residuals.push_back(elem_str(acc));
  }

  Json out;
  out["n"] = pts.size();
  out["rr_basis"] = basis_names;
  out["image"] = projective_json(image);
  out["vanishing_residuals"] = residuals;
  return out;
}

}  // namespace

CommandOutput cmd_strata(const std::string& type, const std::string& field,
                         const std::string& curve, const std::string& points) {
  CartanType t = CartanType::parse(type);
  RootSystemData rs = build_root_system(t);
  FieldSpec fs = parse_field(field);
  Json payload = fs.rational ? strata_payload(QQ{}, curve, points, rs)
                             : strata_payload(GFp(fs.p), curve, points, rs);
  Json input;
  input["type"] = type;
  input["field"] = fs.echo();
  input["curve"] = curve;
  input["points"] = points;
  return CommandOutput{make_envelope("strata", input, payload)};
}

CommandOutput cmd_abel_jacobi(const std::string& field, const std::string& curve,
                              const std::string& points) {
  FieldSpec fs = parse_field(field);
  Json payload = fs.rational ? abel_jacobi_payload(QQ{}, curve, points)
                             : abel_jacobi_payload(GFp(fs.p), curve, points);
  Json input;
  input["field"] = fs.echo();
  input["curve"] = curve;
  input["points"] = points;
  return CommandOutput{make_envelope("abel-jacobi", input, payload)};
}

namespace {

Poly<Rat> poly_from_json(const Json& arr) {
  std::vector<Rat> c;
  for (const auto& v : arr) {
    if (v.is_number_integer()) c.push_back(Rat(static_cast<long>(v.get<int64_t>())));
    else c.push_back(rat_parse(v.get<std::string>()));
  }
  return Poly<Rat>(std::move(c));
}

SpectralInstance instance_from_json(int n, int k, const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("cannot parse coefficient JSON: ") + e.what());
  }
  QQ field;
  WeierstrassFamily<QQ> fam(field, k, poly_from_json(j.at("b2")), poly_from_json(j.at("b3")));
  auto basis = rr_basis(n);
  std::vector<Poly<Rat>> coeffs;
  const Json& a = j.at("a");
  for (const auto& m : basis) {
    require(a.contains(m.name()), "missing coefficient for monomial " + m.name());
    coeffs.push_back(poly_from_json(a.at(m.name())));
  }
  SpectralSection<QQ> sec(field, n, k, std::move(coeffs));
  return SpectralInstance{std::move(fam), std::move(sec)};
}

Json poly_json(const Poly<Rat>& p) {
  Json arr = Json::array();
  for (const auto& c : p.c) arr.push_back(rat_str(c));
  return arr;
}

}  // namespace

CommandOutput cmd_spectral_report(int n, int k, uint64_t seed, const std::string& explicit_coeffs,
                                  bool selfcheck) {
  require(n >= 2 && n <= 4, "spectral reports support n in {2,3,4}");
  require(k >= 1 && k <= 3, "spectral reports support k in {1,2,3}");
  SpectralInstance inst = explicit_coeffs.empty() ? seeded_instance(n, k, seed)
                                                  : instance_from_json(n, k, explicit_coeffs);
  SpectralReport rep = spectral_report(inst, selfcheck, seed);

  Json payload;
  payload["n"] = rep.n;
  payload["k"] = rep.k;
  payload["branch_degree"] = rep.branch_degree;
  payload["branch_squarefree"] = rep.branch_squarefree;
  payload["no_infinity_branching"] = rep.no_infinity_branching;
  payload["genus_asserted"] = rep.genus_asserted;
  if (rep.genus_asserted) {
    payload["genus"] = rep.genus;
    if (rep.n == 2) payload["genus_hyperelliptic_check"] = rep.genus_hyperelliptic;
    payload["prym_dim"] = rep.prym_dim;
  }
  payload["base_dim"] = rep.base_dim;
  if (rep.genus_asserted) payload["total_moduli_dim"] = rep.total_moduli_dim;
  payload["connectedness_verdict"] = rep.connectedness;
  payload["cameral_note"] = rep.cameral_note;
  payload["branch_divisor_monic"] = rep.branch_poly;
  if (rep.selfcheck_ran) {
    payload["selfcheck_ok"] = rep.selfcheck_ok;
    payload["selfcheck_detail"] = rep.selfcheck_detail;
  }
  Json coeffs;
  coeffs["b2"] = poly_json(inst.family.b2);
  coeffs["b3"] = poly_json(inst.family.b3);
  Json a;
  auto basis = rr_basis(n);
  for (size_t i = 0; i < basis.size(); ++i) a[basis[i].name()] = poly_json(inst.section.coeffs[i]);
  coeffs["a"] = a;
  payload["coefficients"] = coeffs;

  Json input;
  input["n"] = n;
  input["k"] = k;
  input["seed"] = seed;
  input["coefficients_explicit"] = !explicit_coeffs.empty();
  input["selfcheck"] = selfcheck;
  return CommandOutput{make_envelope("spectral-report", input, payload)};
}

SelftestOutput cmd_selftest(uint64_t seed) {
  auto results = run_acceptance_criteria(seed);
  Json payload_a = criteria_payload(results);
  // determinism is itself a criterion: rebuild the whole payload and compare
  auto results_b = run_acceptance_criteria(seed);
  Json payload_b = criteria_payload(results_b);
  bool deterministic = payload_a.dump() == payload_b.dump();

  bool all = deterministic;
  std::string first_failure = deterministic ? "" : "determinism: payloads differ across reruns";
  for (const auto& r : results) {
    if (!r.pass && first_failure.empty())
      first_failure = "criterion " + std::to_string(r.id) + " (" + r.name + ")";
    all = all && r.pass;
  }

  Json payload = payload_a;
  payload["determinism_rerun_identical"] = deterministic;
  payload["all_pass"] = all;

  Json input;
  input["seed"] = seed;
  SelftestOutput out;
  out.envelope = make_envelope("selftest", input, payload);
  out.all_pass = all;
  out.first_failure = first_failure;
  return out;
}

}  // namespace ellmod
