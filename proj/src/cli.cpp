#include "lbext/cli.hpp"

#include <filesystem>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lbext/corpus.hpp"
#include "lbext/io.hpp"
#include "lbext/special.hpp"

namespace lbext {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string term(const Scalar& c, const std::string& name) {
  if (c.is_one()) return name;
  if (c == Scalar(-1)) return "-" + name;
  if (sgn(c.re()) != 0 && sgn(c.im()) != 0) return "(" + c.str() + ")*" + name;
  if (sgn(c.im()) == 0) return c.str() + "*" + name;
  if (c.im() == 1) return "i*" + name;
  if (c.im() == -1) return "-i*" + name;
  return to_string(c.im()) + "*i*" + name;
}

std::string residual_text(const Residual& r) {
  std::string out;
  std::vector<std::size_t> idx(r.shape.size());
  for (std::size_t k = 0; k < r.values.size(); ++k) {
    std::size_t rem = k;
    for (std::size_t a = r.shape.size(); a-- > 0;) {
      idx[a] = rem % r.shape[a];
      rem /= r.shape[a];
    }
    if (r.values[k].is_zero()) continue;
    if (!out.empty()) out += ", ";
    out += "[";
    for (std::size_t a = 0; a < idx.size(); ++a) out += (a ? "," : "") + std::to_string(idx[a] + 1);
    out += "]=" + r.values[k].str();
  }
  return out;
}

const std::map<std::string, std::string>& condition_notes() {
  static const std::map<std::string, std::string> notes = {
      {"flag.B-wedge", "B is not antisymmetric"},
      {"flag.alpha-derived", "alpha([a,b]) != 0"},
      {"flag.delta-A", "delta(A) != 0"},
      {"flag.coupling", "[a,A] != sum alpha(a2) a1"},
      {"flag.derivation", "D is not an alpha-twisted derivation"},
  };
  return notes;
}

std::vector<std::string> names_of(const BasisSpace& s) { return s.names(); }

std::vector<std::string> db_names(const BasisSpace& g) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < db_ambient_dim(g.dim()); ++k) out.push_back(db_coordinate_name(g, k));
  return out;
}

std::string equation(std::span<const Scalar> row, const std::vector<std::string>& names) {
  return format_combination(row, names) + " = 0";
}

Json sparse_json(std::span<const Scalar> v, const std::vector<std::string>& names) {
  Json out = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out[names[k]] = v[k].str();
  return out;
}

Json vector_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

std::vector<std::string> constraint_rows(const LieBialgebra& g, const AlphaCase& c, const Vector& A) {
  const RowEchelon e = rref(db_system(g, c.alpha, A));
  const auto names = db_names(g.space());
  std::vector<std::string> out;
  for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(equation(e.reduced.row(r), names));
  return out;
}

// Input resolution --------------------------------------------------------------

struct Input {
  std::string text;
  fs::path dir;
  std::string name;
};

Input resolve_input(const std::string& arg) {
  if (fs::exists(arg)) return {read_text(arg), fs::path(arg).parent_path(), fs::path(arg).stem().string()};
  if (find_corpus_entry(arg)) return {corpus_text(arg), {}, arg};
  throw ParseError("'" + arg + "' is neither a file nor a corpus entry");
}

bool is_flag_file(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    return j.is_object() && j.contains("alpha");
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

BiExtendingDatum load_any_datum(const Input& in) {
  if (is_flag_file(in.text)) return flag_to_bidatum(parse_flag(in.text, in.dir));
  return parse_datum(in.text, in.dir);
}

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty())
    out << text;
  else
    write_text(path, text);
}

std::vector<std::size_t> parse_sub(const std::string& text, std::size_t dim) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("--sub: bad index '" + item + "'");
    }
    if (pos != item.size()) throw ParseError("--sub: bad index '" + item + "'");
    if (v < 1 || static_cast<std::size_t>(v) > dim)
      throw ParseError("--sub: index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  if (out.empty()) throw ParseError("--sub: empty index list");
  return out;
}

// ';' separates samples. A sample with dim g entries is A itself; otherwise its
// entries are coordinates in the basis of ker delta. With a one-dimensional
// ker delta and no ';', every comma-separated entry is its own sample.
std::vector<Vector> parse_samples(const std::string& text, const LieBialgebra& g) {
  const SolutionSpace ker = a_space(g);
  const std::size_t n = g.dim(), d = ker.dimension();
  std::vector<std::string> items;
  if (text.find(';') == std::string::npos && d == 1 && n != 1) {
    for (const auto& s : parse_scalar_list(text)) items.push_back(s.str());
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) items.push_back(item);
  }
  std::vector<Vector> out;
  for (const auto& item : items) {
    const std::vector<Scalar> v = parse_scalar_list(item);
    if (v.size() == n) {
      out.push_back(make_vector(v));
    } else if (v.size() == d) {
      Vector A = zero_vector(n);
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t k = 0; k < n; ++k) A(k) += v[b] * ker.basis[b][k];
      out.push_back(A);
    } else {
      throw ParseError("--samples: '" + item + "' has " + std::to_string(v.size()) + " entries; expected " +
                       std::to_string(n) + " or " + std::to_string(d));
    }
  }
  return out;
}

Vector parse_sized(const std::string& text, std::size_t n, const std::string& field) {
  std::vector<Scalar> v = parse_scalar_list(text);
  if (v.size() == 1 && n > 1 && v[0].is_zero()) v.assign(n, Scalar());
  if (v.size() != n) throw ParseError(field + ": expected " + std::to_string(n) + " entries");
  return make_vector(std::move(v));
}

// Commands ------------------------------------------------------------------------

int cmd_check(const std::string& path, const std::string& kind, bool machine, std::ostream& out) {
  const Input in = resolve_input(path);
  VerdictReport rep;
  if (kind == "algebra" || kind == "coalgebra" || kind == "bialgebra") {
    const LieBialgebra g = parse_bialgebra(in.text).g;
    rep = kind == "algebra" ? check_lie_algebra(g.algebra())
          : kind == "coalgebra" ? check_lie_coalgebra(g.coalgebra())
                                : check_lie_bialgebra(g);
  } else if (kind == "alg-datum" || kind == "coalg-datum" || kind == "bi-datum") {
    const BiExtendingDatum d = load_any_datum(in);
    rep = kind == "alg-datum"     ? check_alg_extending(d.alg())
          : kind == "coalg-datum" ? check_coalg_extending(d.coalg())
                                  : check_bi_extending(d);
  } else {
    rep = check_flag_datum(parse_flag(in.text, in.dir));
  }
  if (machine)
    out << report_json(rep);
  else
    out << (rep.valid() ? "valid\n" : "invalid: " + std::to_string(rep.violations().size()) + " violation(s)\n")
        << format_report(rep);
  return rep.valid() ? 0 : 1;
}

int cmd_build(const std::string& kind, const std::string& path, const std::string& out_path, std::ostream& out) {
  const Input in = resolve_input(path);
  const BiExtendingDatum d = load_any_datum(in);
  LieBialgebra result;
  if (kind == "product") {
    const LieAlgebra a = unified_product(d.alg());
    const std::size_t N = a.dim();
    result = LieBialgebra(a.space(), a.bracket(), CobracketMap(N, N, N));
  } else if (kind == "coproduct") {
    const LieCoalgebra c = unified_coproduct(d.coalg());
    const std::size_t N = c.dim();
    result = LieBialgebra(c.space(), BilinearMap(N, N, N), c.cobracket());
  } else if (kind == "biproduct") {
    result = unified_biproduct(d);
  } else if (kind == "crossed") {
    result = crossed_biproduct(CrossedBiDatum::from_general(d));
  } else if (kind == "bicrossed") {
    result = bicrossed_sum(BicrossedSumDatum::from_general(d));
  } else {
    result = double_cross_sum(DoubleCrossSumDatum::from_general(d));
  }
  emit(out, write_bialgebra(in.name + "-" + kind, result), out_path);
  return 0;
}

int cmd_extract(const std::string& path, const std::string& sub, const std::string& out_path, std::ostream& out) {
  const Input in = resolve_input(path);
  const NamedBialgebra E = parse_bialgebra(in.text);
  const std::vector<std::size_t> idx = parse_sub(sub, E.g.dim());
  const BiExtendingDatum d = extract_datum(E.g, idx);
  if (!(unified_biproduct_unchecked(d) == permute_basis(E.g, subspace_order(E.g.dim(), idx))))
    throw InvariantViolation("extracted datum does not rebuild the input");
  std::string base_name = E.name.empty() ? in.name : E.name;
  base_name += "-sub";
  for (auto k : idx) base_name += "-" + std::to_string(k + 1);
  emit(out, write_datum(base_name, d), out_path);
  return 0;
}

int cmd_flag_solve(const std::string& base_arg, const std::string& alpha_text, const std::string& A_text,
                   bool machine, std::ostream& out) {
  const NamedBialgebra base = load_bialgebra(base_arg);
  const std::size_t n = base.g.dim();
  FlagDatum fd = FlagDatum::zero(base.g);
  const Vector alpha = parse_sized(alpha_text, n, "--alpha");
  fd.alpha = alpha.to_vector();
  fd.A = parse_sized(A_text, n, "--A");

  VerdictReport pre;
  const VerdictReport full = check_flag_datum(fd);
  for (const auto& v : full.violations())
    if (v.condition == "flag.alpha-derived" || v.condition == "flag.delta-A" || v.condition == "flag.coupling")
      pre.add(v);

  const SolutionSpace s = solve_db(base.g, fd.alpha, fd.A);
  const auto names = db_names(base.g.space());
  if (machine) {
    Json j;
    j["alpha"] = vector_json(fd.alpha);
    j["A"] = vector_json(fd.A.values());
    j["admissible"] = pre.valid();
    j["dimension"] = s.dimension();
    Json basis = Json::array();
    for (const auto& b : s.basis) basis.push_back(sparse_json(b, names));
    j["basis"] = std::move(basis);
    out << j.dump(2) << "\n";
  } else {
    if (!pre.valid()) out << "alpha and A violate:\n" << format_report(pre);
    out << "dimension " << s.dimension() << "\n";
    for (const auto& b : s.basis) out << "  " << format_combination(b, names) << "\n";
  }
  return pre.valid() ? 0 : 1;
}

int cmd_flag_equiv(const std::string& p1, const std::string& p2, bool machine, std::ostream& out) {
  const Input in1 = resolve_input(p1), in2 = resolve_input(p2);
  const FlagDatum f1 = parse_flag(in1.text, in1.dir), f2 = parse_flag(in2.text, in2.dir);
  const auto w = flag_equivalent(f1, f2);
  if (machine) {
    Json j;
    j["equivalent"] = w.has_value();
    if (w) {
      j["U"] = vector_json(w->U.values());
      j["beta"] = w->beta.str();
    }
    out << j.dump(2) << "\n";
  } else if (w) {
    out << "equivalent\nU = " << format_combination(w->U.values(), names_of(f1.base.space())) << "\nbeta = " << w->beta.str()
        << "\n";
  } else {
    out << "not equivalent\n";
  }
  return w ? 0 : 1;
}

int cmd_flag_classify(const std::string& base_arg, const std::string& samples, const std::string& twin, bool machine,
                      std::ostream& out) {
  const NamedBialgebra base = load_bialgebra(base_arg);
  const std::string name = base.name.empty() ? fs::path(base_arg).stem().string() : base.name;
  const FlagSolutionReport r = classify_codim1(base.g, samples.empty() ? std::vector<Vector>{} : parse_samples(samples, base.g));
  const std::string json = classification_json(name, base.g, r);
  if (!twin.empty()) write_text(twin, json);
  out << (machine ? json : classification_text(name, base.g, r));
  return 0;
}

}  // namespace

std::string format_combination(std::span<const Scalar> coeffs, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    std::string t = term(coeffs[k], names[k]);
    if (out.empty())
      out = t;
    else if (t.front() == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out.empty() ? "0" : out;
}

std::string format_report(const VerdictReport& rep) {
  std::string out;
  for (const auto& v : rep.violations()) {
    out += v.condition;
    if (!v.at.empty()) {
      out += " @ (";
      for (std::size_t k = 0; k < v.at.size(); ++k) out += (k ? "," : "") + v.at[k];
      out += ")";
    }
    out += ": ";
    if (auto it = condition_notes().find(v.condition); it != condition_notes().end()) out += it->second + "; ";
    out += "residual " + residual_text(v.residual) + "\n";
  }
  return out;
}

std::string report_json(const VerdictReport& rep) {
  Json j;
  j["valid"] = rep.valid();
  Json list = Json::array();
  for (const auto& v : rep.violations()) {
    Json e;
    e["condition"] = v.condition;
    e["at"] = v.at;
    e["shape"] = v.residual.shape;
    e["residual"] = vector_json(v.residual.values);
    list.push_back(std::move(e));
  }
  j["violations"] = std::move(list);
  return j.dump(2) + "\n";
}

std::string classification_text(const std::string& base_name, const LieBialgebra& base, const FlagSolutionReport& r) {
  const auto gnames = names_of(base.space());
  const auto names = db_names(base.space());
  std::ostringstream o;
  o << "base " << base_name << " (dim " << base.dim() << ")\n";
  o << "alpha space: dimension " << r.alpha_space.dimension() << "\n";
  for (const auto& b : r.alpha_space.basis) o << "  " << format_vector(b) << "\n";
  o << "A space (ker delta): dimension " << r.a_space.dimension() << "\n";
  for (const auto& b : r.a_space.basis) o << "  " << format_combination(b, gnames) << "\n";
  const auto& f = r.facts;
  o << "facts: dim [g,g] = " << f.derived_dim << ", dim Z = " << f.center_dim << ", dim Der = " << f.der_dim
    << ", dim Inn = " << f.inn_dim << ", dim (g^g)^g = " << f.wedge_invariant_dim << "\n";
  for (const auto& note : r.notes) o << "note: " << note << "\n";

  for (std::size_t s = 0; s < r.samples.size(); ++s) {
    const auto& sample = r.samples[s];
    o << "\nsample " << s + 1 << ": A = " << format_combination(sample.A.values(), gnames) << "\n";
    if (!sample.coupled_alpha.consistent()) {
      o << "  no admissible alpha\n";
      continue;
    }
    o << "  admissible alpha: dimension " << sample.coupled_alpha.dimension() << "\n";
    for (const auto& c : sample.cases) {
      o << "  alpha = " << format_vector(c.alpha) << "\n";
      o << "    constraints:\n";
      for (const auto& row : constraint_rows(base, c, sample.A)) o << "      " << row << "\n";
      o << "    solution dimension " << c.db_space.dimension() << ", U-orbit dimension " << c.u_image.size()
        << ", classes modulo U: dimension " << c.quotient_basis.size() << "\n";
      for (const auto& fam : c.families) {
        o << "    family " << fam.kind;
        if (fam.normalized_coordinate) o << " (" << names[*fam.normalized_coordinate] << " = 1)";
        o << ": representative " << format_combination(fam.representative, names) << "\n";
        if (fam.parameters.empty()) {
          o << "      no parameters\n";
        } else {
          o << (fam.beta_scalable ? "      parameters, equivalent up to a common nonzero scalar beta:\n"
                                  : "      parameters, each value a distinct class:\n");
          for (const auto& p : fam.parameters) o << "        " << format_combination(p, names) << "\n";
        }
      }
    }
  }
  if (!r.dimension_jumps.empty()) {
    o << "\ndimension jumps observed at samples:";
    for (auto k : r.dimension_jumps) o << " " << k + 1;
    o << "\n";
  }
  return o.str();
}

std::string classification_json(const std::string& base_name, const LieBialgebra& base, const FlagSolutionReport& r) {
  const auto gnames = names_of(base.space());
  const auto names = db_names(base.space());
  auto space_json = [&](const SolutionSpace& s) {
    Json j;
    j["dimension"] = s.dimension();
    Json b = Json::array();
    for (const auto& v : s.basis) b.push_back(vector_json(v));
    j["basis"] = std::move(b);
    return j;
  };
  Json j;
  j["base"] = base_name;
  j["dim"] = base.dim();
  j["alpha_space"] = space_json(r.alpha_space);
  j["a_space"] = space_json(r.a_space);
  j["facts"] = {{"derived_dim", r.facts.derived_dim}, {"center_dim", r.facts.center_dim},
                {"der_dim", r.facts.der_dim},         {"inn_dim", r.facts.inn_dim},
                {"wedge_invariant_dim", r.facts.wedge_invariant_dim}};
  j["notes"] = r.notes;
  Json jumps = Json::array();
  for (auto k : r.dimension_jumps) jumps.push_back(k + 1);
  j["dimension_jumps"] = std::move(jumps);
  Json samples = Json::array();
  for (const auto& sample : r.samples) {
    Json s;
    s["A"] = vector_json(sample.A.values());
    s["alpha_consistent"] = sample.coupled_alpha.consistent();
    Json cases = Json::array();
    for (const auto& c : sample.cases) {
      Json cj;
      cj["alpha"] = vector_json(c.alpha);
      cj["constraints"] = constraint_rows(base, c, sample.A);
      cj["solution_dimension"] = c.db_space.dimension();
      cj["u_orbit_dimension"] = c.u_image.size();
      Json fams = Json::array();
      for (const auto& fam : c.families) {
        Json fj;
        fj["kind"] = fam.kind;
        fj["normalized"] = fam.normalized_coordinate ? Json(names[*fam.normalized_coordinate]) : Json(nullptr);
        fj["representative"] = sparse_json(fam.representative, names);
        Json params = Json::array();
        for (const auto& p : fam.parameters) params.push_back(sparse_json(p, names));
        fj["parameters"] = std::move(params);
        fj["beta_scalable"] = fam.beta_scalable;
        fams.push_back(std::move(fj));
      }
      cj["families"] = std::move(fams);
      cases.push_back(std::move(cj));
    }
    s["cases"] = std::move(cases);
    samples.push_back(std::move(s));
  }
  j["samples"] = std::move(samples);
  return j.dump(2) + "\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction, checking and classification of Lie bialgebra extensions", "lbext"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  };

  std::string path, kind, out_path, sub, alpha = "0", A = "0", samples, path2;

  auto* check = app.add_subcommand("check", "Check a file against the axioms of its kind");
  check->add_option("path", path, "File or corpus name")->required();
  check->add_option("kind", kind, "What the file holds")
      ->required()
      ->check(CLI::IsMember({"algebra", "coalgebra", "bialgebra", "alg-datum", "coalg-datum", "bi-datum", "flag"}));
  add_format(check);

  auto* build = app.add_subcommand("build", "Build the product of an extending datum");
  build->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"product", "coproduct", "biproduct", "crossed", "bicrossed", "doublecross"}));
  build->add_option("datum", path, "Datum or flag file, or corpus name")->required();
  build->add_option("--out", out_path, "Output file (default: stdout)");

  auto* extract = app.add_subcommand("extract", "Read off the datum of a bialgebra relative to a sub-bialgebra");
  extract->add_option("path", path)->required();
  extract->add_option("--sub", sub, "1-based indices spanning the sub-bialgebra, e.g. 1,2,3")->required();
  extract->add_option("--out", out_path, "Output file (default: stdout)");

  auto* flag = app.add_subcommand("flag", "Codimension-one extensions");
  flag->require_subcommand(1);
  auto* solve = flag->add_subcommand("solve", "Solve for (D, B) given alpha and A");
  solve->add_option("base", path)->required();
  solve->add_option("--alpha", alpha, "alpha(e_1),...,alpha(e_n); 0 for all zero");
  solve->add_option("--A", A, "coordinates of A; 0 for zero");
  add_format(solve);
  auto* equiv = flag->add_subcommand("equiv", "Find an equivalence between two flag datums");
  equiv->add_option("first", path)->required();
  equiv->add_option("second", path2)->required();
  add_format(equiv);
  auto* classify = flag->add_subcommand("classify", "Classify flag datums at sampled values of A");
  classify->add_option("base", path)->required();
  classify->add_option("--samples", samples, "Samples of A, e.g. 0,1,2i,-2i");
  classify->add_option("--out", out_path, "Also write the machine-readable report here");
  add_format(classify);

  auto* corpus = app.add_subcommand("corpus", "Bundled examples");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "List the bundled examples");
  auto* show = corpus->add_subcommand("show", "Print a bundled example");
  show->add_option("name", path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool machine = format == "machine";
  try {
    if (check->parsed()) return cmd_check(path, kind, machine, out);
    if (build->parsed()) return cmd_build(kind, path, out_path, out);
    if (extract->parsed()) return cmd_extract(path, sub, out_path, out);
    if (solve->parsed()) return cmd_flag_solve(path, alpha, A, machine, out);
    if (equiv->parsed()) return cmd_flag_equiv(path, path2, machine, out);
    if (classify->parsed()) return cmd_flag_classify(path, samples, out_path, machine, out);
    if (list->parsed()) {
      for (const auto& e : corpus_entries()) out << e.name << "  " << e.kind << "  " << e.description << "\n";
      return 0;
    }
    if (show->parsed()) {
      out << corpus_text(path);
      return 0;
    }
  } catch (const InvalidDatum& e) {
    err << "invalid datum: " << e.report().violations().size() << " violation(s)\n" << format_report(e.report());
    return 1;
  } catch (const NotASubBialgebra& e) {
    err << "not a sub-bialgebra: " << e.what() << "\n";
    return 1;
  } catch (const SampleNotInASpace& e) {
    err << "sample not in ker delta: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace lbext
