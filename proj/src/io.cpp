#include "lbext/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lbext/corpus.hpp"

namespace lbext {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError(field + ": " + what);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed file: ") + e.what());
  }
}

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(key, "missing");
  return obj.at(key);
}

std::string as_string(const Json& j, const std::string& field) {
  if (!j.is_string()) fail(field, "expected a string");
  return j.get<std::string>();
}

Scalar as_scalar(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(field, "expected a scalar string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

std::size_t as_index(const Json& j, std::size_t dim, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer index");
  const long v = j.get<long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim) fail(field, "index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

std::size_t parse_index_text(std::string_view s, std::size_t dim, const std::string& field) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(field, "bad index '" + std::string(s) + "'");
  if (v < 1 || static_cast<std::size_t>(v) > dim) fail(field, "index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

std::pair<std::size_t, std::size_t> parse_pair_key(const std::string& key, std::size_t ldim, std::size_t rdim,
                                                   const std::string& field) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) fail(field, "key '" + key + "' is not of the form \"i,j\"");
  return {parse_index_text(std::string_view(key).substr(0, comma), ldim, field + "[" + key + "]"),
          parse_index_text(std::string_view(key).substr(comma + 1), rdim, field + "[" + key + "]")};
}

std::vector<std::string> as_labels(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected a list of labels");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, field));
  return out;
}

constexpr std::size_t kMaxDim = 10;

BasisSpace as_basis(const Json& j, const std::string& field) {
  const std::vector<std::string> labels = as_labels(j, field);
  if (labels.size() > kMaxDim) fail(field, "at most " + std::to_string(kMaxDim) + " basis elements are supported");
  try {
    return BasisSpace(labels);
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

// {"i,j": [{"k", "c"}]} into a bilinear map
void read_bilinear(const Json& j, BilinearMap& m, const std::string& field, bool upper_only) {
  if (!j.is_object()) fail(field, "expected an object");
  for (const auto& [key, list] : j.items()) {
    auto [i, jj] = parse_pair_key(key, m.left_dim(), m.right_dim(), field);
    if (upper_only && i >= jj) fail(field, "key \"" + key + "\": only i<j keys are allowed");
    if (!list.is_array()) fail(field + "[" + key + "]", "expected a list");
    for (const auto& e : list) {
      const std::size_t k = as_index(member(e, "k"), m.target_dim(), field + "[" + key + "].k");
      m(i, jj, k) += as_scalar(member(e, "c"), field + "[" + key + "].c");
    }
  }
}

// {"i": [{"j", "k", "c"}]} into a cobracket-shaped map
void read_cobracket(const Json& j, CobracketMap& m, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  for (const auto& [key, list] : j.items()) {
    const std::size_t i = parse_index_text(key, m.source_dim(), field);
    if (!list.is_array()) fail(field + "[" + key + "]", "expected a list");
    for (const auto& e : list) {
      const std::size_t a = as_index(member(e, "j"), m.left_dim(), field + "[" + key + "].j");
      const std::size_t b = as_index(member(e, "k"), m.right_dim(), field + "[" + key + "].k");
      m(i, a, b) += as_scalar(member(e, "c"), field + "[" + key + "].c");
    }
  }
}

std::string pair_key(std::size_t i, std::size_t j) { return std::to_string(i + 1) + "," + std::to_string(j + 1); }

Json write_bilinear(const BilinearMap& m, bool upper_only) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.left_dim(); ++i)
    for (std::size_t j = upper_only ? i + 1 : 0; j < m.right_dim(); ++j) {
      Json list = Json::array();
      for (std::size_t k = 0; k < m.target_dim(); ++k)
        if (!m(i, j, k).is_zero()) list.push_back({{"k", k + 1}, {"c", m(i, j, k).str()}});
      if (!list.empty()) out[pair_key(i, j)] = std::move(list);
    }
  return out;
}

Json write_cobracket(const CobracketMap& m) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.source_dim(); ++i) {
    Json list = Json::array();
    for (std::size_t a = 0; a < m.left_dim(); ++a)
      for (std::size_t b = 0; b < m.right_dim(); ++b)
        if (!m(i, a, b).is_zero()) list.push_back({{"j", a + 1}, {"k", b + 1}, {"c", m(i, a, b).str()}});
    if (!list.empty()) out[std::to_string(i + 1)] = std::move(list);
  }
  return out;
}

Json bialgebra_json(const std::string& name, const LieBialgebra& g) {
  Json out;
  out["name"] = name;
  out["basis"] = g.space().names();
  out["bracket"] = write_bilinear(g.bracket(), true);
  out["cobracket"] = write_cobracket(g.cobracket());
  return out;
}

NamedBialgebra bialgebra_from_json(const Json& j) {
  NamedBialgebra out;
  out.name = j.contains("name") ? as_string(j.at("name"), "name") : std::string();
  const BasisSpace space = as_basis(member(j, "basis"), "basis");
  const std::size_t n = space.dim();
  BilinearMap br(n, n, n);
  CobracketMap co(n, n, n);
  if (j.contains("bracket")) read_bilinear(j.at("bracket"), br, "bracket", true);
  if (j.contains("cobracket")) read_cobracket(j.at("cobracket"), co, "cobracket");
  const LieAlgebra alg = LieAlgebra::from_upper_triangle(space, br);
  out.g = LieBialgebra(space, alg.bracket(), co);
  return out;
}

Json base_json(const std::string& base_name, const LieBialgebra& g) {
  if (auto c = find_corpus_bialgebra(base_name); c && *c == g) return base_name;
  for (const auto& e : corpus_entries())
    if (e.kind == "bialgebra" && corpus_bialgebra(e.name) == g) return e.name;
  return bialgebra_json(base_name, g);
}

LieBialgebra base_from_json(const Json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return load_bialgebra(j.get<std::string>(), base_dir).g;
  if (j.is_object()) return bialgebra_from_json(j).g;
  fail("base", "expected a corpus name, a path or an inline bialgebra");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string write_bialgebra(const std::string& name, const LieBialgebra& g) { return dump(bialgebra_json(name, g)); }

NamedBialgebra parse_bialgebra(std::string_view text) { return bialgebra_from_json(parse_json(text)); }

std::string write_datum(const std::string& base_name, const BiExtendingDatum& d) {
  validate_shapes(d);
  Json out;
  out["base"] = base_json(base_name, d.base);
  out["v_basis"] = d.V.names();
  out["lact"] = write_bilinear(d.lact, false);
  out["ract"] = write_bilinear(d.ract, false);
  out["f"] = write_bilinear(d.f, false);
  out["vbracket"] = write_bilinear(d.vbracket, false);
  out["DeltaE"] = write_cobracket(d.DeltaE);
  out["DeltaV"] = write_cobracket(d.DeltaV);
  out["deltaV"] = write_cobracket(d.deltaV);
  return dump(out);
}

BiExtendingDatum parse_datum(std::string_view text, const std::filesystem::path& base_dir) {
  const Json j = parse_json(text);
  BiExtendingDatum d = BiExtendingDatum::zero(base_from_json(member(j, "base"), base_dir),
                                              as_basis(member(j, "v_basis"), "v_basis"));
  if (d.dim_g() + d.dim_v() > kMaxDim)
    fail("v_basis", "g + V has more than " + std::to_string(kMaxDim) + " basis elements");
  for (const auto* key : {"lact", "ract", "f", "vbracket"}) {
    if (!j.contains(key)) continue;
    BilinearMap& m = std::string_view(key) == "lact"    ? d.lact
                     : std::string_view(key) == "ract"  ? d.ract
                     : std::string_view(key) == "f"     ? d.f
                                                        : d.vbracket;
    read_bilinear(j.at(key), m, key, false);
  }
  for (const auto* key : {"DeltaE", "DeltaV", "deltaV"}) {
    if (!j.contains(key)) continue;
    CobracketMap& m = std::string_view(key) == "DeltaE" ? d.DeltaE : std::string_view(key) == "DeltaV" ? d.DeltaV : d.deltaV;
    read_cobracket(j.at(key), m, key);
  }
  return d;
}

std::string write_flag(const std::string& base_name, const FlagDatum& fd) {
  validate_shapes(fd);
  const std::size_t n = fd.dim();
  Json out;
  out["base"] = base_json(base_name, fd.base);
  Json alpha = Json::array(), A = Json::array(), D = Json::array(), B = Json::object();
  for (std::size_t k = 0; k < n; ++k) {
    alpha.push_back(fd.alpha[k].str());
    A.push_back(fd.A(k).str());
    Json row = Json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(fd.D(k, c).str());
    D.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!fd.B(i, j).is_zero()) B[pair_key(i, j)] = fd.B(i, j).str();
  out["alpha"] = std::move(alpha);
  out["D"] = std::move(D);
  out["A"] = std::move(A);
  out["B"] = std::move(B);
  return dump(out);
}

FlagDatum parse_flag(std::string_view text, const std::filesystem::path& base_dir) {
  const Json j = parse_json(text);
  FlagDatum fd = FlagDatum::zero(base_from_json(member(j, "base"), base_dir));
  const std::size_t n = fd.dim();
  auto read_list = [&](const char* key, auto&& set) {
    if (!j.contains(key)) return;
    const Json& l = j.at(key);
    if (!l.is_array() || l.size() != n) fail(key, "expected a list of " + std::to_string(n) + " scalars");
    for (std::size_t k = 0; k < n; ++k) set(k, as_scalar(l[k], std::string(key) + "[" + std::to_string(k + 1) + "]"));
  };
  read_list("alpha", [&](std::size_t k, Scalar s) { fd.alpha[k] = std::move(s); });
  read_list("A", [&](std::size_t k, Scalar s) { fd.A(k) = std::move(s); });
  if (j.contains("D")) {
    const Json& rows = j.at("D");
    if (!rows.is_array() || rows.size() != n) fail("D", "expected " + std::to_string(n) + " rows");
    for (std::size_t r = 0; r < n; ++r) {
      const std::string field = "D[" + std::to_string(r + 1) + "]";
      if (!rows[r].is_array() || rows[r].size() != n) fail(field, "expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c) fd.D(r, c) = as_scalar(rows[r][c], field);
    }
  }
  if (j.contains("B")) {
    const Json& b = j.at("B");
    if (!b.is_object()) fail("B", "expected an object of wedge coordinates");
    for (const auto& [key, c] : b.items()) {
      auto [i, k] = parse_pair_key(key, n, n, "B");
      if (i >= k) fail("B", "key \"" + key + "\": only i<j keys are allowed");
      const Scalar s = as_scalar(c, "B[" + key + "]");
      fd.B(i, k) += s;
      fd.B(k, i) -= s;
    }
  }
  return fd;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

NamedBialgebra load_bialgebra(const std::string& name_or_path, const std::filesystem::path& base_dir) {
  if (auto c = find_corpus_bialgebra(name_or_path)) return {name_or_path, *c};
  std::filesystem::path p(name_or_path);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  if (!std::filesystem::exists(p)) throw ParseError("base: '" + name_or_path + "' is neither a corpus name nor a file");
  return parse_bialgebra(read_text(p));
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Scalar::parse(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_vector(std::span<const Scalar> v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].str();
  return out + ")";
}

}  // namespace lbext
