#include "lbext/corpus.hpp"

#include <algorithm>

#include "lbext/io.hpp"

namespace lbext {

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = {
      {"heisenberg", "bialgebra", "Heisenberg algebra [x,y] = h with delta(x) = y^h, delta(y) = h^x"},
      {"abelian-1", "bialgebra", "one-dimensional abelian, zero cobracket"},
      {"abelian-2", "bialgebra", "two-dimensional abelian, zero cobracket"},
      {"abelian-3", "bialgebra", "three-dimensional abelian, zero cobracket"},
      {"sl2-trivial", "bialgebra", "sl2 in the basis (e, f, h) with zero cobracket"},
      {"heisenberg-ext4", "bialgebra", "biproduct of heisenberg-flag-rotation"},
      {"heisenberg-zero-datum", "bi-datum", "zero extending datum of heisenberg by one vector"},
      {"heisenberg-flag-scalable", "flag", "D = 0, A = 3h, B = y^h - 2 h^x"},
      {"heisenberg-flag-rotation", "flag", "D(x) = -y, D(y) = x, A = 0, B = 0"},
      {"heisenberg-flag-2i", "flag", "A = 2i h with D(x) = -i x + y, D(y) = x + i y"},
  };
  return entries;
}

std::optional<CorpusEntry> find_corpus_entry(const std::string& name) {
  const auto& e = corpus_entries();
  auto it = std::find_if(e.begin(), e.end(), [&](const CorpusEntry& c) { return c.name == name; });
  if (it == e.end()) return std::nullopt;
  return *it;
}

LieBialgebra heisenberg() {
  BilinearMap br(3, 3, 3);
  br(0, 1, 2) = 1;
  CobracketMap co(3, 3, 3);
  co(0, 1, 2) = 1;
  co(0, 2, 1) = -1;
  co(1, 2, 0) = 1;
  co(1, 0, 2) = -1;
  return {BasisSpace({"x", "y", "h"}), LieAlgebra::from_upper_triangle(BasisSpace({"x", "y", "h"}), br).bracket(), co};
}

LieBialgebra abelian(std::size_t n) {
  return {BasisSpace::numbered("e", n), BilinearMap(n, n, n), CobracketMap(n, n, n)};
}

LieBialgebra sl2_trivial() {
  BasisSpace space({"e", "f", "h"});
  BilinearMap br(3, 3, 3);
  br(0, 1, 2) = 1;
  br(0, 2, 0) = -2;
  br(1, 2, 1) = 2;
  return {space, LieAlgebra::from_upper_triangle(space, br).bracket(), CobracketMap(3, 3, 3)};
}

namespace {

FlagDatum flag_fixture(const std::string& name) {
  FlagDatum fd = FlagDatum::zero(heisenberg());
  if (name == "heisenberg-flag-scalable") {
    fd.A(2) = 3;
    fd.B(1, 2) = 1;
    fd.B(2, 1) = -1;
    fd.B(2, 0) = -2;
    fd.B(0, 2) = 2;
  } else if (name == "heisenberg-flag-rotation") {
    fd.D(0, 1) = 1;
    fd.D(1, 0) = -1;
  } else if (name == "heisenberg-flag-2i") {
    const Scalar i = Scalar::i();
    fd.A(2) = Scalar(2) * i;
    fd.D(0, 0) = -i;
    fd.D(0, 1) = 1;
    fd.D(1, 0) = 1;
    fd.D(1, 1) = i;
  } else {
    throw Error("unknown flag corpus entry '" + name + "'");
  }
  return fd;
}

CorpusEntry require(const std::string& name, const std::string& kind) {
  auto e = find_corpus_entry(name);
  if (!e) throw Error("unknown corpus entry '" + name + "'");
  if (e->kind != kind) throw Error("corpus entry '" + name + "' is a " + e->kind + ", not a " + kind);
  return *e;
}

}  // namespace

std::optional<LieBialgebra> find_corpus_bialgebra(const std::string& name) {
  if (name == "heisenberg") return heisenberg();
  if (name == "sl2-trivial") return sl2_trivial();
  if (name == "abelian-1") return abelian(1);
  if (name == "abelian-2") return abelian(2);
  if (name == "abelian-3") return abelian(3);
  if (name == "heisenberg-ext4") return unified_biproduct(flag_to_bidatum(flag_fixture("heisenberg-flag-rotation")));
  return std::nullopt;
}

LieBialgebra corpus_bialgebra(const std::string& name) {
  require(name, "bialgebra");
  return *find_corpus_bialgebra(name);
}

BiExtendingDatum corpus_datum(const std::string& name) {
  require(name, "bi-datum");
  return BiExtendingDatum::zero(heisenberg(), BasisSpace({"v"}));
}

FlagDatum corpus_flag(const std::string& name) {
  require(name, "flag");
  return flag_fixture(name);
}

std::string corpus_text(const std::string& name) {
  auto e = find_corpus_entry(name);
  if (!e) throw Error("unknown corpus entry '" + name + "'");
  if (e->kind == "bialgebra") return write_bialgebra(name, corpus_bialgebra(name));
  if (e->kind == "bi-datum") return write_datum("heisenberg", corpus_datum(name));
  return write_flag("heisenberg", corpus_flag(name));
}

}  // namespace lbext
