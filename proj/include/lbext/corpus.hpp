#pragma once

// Bundled examples. Every entry passes the checker of its kind.

#include <optional>
#include <string>
#include <vector>

#include "lbext/flag.hpp"

namespace lbext {

struct CorpusEntry {
  std::string name;
  std::string kind;  // "bialgebra", "bi-datum" or "flag"
  std::string description;
};

const std::vector<CorpusEntry>& corpus_entries();
std::optional<CorpusEntry> find_corpus_entry(const std::string& name);

/// Heisenberg algebra on (x, y, h): [x,y] = h, δ(x) = y∧h, δ(y) = h∧x, δ(h) = 0.
LieBialgebra heisenberg();
/// Abelian, δ = 0.
LieBialgebra abelian(std::size_t n);
/// (e, f, h) with [e,f] = h, [e,h] = -2e, [f,h] = 2f, δ = 0.
LieBialgebra sl2_trivial();

std::optional<LieBialgebra> find_corpus_bialgebra(const std::string& name);
/// Throws Error for unknown names or entries of another kind.
LieBialgebra corpus_bialgebra(const std::string& name);
BiExtendingDatum corpus_datum(const std::string& name);
FlagDatum corpus_flag(const std::string& name);

/// The entry in its file format.
std::string corpus_text(const std::string& name);

}  // namespace lbext
