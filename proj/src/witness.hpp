#pragma once

#include "graver.hpp"
#include "lawrence.hpp"
#include "matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gk {

// A layered witness table shipped as a data file: a sidecar line
// "layers N width n" followed by the N x n matrix text, one layer per row,
// repeated layers written out in arrangement order.  The checksum is
// FNV-1a (64-bit) over the raw file bytes so transcription edits are
// detected.
struct WitnessTable {
  std::string name;  // file stem
  int width = 0;
  std::vector<Vec> rows;
  std::uint64_t checksum = 0;

  // Adjacent equal rows grouped into distinct generators + multiplicities.
  std::vector<Vec> distinct;
  std::vector<Int> mults;

  Relation relation() const;       // generators = distinct, lambda = mults
  LayeredVector layered() const;   // the rows as layers
};

WitnessTable load_witness_file(const std::string& path);

// Directory holding the shipped tables (build-time default, overridable).
std::string default_data_dir();

// The per-layer functional used with the tables: the indicator of the
// complement of supp(v).  It vanishes on v+ and v-, while a fiber point off
// the segment must load a coordinate outside the support.
std::vector<Rat> complement_support_functional(const Vec& v);

// Resolve a table into the relation it encodes.  When the rows balance that
// is simply (distinct, mults).  Otherwise search for the unique repair that
// replaces s copies of one row group by s copies of a single Graver element
// of the same matrix; `resolved` reports whether a unique repair exists.
struct ResolvedTable {
  bool balanced_as_written = false;
  bool resolved = false;  // balanced, or uniquely repaired
  std::string note;       // human-readable description of the repair
  Relation relation;      // the effective relation
};

ResolvedTable resolve_table(const WitnessTable& wt, const GraverBasis& gb);

}  // namespace gk
