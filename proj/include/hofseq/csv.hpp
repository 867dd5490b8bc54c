#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hofseq/analysis.hpp"
#include "hofseq/number_theory.hpp"
#include "hofseq/sequence.hpp"

// CSV writers and readers. All files are UTF-8 with a header row and '\n'
// line endings; integers are decimal and floating-point values use the
// shortest representation that round-trips.
namespace hofseq::csv {

/// `n,a_n,b_n`
void write_terms(std::ostream& os, const SequenceState& state);

/// Reads a `n,a_n,b_n` file back. Rows must be numbered 1, 2, ...; the b
/// column must equal a_n - n and the leading rows must match `seed`.
/// Throws ParseError naming the offending line.
SequenceState read_terms(std::istream& is, const Seed& seed);

/// `n,b_n,r2,r3,r4,r5`
void write_ratios(std::ostream& os, std::span<const analysis::RatioRow> rows);

/// `m,d_size,r_size,exponent`
void write_diffset(std::ostream& os, std::span<const analysis::DiffSetReport> rows);

/// `B,n1,n2,T_hat`
void write_plateaus(std::ostream& os, std::span<const analysis::PlateauRecord> records);

/// `kind,parameter,root,exponent,beukers_ok` (beukers_ok is 1 or 0)
void write_solutions(std::ostream& os, std::span<const nt::DiophantineSolution> solutions);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace hofseq::csv
