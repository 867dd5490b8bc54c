#include "hofseq/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>

#include "hofseq/error.hpp"

namespace hofseq::csv {
namespace {

template <typename T>
T parse_field(std::string_view field, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("line " + std::to_string(line) + ": bad integer '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = line.find(',', pos);
    out.push_back(line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_terms(std::ostream& os, const SequenceState& state) {
  os << "n,a_n,b_n\n";
  for (std::size_t n = 1; n <= state.size(); ++n) {
    os << n << ',' << state.term(n) << ',' << state.defect(n) << '\n';
  }
}

SequenceState read_terms(std::istream& is, const Seed& seed) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("line 1: empty input");
  if (!line.empty() && line.back() == '\r') throw ParseError("line 1: CRLF line endings are not accepted");
  if (line != "n,a_n,b_n") throw ParseError("line 1: expected header 'n,a_n,b_n'");

  std::vector<Term> terms;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != 3) throw ParseError("line " + std::to_string(lineno) + ": expected 3 fields");
    const auto n = parse_field<std::size_t>(fields[0], lineno);
    const auto a = parse_field<Term>(fields[1], lineno);
    const auto b = parse_field<Defect>(fields[2], lineno);
    if (n != terms.size() + 1) {
      throw ParseError("line " + std::to_string(lineno) + ": expected n = " +
                       std::to_string(terms.size() + 1));
    }
    if (static_cast<__int128>(a) - static_cast<__int128>(n) != b) {
      throw ParseError("line " + std::to_string(lineno) + ": b_n does not equal a_n - n");
    }
    terms.push_back(a);
  }
  try {
    return SequenceState(seed, std::move(terms));
  } catch (const Error& e) {
    throw ParseError(std::string("inconsistent terms: ") + e.what());
  }
}

void write_ratios(std::ostream& os, std::span<const analysis::RatioRow> rows) {
  os << "n,b_n,r2,r3,r4,r5\n";
  for (const auto& row : rows) {
    os << row.n << ',' << row.b;
    for (double r : row.r) os << ',' << format_double(r);
    os << '\n';
  }
}

void write_diffset(std::ostream& os, std::span<const analysis::DiffSetReport> rows) {
  os << "m,d_size,r_size,exponent\n";
  for (const auto& row : rows) {
    os << row.m << ',' << row.d_size << ',' << row.r_size << ',' << format_double(row.exponent)
       << '\n';
  }
}

void write_plateaus(std::ostream& os, std::span<const analysis::PlateauRecord> records) {
  os << "B,n1,n2,T_hat\n";
  for (const auto& rec : records) {
    os << rec.b_hat << ',' << rec.n1 << ',' << rec.n2 << ',' << rec.t_hat << '\n';
  }
}

void write_solutions(std::ostream& os, std::span<const nt::DiophantineSolution> solutions) {
  os << "kind,parameter,root,exponent,beukers_ok\n";
  for (const auto& s : solutions) {
    os << nt::to_string(s.kind) << ',' << s.parameter << ',' << s.root << ',' << s.exponent << ','
       << (s.beukers_ok ? 1 : 0) << '\n';
  }
}

}  // namespace hofseq::csv
