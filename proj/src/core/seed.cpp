#include <charconv>
#include <limits>
#include <sstream>

#include "hofseq/error.hpp"
#include "hofseq/sequence.hpp"

namespace hofseq {

Seed::Seed(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.size() < 2) throw InvalidArgument("seed needs at least two terms");
  for (Term t : terms_) {
    if (t == 0) throw InvalidArgument("seed terms must be positive");
    if (t > static_cast<Term>(std::numeric_limits<Defect>::max())) {
      throw InvalidArgument("seed term exceeds the signed 64-bit range");
    }
  }
}

Seed Seed::classic() { return Seed({1, 2}); }

bool Seed::is_classic() const noexcept { return terms_ == std::vector<Term>{1, 2}; }

Seed Seed::parse(const std::string& text) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view field(text.data() + pos, end - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    Term value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw InvalidArgument("bad seed entry '" + std::string(field) + "'");
    }
    terms.push_back(value);
    pos = end + 1;
  }
  return Seed(std::move(terms));
}

std::string Seed::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) os << (i ? "," : "") << terms_[i];
  return os.str();
}

}  // namespace hofseq
