#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "hofseq/csv.hpp"
#include "hofseq/error.hpp"

using namespace hofseq;

namespace {

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

std::string error_of(const std::string& text, const Seed& seed = Seed::classic()) {
  std::istringstream is(text);
  try {
    csv::read_terms(is, seed);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("terms round trip") {
  const auto s = generate(Seed::classic(), 500);
  std::ostringstream os;
  csv::write_terms(os, s);
  const std::string text = os.str();
  CHECK(first_line(text) == "n,a_n,b_n");
  CHECK(text.find("\n20,32,12\n") != std::string::npos);
  CHECK(text.find('\r') == std::string::npos);

  std::istringstream is(text);
  const auto back = csv::read_terms(is, Seed::classic());
  CHECK(std::equal(back.terms().begin(), back.terms().end(), s.terms().begin(), s.terms().end()));
  CHECK_FALSE(back.has_witnesses());
}

TEST_CASE("malformed term files name the line") {
  CHECK(error_of("") == "line 1: empty input");
  CHECK(error_of("n,a,b\n1,1,0\n").find("line 1") == 0);
  CHECK(error_of("n,a_n,b_n\r\n1,1,0\r\n").find("CRLF") != std::string::npos);
  CHECK(error_of("n,a_n,b_n\n1,1,0\n2,2\n").find("line 3") == 0);
  CHECK(error_of("n,a_n,b_n\n1,1,0\n3,2,-1\n").find("line 3") == 0);
  CHECK(error_of("n,a_n,b_n\n1,1,0\n2,2,1\n").find("line 3") == 0);
  CHECK(error_of("n,a_n,b_n\n1,1,0\n2,x,0\n").find("line 3") == 0);
  CHECK(error_of("n,a_n,b_n\n1,1,0\n2,2,0\n3,2,-1\n").find("inconsistent") == 0);
  CHECK(error_of("n,a_n,b_n\n1,1,0\n2,2,0\n", Seed({1, 3})).find("inconsistent") == 0);
  CHECK(error_of("n,a_n,b_n\n1,1,0\n2,2,0\n3,3,0\n").empty());
}

TEST_CASE("ratio, diffset, plateau and solution schemas") {
  std::ostringstream r;
  analysis::RatioRow row{20, 12, {2.5, 0.1, 1.0 / 3.0, 4.0}};
  csv::write_ratios(r, std::vector<analysis::RatioRow>{row});
  CHECK(r.str() == "n,b_n,r2,r3,r4,r5\n20,12,2.5,0.1,0.3333333333333333,4\n");

  std::ostringstream d;
  analysis::DiffSetReport rep;
  rep.m = 2;
  rep.d_size = 7;
  rep.r_size = 1;
  rep.exponent = std::log(7.0) / std::log(3.0);
  csv::write_diffset(d, std::vector<analysis::DiffSetReport>{rep});
  CHECK(first_line(d.str()) == "m,d_size,r_size,exponent");
  CHECK(d.str().find("\n2,7,1,1.77") != std::string::npos);

  std::ostringstream p;
  analysis::PlateauRecord rec;
  rec.b_hat = 6;
  rec.n1 = 10;
  rec.n2 = 13;
  rec.t_hat = 16;
  csv::write_plateaus(p, std::vector<analysis::PlateauRecord>{rec});
  CHECK(p.str() == "B,n1,n2,T_hat\n6,10,13,16\n");

  std::ostringstream so;
  nt::SearchBounds b;
  csv::write_solutions(so, nt::solve_square_plus_d(7, b));
  CHECK(so.str() ==
        "kind,parameter,root,exponent,beukers_ok\n"
        "square_plus_D,7,1,3,1\nsquare_plus_D,7,3,4,1\nsquare_plus_D,7,5,5,1\n"
        "square_plus_D,7,11,7,1\nsquare_plus_D,7,181,15,1\n");
}

TEST_CASE("format_double round trips") {
  for (double v : {0.0, 1.0, 0.1, 1.0 / 3.0, 2.683281572999748, 1e-300, 12345678.9}) {
    const std::string text = csv::format_double(v);
    CHECK(std::stod(text) == v);
  }
  CHECK(csv::format_double(0.5) == "0.5");
}
