#include "sunvol/exact.hpp"

#include <doctest.h>

#include <cmath>

using sunvol::BigInt;
using sunvol::BigRational;
using sunvol::ExactVolume;

TEST_SUITE("exact") {

TEST_CASE("factorial") {
  CHECK(sunvol::factorial(0) == 1);
  CHECK(sunvol::factorial(1) == 1);
  CHECK(sunvol::factorial(5) == 120);
  CHECK(sunvol::factorial(12) == 479001600);
  CHECK(sunvol::factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("extract_square pulls out the largest square divisor") {
  CHECK(sunvol::extract_square(1) == std::make_pair(BigInt(1), BigInt(1)));
  CHECK(sunvol::extract_square(2) == std::make_pair(BigInt(1), BigInt(2)));
  CHECK(sunvol::extract_square(4) == std::make_pair(BigInt(2), BigInt(1)));
  CHECK(sunvol::extract_square(18) == std::make_pair(BigInt(3), BigInt(2)));
  CHECK(sunvol::extract_square(360) == std::make_pair(BigInt(6), BigInt(10)));
  CHECK(sunvol::extract_square(BigInt(720) * 720 * 7) ==
        std::make_pair(BigInt(720), BigInt(7)));
}

TEST_CASE("make canonicalizes the radical") {
  // sqrt(8) = 2 sqrt(2)
  CHECK(ExactVolume::make(1, 0, 8) == ExactVolume::make(2, 0, 2));
  // sqrt(9) = 3, no radical survives
  const auto v = ExactVolume::make(BigRational(1, 2), 3, 9);
  CHECK(v.coeff() == BigRational(3, 2));
  CHECK(v.sqrt_arg() == 1);
  // rational radicand: sqrt(5/8) = sqrt(10)/4
  const auto w = ExactVolume::make(1, 0, BigRational(5, 8));
  CHECK(w.coeff() == BigRational(1, 4));
  CHECK(w.sqrt_arg() == 10);
}

TEST_CASE("pow with half-integer exponents") {
  CHECK(ExactVolume::pow(2, BigRational(5, 2)) == ExactVolume::make(4, 0, 2));
  CHECK(ExactVolume::pow(2, 3) == ExactVolume::make(8));
  CHECK(ExactVolume::pow(3, BigRational(1, 2)) == ExactVolume::make(1, 0, 3));
  CHECK(ExactVolume::pow(7, 0) == ExactVolume::make(1));
}

TEST_CASE("multiplication and division") {
  const auto a = ExactVolume::make(2, 2);          // 2 pi^2
  const auto b = ExactVolume::make(3, 3, 3);       // 3 sqrt(3) pi^3
  CHECK(a * b == ExactVolume::make(6, 5, 3));
  CHECK((a * b) / b == a);
  // sqrt(2) * sqrt(6) = 2 sqrt(3)
  CHECK(ExactVolume::make(1, 0, 2) * ExactVolume::make(1, 0, 6) ==
        ExactVolume::make(2, 0, 3));
  // sqrt(2) / sqrt(6) = 1/sqrt(3) = sqrt(3)/3
  CHECK(ExactVolume::make(1, 0, 2) / ExactVolume::make(1, 0, 6) ==
        ExactVolume::make(BigRational(1, 3), 0, 3));
}

TEST_CASE("to_double") {
  const double pi = 3.14159265358979323846;
  CHECK(ExactVolume::make(2, 2).to_double() == doctest::Approx(2 * pi * pi).epsilon(1e-15));
  CHECK(ExactVolume::make(BigRational(1, 3), 9, 2).to_double() ==
        doctest::Approx(std::sqrt(2.0) * std::pow(pi, 9) / 3.0).epsilon(1e-14));
  CHECK(ExactVolume::zero().to_double() == 0.0);
}

TEST_CASE("string rendering") {
  CHECK(ExactVolume::make(2, 2).str() == "2*pi^2");
  CHECK(ExactVolume::make(1, 5, 3).str() == "sqrt(3)*pi^5");
  CHECK(ExactVolume::make(BigRational(1, 3), 9, 2).str() == "sqrt(2)*pi^9/3");
  CHECK(ExactVolume::make(BigRational(1, 6), 3).str() == "pi^3/6");
  const auto latex = ExactVolume::make(BigRational(1, 6), 3).latex();
  CHECK(latex.find("\\pi") != std::string::npos);
  CHECK(latex.find("6") != std::string::npos);
}

TEST_CASE("equality is exact on the canonical form") {
  CHECK(ExactVolume::make(0) == ExactVolume::zero());
  CHECK(ExactVolume::zero().is_zero());
  CHECK(ExactVolume::make(2, 2) != ExactVolume::make(2, 3));
  CHECK(ExactVolume::make(2, 2) != ExactVolume::make(2, 2, 2));
  CHECK(ExactVolume::make(BigRational(2, 4), 1) == ExactVolume::make(BigRational(1, 2), 1));
}

}  // TEST_SUITE
