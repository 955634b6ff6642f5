#pragma once

#include <gmpxx.h>

#include <string>

namespace coloop {

using Integer = mpz_class;
using Rational = mpq_class;

enum class RingKind { integers, rationals, prime_field };

// Coefficient ring for homology. All complexes are built over the integers and
// base-changed when ranks and torsion are computed.
struct RingSpec {
  RingKind kind = RingKind::integers;
  unsigned long prime = 0;

  static RingSpec integers();
  static RingSpec rationals();
  // Throws ValidationError unless p is prime.
  static RingSpec prime_field(unsigned long p);
  // Accepts "z", "q" and "zp:<p>".
  static RingSpec parse(const std::string& token);

  std::string name() const;   // "Z", "Q", "Z/7"
  std::string token() const;  // inverse of parse

  bool operator==(const RingSpec&) const = default;
};

bool is_prime(unsigned long n);

}  // namespace coloop
