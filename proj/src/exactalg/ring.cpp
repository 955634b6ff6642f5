#include "coloop/exactalg/ring.hpp"

#include <charconv>

#include "coloop/errors.hpp"

namespace coloop {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

RingSpec RingSpec::integers() { return {RingKind::integers, 0}; }

RingSpec RingSpec::rationals() { return {RingKind::rationals, 0}; }

RingSpec RingSpec::prime_field(unsigned long p) {
  if (!is_prime(p)) throw ValidationError("ring: " + std::to_string(p) + " is not prime");
  if (p > 0xffffffffUL) throw ValidationError("ring: prime must be below 2^32");
  return {RingKind::prime_field, p};
}

RingSpec RingSpec::parse(const std::string& token) {
  if (token == "z" || token == "Z") return integers();
  if (token == "q" || token == "Q") return rationals();
  if (token.rfind("zp:", 0) == 0) {
    unsigned long p = 0;
    const char* first = token.data() + 3;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || first == last)
      throw ValidationError("ring: cannot parse prime in '" + token + "'");
    return prime_field(p);
  }
  throw ValidationError("ring: expected z, q or zp:<p>, got '" + token + "'");
}

std::string RingSpec::name() const {
  switch (kind) {
    case RingKind::integers: return "Z";
    case RingKind::rationals: return "Q";
    case RingKind::prime_field: return "Z/" + std::to_string(prime);
  }
  return "?";
}

std::string RingSpec::token() const {
  switch (kind) {
    case RingKind::integers: return "z";
    case RingKind::rationals: return "q";
    case RingKind::prime_field: return "zp:" + std::to_string(prime);
  }
  return "?";
}

}  // namespace coloop
