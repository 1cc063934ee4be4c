#pragma once

namespace frobnil {

/// Z/2 parity. Addition is mod 2 with `even` as identity.
enum class Parity : unsigned char { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned char>(a) ^
                             static_cast<unsigned char>(b));
}

constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }

constexpr bool is_odd(Parity p) { return p == Parity::odd; }

constexpr unsigned parity_bit(Parity p) { return is_odd(p) ? 1u : 0u; }

/// (-1)^e
constexpr int pow_sign(unsigned long long e) { return (e & 1ull) ? -1 : 1; }

constexpr const char* parity_name(Parity p) { return is_odd(p) ? "odd" : "even"; }

}  // namespace frobnil
