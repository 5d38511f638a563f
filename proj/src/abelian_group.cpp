#include "abext/abelian_group.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "abext/error.hpp"

namespace abext {

  namespace {

    using u64  = std::uint64_t;
    using u128 = unsigned __int128;

    u64 mul_mod(u64 a, u64 b, u64 m) {
      return static_cast<u64>(static_cast<u128>(a) * b % m);
    }

    u64 pow_mod(u64 base, u64 exp, u64 m) {
      u64 result = 1 % m;
      base %= m;
      while (exp > 0) {
        if (exp & 1u) {
          result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1u;
      }
      return result;
    }

    // Pollard-Brent; n is odd, composite and not a perfect prime power of a
    // tiny prime (those are removed by trial division first).
    u64 find_factor(u64 n) {
      for (u64 c = 1;; ++c) {
        u64  x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
          x = f(x);
          y = f(f(y));
          d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) {
          return d;
        }
      }
    }

    void factor_rec(u64 n, std::map<Prime, int>& out) {
      if (n == 1) {
        return;
      }
      if (is_prime(n)) {
        ++out[n];
        return;
      }
      u64 d = find_factor(n);
      factor_rec(d, out);
      factor_rec(n / d, out);
    }

    std::string strip_spaces(std::string_view text) {
      std::string out;
      for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
          continue;
        }
        // U+00D7 MULTIPLICATION SIGN
        if (static_cast<unsigned char>(c) == 0xC3 && i + 1 < text.size()
            && static_cast<unsigned char>(text[i + 1]) == 0x97) {
          out += 'x';
          ++i;
          continue;
        }
        out += c;
      }
      return out;
    }

    u64 parse_uint(std::string_view token, std::string_view whole) {
      u64 value = 0;
      auto [ptr, ec]
          = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc()
          || ptr != token.data() + token.size()) {
        throw SyntaxError("expected a positive integer, found '"
                          + std::string(token) + "' in '" + std::string(whole)
                          + "'");
      }
      return value;
    }

    AbelianGroup parse_factor(std::string_view factor, std::string_view whole) {
      std::string_view base = factor;
      u64              reps = 1;
      if (auto caret = factor.rfind('^'); caret != std::string_view::npos) {
        base = factor.substr(0, caret);
        reps = parse_uint(factor.substr(caret + 1), whole);
        if (reps == 0) {
          throw SyntaxError("repetition count must be at least 1 in '"
                            + std::string(whole) + "'");
        }
      }
      if (base.size() >= 2 && base.front() == '(' && base.back() == ')') {
        base = base.substr(1, base.size() - 2);
      }
      u64 modulus = 0;
      if (base == "1") {
        modulus = 1;
      } else if (base.starts_with("Z/")) {
        modulus = parse_uint(base.substr(2), whole);
      } else if (base.starts_with("C")) {
        modulus = parse_uint(base.substr(1), whole);
      } else {
        throw SyntaxError("unrecognized factor '" + std::string(factor)
                          + "' in '" + std::string(whole) + "'");
      }
      if (modulus == 0) {
        throw InvalidInput("zero modulus in '" + std::string(whole) + "'");
      }
      auto one = AbelianGroup::cyclic(modulus);
      if (one.is_trivial()) {
        return one;
      }
      AbelianGroup::type_map types;
      for (auto const& [p, type] : one.types()) {
        std::vector<long long> raw(static_cast<std::size_t>(reps), type[0]);
        types.emplace(p, Partition(raw));
      }
      return AbelianGroup(std::move(types));
    }

  }  // namespace

  std::string to_string(Order value) {
    if (value == 0) {
      return "0";
    }
    std::string digits;
    while (value > 0) {
      digits += static_cast<char>('0' + static_cast<int>(value % 10));
      value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  bool is_prime(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
      if (n % p == 0) {
        return n == p;
      }
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
      d >>= 1u;
      ++s;
    }
    // deterministic witness set for 64-bit inputs
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
      u64 x = pow_mod(a, d, n);
      if (x == 1 || x == n - 1) {
        continue;
      }
      bool composite = true;
      for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) {
          composite = false;
          break;
        }
      }
      if (composite) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::pair<Prime, int>> factorize(std::uint64_t n) {
    if (n == 0) {
      throw InvalidInput("cannot factorize 0");
    }
    std::map<Prime, int> found;
    for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
      while (n % p == 0) {
        ++found[p];
        n /= p;
      }
    }
    factor_rec(n, found);
    return {found.begin(), found.end()};
  }

  Order checked_mul(Order a, Order b) {
    if (a != 0 && b > std::numeric_limits<Order>::max() / a) {
      throw OverflowError("group order exceeds 128 bits");
    }
    return a * b;
  }

  Order checked_pow(Order base, std::size_t exponent) {
    Order result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
      result = checked_mul(result, base);
    }
    return result;
  }

  AbelianGroup::AbelianGroup(type_map types) {
    for (auto& [p, type] : types) {
      if (!is_prime(p)) {
        throw InvalidInput("type key " + std::to_string(p) + " is not prime");
      }
      if (!type.empty()) {
        _types.emplace(p, std::move(type));
      }
    }
  }

  AbelianGroup AbelianGroup::cyclic(std::uint64_t n) {
    if (n == 0) {
      throw InvalidInput("zero modulus");
    }
    AbelianGroup g;
    for (auto [p, e] : factorize(n)) {
      g._types.emplace(p, Partition{e});
    }
    return g;
  }

  AbelianGroup AbelianGroup::p_group(Prime p, Partition type) {
    return AbelianGroup(type_map{{p, std::move(type)}});
  }

  Partition AbelianGroup::p_part(Prime p) const {
    if (!is_prime(p)) {
      throw InvalidInput(std::to_string(p) + " is not prime");
    }
    auto it = _types.find(p);
    return it == _types.end() ? Partition() : it->second;
  }

  std::size_t AbelianGroup::rank() const noexcept {
    std::size_t r = 0;
    for (auto const& [p, type] : _types) {
      r = std::max(r, type.length());
    }
    return r;
  }

  Order AbelianGroup::order() const {
    Order result = 1;
    for (auto const& [p, type] : _types) {
      result = checked_mul(result, checked_pow(p, type.size()));
    }
    return result;
  }

  std::vector<Order> AbelianGroup::invariant_factors() const {
    std::vector<Order> factors(rank(), 1);
    for (auto const& [p, type] : _types) {
      for (std::size_t i = 0; i < type.length(); ++i) {
        factors[i] = checked_mul(
            factors[i], checked_pow(p, static_cast<std::size_t>(type[i])));
      }
    }
    return factors;
  }

  AbelianGroup parse_group(std::string_view text) {
    auto const compact = strip_spaces(text);
    if (compact.empty()) {
      throw SyntaxError("empty group description");
    }
    if (compact == "1") {
      return AbelianGroup();
    }
    AbelianGroup     result;
    std::string_view rest = compact;
    while (true) {
      auto const sep    = rest.find_first_of("x*");
      auto const factor = rest.substr(0, sep);
      if (factor.empty()) {
        throw SyntaxError("empty factor in '" + std::string(text) + "'");
      }
      result = direct_product(result, parse_factor(factor, text));
      if (sep == std::string_view::npos) {
        break;
      }
      rest.remove_prefix(sep + 1);
    }
    return result;
  }

  std::string format_group(AbelianGroup const& g) {
    auto const factors = g.invariant_factors();
    if (factors.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < factors.size();) {
      std::size_t j = i;
      while (j < factors.size() && factors[j] == factors[i]) {
        ++j;
      }
      if (!out.empty()) {
        out += " x ";
      }
      out += "Z/" + to_string(factors[i]);
      if (j - i > 1) {
        out += "^" + std::to_string(j - i);
      }
      i = j;
    }
    return out;
  }

  std::ostream& operator<<(std::ostream& os, AbelianGroup const& g) {
    return os << format_group(g);
  }

  AbelianGroup direct_product(AbelianGroup const& g, AbelianGroup const& h) {
    auto types = g.types();
    for (auto const& [p, type] : h.types()) {
      auto [it, fresh] = types.try_emplace(p, type);
      if (!fresh) {
        it->second = union_merge(it->second, type);
      }
    }
    return AbelianGroup(std::move(types));
  }

  nlohmann::json to_json(AbelianGroup const& g) {
    nlohmann::json primes = nlohmann::json::object();
    for (auto const& [p, type] : g.types()) {
      primes[std::to_string(p)] = type.parts();
    }
    return nlohmann::json{{"primes", primes}};
  }

  AbelianGroup group_from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("primes") || !j["primes"].is_object()) {
      throw InvalidInput("group JSON must be an object with a 'primes' map");
    }
    AbelianGroup::type_map types;
    for (auto const& [key, value] : j["primes"].items()) {
      auto const p   = parse_uint(key, key);
      auto const raw = value.get<std::vector<long long>>();
      types.emplace(p, Partition(raw));
    }
    return AbelianGroup(std::move(types));
  }

}  // namespace abext
