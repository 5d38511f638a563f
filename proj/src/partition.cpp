#include "abext/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <ostream>

#include "abext/error.hpp"

namespace abext {

  namespace {
    std::vector<Partition::part_type> canonical_parts(
        std::span<const long long> raw) {
      std::vector<Partition::part_type> parts;
      parts.reserve(raw.size());
      for (long long x : raw) {
        if (x < 0) {
          throw InvalidInput("partition entries must be nonnegative, found "
                             + std::to_string(x));
        }
        if (x > 0) {
          parts.push_back(static_cast<Partition::part_type>(x));
        }
      }
      std::sort(parts.begin(), parts.end(), std::greater<>());
      return parts;
    }

    void partitions_rec(std::size_t                       remaining,
                        Partition::part_type              max_part,
                        std::vector<long long>&           prefix,
                        std::vector<Partition>&           out) {
      if (remaining == 0) {
        out.emplace_back(std::span<const long long>(prefix));
        return;
      }
      auto const top = std::min<std::size_t>(remaining, max_part);
      for (auto k = static_cast<Partition::part_type>(top); k >= 1; --k) {
        prefix.push_back(k);
        partitions_rec(remaining - k, k, prefix, out);
        prefix.pop_back();
      }
    }
  }  // namespace

  Partition::Partition(std::span<const long long> raw)
      : _parts(canonical_parts(raw)) {}

  Partition::Partition(std::initializer_list<int> raw) {
    std::vector<long long> wide(raw.begin(), raw.end());
    _parts = canonical_parts(wide);
  }

  std::size_t Partition::size() const noexcept {
    return std::accumulate(_parts.begin(), _parts.end(), std::size_t{0});
  }

  Partition Partition::conjugate() const {
    Partition result;
    if (_parts.empty()) {
      return result;
    }
    result._parts.assign(static_cast<std::size_t>(_parts.front()), 0);
    for (auto row : _parts) {
      for (part_type c = 0; c < row; ++c) {
        ++result._parts[static_cast<std::size_t>(c)];
      }
    }
    return result;
  }

  std::strong_ordering operator<=>(Partition const& a, Partition const& b) {
    auto const n = std::min(a.length(), b.length());
    for (std::size_t i = 0; i < n; ++i) {
      if (a._parts[i] != b._parts[i]) {
        // larger row first
        return b._parts[i] <=> a._parts[i];
      }
    }
    return a.length() <=> b.length();
  }

  Partition make_partition(std::span<const long long> raw) {
    return Partition(raw);
  }

  bool contains(Partition const& outer, Partition const& inner) {
    if (inner.length() > outer.length()) {
      return false;
    }
    for (std::size_t i = 0; i < inner.length(); ++i) {
      if (inner[i] > outer[i]) {
        return false;
      }
    }
    return true;
  }

  Partition union_merge(Partition const& a, Partition const& b) {
    std::vector<long long> raw(a.parts().begin(), a.parts().end());
    raw.insert(raw.end(), b.parts().begin(), b.parts().end());
    return Partition(raw);
  }

  Partition componentwise_sum(Partition const& a, Partition const& b) {
    auto const n = std::max(a.length(), b.length());
    std::vector<long long> raw(n);
    for (std::size_t i = 0; i < n; ++i) {
      raw[i] = static_cast<long long>(a[i]) + b[i];
    }
    return Partition(raw);
  }

  std::vector<Partition> partitions_of(std::size_t n) {
    std::vector<Partition>  out;
    std::vector<long long> prefix;
    partitions_rec(n, static_cast<Partition::part_type>(n), prefix, out);
    return out;
  }

  std::string to_string(Partition const& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (i > 0) {
        s += ',';
      }
      s += std::to_string(p[i]);
    }
    s += ']';
    return s;
  }

  std::ostream& operator<<(std::ostream& os, Partition const& p) {
    return os << to_string(p);
  }

  Partition parse_partition(std::string_view text) {
    std::string compact;
    for (char c : text) {
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
        compact += c;
      }
    }
    std::string_view body = compact;
    if (!body.empty() && body.front() == '[') {
      if (body.back() != ']') {
        throw SyntaxError("unbalanced bracket in partition '"
                          + std::string(text) + "'");
      }
      body = body.substr(1, body.size() - 2);
    }
    std::vector<long long> raw;
    while (!body.empty()) {
      auto const comma = body.find(',');
      auto const token = body.substr(0, comma);
      long long  value = 0;
      auto [ptr, ec]   = std::from_chars(
          token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc()
          || ptr != token.data() + token.size()) {
        throw SyntaxError("bad partition entry '" + std::string(token)
                          + "' in '" + std::string(text) + "'");
      }
      raw.push_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      body.remove_prefix(comma + 1);
      if (body.empty()) {
        throw SyntaxError("trailing comma in partition '" + std::string(text)
                          + "'");
      }
    }
    return Partition(raw);
  }

  std::size_t PartitionHash::operator()(Partition const& p) const noexcept {
    std::size_t h = p.length();
    for (auto x : p.parts()) {
      h = h * 1000003u ^ static_cast<std::size_t>(x);
    }
    return h;
  }

}  // namespace abext
