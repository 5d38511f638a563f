#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abext {

  //! A Young diagram: a weakly decreasing sequence of positive integers.
  //!
  //! This is also the *type* of a finite abelian p-group: the partition
  //! [n_1, ..., n_r] stands for Z/p^{n_1} x ... x Z/p^{n_r}.
  //!
  //! Zeros are stripped and parts sorted at construction, so two equal
  //! partitions always have identical storage. Following the usual
  //! combinatorics convention, size() is the number of boxes and length() the
  //! number of rows.
  //!
  //! The ordering is descending lexicographic with shorter-first tie-break,
  //! so that iterating a std::set<Partition> lists [3,2] before [3,1,1]
  //! before [2,2,1].
  class Partition {
   public:
    using part_type = int;

    Partition() = default;

    //! Canonicalizes: zeros removed, parts sorted descending.
    //! Throws InvalidInput on a negative entry.
    explicit Partition(std::span<const long long> raw);
    Partition(std::initializer_list<int> raw);

    [[nodiscard]] std::vector<part_type> const& parts() const noexcept {
      return _parts;
    }

    //! Number of rows.
    [[nodiscard]] std::size_t length() const noexcept {
      return _parts.size();
    }

    //! Number of boxes, the sum of the parts.
    [[nodiscard]] std::size_t size() const noexcept;

    [[nodiscard]] bool empty() const noexcept {
      return _parts.empty();
    }

    //! Row i, or 0 beyond the last row.
    [[nodiscard]] part_type operator[](std::size_t i) const noexcept {
      return i < _parts.size() ? _parts[i] : 0;
    }

    [[nodiscard]] Partition conjugate() const;

    friend bool operator==(Partition const&, Partition const&) = default;
    friend std::strong_ordering operator<=>(Partition const& a,
                                            Partition const& b);

   private:
    std::vector<part_type> _parts;
  };

  //! Canonical constructor from arbitrary nonnegative integers.
  Partition make_partition(std::span<const long long> raw);

  //! True iff inner fits inside outer row by row (the skew shape outer/inner
  //! exists).
  bool contains(Partition const& outer, Partition const& inner);

  //! Multiset union of parts; the type of a direct product of p-groups.
  Partition union_merge(Partition const& a, Partition const& b);

  //! Row-wise sum, missing rows read as 0.
  Partition componentwise_sum(Partition const& a, Partition const& b);

  //! All partitions of n, in Partition ordering.
  std::vector<Partition> partitions_of(std::size_t n);

  //! "[3,3,2,1]"; the empty partition is "[]".
  std::string to_string(Partition const& p);
  std::ostream& operator<<(std::ostream& os, Partition const& p);

  //! Inverse of to_string. Brackets are optional, whitespace is ignored, zero
  //! entries are allowed and stripped.
  Partition parse_partition(std::string_view text);

  struct PartitionHash {
    std::size_t operator()(Partition const& p) const noexcept;
  };

}  // namespace abext
