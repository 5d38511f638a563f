#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>

#include "abext/abelian_group.hpp"

namespace abext {

  //! A finite set of isomorphism classes. Iteration is by order, then by
  //! canonical string, independent of insertion order.
  class GroupSet {
    struct Key {
      Order       order;
      std::string text;
      auto        operator<=>(Key const&) const = default;
    };
    using container = std::map<Key, AbelianGroup>;

   public:
    class const_iterator {
     public:
      using value_type        = AbelianGroup;
      using difference_type   = std::ptrdiff_t;
      using reference         = AbelianGroup const&;
      using pointer           = AbelianGroup const*;
      using iterator_category = std::bidirectional_iterator_tag;

      const_iterator() = default;
      explicit const_iterator(container::const_iterator it) : _it(it) {}

      reference operator*() const {
        return _it->second;
      }
      pointer operator->() const {
        return &_it->second;
      }
      const_iterator& operator++() {
        ++_it;
        return *this;
      }
      const_iterator operator++(int) {
        auto tmp = *this;
        ++_it;
        return tmp;
      }
      const_iterator& operator--() {
        --_it;
        return *this;
      }
      const_iterator operator--(int) {
        auto tmp = *this;
        --_it;
        return tmp;
      }
      bool operator==(const_iterator const&) const = default;

     private:
      container::const_iterator _it;
    };

    GroupSet() = default;
    GroupSet(std::initializer_list<AbelianGroup> groups);

    //! Returns false if an isomorphic group was already present.
    bool insert(AbelianGroup g);
    void merge(GroupSet const& other);

    [[nodiscard]] bool        contains(AbelianGroup const& g) const;
    [[nodiscard]] std::size_t size() const noexcept {
      return _members.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _members.empty();
    }

    [[nodiscard]] const_iterator begin() const {
      return const_iterator(_members.begin());
    }
    [[nodiscard]] const_iterator end() const {
      return const_iterator(_members.end());
    }

    friend bool operator==(GroupSet const& a, GroupSet const& b) {
      return a._members == b._members;
    }

   private:
    static Key key_of(AbelianGroup const& g);
    container  _members;
  };

  //! Whether 0 -> H -> G -> K -> 0 can be exact: for every prime the
  //! Littlewood-Richardson coefficient c^{G_p}_{H_p, K_p} is positive.
  bool is_extension(AbelianGroup const& g,
                    AbelianGroup const& h,
                    AbelianGroup const& k);

  //! Every abelian extension of K by H, up to isomorphism: the cartesian
  //! product over primes of the supports of lr_expand(H_p, K_p).
  GroupSet extension_set(AbelianGroup const& h, AbelianGroup const& k);

  //! A x B. Throws InvalidInput on an empty operand.
  GroupSet set_product(GroupSet const& a, GroupSet const& b);

  //! A . B, the union of extension_set over all pairs. Throws InvalidInput on
  //! an empty operand.
  GroupSet set_extension(GroupSet const& a, GroupSet const& b);

  //! A + B.
  GroupSet set_union(GroupSet const& a, GroupSet const& b);

  //! Members of a not in b.
  GroupSet set_difference(GroupSet const& a, GroupSet const& b);

}  // namespace abext
