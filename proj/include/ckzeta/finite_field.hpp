#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ckzeta/numeric.hpp"

namespace ckzeta {

// Largest field size enumerate_field will walk by default.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1ull << 20;

// Element of F_{p^m}: residue coordinates (c_0, ..., c_{m-1}) with respect
// to the power basis of the field's modulus, each in [0, p).
class FieldElement {
 public:
  FieldElement() = default;
  const std::vector<std::uint64_t>& coords() const { return c_; }
  bool operator==(const FieldElement& o) const = default;

 private:
  friend class Field;
  explicit FieldElement(std::vector<std::uint64_t> c) : c_(std::move(c)) {}
  std::vector<std::uint64_t> c_;
};

// F_p or F_{p^m} as F_p[t] modulo a monic irreducible of degree m.  All
// element operations take the field explicitly.
class Field {
 public:
  static Field prime_field(std::uint64_t p);
  // Modulus chosen deterministically: the first monic irreducible of
  // degree m in the base-p encoding order sum(c_i p^i).
  static Field extension(std::uint64_t p, unsigned degree);
  // "Fp:5" or "Fq:3^2".
  static Field parse(const std::string& spec);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  // Monic, ascending coefficients, length degree() + 1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  Int size() const;
  std::string spec_string() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(const Int& n) const;
  // Coordinates are reduced mod p and padded; more than degree() of them
  // is an error.
  FieldElement element(const std::vector<Int>& coords) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  // Throws domain_error on zero.
  FieldElement inv(const FieldElement& a) const;
  // e >= 0.
  FieldElement pow(const FieldElement& a, const Int& e) const;

  bool is_zero(const FieldElement& a) const;

  // Rank of an element in enumeration order, sum(c_i p^i).
  std::uint64_t index_of(const FieldElement& a) const;
  FieldElement element_at(std::uint64_t index) const;

  std::string to_string(const FieldElement& a) const;

  bool operator==(const Field& o) const = default;

 private:
  Field(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus)
      : p_(p), m_(m), modulus_(std::move(modulus)) {}
  void check_element(const FieldElement& a) const;

  std::uint64_t p_ = 0;
  unsigned m_ = 0;
  std::vector<std::uint64_t> modulus_;
};

// Forward range over all elements of f in index order.  Throws
// budget_exceeded when the field has more than `budget` elements.  The
// field must outlive the range.
class FieldEnumeration {
 public:
  class iterator {
   public:
    using value_type = FieldElement;
    using difference_type = std::int64_t;

    iterator() = default;
    iterator(const Field* f, std::uint64_t i) : f_(f), i_(i) {}
    FieldElement operator*() const { return f_->element_at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++i_;
      return t;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const Field* f_ = nullptr;
    std::uint64_t i_ = 0;
  };

  FieldEnumeration(const Field& f, std::uint64_t count) : f_(&f), n_(count) {}
  iterator begin() const { return {f_, 0}; }
  iterator end() const { return {f_, n_}; }
  std::uint64_t size() const { return n_; }

 private:
  const Field* f_;
  std::uint64_t n_;
};

FieldEnumeration enumerate_field(
    const Field& f, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace ckzeta
