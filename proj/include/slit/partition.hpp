#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slit/errors.hpp"

namespace slit {

// Weakly decreasing sequence of nonnegative integers. Trailing zero parts are
// kept as constructed (shapes are often padded to a fixed number of parts);
// equality compares the zero-trimmed sequences.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws DomainError if not weakly decreasing

  // count copies of part (part may be zero).
  static Partition rectangle(int count, int part);

  const std::vector<int>& parts() const { return parts_; }
  int part(std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }
  std::size_t length() const { return parts_.size(); }
  std::size_t nonzero_length() const;
  int first_part() const { return part(0); }
  int sum() const;
  bool empty() const { return nonzero_length() == 0; }

  Partition trimmed() const;
  Partition padded(std::size_t len) const;  // extend with zero parts
  Partition appended(int part) const;       // throws DomainError if order breaks

  // Conjugate (transposed diagram), returned without trailing zeros.
  Partition conjugate() const;

  bool contains(const Partition& inner) const;  // part-wise, after padding

  friend bool operator==(const Partition& a, const Partition& b);
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b);  // lex on trimmed parts

  std::string str() const;  // "(3,1)"; "()" for empty
  friend std::ostream& operator<<(std::ostream& os, const Partition& p);

 private:
  std::vector<int> parts_;
};

// Nested pair of partitions outer/inner.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);  // throws DomainError unless inner fits in outer

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  int cell_count() const { return outer_.sum() - inner_.sum(); }

  // True iff no column holds two cells, i.e. outer[i+1] <= inner[i] for all i.
  bool is_horizontal_strip() const;

  std::string str() const;  // "(3,1)/(2)"

 private:
  Partition outer_;
  Partition inner_;
};

// All mu contained in lambda with |lambda| - |mu| = strip_size and
// lambda/mu a horizontal strip, by brute-force enumeration, in
// lexicographically decreasing order. Results are zero-trimmed.
std::vector<Partition> pieri_expand(const Partition& lambda, int strip_size);

// Closed-form list of the shapes left after removing a horizontal strip of
// size v from (w^alpha, u, 0^(beta-1)): the r+1 partitions
// (w^(alpha-1), w-(v-u)_+ - l, (u-v)_+ + l, 0^(beta-1)) for l = 0..r with
// r = min(u, v, w-u, w-v). Kept independent of pieri_expand so the two can
// cross-check each other. Throws DomainError on invalid parameters.
std::vector<Partition> strip_removal_shapes(int w, int alpha, int beta, int u, int v);

}  // namespace slit
