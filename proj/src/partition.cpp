#include "slit/partition.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace slit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
      throw DomainError("partition parts must be weakly decreasing and nonnegative");
    }
  }
}

Partition Partition::rectangle(int count, int part) {
  if (count < 0 || part < 0) {
    throw DomainError("rectangle partition needs nonnegative dimensions");
  }
  return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

std::size_t Partition::nonzero_length() const {
  std::size_t n = parts_.size();
  while (n > 0 && parts_[n - 1] == 0) --n;
  return n;
}

int Partition::sum() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::trimmed() const {
  return Partition(std::vector<int>(parts_.begin(), parts_.begin() + nonzero_length()));
}

Partition Partition::padded(std::size_t len) const {
  std::vector<int> out(parts_);
  while (out.size() < len) out.push_back(0);
  return Partition(std::move(out));
}

Partition Partition::appended(int part) const {
  std::vector<int> out(parts_);
  out.push_back(part);
  return Partition(std::move(out));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(first_part()));
  for (int j = 1; j <= first_part(); ++j) {
    int count = 0;
    for (int p : parts_) {
      if (p >= j) ++count;
    }
    out.push_back(count);
  }
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
  const std::size_t len = std::max(length(), inner.length());
  for (std::size_t i = 0; i < len; ++i) {
    if (part(i) < inner.part(i)) return false;
  }
  return true;
}

bool operator==(const Partition& a, const Partition& b) {
  const std::size_t na = a.nonzero_length();
  if (na != b.nonzero_length()) return false;
  return std::equal(a.parts_.begin(), a.parts_.begin() + na, b.parts_.begin());
}

bool operator<(const Partition& a, const Partition& b) {
  const std::size_t na = a.nonzero_length();
  const std::size_t nb = b.nonzero_length();
  return std::lexicographical_compare(a.parts_.begin(), a.parts_.begin() + na,
                                      b.parts_.begin(), b.parts_.begin() + nb);
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  const std::size_t n = nonzero_length();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) {
    throw DomainError("skew shape: inner partition does not fit inside outer");
  }
}

bool SkewShape::is_horizontal_strip() const {
  for (std::size_t i = 0; i + 1 < outer_.length(); ++i) {
    if (outer_.part(i + 1) > inner_.part(i)) return false;
  }
  return true;
}

std::string SkewShape::str() const { return outer_.str() + "/" + inner_.str(); }

namespace {

void pieri_rec(const Partition& lambda, std::size_t row, int remaining,
               std::vector<int>& mu, std::vector<Partition>& out) {
  if (row == lambda.length()) {
    if (remaining == 0) {
      out.push_back(Partition(mu).trimmed());
    }
    return;
  }
  const int hi = lambda.part(row);
  const int lo = lambda.part(row + 1);  // strip condition: mu[row] >= lambda[row+1]
  for (int m = hi; m >= lo; --m) {
    if (hi - m > remaining) break;
    mu.push_back(m);
    pieri_rec(lambda, row + 1, remaining - (hi - m), mu, out);
    mu.pop_back();
  }
}

}  // namespace

std::vector<Partition> pieri_expand(const Partition& lambda, int strip_size) {
  if (strip_size < 0) {
    throw DomainError("pieri_expand: negative strip size");
  }
  std::vector<Partition> out;
  std::vector<int> mu;
  mu.reserve(lambda.length());
  pieri_rec(lambda, 0, strip_size, mu, out);
  return out;
}

std::vector<Partition> strip_removal_shapes(int w, int alpha, int beta, int u, int v) {
  if (alpha < 1 || beta < 1 || w < 1) {
    throw DomainError("strip_removal_shapes: need alpha, beta, w >= 1");
  }
  if (u < 0 || u > w || v < 0 || v > w) {
    throw DomainError("strip_removal_shapes: heights must lie in [0, w]");
  }
  const int drop_top = std::max(v - u, 0);   // (v-u)_+
  const int keep_bottom = std::max(u - v, 0);  // (u-v)_+
  const int r = std::min(std::min(u, v), std::min(w - u, w - v));
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(r) + 1);
  for (int l = 0; l <= r; ++l) {
    std::vector<int> parts(static_cast<std::size_t>(alpha - 1), w);
    parts.push_back(w - drop_top - l);
    parts.push_back(keep_bottom + l);
    parts.insert(parts.end(), static_cast<std::size_t>(beta - 1), 0);
    out.push_back(Partition(std::move(parts)));
  }
  return out;
}

}  // namespace slit
