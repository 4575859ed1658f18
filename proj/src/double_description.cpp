#include "double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace resurgia::detail {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector coords;
  Bitset tight;  // constraints (processed so far) with equality
};

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Integer evaluate(const IntVector& row, const IntVector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] != 0 && row[i] != 0) s += row[i] * y[i];
  return s;
}

}  // namespace

std::vector<IntVector> extreme_rays_over_orthant(std::size_t dim, const std::vector<IntVector>& rows,
                                                 std::size_t ray_limit) {
  const std::size_t total = dim + rows.size();
  std::vector<Ray> rays;
  rays.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Ray r{IntVector(dim, 0), Bitset(total)};
    r.coords[i] = 1;
    for (std::size_t j = 0; j < dim; ++j)
      if (j != i) r.tight.set(j);
    rays.push_back(std::move(r));
  }

  for (std::size_t c = 0; c < rows.size(); ++c) {
    const std::size_t constraint = dim + c;
    const IntVector& row = rows[c];
    std::vector<Integer> values(rays.size());
    std::vector<std::size_t> pos, zero, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      values[r] = evaluate(row, rays[r].coords);
      int s = sgn(values[r]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
    }
    for (auto r : zero) rays[r].tight.set(constraint);
    if (neg.empty()) continue;

    std::vector<Ray> next;
    next.reserve(pos.size() + zero.size());
    for (auto r : pos) next.push_back(rays[r]);
    for (auto r : zero) next.push_back(rays[r]);

    for (auto p : pos) {
      for (auto q : neg) {
        Bitset common = rays[p].tight & rays[q].tight;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        // values[p] > 0 > values[q]; the combination vanishes on the new row.
        Integer wp = -values[q];
        const Integer& wq = values[p];
        Ray fresh{IntVector(dim), common};
        for (std::size_t i = 0; i < dim; ++i) fresh.coords[i] = wp * rays[p].coords[i] + wq * rays[q].coords[i];
        make_primitive(fresh.coords);
        fresh.tight.set(constraint);
        next.push_back(std::move(fresh));
        if (next.size() > ray_limit)
          throw BudgetExceeded("double description exceeded " + std::to_string(ray_limit) + " rays");
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.coords));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace resurgia::detail
