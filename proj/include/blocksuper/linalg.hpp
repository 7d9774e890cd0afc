#pragma once

// Exact row reduction over Q(sqrt2) with construction certificates.

#include <blocksuper/algebra.hpp>
#include <blocksuper/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace blocksuper {

using CoordVector = std::vector<Scalar>;

inline bool is_zero_coords(const CoordVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

/// How a vector was produced: the operator word applied (front first) to a seed.
struct Generator {
  std::size_t seed = 0;
  std::vector<BasisKey> word;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Reduced row echelon basis of a subspace of a fixed coordinate space.
/// Each row is tracked as a combination of the independent generators that
/// were inserted, so it can be replayed from seeds and operator words.
class SubspaceBasis {
 public:
  struct Row {
    CoordVector coords;
    CoordVector combo;  // coefficients over generators(); shorter means trailing zeros
    std::size_t pivot = 0;
  };

  explicit SubspaceBasis(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<Generator>& generators() const { return generators_; }

  /// Gaussian elimination insert. Returns true iff v was independent of the
  /// current rows; only then is the generator recorded.
  bool insert(CoordVector v, Generator g) {
    require_dim(v);
    CoordVector combo(generators_.size() + 1);
    combo.back() = Scalar(1);
    reduce(v, &combo);
    auto nz = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (nz == v.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(nz - v.begin());
    const Scalar inv = v[pivot].inverse();
    for (auto& s : v) s *= inv;
    for (auto& s : combo) s *= inv;
    for (auto& row : rows_) {
      const Scalar c = row.coords[pivot];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        if (!v[k].is_zero()) row.coords[k] -= c * v[k];
      row.combo.resize(combo.size());
      for (std::size_t k = 0; k < combo.size(); ++k)
        if (!combo[k].is_zero()) row.combo[k] -= c * combo[k];
    }
    generators_.push_back(std::move(g));
    Row fresh{std::move(v), std::move(combo), pivot};
    auto at = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                               [](const Row& r, std::size_t p) { return r.pivot < p; });
    rows_.insert(at, std::move(fresh));
    return true;
  }

  bool contains(CoordVector v) const {
    require_dim(v);
    reduce(v, nullptr);
    return is_zero_coords(v);
  }

  /// Row k as a combination of generators: (coefficient, generator) pairs.
  std::vector<std::pair<Scalar, Generator>> certificate(std::size_t k) const {
    std::vector<std::pair<Scalar, Generator>> out;
    const Row& row = rows_.at(k);
    for (std::size_t g = 0; g < row.combo.size(); ++g)
      if (!row.combo[g].is_zero()) out.emplace_back(row.combo[g], generators_[g]);
    return out;
  }

 private:
  void require_dim(const CoordVector& v) const {
    if (v.size() != dim_) throw usage_error("coordinate vector has the wrong dimension");
  }

  void reduce(CoordVector& v, CoordVector* combo) const {
    for (const auto& row : rows_) {
      const Scalar c = v[row.pivot];
      if (c.is_zero()) continue;
      for (std::size_t k = row.pivot; k < dim_; ++k)
        if (!row.coords[k].is_zero()) v[k] -= c * row.coords[k];
      if (combo) {
        if (combo->size() < row.combo.size()) combo->resize(row.combo.size());
        for (std::size_t k = 0; k < row.combo.size(); ++k)
          if (!row.combo[k].is_zero()) (*combo)[k] -= c * row.combo[k];
      }
    }
  }

  std::size_t dim_;
  std::vector<Row> rows_;
  std::vector<Generator> generators_;
};

/// Rank of a list of coordinate vectors.
inline std::size_t rank_of(const std::vector<CoordVector>& vectors, std::size_t dim) {
  SubspaceBasis b(dim);
  for (const auto& v : vectors) b.insert(v, Generator{});
  return b.rank();
}

}  // namespace blocksuper
