#include "tolsys/opsys.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tolsys/error.hpp"

namespace tolsys {

namespace {

void check_square(const Relation &r, const CMatrix &b, const char *what) {
  const auto n = static_cast<Eigen::Index>(r.size());
  if (b.rows() != n || b.cols() != n) {
    throw DimensionError(std::string(what) + ": expected " +
                         std::to_string(n) + "x" + std::to_string(n) +
                         " matrix, got " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

} // namespace

PatternMatrix::PatternMatrix(Relation relation, CMatrix entries)
    : relation_(std::move(relation)), entries_(std::move(entries)) {
  check_square(relation_, entries_, "PatternMatrix");
  const std::size_t n = relation_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!relation_.contains(i, j) &&
          entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) !=
              Complex(0.0, 0.0)) {
        throw InvariantError("entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ") lies outside the relation");
      }
    }
  }
}

CMatrix indicator_matrix(const Relation &r) {
  const auto n = static_cast<Eigen::Index>(r.size());
  CMatrix l = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (r.contains(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) {
        l(i, j) = 1.0;
      }
    }
  }
  return l;
}

CMatrix schur_mask(const Relation &r, const CMatrix &b) {
  check_square(r, b, "schur_project");
  CMatrix out = b;
  const auto n = static_cast<Eigen::Index>(r.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!r.contains(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) {
        out(i, j) = 0.0;
      }
    }
  }
  return out;
}

CMatrix off_pattern(const Relation &r, const CMatrix &b) {
  return b - schur_mask(r, b);
}

PatternMatrix schur_project(const Relation &r, const CMatrix &b) {
  return PatternMatrix(r, schur_mask(r, b));
}

bool is_psd(const CMatrix &h, double tol) {
  if (h.rows() != h.cols()) {
    throw DimensionError("is_psd: matrix not square");
  }
  if (h.size() == 0) {
    return true;
  }
  const double scale = std::max(1.0, operator_norm(h));
  if (hermitian_defect(h) > tol * scale) {
    throw std::invalid_argument("is_psd: matrix is not hermitian");
  }
  return min_eigenvalue(h) >= -tol * scale;
}

bool is_equivalence_via_triangle(const Relation &r) {
  const std::size_t n = r.size();
  auto l = [&](std::size_t a, std::size_t b) { return r.contains(a, b) ? 1 : 0; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (l(i, j) + l(j, k) - l(i, k) > 1) {
          return false;
        }
      }
    }
  }
  return true;
}

PatternMatrix random_element(const Relation &r, Rng &rng) {
  const auto n = static_cast<Eigen::Index>(r.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (r.contains(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) {
        m(i, j) = uniform_complex(rng);
      }
    }
  }
  return PatternMatrix(r, std::move(m));
}

CMatrix random_hermitian_element(const Relation &r, Rng &rng) {
  const CMatrix a = random_element(r, rng).entries();
  return hermitian_part(a);
}

BoolMatrix support_of(const CMatrix &m, double zero) {
  const auto n = static_cast<std::size_t>(m.rows());
  BoolMatrix s(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) > zero) {
        s.set(i, j);
      }
    }
  }
  return s;
}

BoolMatrix product_span_support(const Relation &r1, const Relation &r2,
                                std::size_t trials, std::uint64_t seed) {
  if (r1.size() != r2.size()) {
    throw DimensionError("product_span_support: size mismatch");
  }
  if (trials == 0) {
    throw std::invalid_argument("product_span_support: trials must be >= 1");
  }
  Rng rng(seed);
  BoolMatrix acc(r1.size());
  for (std::size_t t = 0; t < trials; ++t) {
    const CMatrix a = random_element(r1, rng).entries();
    const CMatrix a2 = random_element(r1, rng).entries();
    const CMatrix b = random_element(r2, rng).entries();
    const CMatrix b2 = random_element(r2, rng).entries();
    acc |= support_of(a * b + b2 * a2);
  }
  return acc;
}

AlgebraDegree generated_algebra_degree(const Relation &r) {
  BoolMatrix power = r.adj();
  std::size_t k = 1;
  while (true) {
    BoolMatrix squared = compose(power, power);
    if (squared == power) {
      break;
    }
    power = compose(power, r.adj());
    ++k;
  }
  AlgebraDegree out{k, {}};
  for (const auto &c : connected_components(r)) {
    out.blocks.push_back(c.size());
  }
  return out;
}

MatrixLevelElement::MatrixLevelElement(Relation relation, std::size_t level,
                                       const std::vector<CMatrix> &blocks)
    : relation_(std::move(relation)), level_(level) {
  if (level_ == 0 || blocks.size() != level_ * level_) {
    throw DimensionError("MatrixLevelElement: need k*k blocks with k >= 1");
  }
  const auto n = static_cast<Eigen::Index>(relation_.size());
  const auto k = static_cast<Eigen::Index>(level_);
  assembled_ = CMatrix::Zero(k * n, k * n);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      const CMatrix &block = blocks[static_cast<std::size_t>(a * k + b)];
      // Validates shape and support.
      PatternMatrix checked(relation_, block);
      assembled_.block(a * n, b * n, n, n) = checked.entries();
    }
  }
}

bool level_positive(const MatrixLevelElement &e, double tol) {
  return is_psd(e.assembled(), tol);
}

} // namespace tolsys
