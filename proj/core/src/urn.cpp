#include "chordstat/urn.hpp"

#include <stdexcept>
#include <string>

namespace chordstat::urn {
namespace {

void apply_rule(UrnState& s, std::uint32_t type) {
  auto grow = [&](std::size_t t) {
    if (s.counts.size() <= t) s.counts.resize(t + 1, 0);
  };
  if (type == 0) {
    grow(2);
    ++s.counts[2];
  } else {
    if (s.count(type) == 0) {
      throw std::invalid_argument("urn: no ball of type " + std::to_string(type));
    }
    grow(type + 1);
    --s.counts[type];
    ++s.counts[1];
    ++s.counts[type + 1];
  }
  ++s.draws;
}

// Polynomial product, lowest degree first.
std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<BigInt> product_form(std::size_t M, std::size_t first_j) {
  if (M < 2) throw std::invalid_argument("characteristic polynomial: M must be at least 2");
  std::vector<BigInt> p{0, 1};                  // x
  p = multiply(p, {BigInt(-2), BigInt(1)});     // x - 2
  for (std::size_t j = first_j; j < M; ++j) p = multiply(p, {BigInt(static_cast<long>(j)), BigInt(1)});
  if (M % 2 == 0) {
    for (auto& c : p) c = -c;
  }
  return p;
}

}  // namespace

StepResult urn_step(UrnState state, RngStream& rng) {
  std::uint64_t r = rng.uniform(state.total_weight());
  std::uint32_t drawn = 0;
  if (r != state.total_weight() - 1) {
    for (std::size_t t = 1; t < state.counts.size(); ++t) {
      const std::uint64_t w = t * state.counts[t];
      if (r < w) {
        drawn = static_cast<std::uint32_t>(t);
        break;
      }
      r -= w;
    }
  }
  apply_rule(state, drawn);
  return {std::move(state), drawn};
}

Urn::Urn() : weights_(16) {}

void Urn::bump(std::size_t type, std::int64_t delta) {
  if (type >= weights_.size()) weights_.resize(2 * (type + 1));
  weights_.add(type, delta * static_cast<std::int64_t>(type));
}

void Urn::apply(std::uint32_t type) {
  apply_rule(state_, type);
  if (type == 0) {
    bump(2, 1);
  } else {
    bump(type, -1);
    bump(1, 1);
    bump(type + 1, 1);
  }
}

std::uint32_t Urn::step(RngStream& rng) {
  const std::uint64_t total = state_.total_weight();
  const std::uint64_t r = rng.uniform(total);
  const auto type = r == total - 1 ? 0u : static_cast<std::uint32_t>(weights_.find(r));
  apply(type);
  return type;
}

UrnState urn_simulate(std::size_t n, RngStream& rng) {
  Urn urn;
  for (std::size_t k = 0; k < n; ++k) urn.step(rng);
  return urn.state();
}

ReplacementMatrix ReplacementMatrix::without_immigration() const {
  ReplacementMatrix out;
  out.truncation = truncation;
  out.dim = dim - 1;
  out.entries.resize(out.dim * out.dim);
  for (std::size_t r = 0; r < out.dim; ++r) {
    for (std::size_t c = 0; c < out.dim; ++c) out.entries[r * out.dim + c] = at(r + 1, c + 1);
  }
  return out;
}

ReplacementMatrix replacement_matrix(std::size_t M) {
  if (M < 2) throw std::invalid_argument("replacement_matrix: M must be at least 2");
  ReplacementMatrix a;
  a.truncation = M;
  a.dim = M + 1;
  a.entries.assign(a.dim * a.dim, 0);
  auto cell = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a.entries[r * a.dim + c]; };
  cell(2, 0) = 2;
  for (std::size_t i = 1; i < M; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    cell(1, i) += 1;
    cell(i, i) -= ii;
    cell(i + 1, i) += ii + 1;
  }
  cell(1, M) += 1;
  cell(M, M) += 1;
  return a;
}

std::vector<BigInt> char_poly(const ReplacementMatrix& a) {
  const std::size_t n = a.dim;
  using Matrix = std::vector<BigInt>;
  auto mul = [n](const Matrix& x, const Matrix& y) {
    Matrix z(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(x[i * n + k]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) z[i * n + j] += x[i * n + k] * y[k * n + j];
      }
    }
    return z;
  };
  Matrix am(n * n);
  for (std::size_t i = 0; i < n * n; ++i) am[i] = BigInt(static_cast<long>(a.entries[i]));

  // c[k]: coefficient of x^k in det(x I - A).
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  Matrix m(n * n, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = mul(am, m);
    for (std::size_t i = 0; i < n; ++i) next[i * n + i] += c[n - k + 1];
    m = std::move(next);
    Matrix am_m = mul(am, m);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am_m[i * n + i];
    const BigInt kk(static_cast<unsigned long>(k));
    if (trace % kk != 0) throw std::logic_error("char_poly: inexact division");
    c[n - k] = -trace / kk;
  }
  // det(A - x I) = (-1)^n det(x I - A).
  if (n % 2 == 1) {
    for (auto& v : c) v = -v;
  }
  return c;
}

std::vector<BigInt> char_poly(std::size_t M) { return char_poly(replacement_matrix(M)); }

std::vector<BigInt> closed_form_char_poly(std::size_t M) { return product_form(M, 1); }

std::vector<BigInt> char_poly_product_from_zero(std::size_t M) { return product_form(M, 0); }

BigInt evaluate(const std::vector<BigInt>& poly, std::int64_t x) {
  BigInt acc = 0;
  const BigInt xb(static_cast<long>(x));
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * xb + *it;
  return acc;
}

std::vector<BigRational> top_eigenvector(std::size_t M) {
  if (M < 2) throw std::invalid_argument("top_eigenvector: M must be at least 2");
  std::vector<BigRational> v(M + 1, 0);
  for (std::size_t j = 1; j < M; ++j) {
    v[j] = make_rational(2, BigInt(static_cast<unsigned long>((j + 1) * (j + 2))));
  }
  v[M] = make_rational(2, BigInt(static_cast<unsigned long>(M + 1)));
  return v;
}

}  // namespace chordstat::urn
