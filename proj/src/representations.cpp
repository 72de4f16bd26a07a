#include "kzeck/representations.hpp"

#include <algorithm>
#include <sstream>

#include "kzeck/errors.hpp"
#include "kzeck/scalar_greedy.hpp"

namespace kzeck {

IndexSet::IndexSet(std::vector<long> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (!indices_.empty() && indices_.front() < 1) {
    throw ValidationError("representation indices must be >= 1");
  }
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw ValidationError("representation indices must be distinct");
  }
}

bool IndexSet::contains(long i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) os << ',';
    os << indices_[i];
  }
  os << '}';
  return os.str();
}

CoefficientVector::CoefficientVector(std::initializer_list<std::pair<const long, long>> init) {
  for (const auto& [i, c] : init) add(i, c);
}

CoefficientVector::CoefficientVector(const IndexSet& s) {
  for (long i : s.indices()) coeffs_[i] = 1;
}

long CoefficientVector::get(long i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? 0 : it->second;
}

void CoefficientVector::add(long i, long delta) {
  if (i < 1) throw ValidationError("coefficient index must be >= 1");
  long& c = coeffs_[i];
  c += delta;
  if (c < 0) throw ValidationError("coefficients must stay nonnegative");
  if (c == 0) coeffs_.erase(i);
}

long CoefficientVector::total() const {
  long t = 0;
  for (const auto& [i, c] : coeffs_) t += c;
  return t;
}

IndexSet CoefficientVector::to_index_set() const {
  std::vector<long> out;
  out.reserve(coeffs_.size());
  for (const auto& [i, c] : coeffs_) {
    if (c != 1) throw ValidationError("coefficient vector is not 0/1-valued");
    out.push_back(i);
  }
  return IndexSet(std::move(out));
}

bool is_satisfying(std::span<const long> indices, int k) {
  long run = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1) return false;
    if (i > 0 && indices[i] <= indices[i - 1]) return false;
    run = (i > 0 && indices[i] == indices[i - 1] + 1) ? run + 1 : 1;
    if (run >= k) return false;
  }
  return true;
}

bool is_satisfying(const IndexSet& s, int k) { return is_satisfying(std::span<const long>(s.indices()), k); }

bool is_nsr(const CoefficientVector& c, int k) {
  long run = 0;
  long prev = 0;
  bool run_has_two = false;
  int runs_with_two = 0;
  for (const auto& [i, coeff] : c.coeffs()) {
    if (coeff > 2) return false;
    if (run > 0 && i == prev + 1) {
      ++run;
    } else {
      run = 1;
      run_has_two = false;
    }
    if (run >= k) return false;
    if (coeff == 2 && !run_has_two) {
      run_has_two = true;
      ++runs_with_two;
    }
    prev = i;
  }
  return runs_with_two <= 1;
}

VecZ evaluate_vector(const KBonacciContext& ctx, const IndexSet& s) {
  VecZ sum(ctx.dim());
  for (long i : s.indices()) {
    sum += ctx.vector(i);
    ctx.count_ops(ctx.dim());
  }
  return sum;
}

VecZ evaluate_coefficients(const KBonacciContext& ctx, const CoefficientVector& c) {
  VecZ sum(ctx.dim());
  const VecZ* x = nullptr;
  for (const auto& [i, coeff] : c.coeffs()) {
    x = &ctx.vector(i);
    for (std::size_t d = 0; d < ctx.dim(); ++d) sum[d] += coeff * (*x)[d];
    ctx.count_ops(ctx.dim());
  }
  return sum;
}

long max_index_J(const IndexSet& s) { return s.empty() ? 0 : s.indices().back(); }

BigInt project_Sn(const KBonacciContext& ctx, const VecZ& v, long n) {
  ctx.check_dim(v);
  const int k = ctx.k();
  if (n < k - 2) throw IndexOutOfDomain("S_n requires n >= k-2");
  const BigInt& modulus = ctx.number(n);
  if (modulus == 0) throw IndexOutOfDomain("S_n is undefined where x_n = 0");
  BigInt dot = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    dot += v[i] * ctx.number(n - 1 - static_cast<long>(i));
  }
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), dot.get_mpz_t(), modulus.get_mpz_t());
  ctx.count_ops(v.dim() + 1);
  return r;
}

BigInt sr_to_integer_f(const KBonacciContext& ctx, const IndexSet& s) {
  if (!is_satisfying(s, ctx.k())) throw NotSatisfying("f is defined on satisfying representations only");
  BigInt total = 0;
  for (long i : s.indices()) total += ctx.number(i + 1);
  return total;
}

IndexSet integer_to_sr_f_inverse(const KBonacciContext& ctx, const BigInt& m) {
  ScalarIndexSet scalar = greedy_decompose(ctx, m);
  std::vector<long> shifted;
  shifted.reserve(scalar.indices.size());
  for (long l : scalar.indices) shifted.push_back(l - 1);
  return IndexSet(std::move(shifted));
}

void to_json(nlohmann::json& j, const IndexSet& s) { j = s.indices(); }

void from_json(const nlohmann::json& j, IndexSet& s) { s = IndexSet(j.get<std::vector<long>>()); }

}  // namespace kzeck
