#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace polynt {

struct GowersOptions {
  /// Cap on M^s, the number of inner-loop multiplications.
  double budget = 5e9;
  unsigned workers = 1;
  /// Sum the per-h_1 terms left to right; otherwise a pairwise tree.
  bool deterministic_reduction = true;
};

/// ||f||_{U^s(Z/MZ)} for real f given on residues 0..M-1.
///
/// Uses ||f||^{2^s} = E_{h_1..h_{s-1}} (E_n D_{h_{s-1}}...D_{h_1} f(n))^2 with
/// D_h g(n) = g(n) g(n+h), which costs M^s rather than M^{s+1}.
double gowers_norm_cyclic(std::span<const double> f, unsigned s, const GowersOptions& opts = {});

/// Least prime >= 5N.
std::uint64_t embedding_modulus(std::uint64_t N);

/// f restricted to [1, N], placed at residues 1..N of Z/MZ (zero elsewhere).
std::vector<double> embed_interval(const std::function<double(std::int64_t)>& f, std::uint64_t N,
                                   std::uint64_t M);

/// gowers_norm_cyclic of f * 1_[N] in Z/MZ with M = embedding_modulus(N).
double gowers_norm_interval(const std::function<double(std::int64_t)>& f, std::uint64_t N,
                            unsigned s, const GowersOptions& opts = {});
/// Same with an explicit modulus M > N.
double gowers_norm_interval(const std::function<double(std::int64_t)>& f, std::uint64_t N,
                            std::uint64_t M, unsigned s, const GowersOptions& opts = {});

}  // namespace polynt
