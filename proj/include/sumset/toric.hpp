#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sumset/sumset_core.hpp"

namespace sumset {

/// Exponent vector of a monomial in x_1, ..., x_n.
using Exponent = std::vector<std::int32_t>;

std::int64_t total_degree(const Exponent& e);
/// |e|_A = sum_i e_i * a_i.
std::int64_t a_degree(const NormalForm& a, const Exponent& e);

/// Degree-reverse-lexicographic order with x_1 > x_2 > ... > x_n.
bool degrevlex_less(const Exponent& lhs, const Exponent& rhs);

/// x^alpha - x^beta in canonical form: common factor removed and alpha the
/// degrevlex-leading term. Coefficients are +1/-1 over any field.
struct Binomial {
  Exponent alpha;
  Exponent beta;
  std::int64_t degree = 0;
  std::int64_t a_degree = 0;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Throws ValidationError if the vectors do not have length n or are negative.
Binomial make_binomial(const NormalForm& a, Exponent alpha, Exponent beta);

/// "x2^2 - x1*x3"; a side with zero exponent renders as "1".
std::string render(const Binomial& b);
std::string render_monomial(const Exponent& e);

/// True iff |alpha| = |beta| and |alpha|_A = |beta|_A, i.e. x^alpha - x^beta
/// lies in the toric ideal I_A. Throws ValidationError on length mismatch.
bool binomial_in_ideal(const NormalForm& a, const Exponent& alpha, const Exponent& beta);

/// All exponent vectors of total degree s and A-degree m, sorted lexicographically.
struct Fiber {
  std::int64_t s = 0;
  std::int64_t m = 0;
  std::vector<Exponent> elements;
};

/// Depth-first enumeration with range pruning on the remaining A-degree.
Fiber fiber(const NormalForm& a, std::int64_t s, std::int64_t m);

/// Every non-empty fiber of total degree s, ordered by A-degree. Throws
/// LimitError when the degree-s monomial count exceeds the budget.
std::vector<Fiber> fibers_of_degree(const NormalForm& a, std::int64_t s);

struct GeneratorSet {
  std::int64_t degree_cap = 0;
  /// Ordered by (degree, A-degree, lex on alpha).
  std::vector<Binomial> generators;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

/// Connected components of a fiber's graph, where two vectors are adjacent
/// when their supports meet. Each component is sorted in degrevlex order,
/// and components are ordered by their degrevlex-minimal element.
std::vector<std::vector<Exponent>> fiber_components(const Fiber& f);

/// Minimal binomial generators of I_A up to total degree cap (cap >= 2).
/// Each bidegree contributes (components - 1) binomials, joining the
/// minimal element of each later component to that of the first.
GeneratorSet minimal_generators(const NormalForm& a, std::int64_t degree_cap);

/// Default cap rho(A) + 1.
GeneratorSet minimal_generators(const NormalForm& a);

/// Whether the moves x^gamma * (x^alpha <-> x^beta) of `moves` connect every
/// element of the fiber. Moves at index `skip` are ignored (pass -1 for none).
bool fiber_connected_by_moves(const Fiber& f, std::span<const Binomial> moves,
                              std::ptrdiff_t skip = -1);

}  // namespace sumset
