// Braided vector / covector algebras of a Majid pair, their degree-d
// pairing matrices and radicals.
#pragma once

#include <vector>

#include "qgraft/ncpoly.hpp"
#include "qgraft/rmatrix.hpp"

namespace qgraft {

enum class Side { vector, covector };

struct BraidedAlgebra {
  Side side = Side::vector;
  IndexShape generators;
  std::vector<NCPolynomial> quad_relations;
  std::vector<NCPolynomial> extra_relations;
  const MajidPair* pair = nullptr;

  std::vector<std::string> names() const;
  std::vector<NCPolynomial> all_relations() const;
};

// Vector side: e^i e^j - Σ R'^{ji}_{ab} e^a e^b (rows of I - PR').
// Covector side: f_i f_j - Σ f_b f_a R'^{ab}_{ij} (columns of I - PR').
BraidedAlgebra relations_from_pair(const MajidPair& pair, Side side);

// Block diagonal operator on degree-d words. Blocks are the connected
// components of the word graph under the braiding.
class BlockMatrix {
 public:
  std::size_t ngens = 0;
  std::size_t degree = 0;
  std::vector<std::vector<std::size_t>> blocks;  // word codes per block
  std::vector<SMatrix> mats;

  std::size_t size() const;
  Scalar entry(std::size_t row_code, std::size_t col_code) const;
  SMatrix dense() const;
  QMatrix evaluate_dense(const Rational& s0) const;
  std::size_t exact_rank() const;

  // Position lookups filled by index().
  void index();
  std::vector<std::size_t> block_of, pos_in_block;
};

// G_1 = I, G_d = (G_{d-1} ⊗ I)·[d]_Ψ with Ψ = P·R of the normalized pair and
// [d]_Ψ = Σ_{k=0}^{d-1} Ψ_{d-1}Ψ_{d-2}⋯Ψ_{d-k}. Rows index covector words,
// columns vector words.
BlockMatrix pairing_matrix(const MajidPair& pair, int degree);

// Degree-d elements pairing to zero with everything, taken modulo the part
// of the ideal generated by lower-degree relations on the same side.
std::vector<NCPolynomial> radical_basis(const MajidPair& pair, int degree, Side side,
                                        const MonomialOrder* order = nullptr);

BraidedAlgebra quotient(const BraidedAlgebra& algebra, const std::vector<NCPolynomial>& extra);

// Word-vector form of a homogeneous polynomial, indexed by word_code.
std::vector<Scalar> to_word_vector(const NCPolynomial& p, std::size_t ngens);
NCPolynomial from_word_vector(const std::vector<Scalar>& v, std::size_t degree, std::size_t ngens);

}  // namespace qgraft
