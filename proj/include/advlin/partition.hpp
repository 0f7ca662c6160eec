#pragma once

#include <string>
#include <vector>

#include "advlin/matrix.hpp"

namespace advlin::parts {

enum class Color { white, black };
using ColoredWord = std::vector<Color>;

ColoredWord all_white(int k);
ColoredWord parse_word(const std::string& s);  // 'o'/'w' = white, 'b'/'*' = black

// Partition of {1,...,k}, canonically encoded as a restricted growth
// string: block ids appear in first-use order starting at 0.
struct SetPartition {
    std::vector<int> block_of;

    SetPartition() = default;
    explicit SetPartition(std::vector<int> rgs);

    int k() const { return static_cast<int>(block_of.size()); }
    int blocks() const;
    std::vector<std::vector<int>> block_list() const;

    std::string rgs_string() const;  // digits 1-based, e.g. "1121"
    static SetPartition parse_rgs(const std::string& s);
    static SetPartition singletons(int k);
    static SetPartition one_block(int k);
    static SetPartition from_blocks(int k, const std::vector<std::vector<int>>& blocks);

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.block_of == b.block_of;
    }
    friend bool operator<(const SetPartition& a, const SetPartition& b) {
        return a.block_of < b.block_of;
    }
};

// Refinement order: every block of a contained in a block of b.
bool leq(const SetPartition& a, const SetPartition& b);

// Smallest partition refined by neither argument (superposition).
SetPartition join(const SetPartition& a, const SetPartition& b);

bool noncrossing(const SetPartition& p);

// Mobius function of the partition lattice, by the defining recurrence.
long mobius(const SetPartition& a, const SetPartition& b);

enum class CategoryTag { P, P_even, P2, MatchingP2, NC, NC2, MatchingNC2, P_s };

struct Category {
    CategoryTag tag = CategoryTag::P;
    int s = 1;  // for P_s; 0 encodes s = infinity

    static Category P() { return {CategoryTag::P, 1}; }
    static Category P_even() { return {CategoryTag::P_even, 2}; }
    static Category P2() { return {CategoryTag::P2, 1}; }
    static Category MatchingP2() { return {CategoryTag::MatchingP2, 1}; }
    static Category NC() { return {CategoryTag::NC, 1}; }
    static Category NC2() { return {CategoryTag::NC2, 1}; }
    static Category MatchingNC2() { return {CategoryTag::MatchingNC2, 1}; }
    static Category P_s(int s) { return {CategoryTag::P_s, s}; }
};

Category category_from_name(const std::string& name);

bool in_category(const SetPartition& p, const ColoredWord& word, const Category& cat);

// Canonical order: block count descending, then lexicographic.
std::vector<SetPartition> enumerate(int k, const Category& cat);
std::vector<SetPartition> enumerate(const ColoredWord& word, const Category& cat);

// Order matrix A(pi,nu) = [pi <= nu] and its inverse, over the given list.
ZMat order_matrix(const std::vector<SetPartition>& parts);
ZMat mobius_matrix(const std::vector<SetPartition>& parts);

// G(pi,nu) = N^{|pi v nu|} over D(k).
ZMat gram(const std::vector<SetPartition>& parts, long n);
ZMat gram(int k, long n, const Category& cat);

// W = G^{-1}, exact; refuses singular Gram matrices (N < k territory).
QMat weingarten(const std::vector<SetPartition>& parts, long n);
QMat weingarten(int k, long n, const Category& cat);

// Tr(W_{kN} G_{ks}).
BigRat truncated_char_moment(const Category& cat, int k, long n, long s);

// Coefficients of sum_{pi in D(k)} t^{|pi|}; index = block count.
std::vector<BigInt> asymptotic_moment_coeffs(const Category& cat, int k);
BigRat asymptotic_moment(const Category& cat, int k, const BigRat& t);

// Partition of k inputs plus l outputs (inputs listed first).
struct BiPartition {
    int in_count = 0;
    int out_count = 0;
    SetPartition part;  // on in_count + out_count points
};

std::vector<BiPartition> enumerate_bipartitions(int in_count, int out_count);

// The linear map T_pi as an exact N^out x N^in 0-1 matrix.
ZMat tpi_matrix(const BiPartition& p, int n);

BiPartition tensor(const BiPartition& a, const BiPartition& b);

struct Composition {
    BiPartition result;
    int closed_loops = 0;
};
// pi after sigma; sigma's outputs feed pi's inputs.
Composition compose(const BiPartition& pi, const BiPartition& sigma);

BiPartition adjoint_partition(const BiPartition& p);

// Doubling bijection NC(k) -> NC2(2k) and its inverse.
SetPartition fatten(const SetPartition& p);
SetPartition shrink(const SetPartition& pairing);

// Recurrence C_{k+1} = sum C_a C_b, cross-checked against the closed form.
BigInt catalan(int k);

}  // namespace advlin::parts
