#pragma once

#include <string>
#include <vector>

#include "camspec/rational.hpp"

namespace camspec {

// Permutation of {1, ..., n}, stored as the image list (img[i-1] = w(i)).
class Permutation {
public:
    explicit Permutation(int n); // identity
    static Permutation from_images(std::vector<int> images);
    static Permutation transposition(int n, int i, int j); // 1-based i != j

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const; // 1-based application

    // (this o other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;

    // Coordinate action on tuples: (w . v)_i = v_{w^{-1}(i)}, i.e. the value
    // at slot i comes from slot w^{-1}(i); equivalently w moves the value in
    // slot k to slot w(k).
    std::vector<GaussianRational> act(const std::vector<GaussianRational>& v) const;

    const std::vector<int>& images() const { return img_; }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    std::string str() const;

private:
    std::vector<int> img_;
};

// All n! elements of S_n; CapacityError for n > 7.
std::vector<Permutation> symmetric_group(int n);

// Root L_i - L_j of sl(n), i != j; positive exactly when i < j.
struct Root {
    int i, j;
    friend bool operator==(const Root& a, const Root& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator<(const Root& a, const Root& b) { return a.i < b.i || (a.i == b.i && a.j < b.j); }
};

// Inversion set {L_i - L_j : i < j, w(i) > w(j)} (the positive roots sent to
// negative roots by w).
std::vector<Root> inversion_set(const Permutation& w);

// Checks the cocycle identity: as multisets after cancelling {alpha, -alpha}
// pairs, Inv(w w') equals Inv(w') combined with (w')^{-1} Inv(w).
bool cocycle_check(const Permutation& w, const Permutation& w_prime);

// w0 = product of the transpositions (i, p+1+i), i = 1..p, in S_{2p+1}.
Permutation w0(int p);

// True iff conjugation by the exchange involution J agrees with the
// coordinate action of w0 on a full basis of the diagonal Cartan.
bool w0_acts_as_theta(int p);

// Signed permutation of p coordinates: v -> (sign_i * v_{pi^{-1}(i)}).
class SignedPermutation {
public:
    SignedPermutation(Permutation pi, std::vector<int> signs);
    static SignedPermutation identity(int p);

    int p() const { return pi_.n(); }
    const Permutation& perm() const { return pi_; }
    const std::vector<int>& signs() const { return signs_; }

    std::vector<GaussianRational> act(const std::vector<GaussianRational>& v) const;
    SignedPermutation compose(const SignedPermutation& other) const;

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        return a.pi_ == b.pi_ && a.signs_ == b.signs_;
    }
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
        if (a.pi_ != b.pi_) return a.pi_ < b.pi_;
        return a.signs_ < b.signs_;
    }

    std::string str() const;

private:
    Permutation pi_;
    std::vector<int> signs_; // each +1 or -1, signs_[i-1] applied at slot i
};

// All 2^p p! signed permutations; CapacityError for p > 3.
std::vector<SignedPermutation> hyperoctahedral_group(int p);

// Brute-force restricted Weyl group of the anisotropic Cartan inside
// S_{2p+1}: normalizer / centralizer, the induced signed-permutation action,
// and the coset count of the normalizer.  CapacityError for p > 3.
struct RestrictedWeyl {
    int normalizer_order;
    int centralizer_order;
    int order;                        // normalizer_order / centralizer_order
    bool matches_hyperoctahedral;     // induced action is all signed permutations
    int coset_count;                  // |S_{2p+1}| / normalizer_order
    std::vector<Permutation> normalizer;
};
RestrictedWeyl restricted_weyl_bruteforce(int p);

// Verifies that the stabilizer of the first-coordinate weight, computed by
// testing the functional identity on a basis of the trace-free diagonal
// Cartan, is exactly {w : w(1) = 1} of order (2p)!.  CapacityError for p > 3.
bool weight_stabilizer_check(int p);

} // namespace camspec
