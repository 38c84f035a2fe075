#pragma once

// Reduction of Gaussian-integer matrices modulo the prime (1+2i) of Z[i],
// landing in PSL2(F5), and the kernel bookkeeping built on it.  The residue
// map sends i to 2; the conjugate prime (1-2i) corresponds to i -> 3 and is
// exposed only as an explicit parameter for the probe checks.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kleinian/moebius.hpp"

namespace kleinian {

struct NotGaussianInteger : std::domain_error {
    explicit NotGaussianInteger(const std::string& what) : std::domain_error(what) {}
};

constexpr int kResidueIImage = 2;  // 1 + 2i = 0 forces i = 2 in F5

class PSL2F5 {
public:
    PSL2F5();  // identity
    PSL2F5(int a, int b, int c, int d);

    bool is_identity() const;
    uint8_t at(int row, int col) const { return m_[2 * row + col]; }
    PSL2F5 inverse() const;
    friend PSL2F5 operator*(const PSL2F5& x, const PSL2F5& y);
    friend bool operator==(const PSL2F5& x, const PSL2F5& y) { return x.m_ == y.m_; }
    friend bool operator!=(const PSL2F5& x, const PSL2F5& y) { return !(x == y); }
    friend bool operator<(const PSL2F5& x, const PSL2F5& y) { return x.m_ < y.m_; }

    bool is_lower_unipotent() const;  // the class of (1,0;*,1)
    std::string str() const;          // "[a b; c d]"

private:
    void canonicalize();
    std::array<uint8_t, 4> m_;  // canonical representative of {M, -M}
};

// Scalar reduction; requires x to be a Gaussian integer.
uint8_t reduce_scalar(const FieldElem& x, int i_image = kResidueIImage);

// Entrywise reduction; requires Gaussian-integer entries.
PSL2F5 reduce_matrix(const ProjectiveMatrix& m, int i_image = kResidueIImage);

bool kernel_contains(const ProjectiveMatrix& m, int i_image = kResidueIImage);

// Closure of the reduced generators inside PSL2(F5).
std::vector<PSL2F5> image_closure(const std::vector<ProjectiveMatrix>& gens,
                                  int i_image = kResidueIImage);
std::size_t image_order(const std::vector<ProjectiveMatrix>& gens,
                        int i_image = kResidueIImage);

// |PSL2(F5)| computed by closure from (1,1;0,1) and (0,1;-1,0).
std::size_t psl2f5_order();

struct ThetaPhiResult {
    bool equal = true;
    std::string witness;  // first mismatching word, empty when equal
};

// Compares the residue map with the permutation representation on every
// freely reduced word over {p1, p2, p3} of length <= radius, identifying
// <phi(f)> with <theta(f)> via phi(f) -> (1,0;4,1).
ThetaPhiResult check_theta_equals_phi(int radius, int i_image = kResidueIImage);

}  // namespace kleinian
