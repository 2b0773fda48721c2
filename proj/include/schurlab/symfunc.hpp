// Elements of the ring of symmetric functions in the Schur basis.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "schurlab/numeric.hpp"
#include "schurlab/partition.hpp"

namespace schurlab {

// Sparse integer vector over the Schur basis; zero coefficients are absent.
class SymFunc {
public:
    using Coeffs = std::map<Partition, Int>;

    SymFunc() = default;
    static SymFunc zero() { return {}; }
    static SymFunc one() { return schur({}); }
    static SymFunc schur(Partition pi, Int c = 1);
    // e_n = s_(1^n), h_n = s_(n).
    static SymFunc e(int n);
    static SymFunc h(int n);

    bool is_zero() const { return coeffs_.empty(); }
    const Coeffs& coeffs() const { return coeffs_; }
    Int coeff(const Partition& pi) const;
    // Maximum weight over the support (0 for the zero element).
    int degree() const;
    // True when every term has the same weight.
    bool is_homogeneous() const;
    // The part of f supported in weight n.
    SymFunc component(int n) const;

    void add_term(const Partition& pi, const Int& c);

    SymFunc operator-() const;
    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc operator*(const Int& c) const;
    bool operator==(const SymFunc& o) const = default;

    std::string to_string() const;

private:
    Coeffs coeffs_;
};

inline SymFunc operator*(const Int& c, const SymFunc& f) { return f * c; }

// Element of Lambda (x) Lambda, sparse over pairs of Schur indices.
class TensorSymFunc {
public:
    using Key = std::pair<Partition, Partition>;
    using Coeffs = std::map<Key, Int>;

    TensorSymFunc() = default;
    static TensorSymFunc pure(Partition left, Partition right, Int c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    const Coeffs& coeffs() const { return coeffs_; }
    Int coeff(const Partition& l, const Partition& r) const;

    void add_term(const Partition& l, const Partition& r, const Int& c);

    TensorSymFunc operator+(const TensorSymFunc& o) const;
    TensorSymFunc operator-(const TensorSymFunc& o) const;
    bool operator==(const TensorSymFunc& o) const = default;

    std::string to_string() const;

private:
    Coeffs coeffs_;
};

} // namespace schurlab
