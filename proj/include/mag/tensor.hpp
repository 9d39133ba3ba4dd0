#ifndef MAG_TENSOR_HPP
#define MAG_TENSOR_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mag/errors.hpp"

namespace mag {

// Holonomic chart indices i vs frame (tetrad) indices (i).  Components in
// different bases never mix silently: contract() rejects mismatched slots.
enum class Basis : std::uint8_t { holonomic, frame };

enum class Var : std::int8_t { up = +1, down = -1 };

struct Slot {
    Var var;
    Basis basis = Basis::holonomic;
};

inline Slot up(Basis b = Basis::holonomic) { return {Var::up, b}; }
inline Slot down(Basis b = Basis::holonomic) { return {Var::down, b}; }

// A chart point x^i.  Coordinates are in chart units (the Schwarzschild chart
// uses t in s, r in cm, angles dimensionless).
struct Point {
    std::vector<double> x;

    Point() = default;
    explicit Point(std::vector<double> coords) : x(std::move(coords)) {
        if (x.size() < 2)
            throw TensorError("Point: dimension must be >= 2");
        for (double c : x)
            if (!std::isfinite(c))
                throw TensorError("Point: non-finite coordinate");
    }
    Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

    int dim() const { return static_cast<int>(x.size()); }
    double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return x[static_cast<std::size_t>(i)]; }

    Point shifted(int axis, double delta) const {
        Point q = *this;
        q.x[static_cast<std::size_t>(axis)] += delta;
        return q;
    }
};

// Dense components of a small tensor of arbitrary rank over one chart point.
// Storage is row-major over the slots; every slot runs over the same dimension n.
class Tensor {
public:
    Tensor() = default;

    Tensor(int dim, std::vector<Slot> slots)
        : dim_(dim), slots_(std::move(slots)) {
        std::size_t sz = 1;
        for (std::size_t k = 0; k < slots_.size(); ++k) sz *= static_cast<std::size_t>(dim_);
        v_.assign(sz, 0.0);
    }

    static Tensor scalar(double value) {
        Tensor t;
        t.dim_ = 0;
        t.v_ = {value};
        return t;
    }

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(slots_.size()); }
    const std::vector<Slot>& slots() const { return slots_; }
    std::span<const double> values() const { return v_; }
    std::span<double> values() { return v_; }

    double& operator()(int i) { return v_[idx({&i, 1})]; }
    double operator()(int i) const { return v_[idx({&i, 1})]; }
    double& operator()(int i, int j) {
        std::array<int, 2> a{i, j};
        return v_[idx(a)];
    }
    double operator()(int i, int j) const {
        std::array<int, 2> a{i, j};
        return v_[idx(a)];
    }
    double& operator()(int i, int j, int k) {
        std::array<int, 3> a{i, j, k};
        return v_[idx(a)];
    }
    double operator()(int i, int j, int k) const {
        std::array<int, 3> a{i, j, k};
        return v_[idx(a)];
    }
    double& operator()(int i, int j, int k, int l) {
        std::array<int, 4> a{i, j, k, l};
        return v_[idx(a)];
    }
    double operator()(int i, int j, int k, int l) const {
        std::array<int, 4> a{i, j, k, l};
        return v_[idx(a)];
    }

    double at(std::span<const int> ix) const { return v_[idx(ix)]; }
    double& at(std::span<const int> ix) { return v_[idx(ix)]; }

    double max_abs() const {
        double m = 0.0;
        for (double x : v_) m = std::max(m, std::abs(x));
        return m;
    }

    bool finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    Tensor& operator+=(const Tensor& o) {
        require_same_shape(o, "+=");
        for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        require_same_shape(o, "-=");
        for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
        return *this;
    }
    Tensor& operator*=(double s) {
        for (double& x : v_) x *= s;
        return *this;
    }

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(double s, Tensor a) { return a *= s; }

private:
    void require_same_shape(const Tensor& o, const char* op) const {
        if (dim_ != o.dim_ || slots_.size() != o.slots_.size())
            throw TensorError(std::string("Tensor ") + op + ": shape mismatch");
    }

    std::size_t idx(std::span<const int> ix) const {
        std::size_t k = 0;
        for (std::size_t s = 0; s < ix.size(); ++s)
            k = k * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(ix[s]);
        return k;
    }

    int dim_ = 0;
    std::vector<Slot> slots_;
    std::vector<double> v_;
};

// Einstein summation over the given (slot-of-a, slot-of-b) pairs.  Paired
// slots must have equal dimension, opposite variance, and the same basis.
Tensor contract(const Tensor& a, const Tensor& b,
                std::span<const std::pair<int, int>> pairs);

inline Tensor contract(const Tensor& a, const Tensor& b,
                       std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<std::pair<int, int>> v(pairs);
    return contract(a, b, std::span<const std::pair<int, int>>(v));
}

// Trace of one up/down slot pair within a single tensor.
Tensor trace(const Tensor& a, int slot_up, int slot_down);

// Inverse of a symmetric (0,2) metric; throws DegenerateMetricError when
// |det g| falls below rel_tol relative to the row scale.
Tensor invert_metric(const Tensor& g, double rel_tol = 1e-12);

// Plain matrix inverse of a rank-2 tensor (used for frame duals); output
// slots are the variance/basis flips of the input in reversed order.
Tensor invert_rank2(const Tensor& m, double rel_tol = 1e-14);

} // namespace mag

#endif
