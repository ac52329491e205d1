// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "mma/errors.hpp"
#include "mma/rng.hpp"

namespace mma {

using Shape = std::vector<int64_t>;

inline int64_t shape_numel(const Shape& s) {
    int64_t n = 1;
    for (int64_t d : s) n *= d;
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "]";
    return os.str();
}

// Element storage shared between tensor handles. A tensor participates in
// differentiation when it is a requires_grad leaf or an op output on a grad
// path; exactly then it owns a same-shape grad buffer.
template <class T>
struct TensorDataT {
    Shape shape;
    std::vector<T> v;
    std::vector<T> g;
    bool requires_grad = false;
    bool on_grad_path = false;
};

// Dense N-d tensor handle (shared storage, value semantics on the handle).
// Image tensors are laid out N x C x H x W, row-major.
template <class T>
class TensorT {
public:
    TensorT() : d_(std::make_shared<TensorDataT<T>>()) {}

    explicit TensorT(Shape shape, T fill = T(0)) : d_(std::make_shared<TensorDataT<T>>()) {
        d_->shape = std::move(shape);
        d_->v.assign(static_cast<size_t>(shape_numel(d_->shape)), fill);
    }

    TensorT(Shape shape, std::vector<T> values) : d_(std::make_shared<TensorDataT<T>>()) {
        if (static_cast<int64_t>(values.size()) != shape_numel(shape))
            throw DimensionError("value count " + std::to_string(values.size()) +
                                 " does not match shape " + shape_str(shape));
        d_->shape = std::move(shape);
        d_->v = std::move(values);
    }

    static TensorT zeros(Shape shape) { return TensorT(std::move(shape), T(0)); }
    static TensorT ones(Shape shape) { return TensorT(std::move(shape), T(1)); }
    static TensorT full(Shape shape, T fill) { return TensorT(std::move(shape), fill); }

    static TensorT randn(Shape shape, Rng& rng, T stddev = T(1)) {
        TensorT t(std::move(shape));
        for (auto& x : t.d_->v) x = static_cast<T>(rng.normal()) * stddev;
        return t;
    }

    const Shape& shape() const { return d_->shape; }
    int64_t dim(size_t i) const { return d_->shape.at(i); }
    size_t ndim() const { return d_->shape.size(); }
    int64_t numel() const { return static_cast<int64_t>(d_->v.size()); }

    T* data() { return d_->v.data(); }
    const T* data() const { return d_->v.data(); }
    std::vector<T>& values() { return d_->v; }
    const std::vector<T>& values() const { return d_->v; }

    T& at(int64_t i) { return d_->v[static_cast<size_t>(i)]; }
    T at(int64_t i) const { return d_->v[static_cast<size_t>(i)]; }

    // Scalar accessor for [1]-shaped results.
    T item() const {
        if (numel() != 1) throw ContractError("item() on tensor with " + std::to_string(numel()) + " elements");
        return d_->v[0];
    }

    bool requires_grad() const { return d_->requires_grad; }
    void set_requires_grad(bool rg) {
        d_->requires_grad = rg;
        if (rg && d_->g.size() != d_->v.size()) d_->g.assign(d_->v.size(), T(0));
        if (!rg && !d_->on_grad_path) d_->g.clear();
    }

    bool participates() const { return d_->requires_grad || d_->on_grad_path; }
    void mark_on_grad_path() {
        d_->on_grad_path = true;
        if (d_->g.size() != d_->v.size()) d_->g.assign(d_->v.size(), T(0));
    }

    bool has_grad() const { return d_->g.size() == d_->v.size() && !d_->v.empty(); }
    T* grad_data() { return d_->g.data(); }
    const T* grad_data() const { return d_->g.data(); }
    std::vector<T>& grad() { return d_->g; }
    const std::vector<T>& grad() const { return d_->g; }
    void zero_grad() {
        if (has_grad()) std::fill(d_->g.begin(), d_->g.end(), T(0));
    }

    bool same_storage(const TensorT& o) const { return d_ == o.d_; }

    // Deep copy of values only (no grad state).
    TensorT clone_values() const {
        TensorT t;
        t.d_->shape = d_->shape;
        t.d_->v = d_->v;
        return t;
    }

    bool all_finite() const {
        for (T x : d_->v)
            if (!std::isfinite(static_cast<double>(x))) return false;
        return true;
    }

    void check_finite(const char* what) const {
        if (!all_finite()) throw ContractError(std::string(what) + ": non-finite values");
    }

private:
    std::shared_ptr<TensorDataT<T>> d_;
};

using Tensor = TensorT<float>;

template <class T>
inline void require_same_shape(const TensorT<T>& a, const TensorT<T>& b, const char* what) {
    if (a.shape() != b.shape())
        throw DimensionError(std::string(what) + ": shapes " + shape_str(a.shape()) + " vs " +
                             shape_str(b.shape()));
}

} // namespace mma
