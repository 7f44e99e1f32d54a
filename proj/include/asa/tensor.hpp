#pragma once

#include "asa/common.hpp"

#include <memory>
#include <span>

namespace asa {

/// Dense multi-dimensional array over a real scalar type. The sole numeric
/// carrier of the library. Storage is shared between handles; values are
/// treated as immutable once produced by an op (leaves may be updated between
/// optimizer steps). The last extent is the feature/column dimension; all
/// leading extents collapse to rows for matrix views.
template <class S>
class Tensor {
public:
    Tensor() = default;

    Tensor(Shape shape, std::shared_ptr<VecX<S>> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        ASA_ASSERT(data_ && data_->size() == numel_of(shape_));
    }

    static Tensor zeros(Shape shape) {
        auto d = std::make_shared<VecX<S>>(VecX<S>::Zero(numel_of(shape)));
        return Tensor(std::move(shape), std::move(d));
    }

    static Tensor full(Shape shape, S value) {
        auto d = std::make_shared<VecX<S>>(VecX<S>::Constant(numel_of(shape), value));
        return Tensor(std::move(shape), std::move(d));
    }

    static Tensor scalar(S value) { return full({1}, value); }

    static Tensor from(Shape shape, std::initializer_list<S> values) {
        Tensor t = zeros(std::move(shape));
        ASA_ASSERT(static_cast<Index>(values.size()) == t.numel());
        Index i = 0;
        for (S v : values) (*t.data_)(i++) = v;
        return t;
    }

    static Tensor from_vector(Shape shape, const std::vector<S>& values) {
        Tensor t = zeros(std::move(shape));
        ASA_ASSERT(static_cast<Index>(values.size()) == t.numel());
        for (Index i = 0; i < t.numel(); ++i) (*t.data_)(i) = values[static_cast<size_t>(i)];
        return t;
    }

    /// Centered uniform in (-scale, scale).
    static Tensor uniform(Shape shape, Rng& rng, double scale) {
        Tensor t = zeros(std::move(shape));
        for (Index i = 0; i < t.numel(); ++i)
            (*t.data_)(i) = static_cast<S>(rng.uniform(-scale, scale));
        return t;
    }

    static Tensor normal(Shape shape, Rng& rng, double stddev) {
        Tensor t = zeros(std::move(shape));
        for (Index i = 0; i < t.numel(); ++i)
            (*t.data_)(i) = static_cast<S>(stddev * rng.normal());
        return t;
    }

    bool defined() const { return static_cast<bool>(data_); }
    const Shape& shape() const { return shape_; }
    Index ndim() const { return static_cast<Index>(shape_.size()); }
    Index extent(Index d) const {
        Index nd = ndim();
        if (d < 0) d += nd;
        ASA_ASSERT(d >= 0 && d < nd);
        return shape_[static_cast<size_t>(d)];
    }
    Index numel() const { return data_ ? data_->size() : 0; }

    /// Rows/cols of the collapsed 2-D view: last dim = cols.
    Index cols() const {
        ASA_ASSERT(!shape_.empty());
        return shape_.back();
    }
    Index rows() const { return cols() == 0 ? 0 : numel() / cols(); }

    const VecX<S>& vec() const { return *data_; }
    VecX<S>& vec_mut() { return *data_; }

    Eigen::Map<const MatX<S>> mat() const {
        return Eigen::Map<const MatX<S>>(data_->data(), rows(), cols());
    }
    Eigen::Map<MatX<S>> mat_mut() {
        return Eigen::Map<MatX<S>>(data_->data(), rows(), cols());
    }

    const S* data() const { return data_->data(); }
    S* data_mut() { return data_->data(); }
    const void* storage_key() const { return static_cast<const void*>(data_.get()); }

    S operator()(Index i) const { return (*data_)(i); }
    S item() const {
        ASA_ASSERT(numel() == 1);
        return (*data_)(0);
    }

    /// Same storage, new shape (numel must match). No data copied.
    Tensor reshaped(Shape shape) const {
        require_shape(numel_of(shape) == numel(),
                      "reshape: numel mismatch " + shape_str(shape_) + " -> " + shape_str(shape));
        Tensor t;
        t.shape_ = std::move(shape);
        t.data_ = data_;
        t.grad_ = grad_;
        return t;
    }

    Tensor clone() const {
        auto d = std::make_shared<VecX<S>>(*data_);
        return Tensor(shape_, std::move(d));
    }

    bool all_finite() const { return data_->allFinite(); }

    // --- gradient slot -------------------------------------------------
    bool has_grad() const { return static_cast<bool>(grad_) && grad_->size() > 0; }
    const VecX<S>& grad() const {
        ASA_ASSERT(has_grad());
        return *grad_;
    }
    Eigen::Map<const MatX<S>> grad_mat() const {
        ASA_ASSERT(has_grad());
        return Eigen::Map<const MatX<S>>(grad_->data(), rows(), cols());
    }
    /// Accumulates into the grad slot, allocating zeros on first use.
    void add_grad(const VecX<S>& g) {
        ASA_ASSERT(g.size() == numel());
        ensure_grad();
        *grad_ += g;
    }
    void zero_grad() {
        if (grad_) grad_->setZero();
    }
    void ensure_grad() {
        if (!grad_) grad_ = std::make_shared<VecX<S>>(VecX<S>::Zero(numel()));
        if (grad_->size() == 0) *grad_ = VecX<S>::Zero(numel());
    }
    std::shared_ptr<VecX<S>> grad_storage() const { return grad_; }

private:
    Shape shape_;
    std::shared_ptr<VecX<S>> data_;
    std::shared_ptr<VecX<S>> grad_;  // lazily allocated, same length as data
};

}  // namespace asa
