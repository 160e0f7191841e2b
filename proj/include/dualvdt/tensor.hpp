#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dualvdt/rng.hpp"

namespace dualvdt {

class Tensor;
using TensorPtr = std::shared_ptr<Tensor>;

// Dense row-major tensor with reverse-mode gradient support. Values are
// 64-bit floats. Nodes form a tape: `parents` keeps the upstream graph alive,
// `backprop` accumulates into the parents' grad slots. Tensors are treated as
// immutable once created, except for explicit in-place training updates on
// the owning thread (optimizer steps write `values` of leaf parameters).
class Tensor : public std::enable_shared_from_this<Tensor> {
 public:
  std::vector<std::size_t> shape;
  std::vector<double> values;
  std::vector<double> grad;  // same extent as values when requires_grad
  bool requires_grad{false};

  std::vector<TensorPtr> parents;
  std::function<void()> backprop;

  static TensorPtr create(std::vector<std::size_t> shape, std::vector<double> values,
                          bool requires_grad = false);
  static TensorPtr zeros(std::vector<std::size_t> shape, bool requires_grad = false);
  static TensorPtr full(std::vector<std::size_t> shape, double value, bool requires_grad = false);
  static TensorPtr scalar(double value, bool requires_grad = false);

  std::size_t size() const { return values.size(); }
  std::size_t ndim() const { return shape.size(); }
  bool is_matrix() const { return shape.size() == 2; }
  std::size_t rows() const;
  std::size_t cols() const;
  double item() const;  // scalar tensors only

  // At (row, col) of a matrix.
  double at(std::size_t r, std::size_t c) const;

  void zero_grad();

  // Reverse pass from a scalar: seeds d(self)/d(self) = 1 and propagates in
  // reverse topological order. Interior grads are cleared first; leaf grads
  // accumulate (callers zero leaves between uses).
  void backward();

  // Leaf copy sharing no graph history.
  TensorPtr detach() const;
};

std::string shape_str(const std::vector<std::size_t>& shape);

// ---------------------------------------------------------------------------
// Differentiable operation catalogue. Elementwise binary ops accept equal
// shapes or a scalar on either side. Shape violations and domain violations
// (log of a non-positive value, division by zero) throw std::invalid_argument
// naming the offending shapes or element.
// ---------------------------------------------------------------------------

TensorPtr add(const TensorPtr& a, const TensorPtr& b);
TensorPtr sub(const TensorPtr& a, const TensorPtr& b);
TensorPtr mul(const TensorPtr& a, const TensorPtr& b);
TensorPtr div(const TensorPtr& a, const TensorPtr& b);

TensorPtr scale(const TensorPtr& a, double c);
TensorPtr add_const(const TensorPtr& a, double c);

TensorPtr exp(const TensorPtr& a);
TensorPtr log(const TensorPtr& a);
TensorPtr sqrt(const TensorPtr& a);
TensorPtr tanh(const TensorPtr& a);
TensorPtr softplus(const TensorPtr& a);
TensorPtr square(const TensorPtr& a);

TensorPtr matmul(const TensorPtr& a, const TensorPtr& b);
TensorPtr transpose(const TensorPtr& a);
TensorPtr reshape(const TensorPtr& a, std::vector<std::size_t> shape);
TensorPtr slice_cols(const TensorPtr& a, std::size_t c0, std::size_t c1);
TensorPtr slice_rows(const TensorPtr& a, std::size_t r0, std::size_t r1);
TensorPtr concat_cols(const std::vector<TensorPtr>& parts);
TensorPtr stack_rows(const std::vector<TensorPtr>& parts);  // 1-D parts become rows

TensorPtr sum(const TensorPtr& a);
TensorPtr mean(const TensorPtr& a);
TensorPtr mean_rows(const TensorPtr& a);  // (r x c) -> (c)

// Per-row standardization (population moments), used between attention
// blocks.
TensorPtr row_norm(const TensorPtr& a, double eps = 1e-5);

// Row-wise softmax. Rows must contain at least one finite logit.
TensorPtr softmax_rows(const TensorPtr& a);

// Sets logits to -inf where keep_mask == 0; mask entries must be 0 or 1.
// Combined with softmax_rows this assigns exactly zero weight to masked
// positions.
TensorPtr masked_fill(const TensorPtr& logits, const TensorPtr& keep_mask);

// x (r x c) + b (c) broadcast over rows.
TensorPtr add_rowvec(const TensorPtr& x, const TensorPtr& b);

// x (r x p) * w (p x q) + b (q).
TensorPtr affine(const TensorPtr& x, const TensorPtr& w, const TensorPtr& b);

// Same-padded 1-D convolution: x (c_in x len), w (c_out x c_in x kw) with kw
// odd, bias (c_out) -> (c_out x len).
TensorPtr conv1d(const TensorPtr& x, const TensorPtr& w, const TensorPtr& bias);

// Names of every catalogued differentiable op; the randomized gradient suite
// iterates this list.
const std::vector<std::string>& op_catalogue();

// mean + std * eps with eps standard normal from rng; std >= 0. Draws size()
// values in row-major order.
TensorPtr gaussian_sample(Rng& rng, std::vector<std::size_t> shape, double mean, double stddev);

}  // namespace dualvdt
