"""Tiny feedforward network engine: one ReLU hidden layer, softmax output.

Implements the two combiner networks used by the pipeline (hidden sizes 3
and 10, both with 2 outputs) with exact, testable forward/backward
semantics. Everything is float64 numpy; training is plain mini-batch SGD
on cross-entropy, deterministic under the given seeds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, InvalidSpec, SingleClassData


@dataclass(frozen=True)
class MicroNetSpec:
    input_dim: int
    hidden_dim: int
    output_dim: int = 2
    activation: str = "relu"
    seed: int = 0

    def __post_init__(self):
        if self.input_dim < 1 or self.hidden_dim < 1 or self.output_dim < 1:
            raise InvalidSpec(f"all dims must be >= 1, got {self}")
        if self.activation != "relu":
            raise InvalidSpec(f"unsupported activation {self.activation!r}")


@dataclass(frozen=True)
class TrainSpec:
    epochs: int = 200
    learning_rate: float = 0.05
    batch_size: int = 32
    loss: str = "cross_entropy"
    seed: int = 0

    def __post_init__(self):
        if self.epochs < 1:
            raise InvalidSpec(f"epochs must be >= 1, got {self.epochs}")
        if self.learning_rate <= 0:
            raise InvalidSpec(f"learning_rate must be > 0, got {self.learning_rate}")
        if self.loss != "cross_entropy":
            raise InvalidSpec(f"unsupported loss {self.loss!r}")


@dataclass(frozen=True)
class MicroNetParams:
    spec: MicroNetSpec
    W1: np.ndarray  # hidden_dim x input_dim
    b1: np.ndarray  # hidden_dim
    W2: np.ndarray  # output_dim x hidden_dim
    b2: np.ndarray  # output_dim

    def flat(self) -> np.ndarray:
        return np.concatenate([self.W1.ravel(), self.b1, self.W2.ravel(), self.b2])


def init_network(spec: MicroNetSpec) -> MicroNetParams:
    """Seeded Glorot-style uniform weights, zero biases."""
    rng = np.random.default_rng(spec.seed)
    lim1 = np.sqrt(6.0 / (spec.input_dim + spec.hidden_dim))
    lim2 = np.sqrt(6.0 / (spec.hidden_dim + spec.output_dim))
    return MicroNetParams(
        spec=spec,
        W1=rng.uniform(-lim1, lim1, size=(spec.hidden_dim, spec.input_dim)),
        b1=np.zeros(spec.hidden_dim),
        W2=rng.uniform(-lim2, lim2, size=(spec.output_dim, spec.hidden_dim)),
        b2=np.zeros(spec.output_dim),
    )


def _softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=-1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=-1, keepdims=True)


def forward(params: MicroNetParams, x) -> np.ndarray:
    """softmax(W2 . relu(W1 . x + b1) + b2) as a float64 probability vector."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1 or x.shape[0] != params.spec.input_dim:
        raise DimensionError(
            f"expected input of length {params.spec.input_dim}, got shape {x.shape}"
        )
    if not np.all(np.isfinite(x)):
        raise ValueError("input contains non-finite values")
    return forward_batch(params, x[None, :])[0]


def forward_batch(params: MicroNetParams, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != params.spec.input_dim:
        raise DimensionError(
            f"expected batch of width {params.spec.input_dim}, got shape {X.shape}"
        )
    Z1 = X @ params.W1.T + params.b1
    H = np.maximum(Z1, 0.0)
    logits = H @ params.W2.T + params.b2
    return _softmax(logits)


def _loss_and_grads(params: MicroNetParams, X: np.ndarray, y: np.ndarray):
    """Mean cross-entropy on the batch plus analytic parameter gradients."""
    n = X.shape[0]
    Z1 = X @ params.W1.T + params.b1
    H = np.maximum(Z1, 0.0)
    logits = H @ params.W2.T + params.b2
    P = _softmax(logits)
    eps = 1e-300  # guard against log(0) on saturated outputs
    loss = -np.mean(np.log(P[np.arange(n), y] + eps))

    dlogits = P.copy()
    dlogits[np.arange(n), y] -= 1.0
    dlogits /= n
    dW2 = dlogits.T @ H
    db2 = dlogits.sum(axis=0)
    dH = dlogits @ params.W2
    dZ1 = dH * (Z1 > 0.0)
    dW1 = dZ1.T @ X
    db1 = dZ1.sum(axis=0)
    return loss, (dW1, db1, dW2, db2)


def batch_loss(params: MicroNetParams, X: np.ndarray, y: np.ndarray) -> float:
    return _loss_and_grads(params, X, y)[0]


def _as_arrays(data) -> tuple[np.ndarray, np.ndarray]:
    """data is a list of (x, class_index) pairs; class may be an int or an
    object with a .value resolvable through the caller's encoding."""
    X = np.asarray([np.asarray(x, dtype=np.float64) for x, _ in data])
    y = np.asarray([int(c) for _, c in data], dtype=np.intp)
    return X, y


@dataclass
class TrainResult:
    params: MicroNetParams
    epoch_losses: list[float] = field(default_factory=list)

    @property
    def first_epoch_loss(self) -> float:
        return self.epoch_losses[0]

    @property
    def last_epoch_loss(self) -> float:
        return self.epoch_losses[-1]


def fit(params: MicroNetParams, data, tspec: TrainSpec) -> TrainResult:
    """Mini-batch SGD; returns new parameters plus per-epoch mean losses.

    Pure in (params, data, tspec): the shuffle order is drawn from a
    generator seeded with tspec.seed, so identical inputs give identical
    outputs. Epoch losses are measured over the full training set with the
    epoch-end parameters.
    """
    X, y = _as_arrays(data)
    if X.shape[0] == 0:
        raise SingleClassData("no training data")
    if X.shape[1] != params.spec.input_dim:
        raise DimensionError(
            f"data width {X.shape[1]} != input_dim {params.spec.input_dim}"
        )
    if np.unique(y).size < 2:
        raise SingleClassData("training data contains a single class")
    if y.max() >= params.spec.output_dim:
        raise DimensionError(f"class index {y.max()} >= output_dim")

    rng = np.random.default_rng(tspec.seed)
    W1, b1, W2, b2 = (a.copy() for a in (params.W1, params.b1, params.W2, params.b2))
    n = X.shape[0]
    losses = []
    for _ in range(tspec.epochs):
        order = rng.permutation(n)
        for start in range(0, n, tspec.batch_size):
            idx = order[start:start + tspec.batch_size]
            cur = MicroNetParams(params.spec, W1, b1, W2, b2)
            _, (dW1, db1, dW2, db2) = _loss_and_grads(cur, X[idx], y[idx])
            W1 -= tspec.learning_rate * dW1
            b1 -= tspec.learning_rate * db1
            W2 -= tspec.learning_rate * dW2
            b2 -= tspec.learning_rate * db2
        losses.append(batch_loss(MicroNetParams(params.spec, W1, b1, W2, b2), X, y))
    return TrainResult(MicroNetParams(params.spec, W1, b1, W2, b2), losses)


def train(params: MicroNetParams, data, tspec: TrainSpec) -> MicroNetParams:
    return fit(params, data, tspec).params


def gradient_check(spec: MicroNetSpec, batch=None, step: float = 1e-5) -> float:
    """Max relative error between analytic and central-difference gradients.

    When no batch is given, a small random one is drawn from spec.seed so
    repeated calls are identical.
    """
    if batch is None:
        rng = np.random.default_rng(spec.seed + 1)
        X = rng.normal(size=(8, spec.input_dim))
        y = rng.integers(0, spec.output_dim, size=8)
    else:
        X, y = _as_arrays(batch)
    params = init_network(spec)
    _, grads = _loss_and_grads(params, X, y)

    worst = 0.0
    for name, grad in zip(("W1", "b1", "W2", "b2"), grads):
        arr = getattr(params, name)
        it = np.nditer(arr, flags=["multi_index"])
        for _ in it:
            ix = it.multi_index
            orig = arr[ix]
            arr[ix] = orig + step
            up = batch_loss(params, X, y)
            arr[ix] = orig - step
            down = batch_loss(params, X, y)
            arr[ix] = orig
            numeric = (up - down) / (2.0 * step)
            analytic = grad[ix]
            denom = max(abs(analytic), abs(numeric), 1e-8)
            worst = max(worst, abs(analytic - numeric) / denom)
    return worst


def analytic_gradients(params: MicroNetParams, batch):
    X, y = _as_arrays(batch)
    return _loss_and_grads(params, X, y)[1]


# --- persistence: JSON of nested arrays, bit-exact at double precision ----

def params_to_json(params: MicroNetParams) -> str:
    doc = {
        "spec": {
            "input_dim": params.spec.input_dim,
            "hidden_dim": params.spec.hidden_dim,
            "output_dim": params.spec.output_dim,
            "activation": params.spec.activation,
            "seed": params.spec.seed,
        },
        "W1": params.W1.tolist(),
        "b1": params.b1.tolist(),
        "W2": params.W2.tolist(),
        "b2": params.b2.tolist(),
    }
    return json.dumps(doc, sort_keys=True)


def params_from_json(text: str) -> MicroNetParams:
    doc = json.loads(text)
    spec = MicroNetSpec(**doc["spec"])
    return MicroNetParams(
        spec=spec,
        W1=np.asarray(doc["W1"], dtype=np.float64),
        b1=np.asarray(doc["b1"], dtype=np.float64),
        W2=np.asarray(doc["W2"], dtype=np.float64),
        b2=np.asarray(doc["b2"], dtype=np.float64),
    )
