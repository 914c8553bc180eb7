import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seemoo import nn
from seemoo.nn import autograd as ag


def test_linear_forward_examples():
    eye = nn.LayerParams(np.eye(2), np.zeros(2))
    np.testing.assert_array_equal(nn.linear_forward([[1, 2]], eye), [[1, 2]])
    ones = nn.LayerParams(np.array([[1.0], [1.0]]), np.array([1.0]))
    np.testing.assert_array_equal(nn.linear_forward([[1, 1]], ones), [[3.0]])
    w = np.random.default_rng(3).normal(size=(2, 1))
    np.testing.assert_array_equal(nn.linear_forward([[0, 0]], nn.LayerParams(w, np.array([5.0]))), [[5.0]])


def test_linear_shape_error():
    layer = nn.Linear(3, 2)
    with pytest.raises(nn.ShapeError):
        layer(np.zeros((1, 4)))
    with pytest.raises(nn.ShapeError):
        nn.linear_forward([[1.0, 2.0]], nn.LayerParams(np.eye(3), np.zeros(3)))


def test_mha_identical_rows_give_identical_outputs():
    mha = nn.MultiHeadAttention(32, 4, rng=np.random.default_rng(1))
    row = np.random.default_rng(2).normal(size=32)
    out = nn.mha_forward(np.tile(row, (5, 1)), mha)
    assert out.shape == (5, 32)
    np.testing.assert_allclose(out, np.tile(out[0], (5, 1)), rtol=0, atol=1e-12)


def test_mha_single_row_is_value_then_output_projection():
    mha = nn.MultiHeadAttention(32, 4, rng=np.random.default_rng(1))
    x = np.random.default_rng(4).normal(size=(1, 32))
    expected = x @ mha.w_value.data @ mha.w_out.data
    np.testing.assert_allclose(nn.mha_forward(x, mha), expected, atol=1e-12)


def test_mha_row_permutation_equivariance():
    rng = np.random.default_rng(5)
    mha = nn.MultiHeadAttention(32, 4, rng=rng)
    x = rng.normal(size=(5, 32))
    perm = rng.permutation(5)
    np.testing.assert_allclose(nn.mha_forward(x[perm], mha), nn.mha_forward(x, mha)[perm], atol=1e-12)


def test_mha_rejects_indivisible_width():
    with pytest.raises(nn.ConfigError):
        nn.MultiHeadAttention(30, 4)


def test_layernorm_examples():
    g, b = np.ones(4), np.zeros(4)
    np.testing.assert_array_equal(nn.layernorm_forward(np.full((1, 4), 3.0), g, b), np.zeros((1, 4)))
    out = nn.layernorm_forward(np.array([[1.0, -1.0]]), np.ones(2), np.zeros(2))
    # exact value differs from +-1 only through the variance floor
    np.testing.assert_allclose(out, [[1 / np.sqrt(1 + 1e-5), -1 / np.sqrt(1 + 1e-5)]], atol=1e-15)
    np.testing.assert_allclose(out, [[1.0, -1.0]], atol=1e-5)
    x = np.random.default_rng(0).normal(size=(3, 4))
    np.testing.assert_array_equal(nn.layernorm_forward(x, np.zeros(4), np.full(4, 2.5)), np.full((3, 4), 2.5))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 32))
def test_layernorm_standardizes_rows(seed, width):
    x = np.random.default_rng(seed).normal(scale=3.0, size=(4, width))
    x = x[x.var(axis=1) > 1e-3]
    out = nn.layernorm_forward(x, np.ones(width), np.zeros(width))
    assert np.all(np.abs(out.mean(axis=1)) < 1e-6)
    # the variance floor shrinks the output variance to var / (var + eps)
    np.testing.assert_allclose(out.var(axis=1), x.var(axis=1) / (x.var(axis=1) + 1e-5), rtol=1e-10)
    wide = x.var(axis=1) > 0.1
    assert np.all(np.abs(out[wide].var(axis=1) - 1.0) < 1e-4)


def test_backward_square():
    w = nn.parameter(3.0)
    ag.square(w).backward()
    assert w.grad == pytest.approx(6.0)


def test_backward_linear_mse_closed_form():
    layer = nn.Linear(3, 1, rng=np.random.default_rng(0))
    x = np.array([[0.5, -1.0, 2.0]])
    y = np.array([[0.3]])
    loss = nn.mse_loss(layer(x), y)
    loss.backward()
    pred = x @ layer.weight.data + layer.bias.data
    np.testing.assert_allclose(layer.weight.grad, 2 * (pred - y) * x.T, atol=1e-14)
    np.testing.assert_allclose(layer.bias.grad, 2 * (pred - y).ravel(), atol=1e-14)


def test_backward_without_record_is_usage_error():
    with pytest.raises(nn.UsageError):
        nn.parameter(2.0).backward()
    with pytest.raises(nn.UsageError):
        (nn.parameter(np.ones(3)) * 2.0).backward()


def test_grad_check_linear_mse():
    layer = nn.Linear(4, 2, rng=np.random.default_rng(1))
    rng = np.random.default_rng(2)
    assert nn.grad_check(layer, rng.normal(size=(6, 4)), rng.normal(size=(6, 2))) < 1e-7


def test_grad_check_zero_network():
    layer = nn.Linear(3, 2)
    for p in layer.parameters():
        p.data[...] = 0.0
    assert nn.grad_check(layer, np.zeros((2, 3)), np.zeros((2, 2))) == 0.0


def test_grad_check_rejects_bad_eps():
    with pytest.raises(ValueError):
        nn.grad_check(nn.Linear(1, 1), np.zeros((1, 1)), np.zeros((1, 1)), eps=1e-2)


class _AttentionStack(nn.Module):
    def __init__(self, d_in, width, heads, rng):
        self.proj = nn.Linear(d_in, width, rng=rng)
        self.attn = nn.MultiHeadAttention(width, heads, rng=rng)
        self.norm = nn.LayerNorm(width)
        self.head = nn.Linear(width, 1, rng=rng)

    def forward(self, x):
        return self.head(self.norm(self.attn(self.proj(x))))


@settings(max_examples=8, deadline=None)
@given(
    seed=st.integers(0, 10_000),
    width=st.sampled_from([4, 8, 16, 32]),
    heads=st.sampled_from([1, 2, 4]),
    m=st.integers(1, 5),
)
def test_random_small_network_gradients(seed, width, heads, m):
    rng = np.random.default_rng(seed)
    net = _AttentionStack(3, width, heads, rng)
    x = rng.normal(size=(m, 3))
    y = rng.normal(size=(m, 1))
    assert nn.grad_check(net, x, y, eps=1e-5) < 1e-4


def test_mlp_stack_gradients():
    rng = np.random.default_rng(7)
    mlp = nn.MLP(3, (8, 8), 1, n_models=2, rng=rng, shared_init=False)
    x = rng.normal(size=(10, 3))
    y = rng.normal(size=(2, 10, 1))
    assert nn.grad_check(mlp, x, y) < 1e-4


def test_adam_first_step_moves_by_lr():
    state = nn.AdamState.zeros_like([np.zeros(1)])
    g = 0.37
    (p,) = nn.adam_step([np.array([1.0])], [np.array([g])], state, lr=1e-3)
    delta = 1.0 - p[0]
    assert delta == pytest.approx(1e-3 * g / (g + 1e-8), rel=1e-12)
    assert delta == pytest.approx(1e-3, rel=1e-6)


def test_adam_zero_gradient_is_identity():
    rng = np.random.default_rng(0)
    params = [rng.normal(size=(3, 2)), rng.normal(size=4)]
    state = nn.AdamState.zeros_like(params)
    new = nn.adam_step(params, [np.zeros((3, 2)), np.zeros(4)], state, lr=1e-3)
    for a, b in zip(params, new):
        np.testing.assert_array_equal(a, b)


def test_adam_constant_gradient_step_growth_is_bounded():
    state = nn.AdamState.zeros_like([np.zeros(1)])
    p0 = np.array([0.0])
    (p1,) = nn.adam_step([p0], [np.array([2.0])], state, lr=1e-3)
    (p2,) = nn.adam_step([p1], [np.array([2.0])], state, lr=1e-3)
    d1, d2 = abs(p1[0] - p0[0]), abs(p2[0] - p1[0])
    assert d2 <= d1 * 1.01


def test_adam_rejects_nonfinite_gradient():
    state = nn.AdamState.zeros_like([np.zeros(1)])
    with pytest.raises(nn.NonFiniteGradientError):
        nn.adam_step([np.zeros(1)], [np.array([np.nan])], state, lr=1e-3)
    assert state.step == 0


def test_forward_is_deterministic():
    net = _AttentionStack(8, 32, 4, np.random.default_rng(0))
    x = np.random.default_rng(1).normal(size=(5, 8))
    np.testing.assert_array_equal(net(x).data, net(x).data)


def test_state_dict_round_trip():
    a = _AttentionStack(8, 32, 4, np.random.default_rng(0))
    b = _AttentionStack(8, 32, 4, np.random.default_rng(1))
    b.load_state_dict(a.state_dict())
    x = np.random.default_rng(1).normal(size=(5, 8))
    np.testing.assert_array_equal(a(x).data, b(x).data)
